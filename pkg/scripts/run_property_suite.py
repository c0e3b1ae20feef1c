#!/usr/bin/env python3
"""
Randomized property suite for the toric cube toolkit.

Draws seeded random monomial maps and checks, for each one, that the
implicitization is sound on a parameter grid, that the present strata
match the supports the map can reach, that parametrize(implicitize(f))
has the same image, that the CW complex partitions sampled image points,
that closures of cells are unions of cells and that the complex passes the
regularity checks.

Usage:
    TORICUBE_SEED=7 python scripts/run_property_suite.py [--maps 20] [--res 4] [--json]
"""
import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from configs import get_settings
from src.cli.schemas import ProblemFile
from src.cli.services import ToricPipeline
from src.cone import all_faces, relints_meet
from src.cw import CWComplex, boundary_cubes, build_cw, locate
from src.toric import MonomialMap, ToricCube

logger = logging.getLogger(__name__)


def random_map(rng: random.Random, max_dim: int, max_exponent: int) -> MonomialMap:
    n = rng.randint(1, max_dim)
    d = rng.randint(1, max_dim)
    rows = [[rng.randint(0, max_exponent) for _ in range(d)] for _ in range(n)]
    return MonomialMap.from_rows(rows, d=d)


def sample_log_point(rng: random.Random, m: MonomialMap) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    """
    Support and log coordinates of f(t) for a random t.

    Some parameters are set to 0; the others are b^(-s) with rational s >= 0,
    so -log x_j is linear in s on the support of f(t).
    """
    zero = {i for i in range(m.d) if rng.random() < 0.25}
    s = [Fraction(0) if i in zero else Fraction(rng.randint(0, 12), rng.randint(1, 4)) for i in range(m.d)]
    support = tuple(j for j, row in enumerate(m.rows) if all(row[i] == 0 for i in zero))
    y = tuple(sum(m.rows[j][i] * s[i] for i in range(m.d)) for j in support)
    return support, y


def check_partition(rng: random.Random, m: MonomialMap, points: int, complex: CWComplex) -> list[str]:
    failures = []
    for _ in range(points):
        support, y = sample_log_point(rng, m)
        found = locate(complex, support, y)
        if len(found) != 1:
            failures.append(f"support {support} log point {[str(x) for x in y]}: {len(found)} cells")
    return failures


def check_closures(complex: CWComplex) -> list[str]:
    """
    Boundary pieces of cells that are not unions of cells.

    Every lower-support piece of a cell closure is a closed cone; each cell
    of that support must either lie inside it or miss every one of its faces.
    """
    failures = []
    for c in complex.cells:
        for piece in boundary_cubes(c.support, c.cone):
            faces = all_faces(piece.cone)
            for h in complex.cells:
                if h.support != piece.support or piece.cone.contains_cone(h.cone):
                    continue
                if any(relints_meet(h.cone, f) for f in faces):
                    failures.append(f"cell {h.id} straddles the closure of cell {c.id} on support {piece.support}")
    return failures


def run_map(pipeline: ToricPipeline, rng: random.Random, m: MonomialMap, res: int, points: int) -> dict:
    problem = ProblemFile(kind="monomial_map", n=m.n, d=m.d, exponents=[list(r) for r in m.rows])
    result = pipeline.verify(problem, res=res)
    checks = dict(result.checks)
    details = dict(result.details)
    complex = build_cw(ToricCube.from_map(m))
    for name, failures in (
        ("partition", check_partition(rng, m, points, complex)),
        ("closures", check_closures(complex)),
    ):
        checks[name] = not failures
        if failures:
            details[name] = failures[:5]
    return {"map": [list(r) for r in m.rows], "checks": checks, "details": details}


def main() -> int:
    settings = get_settings()
    parser = argparse.ArgumentParser(description="Randomized property suite")
    parser.add_argument("--maps", type=int, default=settings.property_maps, help="Number of random maps")
    parser.add_argument("--points", type=int, default=settings.property_points, help="Sampled points per map")
    parser.add_argument("--res", type=int, default=settings.grid_resolution, help="Grid resolution of the soundness check")
    parser.add_argument("--json", action="store_true", help="Output results as JSON")
    args = parser.parse_args()

    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )

    rng = random.Random(settings.seed)
    pipeline = ToricPipeline()
    results = []
    for k in range(args.maps):
        m = random_map(rng, settings.random_max_dim, settings.random_max_exponent)
        logger.info(f"map {k + 1}/{args.maps}: {m}")
        results.append(run_map(pipeline, rng, m, args.res, args.points))

    failed = [r for r in results if not all(r["checks"].values())]

    if args.json:
        print(json.dumps({"seed": settings.seed, "results": results}, indent=2))
    else:
        print(f"Property suite (seed {settings.seed})")
        print(f"   Maps:   {len(results)}")
        print(f"   Passed: {len(results) - len(failed)}")
        print(f"   Failed: {len(failed)}")
        for r in failed:
            bad = [name for name, ok in r["checks"].items() if not ok]
            print(f"\n❌ {r['map']}: {', '.join(bad)}")
            for name, items in r["details"].items():
                print(f"     └─ {name}: {items}")

    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
