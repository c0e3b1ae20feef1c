"""
Command-line entry point of the toric cube toolkit.

Usage:
    toricube [--max-support-dim N] <command> [options] problem.json

Exit codes: 0 on success, 1 on malformed input, 2 on a contract
violation (an internal invariant failed or ``verify`` found a mismatch).
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ValidationError

from configs import get_settings
from src.cli.schemas import ErrorResponse, PosetResponse, ProblemFile
from src.cli.services import ToricPipeline, render_dot
from src.exceptions import ContractViolation, InputError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONTRACT = 2

COMMANDS = ("implicitize", "parametrize", "cubify", "is-cube", "strata", "cw", "poset", "check", "verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricube", description="Toric cubes: strata, cubification and CW structure")
    parser.add_argument(
        "--max-support-dim",
        type=int,
        default=None,
        help="Largest n for which all 2^n supports are enumerated (default: from settings)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("problem", type=Path, help="Problem file (JSON)")
        if name == "cw":
            cmd.add_argument("--char-domains", action="store_true", help="Attach characteristic domains")
            cmd.add_argument("--scaled-rays", action="store_true", help="Rescale rays to equal coordinate sums")
        elif name == "poset":
            cmd.add_argument("--dot", action="store_true", help="Emit the Hasse diagram in DOT")
        elif name == "verify":
            cmd.add_argument("--res", type=int, default=None, help="Grid resolution (default: from settings)")
    return parser


def load_problem(path: Path) -> ProblemFile:
    with open(path, encoding="utf-8") as f:
        return ProblemFile.model_validate(json.load(f))


def _dump(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2)


def _fail(code: int, error: str, detail: str) -> int:
    logger.error(f"{error}: {detail}")
    print(_dump(ErrorResponse(error=error, detail=detail)))
    return code


def run(args: argparse.Namespace) -> tuple[int, str]:
    """Execute one parsed command and return (exit code, stdout text)."""
    problem = load_problem(args.problem)
    pipeline = ToricPipeline(max_support_dim=args.max_support_dim)
    command = args.command

    if command == "cw":
        return EXIT_OK, _dump(pipeline.cw(problem, char_domains=args.char_domains, scaled_rays=args.scaled_rays))
    if command == "poset":
        complex = pipeline.complex(problem)
        if args.dot:
            return EXIT_OK, render_dot(complex).rstrip("\n")
        return EXIT_OK, _dump(PosetResponse(edges=[list(e) for e in complex.hasse_edges()]))
    if command == "verify":
        result = pipeline.verify(problem, res=args.res)
        return (EXIT_OK if result.passed else EXIT_CONTRACT), _dump(result)

    handler = getattr(pipeline, command.replace("-", "_"))
    return EXIT_OK, _dump(handler(problem))


def main(argv: Optional[list[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors; bad arguments are malformed input
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    try:
        code, text = run(args)
    except (OSError, UnicodeDecodeError) as e:
        return _fail(EXIT_INPUT, "unreadable input", str(e))
    except json.JSONDecodeError as e:
        return _fail(EXIT_INPUT, "malformed JSON", str(e))
    except ValidationError as e:
        return _fail(EXIT_INPUT, "invalid problem", str(e))
    except InputError as e:
        return _fail(EXIT_INPUT, "invalid input", str(e))
    except ContractViolation as e:
        return _fail(EXIT_CONTRACT, "contract violation", str(e))

    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
