import logging
from typing import Optional

from configs import get_settings
from src.cli.schemas import (
    BinomialSystemSchema,
    CellRegularitySchema,
    CellSchema,
    CharacteristicDomainSchema,
    CWResponse,
    IsCubeResponse,
    MonomialMapSchema,
    ProblemFile,
    RegularityResponse,
    StrataResponse,
    StratumSchema,
    VerifyResponse,
)
from src.cone import Cone, cone_equal
from src.cw import CWComplex, build_cw, characteristic_domain, euler, regularity_report
from src.exceptions import InputError
from src.oracle import achievable_supports, check_sample, fm_cone_contains, fm_log_cone, grid_image
from src.toric import (
    ToricCube,
    cone_of_system,
    cubify,
    implicitize,
    is_cube,
    log_cone_of_map,
    parametrize,
    system_equiv,
)

logger = logging.getLogger(__name__)


class ToricPipeline:
    """
    Runs one command of the toric cube toolkit on a parsed problem file.

    Parameters
    ----------
    max_support_dim : int, optional
        Cap on n for the 2^n support enumeration; defaults to the settings
    """

    def __init__(self, max_support_dim: Optional[int] = None):
        self._settings = get_settings()
        self.max_support_dim = (
            self._settings.max_support_dim if max_support_dim is None else max_support_dim
        )

    def _require(self, problem: ProblemFile, kind: str) -> None:
        if problem.kind != kind:
            raise InputError(f"field 'kind': this command needs a {kind}, got {problem.kind}")

    def cube_of(self, problem: ProblemFile) -> ToricCube:
        """The toric cube of a map (its image) or of a system (its cubification)."""
        if problem.kind == "monomial_map":
            return ToricCube.from_map(problem.to_map())
        return ToricCube.from_system(problem.to_system())

    def implicitize(self, problem: ProblemFile) -> BinomialSystemSchema:
        self._require(problem, "monomial_map")
        return BinomialSystemSchema.from_system(implicitize(problem.to_map(), self.max_support_dim))

    def parametrize(self, problem: ProblemFile) -> MonomialMapSchema:
        self._require(problem, "binomial_system")
        return MonomialMapSchema.from_map(parametrize(problem.to_system()))

    def cubify(self, problem: ProblemFile) -> BinomialSystemSchema:
        self._require(problem, "binomial_system")
        return BinomialSystemSchema.from_system(cubify(problem.to_system(), self.max_support_dim))

    def is_cube(self, problem: ProblemFile) -> IsCubeResponse:
        self._require(problem, "binomial_system")
        return IsCubeResponse(is_cube=is_cube(problem.to_system(), self.max_support_dim))

    def strata(self, problem: ProblemFile) -> StrataResponse:
        cube = self.cube_of(problem)
        strata = [
            StratumSchema(
                support=list(st.support),
                present=st.present,
                rays=[list(r) for r in st.cone.rays] if st.present else None,
            )
            for st in cube.strata(self.max_support_dim)
        ]
        return StrataResponse(n=cube.n, strata=strata)

    def complex(self, problem: ProblemFile) -> CWComplex:
        return build_cw(self.cube_of(problem), self.max_support_dim)

    def cw(self, problem: ProblemFile, char_domains: bool = False, scaled_rays: bool = False) -> CWResponse:
        """
        Cells, cover edges and f-vector of the CW decomposition.

        Parameters
        ----------
        problem : ProblemFile
            Map or system
        char_domains : bool
            Attach the characteristic domain of every cell of positive dimension
        scaled_rays : bool
            Rescale rays to equal coordinate sums inside the characteristic domains

        Returns
        -------
        CWResponse
            The complex in serializable form
        """
        complex = self.complex(problem)
        response = CWResponse(
            cells=[
                CellSchema(id=c.id, support=list(c.support), dim=c.dim, rays=[list(r) for r in c.rays])
                for c in complex.cells
            ],
            edges=[list(e) for e in complex.hasse_edges()],
            f_vector=list(complex.f_vector),
            euler_characteristic=euler(complex),
            refinements=complex.refinements,
        )
        if char_domains:
            domains = []
            for c in complex.cells:
                if c.dim < 1:
                    continue
                dom = characteristic_domain(c.cone, rays_scaled=scaled_rays)
                domains.append(
                    CharacteristicDomainSchema(
                        cell_id=c.id,
                        rays=[list(r) for r in dom.rays],
                        poset=[sorted(e) for e in dom.poset.elements],
                        sigma_rays=[list(r) for r in dom.sigma_rays],
                        chains=[[sorted(e) for e in chain] for chain in dom.chains],
                        sd_exponents=[list(r) for r in dom.sd_map.rows],
                    )
                )
            response.characteristic_domains = domains
        return response

    def check(self, problem: ProblemFile) -> RegularityResponse:
        report = regularity_report(self.complex(problem))
        return RegularityResponse(
            passed=report.passed,
            euler_characteristic=report.euler_characteristic,
            checks=report.checks,
            failures={k: [list(x) if isinstance(x, tuple) else x for x in v] for k, v in report.failures.items()},
            cells=[CellRegularitySchema(**vars(c)) for c in report.cells],
        )

    def verify(self, problem: ProblemFile, res: Optional[int] = None) -> VerifyResponse:
        """
        Oracle cross-checks of the whole pipeline on one problem.

        Maps are checked directly; a system is checked through the map
        returned by ``parametrize``.
        """
        res = self._settings.grid_resolution if res is None else res
        checks: dict[str, bool] = {}
        details: dict[str, list] = {}

        if problem.kind == "monomial_map":
            m = problem.to_map()
            system = implicitize(m, self.max_support_dim)
        else:
            original = problem.to_system()
            system = cubify(original, self.max_support_dim)
            m = parametrize(original)
            rays = cone_of_system(original).rays
            bad = [str(i) for i in system if not all(fm_cone_contains([i.log_normal], r) for r in rays)]
            checks["cubify_valid"] = not bad
            details["cubify_valid"] = bad
            checks["cubify_idempotent"] = system_equiv(system, cubify(system, self.max_support_dim), self.max_support_dim)

        sample = grid_image(m, res)
        violations = check_sample(system, sample)
        checks["soundness"] = not violations
        details["soundness"] = [[str(x) for x in v.point] for v in violations]

        cube = ToricCube.from_map(m)
        present = {st.support for st in cube.present_strata(self.max_support_dim)}
        expected = achievable_supports(m)
        checks["supports"] = present == expected
        details["supports"] = [list(s) for s in sorted(present ^ expected)]
        checks["grid_supports"] = sample.supports() <= expected

        checks["round_trip"] = cone_equal(log_cone_of_map(parametrize(system)), log_cone_of_map(m))
        fm = fm_log_cone(m)
        dd = log_cone_of_map(m)
        checks["fourier_motzkin"] = all(fm_cone_contains(fm, r) for r in dd.rays) and cone_equal(
            Cone.from_inequalities(m.n, fm), dd
        )

        report = regularity_report(build_cw(cube, self.max_support_dim))
        checks["regularity"] = report.passed
        details["regularity"] = [k for k, ok in report.checks.items() if not ok]

        passed = all(checks.values())
        if not passed:
            logger.error(f"verification failed: {[k for k, ok in checks.items() if not ok]}")
        return VerifyResponse(
            passed=passed, res=res, checks=checks, details={k: v for k, v in details.items() if v}
        )