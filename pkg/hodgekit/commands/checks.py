"""
check command: named suites of route-agreement and regression checks.

A check is a function returning a detail dict; it fails by raising
CheckFailed (a wrong value) or ConsistencyError (two routes disagree).
The suite passes only when every check passes, and a failed suite makes the
CLI exit with code 2.
"""

from typing import Callable

from ..core.complete_intersection import (
    CompleteIntersection,
    classify_level_one,
    hodge_diamond,
    middle_betti,
    middle_jacobian,
)
from ..core.covers import CyclicCover, cross_validate, matches_complete_intersection
from ..core.errors import HodgekitError
from ..core.fano import CoverTarget, expected_dimension, fano_class, gp_dimension, normal_bundle_euler
from ..core.request import CommandContext, CommandOutcome
from ..core.schubert import (
    ProjBundleRing,
    det_sym_multiplier,
    det_sym_multiplier_bruteforce,
    dual_subbundle,
    grassmann_ring,
    published_closed_form_a,
    published_closed_form_b,
    sym_power_chern,
    tautological_bundles,
)
from ..core.weighted import WeightedHypersurface, hodge_diamond_weighted
from ..utils.log import get_logger

log = get_logger(__name__)


class CheckFailed(HodgekitError):
    """A check computed a value other than the expected one."""


def _expect(label: str, got, want):
    if got != want:
        raise CheckFailed(f"{label}: expected {want}, got {got}")


# ------------------------------------------------------------------
# Checks
# ------------------------------------------------------------------

def check_hypersurface_routes() -> dict:
    """Generating series vs Jacobian ring vs cover-of-degree-m, for small hypersurfaces."""
    count = 0
    for n in range(1, 5):
        for d in range(2, 6):
            hodge_diamond(CompleteIntersection(n, (d,)))   # raises on disagreement
            _expect(f"cover ({n},{d},{d}) vs X_{d}", matches_complete_intersection(CyclicCover(n, d, d)), True)
            count += 1
    return {"instances": count}


def check_cover_euler_sweep() -> dict:
    """Jacobian-ring vs Euler route on b_n for double covers, n <= 5, b in {2,4,6,8}."""
    agreed = 0
    for n in range(1, 6):
        for b in (2, 4, 6, 8):
            report = cross_validate(CyclicCover(n, 2, b), "middle_betti")
            agreed += report.agree
    _expect("agreeing instances", agreed, 20)
    return {"instances": agreed}


def check_expected_dimension_sweep() -> dict:
    """delta = gp_dim - codim = chi(N) for n <= 8, d <= 4, r <= 3, m in {2, 3}."""
    count = 0
    for n in range(2, 9):
        for d in range(1, 5):
            for r in range(1, min(3, n - 1) + 1):
                for m in (2, 3):
                    t = CoverTarget(n, d, r, m)
                    _expect(f"chi(N) at {t.to_dict()}", normal_bundle_euler(t), expected_dimension(t))
                    count += 1
    _expect("delta(5,2,1)", expected_dimension(CoverTarget(5, 2, 1)), 6)
    _expect("delta(3,2,1)", expected_dimension(CoverTarget(3, 2, 1)), 2)
    _expect("delta(2,2,1)", expected_dimension(CoverTarget(2, 2, 1)), 0)
    _expect("gp_dim(5,2,1)", gp_dimension(CoverTarget(5, 2, 1)), 11)
    return {"instances": count}


def check_schubert_normalization() -> dict:
    g13 = grassmann_ring(1, 3)
    s1 = g13.special(1)
    _expect("sigma_1^4 in G(1,3)", s1 ** 4, g13.schubert((2, 2), 2))
    _expect("sigma_1^2 in G(1,3)", s1 * s1, g13.special(2) + g13.elementary(2))

    lines_on_cubic = sym_power_chern(dual_subbundle(g13), 3).top().integral()
    _expect("c_4(Sym^3 S^dual) on G(1,3)", lines_on_cubic, 27)

    rings = 0
    for n in range(2, 7):
        for r in range(0, n):
            ring = grassmann_ring(r, n)
            sub, quotient = tautological_bundles(ring)
            _expect(f"Whitney on {ring}", sub.total() * quotient.total(), ring.one())
            rings += 1

    proj = ProjBundleRing(dual_subbundle(grassmann_ring(1, 4)))
    e = proj.e
    _expect("push zeta^(e-1)", proj.push(proj.power(e - 1)), proj.base.one())
    _expect("push zeta^(e-2)", proj.push(proj.power(e - 2)), proj.base.zero())
    _expect("push zeta^e", proj.push(proj.power(e)), -proj.bundle.c(1))

    _expect("lines on a degree-2 del Pezzo", fano_class(CoverTarget(2, 2, 1)).count, 56)
    return {"whitney_rings": rings, "lines_on_cubic": lines_on_cubic}


def check_det_sym() -> dict:
    for m in range(1, 5):
        for k in range(1, 9):
            _expect(f"det Sym multiplier ({m},{k})", det_sym_multiplier(m, k), det_sym_multiplier_bruteforce(m, k))
    for d in range(1, 7):
        _expect(f"a at r=1, d={d}", det_sym_multiplier(2, d), published_closed_form_a(1, d))
        _expect(f"b at r=1, d={d}", det_sym_multiplier(2, 2 * d), published_closed_form_b(1, d))
    return {"r2d3": {"engine": det_sym_multiplier(3, 3), "published": int(published_closed_form_a(2, 3))}}


EXPECTED_LEVEL_ONE_WINDOW = sorted(
    [(3, (3,)), (3, (4,)), (3, (2, 3)), (5, (3,))]
    + [(n, (2, 2)) for n in range(3, 12, 2)]
    + [(n, (2, 2, 2)) for n in range(3, 12, 2)]
)


def check_level_one_window() -> dict:
    found = [(e.variety.dim, e.variety.degrees) for e in classify_level_one(11, 8)]
    _expect("level-one window dim<=11, sum<=8", found, EXPECTED_LEVEL_ONE_WINDOW)
    return {"families": len(found)}


def check_jacobian_anchors() -> dict:
    anchors = [
        ((3, (3,)), 5), ((3, (2, 3)), 20), ((3, (4,)), 30),
        ((5, (3,)), 21), ((5, (2, 2, 2)), 27),
    ] + [((2 * m + 1, (2, 2)), m + 1) for m in range(1, 6)]
    for (n, degrees), want in anchors:
        _expect(f"dim J of X_{degrees} in dim {n}", middle_jacobian(CompleteIntersection(n, degrees)), want)
    _expect("b_5 of three quadrics in P^8", middle_betti(CompleteIntersection(5, (2, 2, 2))), 54)

    quartic_double = cross_validate(CyclicCover(5, 2, 4), "middle_betti")
    _expect("b_5 of the quartic double fivefold", quartic_double.value, 182)
    _expect("octic double solid h^{3,0}",
            hodge_diamond_weighted(WeightedHypersurface((1, 1, 1, 1, 4), 8))[3, 0], 1)
    return {"anchors": len(anchors) + 3}


SUITES: dict[str, list[tuple[str, Callable[[], dict]]]] = {
    "default": [
        ("hypersurface_routes", check_hypersurface_routes),
        ("cover_euler_sweep", check_cover_euler_sweep),
        ("expected_dimension_sweep", check_expected_dimension_sweep),
        ("schubert_normalization", check_schubert_normalization),
        ("det_sym", check_det_sym),
        ("level_one_window", check_level_one_window),
        ("jacobian_anchors", check_jacobian_anchors),
    ],
}
SUITES["quick"] = [c for c in SUITES["default"] if c[0] != "level_one_window"]


def run_suite(name: str) -> list[dict]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {', '.join(sorted(SUITES))}")
    outcomes = []
    for check_name, check in SUITES[name]:
        try:
            detail = check()
            outcomes.append({"name": check_name, "passed": True, "detail": detail})
        except HodgekitError as e:
            log.error(f"[check {name}] {check_name} failed: {e}")
            outcomes.append({"name": check_name, "passed": False, "detail": {"error": str(e)}})
    return outcomes


def handle_check(params: dict, ctx: CommandContext) -> CommandOutcome:
    outcomes = run_suite(params["suite"])
    passed = all(o["passed"] for o in outcomes)
    result = {"suite": params["suite"], "passed": passed, "checks": outcomes}
    return CommandOutcome(result, failed=not passed)
