"""
Invariant commands: ci, cover, wps, classify.

Handlers are thin: they build the core object from validated parameters,
call into core, and shape a JSON-ready result. Comparisons against published
values only run when the context asks for them and only ever add warnings.
"""

from ..core.claims import lookup
from ..core.complete_intersection import (
    CompleteIntersection,
    betti_table,
    canonical_degree,
    chern_series,
    classify_level_one,
    euler_characteristic,
    hodge_diamond,
    is_fano,
    level_one_family,
    middle_betti,
)
from ..core.covers import (
    CyclicCover,
    branch_diamond,
    canonical_degree as cover_canonical_degree,
    cover_level_and_jacobian,
    cross_validate,
    euler_via_cover,
    hodge_diamond_cover,
    is_fano as cover_is_fano,
)
from ..core.exact import to_json_number
from ..core.hodge import hodge_level, jacobian_dimension
from ..core.request import CommandContext, CommandOutcome
from ..core.weighted import WeightedHypersurface, hodge_diamond_weighted
from ..utils.log import get_logger

log = get_logger(__name__)


def claim_warning(claim, engine_value) -> dict:
    return {
        "kind": "published_mismatch",
        "subject": claim.kind,
        "key": claim.to_dict()["key"],
        "quantity": claim.quantity,
        "engine": engine_value,
        "published": claim.value,
        "citation": claim.citation,
    }


def _compare(kind: str, key: tuple, values: dict) -> list[dict]:
    warnings = []
    for quantity, engine_value in values.items():
        claim = lookup(kind, key, quantity)
        if claim is not None and claim.value != engine_value:
            log.warning(f"[{kind} {key}] {quantity}: computed {engine_value}, published {claim.value}")
            warnings.append(claim_warning(claim, engine_value))
    return warnings


# ------------------------------------------------------------------
# ci
# ------------------------------------------------------------------

def handle_ci(params: dict, ctx: CommandContext) -> CommandOutcome:
    x = CompleteIntersection(params["dim"], tuple(params["degrees"]))
    diamond = hodge_diamond(x)
    n = x.dim
    level = hodge_level(diamond, n)
    dim_j = jacobian_dimension(diamond, (n + 1) // 2) if n % 2 else 0
    family = level_one_family(x)

    result = {
        "variety": x.to_dict(),
        "euler": euler_characteristic(x),
        "middle_betti": middle_betti(x),
        "middle_row": list(diamond.middle_row()),
        "level": level,
        "canonical_degree": canonical_degree(x),
        "fano": is_fano(x),
        "family": family.to_dict() if family else None,
    }
    if params["jacobian"]:
        result["dim_J"] = dim_j
    if params["diamond"]:
        result["diamond"] = diamond.to_dict()
    if params["betti"]:
        result["betti"] = betti_table(x).to_list()
    if params["chern"]:
        result["chern"] = [to_json_number(c) for c in chern_series(x).coefficients]

    warnings = []
    if ctx.compare_published and n % 2:
        warnings = _compare("ci", (n, x.degrees), {"jacobian_dimension": dim_j})
    return CommandOutcome(result, warnings)


# ------------------------------------------------------------------
# cover
# ------------------------------------------------------------------

def handle_cover(params: dict, ctx: CommandContext) -> CommandOutcome:
    cover = CyclicCover(params["n"], params["m"], params["b"])
    diamond = hodge_diamond_cover(cover)
    level, dim_j = cover_level_and_jacobian(cover)
    report = cross_validate(cover, "middle_betti")
    branch = branch_diamond(cover)

    result = {
        "cover": cover.to_dict(),
        "weighted": {"weights": list(cover.hypersurface.weights), "degree": cover.hypersurface.degree},
        "euler": euler_via_cover(cover),
        "middle_betti": report.value,
        "middle_row": list(diamond.middle_row()),
        "level": level,
        "dim_J": dim_j,
        "canonical_degree": cover_canonical_degree(cover),
        "fano": cover_is_fano(cover),
        "report": report.to_dict(),
        "branch": {
            "dim": branch.dim,
            "middle_row": list(branch.middle_row()),
            "euler": branch.euler(),
        },
    }
    if params["diamond"]:
        result["diamond"] = diamond.to_dict()

    warnings = []
    if ctx.compare_published:
        values = {"middle_betti": report.value, "level": level}
        if cover.dim % 2:
            values["jacobian_dimension"] = dim_j
        warnings = _compare("cover", cover.key, values)
    return CommandOutcome(result, warnings)


# ------------------------------------------------------------------
# wps
# ------------------------------------------------------------------

def handle_wps(params: dict, ctx: CommandContext) -> CommandOutcome:
    surface = WeightedHypersurface(tuple(params["weights"]), params["degree"])
    diamond = hodge_diamond_weighted(surface)
    n = surface.dim
    result = {
        "surface": {"weights": list(surface.weights), "degree": surface.degree, "dim": n},
        "middle_row": list(diamond.middle_row()),
        "euler": diamond.euler(),
        "level": diamond.level(),
        "calabi_yau": surface.degree == surface.weight_sum,
    }
    if n >= 1 and n % 2:
        result["dim_J"] = jacobian_dimension(diamond, (n + 1) // 2)
    if params["diamond"]:
        result["diamond"] = diamond.to_dict()
    return CommandOutcome(result)


# ------------------------------------------------------------------
# classify
# ------------------------------------------------------------------

def handle_classify(params: dict, ctx: CommandContext) -> CommandOutcome:
    entries = classify_level_one(params["max_dim"], params["max_degree_sum"])
    result = {
        "max_dim": params["max_dim"],
        "max_degree_sum": params["max_degree_sum"],
        "count": len(entries),
        "entries": [e.to_dict() for e in entries],
    }
    warnings = []
    for e in entries:
        if e.family is None:
            warnings.append({
                "kind": "unlisted_family",
                "message": f"{e.variety} has level one but is not in the known list",
            })
        if ctx.compare_published:
            warnings += _compare(
                "ci", (e.variety.dim, e.variety.degrees), {"jacobian_dimension": e.jacobian_dimension}
            )
    return CommandOutcome(result, warnings)
