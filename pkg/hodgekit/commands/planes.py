"""
fano command: expected dimension, emptiness, canonical class and, on request,
the class of the Fano scheme of r-planes pushed down to the Grassmannian.
"""

from ..core.fano import CoverTarget, fano_class, fano_profile
from ..core.request import CommandContext, CommandOutcome
from ..utils.log import get_logger

log = get_logger(__name__)


def handle_fano(params: dict, ctx: CommandContext) -> CommandOutcome:
    target = CoverTarget(params["n"], params["d"], params["r"], params["m"])
    profile = fano_profile(target)
    result = {"target": target.to_dict(), **profile.to_dict()}

    if params["show_class"]:
        cls = fano_class(target, budget=ctx.sym_budget)
        result["class"] = cls.to_dict()
        if cls.count is not None:
            result["count"] = cls.count

    warnings = []
    if target.extrapolated:
        warnings.append({
            "kind": "extrapolated",
            "message": f"m={target.m}: canonical class and Fano class extend the double-cover recipe",
        })
    if ctx.compare_published:
        for mismatch in profile.canonical.mismatches():
            log.warning(f"[fano {target.to_dict()}] closed form for {mismatch['coefficient']} "
                        f"gives {mismatch['published']}, splitting principle gives {mismatch['engine']}")
            warnings.append({
                "kind": "published_mismatch",
                "subject": "fano",
                "key": [target.n, target.d, target.r, target.m],
                "quantity": f"canonical_{mismatch['coefficient']}",
                "engine": mismatch["engine"],
                "published": mismatch["published"],
                "citation": "canonical bundle proposition, closed forms for a and b with r != 1",
            })
    return CommandOutcome(result, warnings)
