"""
Cyclic m:1 covers of P^n, totally branched along a smooth hypersurface B of
degree b (b divisible by m).

The cover y^m = f(x_0, ..., x_n) is a degree-b hypersurface in the weighted
space P(1^{n+1}, b/m), so its Hodge diamond comes from the weighted module's
Jacobian-ring route. The second, independent route is topological:

    chi(X) = m * chi(P^n) - (m - 1) * chi(B)

with chi(B) taken from the complete-intersection module. Both routes must give
the same middle Betti number; published values are only compared, never trusted.
"""

from dataclasses import dataclass
from typing import Optional

from .claims import lookup
from .complete_intersection import CompleteIntersection, euler_characteristic, hodge_diamond
from .consistency import ConsistencyReport
from .errors import ConsistencyError
from .hodge import HodgeDiamond, jacobian_dimension
from .weighted import WeightedHypersurface, hodge_diamond_weighted
from ..utils.log import get_logger

log = get_logger(__name__)

QUANTITIES = ("middle_betti", "jacobian_dimension", "euler")


@dataclass(frozen=True)
class CyclicCover:
    base_dim: int
    order: int
    branch_degree: int

    def __post_init__(self):
        if self.base_dim < 1:
            raise ValueError(f"base dimension must be >= 1, got {self.base_dim}")
        if self.order < 2:
            raise ValueError(f"cover order must be >= 2, got {self.order}")
        if self.branch_degree < self.order or self.branch_degree % self.order:
            raise ValueError(
                f"branch degree must be a positive multiple of the order {self.order}, "
                f"got {self.branch_degree}"
            )

    @property
    def dim(self) -> int:
        return self.base_dim

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.base_dim, self.order, self.branch_degree)

    @property
    def hypersurface(self) -> WeightedHypersurface:
        n, m, b = self.key
        return WeightedHypersurface((1,) * (n + 1) + (b // m,), b)

    @property
    def branch_locus(self) -> CompleteIntersection:
        return CompleteIntersection(self.base_dim - 1, (self.branch_degree,))

    def __str__(self) -> str:
        n, m, b = self.key
        return f"{m}:1 cover of P^{n} branched in degree {b}"

    def to_dict(self) -> dict:
        return {"n": self.base_dim, "m": self.order, "b": self.branch_degree}


# ------------------------------------------------------------------
# The two routes
# ------------------------------------------------------------------

def euler_via_cover(cover: CyclicCover) -> int:
    n, m, _ = cover.key
    return m * (n + 1) - (m - 1) * euler_characteristic(cover.branch_locus)


def _middle_betti_from_euler(cover: CyclicCover) -> int:
    n = cover.dim
    unit = n + 1 if n % 2 else n
    return (-1) ** n * (euler_via_cover(cover) - unit)


def _jacobian_route_diamond(cover: CyclicCover) -> HodgeDiamond:
    return hodge_diamond_weighted(cover.hypersurface)


def cross_validate(cover: CyclicCover, quantity: str = "middle_betti") -> ConsistencyReport:
    """
    Compare the Jacobian-ring route with the Euler route on `quantity`.
    Disagreement raises ConsistencyError; a published value is attached
    for comparison only.
    """
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}, expected one of {QUANTITIES}")
    diamond = _jacobian_route_diamond(cover)
    n = cover.dim

    if quantity == "middle_betti":
        routes = {"jacobian": sum(diamond.middle_row()), "euler": _middle_betti_from_euler(cover)}
    elif quantity == "euler":
        routes = {"jacobian": diamond.euler(), "euler": euler_via_cover(cover)}
    else:
        if n % 2 == 0:
            raise ValueError(f"{cover} has even dimension, no middle intermediate Jacobian")
        # the Euler route only sees b_n, the Jacobian dimension is half of it
        betti = _middle_betti_from_euler(cover)
        if betti % 2:
            report = ConsistencyReport("middle_betti", {"euler": betti})
            raise ConsistencyError(
                f"[cover {cover.key}] odd middle Betti number {betti} in odd dimension", report=report
            )
        routes = {
            "jacobian": jacobian_dimension(diamond, (n + 1) // 2),
            "euler": betti // 2,
        }

    claim = lookup("cover", cover.key, quantity)
    report = ConsistencyReport(
        quantity,
        routes,
        claim.value if claim else None,
        claim.citation if claim else None,
    )
    log.debug(f"[cover {cover.key}] {quantity}: {routes}")
    return report.require_agreement(f"[cover {cover.key}]")


def hodge_diamond_cover(cover: CyclicCover) -> HodgeDiamond:
    diamond = _jacobian_route_diamond(cover)
    euler_route = _middle_betti_from_euler(cover)
    if sum(diamond.middle_row()) != euler_route:
        report = ConsistencyReport(
            "middle_betti", {"jacobian": sum(diamond.middle_row()), "euler": euler_route}
        )
        raise ConsistencyError(f"[cover {cover.key}] middle Betti routes disagree", report=report)
    return diamond


def cover_level_and_jacobian(cover: CyclicCover) -> tuple[Optional[int], int]:
    """(variety level, dim of the middle intermediate Jacobian; 0 in even dimension)."""
    diamond = hodge_diamond_cover(cover)
    n = cover.dim
    jac = jacobian_dimension(diamond, (n + 1) // 2) if n % 2 else 0
    return diamond.level(), jac


# ------------------------------------------------------------------
# Extras
# ------------------------------------------------------------------

def canonical_degree(cover: CyclicCover) -> int:
    """K_X = pi^* O(-(n+1) + (m-1) b/m)."""
    n, m, b = cover.key
    return -(n + 1) + (m - 1) * (b // m)


def is_fano(cover: CyclicCover) -> bool:
    return canonical_degree(cover) < 0


def branch_diamond(cover: CyclicCover) -> HodgeDiamond:
    """Hodge diamond of the branch hypersurface B in P^n."""
    return hodge_diamond(cover.branch_locus)


def matches_complete_intersection(cover: CyclicCover) -> Optional[bool]:
    """
    When b == m the cover is itself a hypersurface of degree m in P^{n+1};
    compare the two diamonds. None when the cover is not of that shape.
    """
    if cover.branch_degree != cover.order:
        return None
    return hodge_diamond_cover(cover) == hodge_diamond(CompleteIntersection(cover.dim, (cover.order,)))
