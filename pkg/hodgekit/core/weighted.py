"""
Quasi-smooth hypersurfaces in weighted projective space, handled through the
graded dimensions of their Jacobian ring.

The Poincaré series of the Jacobian ring of a degree-N hypersurface in
P(w_0, ..., w_M) is prod (1 - t^{N - w_i}) / (1 - t^{w_i}), and the primitive
middle Hodge number h^{dim-q, q} is its coefficient at t^{(q+1)N - sum(w)}.

Quasi-smoothness of the generic member is assumed, never checked: the
inputs carry no polynomial data to check it against.
"""

from dataclasses import dataclass

from .hodge import HodgeDiamond
from .series import TruncSeries, geometric_quotient_series
from ..utils.log import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class WeightedHypersurface:
    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        if len(weights) < 2:
            raise ValueError(f"need at least two weights, got {weights}")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be >= 1, got {weights}")
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        object.__setattr__(self, "weights", weights)

    @property
    def dim(self) -> int:
        return len(self.weights) - 2

    @property
    def weight_sum(self) -> int:
        return sum(self.weights)

    def factors(self) -> tuple[list[int], list[int]]:
        """
        Numerator and denominator exponents of the Poincaré series. A weight
        with degree <= w or degree == 2w contributes the constant factor 1
        and is skipped.
        """
        numer, denom = [], []
        for w in self.weights:
            if self.degree <= w or self.degree == 2 * w:
                continue
            numer.append(self.degree - w)
            denom.append(w)
        return numer, denom

    def middle_exponent(self, q: int) -> int:
        """Exponent of t whose coefficient is h^{dim-q, q}_prim."""
        return (q + 1) * self.degree - self.weight_sum

    def __str__(self) -> str:
        return f"X_{self.degree} in P({','.join(str(w) for w in self.weights)})"


def milnor_poincare(surface: WeightedHypersurface, order: int) -> TruncSeries:
    """Jacobian-ring Poincaré series of the generic member, truncated at t^order."""
    numer, denom = surface.factors()
    log.debug(f"[wps {surface}] Poincaré series numer={numer} denom={denom} order={order}")
    return geometric_quotient_series(numer, denom, order)


def primitive_hodge(surface: WeightedHypersurface, q: int) -> int:
    """h^{dim-q, q}_prim: the Poincaré coefficient at (q+1)*degree - sum(weights)."""
    if q < 0 or q > surface.dim:
        raise ValueError(f"q must satisfy 0 <= q <= {surface.dim}, got {q}")
    k = surface.middle_exponent(q)
    if k < 0:
        return 0
    return int(milnor_poincare(surface, k).coefficient(k))


def hodge_diamond_weighted(surface: WeightedHypersurface) -> HodgeDiamond:
    """
    Full diamond: h^{p,p}=1 off the middle degree, the primitive numbers in the
    middle row, plus the hyperplane class on the middle diagonal in even dimension.
    """
    n = surface.dim
    order = max(surface.middle_exponent(n), 0)
    series = milnor_poincare(surface, order)
    middle = []
    for q in range(n + 1):
        k = surface.middle_exponent(q)
        value = int(series.coefficient(k)) if k >= 0 else 0
        if 2 * q == n:
            value += 1
        middle.append(value)
    log.debug(f"[wps {surface}] middle row {middle}")
    return HodgeDiamond.from_middle_row(n, middle).validate()
