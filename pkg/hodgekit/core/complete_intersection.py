"""
Smooth complete intersections X of multidegree (d_1, ..., d_r) in P^{n+r}.

Two independent routes are wired through this module:

    chern/euler   (1+h)^{n+r+1} / prod(1 + d_i h), read at h^n, times the degree
    hodge         the bivariate generating series of the Hodge numbers, read on
                  the antidiagonal a^p b^q with p + q = n

Every diamond is checked against the Euler route through the middle Betti
number, and hypersurfaces are additionally checked against the Jacobian-ring
route of the weighted module run on weights (1, ..., 1).

Weak Lefschetz does the rest: away from the middle degree the cohomology is
that of P^n.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod
from typing import Optional, Sequence

import sympy as sp
from sympy import Poly

from .claims import lookup
from .consistency import ConsistencyReport
from .errors import ConsistencyError
from .exact import as_int, binomial
from .hodge import EMPTY, BettiTable, HodgeDiamond, hodge_level, jacobian_dimension
from .series import TruncSeries, truncate_total_degree, truncated_inverse
from .weighted import WeightedHypersurface, hodge_diamond_weighted
from ..utils.log import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class CompleteIntersection:
    dim: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dim}")
        degrees = [int(d) for d in self.degrees]
        if any(d < 1 for d in degrees):
            raise ValueError(f"degrees must be >= 1, got {tuple(degrees)}")
        # X_(1, d...) in P^N is X_(d...) in P^(N-1)
        object.__setattr__(self, "degrees", tuple(sorted(d for d in degrees if d != 1)))

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def ambient(self) -> int:
        return self.dim + self.codim

    def __str__(self) -> str:
        if not self.degrees:
            return f"P^{self.dim}"
        return f"X_({','.join(map(str, self.degrees))}) in P^{self.ambient}"

    def to_dict(self) -> dict:
        return {"dim": self.dim, "degrees": list(self.degrees), "ambient": self.ambient}


# ------------------------------------------------------------------
# Chern / Euler route
# ------------------------------------------------------------------

def _complete_homogeneous(k: int, values: Sequence[int]) -> int:
    # h_k(values) by the recurrence h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j)
    h = [1] + [0] * k
    for x in values:
        for j in range(1, k + 1):
            h[j] += x * h[j - 1]
    return h[k]


def signed_power_sum(k: int, degrees: Sequence[int]) -> int:
    """(-1)^k times the complete homogeneous symmetric polynomial of degree k in the degrees."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return (-1) ** k * _complete_homogeneous(k, list(degrees))


def degree(x: CompleteIntersection) -> int:
    return prod(x.degrees)


def chern_series(x: CompleteIntersection) -> TruncSeries:
    """c(T_X) as a series in the hyperplane class h, truncated at h^dim."""
    n = x.dim
    total = TruncSeries.polynomial([binomial(x.ambient + 1, i) for i in range(n + 1)], n)
    for d in x.degrees:
        total = total / TruncSeries.polynomial([1, d], n)
    return total


def euler_characteristic(x: CompleteIntersection) -> int:
    """
    chi(X) = deg(X) * sum_i C(n+r+1, i) p_{n-i}, cross-checked against
    deg(X) times the top coefficient of the Chern series.
    """
    n, r = x.dim, x.codim
    by_formula = degree(x) * sum(
        binomial(n + r + 1, i) * signed_power_sum(n - i, x.degrees) for i in range(n + 1)
    )
    by_series = degree(x) * as_int(chern_series(x).coefficient(n))
    if by_formula != by_series:
        raise ConsistencyError(
            f"[ci {x}] Euler characteristic: power sums give {by_formula}, Chern series {by_series}"
        )
    return by_formula


def _unit_betti_count(n: int) -> int:
    # number of off-middle b_k equal to 1: every even k in 0..2n except k=n
    return n + 1 if n % 2 else n


def middle_betti(x: CompleteIntersection) -> int:
    n = x.dim
    value = (-1) ** n * (euler_characteristic(x) - _unit_betti_count(n))
    if value < 0 or (n % 2 and value % 2):
        raise ConsistencyError(f"[ci {x}] impossible middle Betti number {value}")
    return value


def betti_table(x: CompleteIntersection) -> BettiTable:
    n = x.dim
    b = [1 if k % 2 == 0 else 0 for k in range(2 * n + 1)]
    b[n] = middle_betti(x)
    table = BettiTable(tuple(b))
    if not table.is_palindromic() or table.euler() != euler_characteristic(x):
        raise ConsistencyError(f"[ci {x}] Betti numbers {b} do not sum to the Euler characteristic")
    return table


def canonical_degree(x: CompleteIntersection) -> int:
    """K_X = O(sum d_i - n - r - 1)."""
    return sum(x.degrees) - x.ambient - 1


def fano_index(x: CompleteIntersection) -> int:
    return -canonical_degree(x)


def is_fano(x: CompleteIntersection) -> bool:
    return fano_index(x) > 0


# ------------------------------------------------------------------
# Hodge route
# ------------------------------------------------------------------

# generating series variables: h^{p,q} sits at a^p b^q
_A, _B = sp.symbols("a b")


def _bivariate(expr) -> Poly:
    return Poly(expr, _A, _B)


def _complete_symmetric(k: int):
    """h_k(a, b) = a^k + a^{k-1} b + ... + b^k."""
    return sum(_A ** i * _B ** (k - i) for i in range(k + 1))


def _degree_factor(d: int, order: int) -> Poly:
    """
    ((1+a)^d - (1+b)^d) / (a(1+b)^d - b(1+a)^d) with the common factor (a-b)
    cancelled from top and bottom:

        sum_{k>=1} C(d,k) h_{k-1}  /  (1 - ab * sum_{k>=2} C(d,k) h_{k-2})
    """
    numer = _bivariate(sum(binomial(d, k) * _complete_symmetric(k - 1) for k in range(1, d + 1)))
    inner = _bivariate(sum(binomial(d, k) * _complete_symmetric(k - 2) for k in range(2, d + 1)))
    denom = _bivariate(1) - _bivariate(_A * _B) * inner
    return truncate_total_degree(
        truncate_total_degree(numer, order) * truncated_inverse(denom, order), order
    )


def hodge_generating_series(degrees: Sequence[int], order: int) -> Poly:
    """
    sum over complete intersections of multidegree `degrees` and all dimensions
    of their Hodge numbers, with h^{p,q}(X_n) the coefficient of a^p b^q, p+q=n.
    Cut at total degree `order`.
    """
    one = _bivariate(1)
    product = one
    for d in degrees:
        product = truncate_total_degree(product * _degree_factor(d, order), order)
    outer = _bivariate((1 + _A) * (1 + _B))
    total = (product - one) * truncated_inverse(outer, order) + truncated_inverse(
        one - _bivariate(_A * _B), order
    )
    return truncate_total_degree(total, order)


def bigraded_coefficient(series: Poly, p: int, q: int) -> int:
    """Coefficient of a^p b^q; zero for monomials the series does not carry."""
    return int(series.as_dict().get((p, q), 0))


@lru_cache(maxsize=1024)
def hodge_diamond(x: CompleteIntersection) -> HodgeDiamond:
    n = x.dim
    series = hodge_generating_series(x.degrees, n)
    middle = [bigraded_coefficient(series, n - q, q) for q in range(n + 1)]
    log.debug(f"[ci {x}] middle Hodge row {middle}")
    if any(h < 0 for h in middle):
        raise ConsistencyError(f"[ci {x}] negative Hodge number in middle row {middle}")
    diamond = HodgeDiamond.from_middle_row(n, middle).validate()

    b_mid = middle_betti(x)
    if sum(middle) != b_mid:
        raise ConsistencyError(
            f"[ci {x}] middle row {middle} sums to {sum(middle)}, Euler route gives b_{n} = {b_mid}"
        )

    if x.codim == 1:
        weighted = hodge_diamond_weighted(WeightedHypersurface((1,) * (n + 2), x.degrees[0]))
        if weighted != diamond:
            raise ConsistencyError(
                f"[ci {x}] Jacobian-ring middle row {list(weighted.middle_row())} "
                f"differs from generating-series row {middle}"
            )
    return diamond


def middle_level(x: CompleteIntersection) -> Optional[int]:
    return hodge_level(hodge_diamond(x), x.dim)


def middle_jacobian(x: CompleteIntersection) -> int:
    """dim J^n for odd n."""
    if x.dim % 2 == 0:
        raise ValueError(f"{x} has even dimension, its middle cohomology has no intermediate Jacobian")
    return jacobian_dimension(hodge_diamond(x), (x.dim + 1) // 2)


# ------------------------------------------------------------------
# Level-one families
# ------------------------------------------------------------------

@dataclass(frozen=True)
class LevelOneFamily:
    label: str
    description: str
    curve: Optional[str] = None
    expected_jacobian: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "description": self.description,
            "curve": self.curve,
            "expected_jacobian": self.expected_jacobian,
        }


def level_one_family(x: CompleteIntersection) -> Optional[LevelOneFamily]:
    """Which member of the level-one list `x` belongs to, if any."""
    n, degrees = x.dim, x.degrees
    if n == 3 and degrees == (3,):
        return LevelOneFamily("cubic-threefold", "cubic threefold in P^4")
    if n == 3 and degrees == (4,):
        return LevelOneFamily("quartic-threefold", "quartic threefold in P^4")
    if n == 3 and degrees == (2, 3):
        return LevelOneFamily("quadric-cubic-threefold", "intersection of a quadric and a cubic in P^5")
    if n == 5 and degrees == (3,):
        return LevelOneFamily("cubic-fivefold", "cubic fivefold in P^6", expected_jacobian=21)
    if n % 2 == 1 and n >= 3:
        m = (n - 1) // 2
        if degrees == (2, 2):
            return LevelOneFamily(
                "two-quadrics",
                f"intersection of two quadrics in P^{2 * m + 3}",
                curve=f"hyperelliptic curve of genus {m + 1}",
                expected_jacobian=m + 1,
            )
        if degrees == (2, 2, 2):
            plane_degree = 2 * m + 5
            genus = (plane_degree - 1) * (plane_degree - 2) // 2
            return LevelOneFamily(
                "three-quadrics",
                f"intersection of three quadrics in P^{2 * m + 4}",
                curve=f"Prym of a double cover of a plane curve of degree {plane_degree} (genus {genus})",
                expected_jacobian=genus - 1,
            )
    return None


@dataclass(frozen=True)
class LevelOneEntry:
    variety: CompleteIntersection
    jacobian_dimension: int
    family: Optional[LevelOneFamily]
    report: Optional[ConsistencyReport] = None

    def to_dict(self) -> dict:
        return {
            "variety": self.variety.to_dict(),
            "jacobian_dimension": self.jacobian_dimension,
            "family": self.family.to_dict() if self.family else None,
            "report": self.report.to_dict() if self.report else None,
        }


def _degree_multisets(max_sum: int):
    """All multisets of integers >= 2 with sum <= max_sum, the empty one included."""
    yield ()
    for r in range(1, max_sum // 2 + 1):
        for combo in combinations_with_replacement(range(2, max_sum + 1), r):
            if sum(combo) <= max_sum:
                yield combo


def is_level_one(x: CompleteIntersection) -> bool:
    """Middle level <= 1 with nonzero middle cohomology (quadrics are excluded)."""
    level = middle_level(x)
    return level is not EMPTY and level <= 1


def classify_level_one(max_dim: int, max_degree_sum: int) -> list[LevelOneEntry]:
    """
    Exhaustive search over odd dimensions 3..max_dim and degree multisets with
    sum <= max_degree_sum. Output is sorted by (dim, degrees).
    """
    if max_dim < 3:
        raise ValueError(f"max_dim must be >= 3, got {max_dim}")
    if max_degree_sum < 0:
        raise ValueError(f"max_degree_sum must be >= 0, got {max_degree_sum}")

    candidates = [
        CompleteIntersection(n, degrees)
        for n in range(3, max_dim + 1, 2)
        for degrees in _degree_multisets(max_degree_sum)
    ]
    log.info(f"[classify dim<={max_dim} sum<={max_degree_sum}] scanning {len(candidates)} candidates")

    hits = []
    for x in sorted(candidates, key=lambda c: (c.dim, c.degrees)):
        if not is_level_one(x):
            continue
        jac = middle_jacobian(x)
        family = level_one_family(x)
        report = None
        if family is None:
            log.warning(f"[classify] {x} has level one but matches no known family")
        else:
            routes = {"hodge": jac}
            if family.expected_jacobian is not None:
                routes["curve"] = family.expected_jacobian
            claim = lookup("ci", (x.dim, x.degrees), "jacobian_dimension")
            report = ConsistencyReport(
                "jacobian_dimension",
                routes,
                claim.value if claim else None,
                claim.citation if claim else None,
            ).require_agreement(f"[classify {x}]")
        hits.append(LevelOneEntry(x, jac, family, report))
    return hits
