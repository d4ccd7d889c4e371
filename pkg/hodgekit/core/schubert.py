"""
Intersection theory on Grassmannians and on projective bundles over them.

Conventions
-----------
G(r, n) is the Grassmannian of r-planes in P^n, i.e. of (r+1)-dimensional
subspaces S of C^{n+1}. Schubert classes sigma_lambda are indexed by partitions
with at most r+1 parts, each at most n-r, so

    c(S^dual) = 1 + s(1) + s(1,1) + ... + s(1^{r+1})
    c(Q)      = 1 + s(1) + s(2)   + ... + s(n-r)
    c(S)      = sum (-1)^i s(1^i)

and c(S) c(Q) = 1. The bundle whose symmetric powers describe degree-d forms
on an r-plane is S^dual (rank r+1, c_1 = sigma_1).

Products of basis classes are Littlewood-Richardson coefficients from lrcalc,
restricted to the (r+1) x (n-r) box. Classes leaving the box span an ideal, so
dropping them is exact.

Characteristic classes of symmetric powers use the splitting principle with
sympy: the Chern polynomial of Sym^k is expanded in formal roots and rewritten
in elementary symmetric functions, which are then replaced by c_i(E).
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

import lrcalc
import sympy as sp
from sympy import Poly
from sympy.polys.polyfuncs import symmetrize

from .errors import BudgetExceededError, ConsistencyError, RingMismatchError
from .exact import as_int, binomial
from .partitions import Partition, complement, partitions_in_box
from .series import truncate_total_degree
from ..utils.formatting import format_class_terms, format_partition_key
from ..utils.log import get_logger

log = get_logger(__name__)

DEFAULT_SYM_BUDGET = 70


# ------------------------------------------------------------------
# Ring
# ------------------------------------------------------------------

class GrassmannRing:
    """
    H*(G(r, n)) with the Schubert basis. Products of basis classes are
    computed on first use and kept; the table is guarded by a lock so a ring
    can be shared between worker threads.
    """

    def __init__(self, r: int, n: int):
        if r < 0 or n <= r:
            raise ValueError(f"G(r, n) needs 0 <= r < n, got r={r}, n={n}")
        self.r = r
        self.n = n
        self.rows = r + 1
        self.cols = n - r
        self.basis: tuple[Partition, ...] = tuple(partitions_in_box(self.rows, self.cols))
        self._products: dict[tuple[Partition, Partition], dict[Partition, int]] = {}
        self._lock = threading.Lock()

    def __eq__(self, other) -> bool:
        return isinstance(other, GrassmannRing) and (self.r, self.n) == (other.r, other.n)

    def __hash__(self) -> int:
        return hash(("G", self.r, self.n))

    def __repr__(self) -> str:
        return f"G({self.r},{self.n})"

    @property
    def dim(self) -> int:
        return self.rows * self.cols

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def box(self) -> Partition:
        return Partition((self.cols,) * self.rows, box=(self.rows, self.cols))

    # -- constructors -------------------------------------------------

    def partition(self, parts: Iterable[int]) -> Partition:
        return Partition(tuple(parts), box=(self.rows, self.cols))

    def schubert(self, parts: Iterable[int] = (), coeff: int = 1) -> "GrassmannClass":
        """sigma_parts, or zero when the partition leaves the box."""
        lam = Partition(tuple(parts))
        if not lam.fits(self.rows, self.cols):
            return self.zero()
        return GrassmannClass.from_dict(self, {lam: coeff})

    def one(self) -> "GrassmannClass":
        return self.schubert(())

    def zero(self) -> "GrassmannClass":
        return GrassmannClass(self, ())

    def special(self, k: int) -> "GrassmannClass":
        """sigma_k, the k-th Chern class of the universal quotient."""
        return self.schubert((k,)) if k >= 0 else self.zero()

    def elementary(self, k: int) -> "GrassmannClass":
        """sigma_{1^k}, the k-th Chern class of S^dual."""
        return self.schubert((1,) * k) if k >= 0 else self.zero()

    # -- multiplication -----------------------------------------------

    def basis_product(self, lam: Partition, mu: Partition) -> dict[Partition, int]:
        key = (lam, mu) if (lam.size, lam.parts) <= (mu.size, mu.parts) else (mu, lam)
        with self._lock:
            cached = self._products.get(key)
        if cached is not None:
            return cached
        lam, mu = key
        if not lam.parts:
            out = {mu: 1}
        elif lam.size + mu.size > self.dim:
            out = {}
        else:
            raw = lrcalc.mult(list(lam.parts), list(mu.parts), self.rows, self.cols)
            out = {Partition(tuple(nu)): int(c) for nu, c in raw.items() if c}
        with self._lock:
            self._products.setdefault(key, out)
        return out


@lru_cache(maxsize=64)
def grassmann_ring(r: int, n: int) -> GrassmannRing:
    """Shared ring instance per (r, n), so product tables are built once."""
    log.debug(f"[schubert G({r},{n})] building ring")
    return GrassmannRing(r, n)


# ------------------------------------------------------------------
# Classes
# ------------------------------------------------------------------

@dataclass(frozen=True)
class GrassmannClass:
    ring: GrassmannRing
    terms: tuple[tuple[Partition, int], ...]

    @classmethod
    def from_dict(cls, ring: GrassmannRing, coeffs: dict) -> "GrassmannClass":
        items = []
        for lam, c in coeffs.items():
            c = as_int(c)
            if c:
                if not lam.fits(ring.rows, ring.cols):
                    raise ValueError(f"{lam} does not fit the box of {ring}")
                items.append((lam, c))
        items.sort(key=lambda t: (t[0].size, t[0].parts))
        return cls(ring, tuple(items))

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def _check(self, other: "GrassmannClass"):
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine classes of {self.ring} and {other.ring}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "GrassmannClass":
        if not isinstance(other, GrassmannClass):
            other = self.ring.schubert((), other)
        self._check(other)
        out = self.as_dict()
        for lam, c in other.terms:
            out[lam] = out.get(lam, 0) + c
        return GrassmannClass.from_dict(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "GrassmannClass":
        return GrassmannClass(self.ring, tuple((lam, -c) for lam, c in self.terms))

    def __sub__(self, other) -> "GrassmannClass":
        return self + (-other)

    def __rsub__(self, other) -> "GrassmannClass":
        return (-self) + other

    def __mul__(self, other) -> "GrassmannClass":
        if not isinstance(other, GrassmannClass):
            scalar = as_int(other)
            return GrassmannClass.from_dict(self.ring, {lam: c * scalar for lam, c in self.terms})
        return lr_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GrassmannClass":
        if exponent < 0:
            raise ValueError("negative powers of Schubert classes are undefined")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
            if result.is_zero():
                break
        return result

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, parts: Iterable[int]) -> int:
        return self.as_dict().get(Partition(tuple(parts)), 0)

    def graded(self, k: int) -> "GrassmannClass":
        """Component of codimension k."""
        return GrassmannClass(self.ring, tuple(t for t in self.terms if t[0].size == k))

    def truncated(self, max_degree: int) -> "GrassmannClass":
        return GrassmannClass(self.ring, tuple(t for t in self.terms if t[0].size <= max_degree))

    def degrees(self) -> list[int]:
        return sorted({lam.size for lam, _ in self.terms})

    def integral(self) -> int:
        """Degree against the fundamental class: the coefficient of the full box."""
        return self.as_dict().get(self.ring.box, 0)

    def to_dict(self) -> dict[str, int]:
        return {format_partition_key(lam.parts): c for lam, c in self.terms}

    def __str__(self) -> str:
        return format_class_terms((lam.parts, c) for lam, c in self.terms)


def lr_multiply(a: GrassmannClass, b: GrassmannClass) -> GrassmannClass:
    a._check(b)
    ring = a.ring
    out: dict[Partition, int] = {}
    for lam, ca in a.terms:
        for mu, cb in b.terms:
            for nu, c in ring.basis_product(lam, mu).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return GrassmannClass.from_dict(ring, out)


def schubert_dual(lam: Partition, ring: GrassmannRing) -> Partition:
    """Poincaré dual index: sigma_lam * sigma_dual = point."""
    return complement(lam, ring.rows, ring.cols)


# ------------------------------------------------------------------
# Bundles
# ------------------------------------------------------------------

@dataclass(frozen=True)
class BundleData:
    ring: GrassmannRing
    rank: int
    chern: tuple[GrassmannClass, ...]   # c_1 .. c_rank

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f"rank must be >= 0, got {self.rank}")
        chern = tuple(self.chern)[: self.rank]
        chern += tuple(self.ring.zero() for _ in range(self.rank - len(chern)))
        for i, c in enumerate(chern, start=1):
            if c.ring != self.ring:
                raise RingMismatchError(f"c_{i} lives in {c.ring}, bundle is over {self.ring}")
            if not c.is_zero() and c.degrees() != [i]:
                raise ValueError(f"c_{i} must be homogeneous of degree {i}, got {c}")
        object.__setattr__(self, "chern", chern)

    @classmethod
    def trivial(cls, ring: GrassmannRing, rank: int = 1) -> "BundleData":
        return cls(ring, rank, ())

    @classmethod
    def line(cls, first_chern: GrassmannClass) -> "BundleData":
        return cls(first_chern.ring, 1, (first_chern,))

    def c(self, i: int) -> GrassmannClass:
        if i == 0:
            return self.ring.one()
        if i < 0 or i > self.rank:
            return self.ring.zero()
        return self.chern[i - 1]

    def total(self) -> GrassmannClass:
        out = self.ring.one()
        for c in self.chern:
            out = out + c
        return out

    def top(self) -> GrassmannClass:
        return self.c(self.rank)

    def dual(self) -> "BundleData":
        return BundleData(self.ring, self.rank, tuple(c * (-1) ** i for i, c in enumerate(self.chern, start=1)))

    def segre_classes(self, upto: Optional[int] = None) -> list[GrassmannClass]:
        """s_0 .. s_upto with c(E) s(E) = 1; s_j = -sum_{i=1}^{j} c_i s_{j-i}."""
        upto = self.ring.dim if upto is None else upto
        s = [self.ring.one()]
        for j in range(1, upto + 1):
            acc = self.ring.zero()
            for i in range(1, min(j, self.rank) + 1):
                acc = acc + self.c(i) * s[j - i]
            s.append(-acc)
        return s

    def segre(self, j: int) -> GrassmannClass:
        if j < 0:
            return self.ring.zero()
        if j > self.ring.dim:
            return self.ring.zero()
        return self.segre_classes(j)[j]

    def total_segre(self) -> GrassmannClass:
        out = self.ring.zero()
        for s in self.segre_classes():
            out = out + s
        return out

    def to_dict(self) -> dict:
        return {"rank": self.rank, "chern": [c.to_dict() for c in self.chern]}


def tautological_bundles(ring: GrassmannRing) -> tuple[BundleData, BundleData]:
    """(S, Q): the rank r+1 subbundle and the rank n-r quotient."""
    sub = BundleData(ring, ring.rows, tuple(ring.elementary(i) * (-1) ** i for i in range(1, ring.rows + 1)))
    quotient = BundleData(ring, ring.cols, tuple(ring.special(i) for i in range(1, ring.cols + 1)))
    return sub, quotient


def dual_subbundle(ring: GrassmannRing) -> BundleData:
    """S^dual, c_1 = sigma_1."""
    return tautological_bundles(ring)[0].dual()


def direct_sum(e: BundleData, f: BundleData) -> BundleData:
    if e.ring != f.ring:
        raise RingMismatchError(f"cannot add bundles over {e.ring} and {f.ring}")
    total = e.total() * f.total()
    rank = e.rank + f.rank
    return BundleData(e.ring, rank, tuple(total.graded(i) for i in range(1, rank + 1)))


def twist_chern(v: BundleData, line_class: GrassmannClass) -> BundleData:
    """c(V (x) L) from c(V), rank V and l = c_1(L): c_j = sum_i C(R-i, j-i) c_i l^{j-i}."""
    ring, rank = v.ring, v.rank
    powers = [ring.one()]
    for _ in range(rank):
        powers.append(powers[-1] * line_class)
    chern = []
    for j in range(1, rank + 1):
        acc = ring.zero()
        for i in range(j + 1):
            acc = acc + v.c(i) * powers[j - i] * binomial(rank - i, j - i)
        chern.append(acc)
    return BundleData(ring, rank, tuple(chern))


# ------------------------------------------------------------------
# Symmetric powers
# ------------------------------------------------------------------

def sym_power_rank(e: int, k: int) -> int:
    if e < 0 or k < 0:
        raise ValueError(f"rank and power must be >= 0, got e={e}, k={k}")
    if e == 0:
        return 1 if k == 0 else 0
    return binomial(e + k - 1, k)


def _sympy_int(value) -> int:
    value = sp.sympify(value)
    if not value.is_Integer:
        raise ConsistencyError(f"expected an integer Chern coefficient, got {value}")
    return int(value)


@lru_cache(maxsize=256)
def _sym_power_polynomials(e: int, k: int, max_degree: int) -> tuple[tuple[int, tuple], ...]:
    """
    Chern classes of Sym^k of a rank-e bundle, as polynomials in the Chern
    classes of the bundle: for each degree j, a tuple of (coefficient, exponents)
    with exponents[i] the power of c_{i+1}.
    """
    xs = sp.symbols(f"x1:{e + 1}")
    total = Poly(1, *xs)
    for combo in combinations_with_replacement(range(e), k):
        root = sum(xs[i] for i in combo)
        total = truncate_total_degree(total * Poly(1 + root, *xs), max_degree)

    by_degree: dict[int, dict] = {}
    for monom, coeff in total.as_dict().items():
        by_degree.setdefault(sum(monom), {})[monom] = coeff

    out = []
    for j in range(1, max_degree + 1):
        terms = by_degree.get(j)
        if not terms:
            out.append((j, ()))
            continue
        component = Poly.from_dict(terms, *xs).as_expr()
        sym, rem, defs = symmetrize(component, *xs, formal=True)
        if rem != 0:
            raise ConsistencyError(f"Sym^{k} of rank {e}: degree-{j} Chern polynomial is not symmetric")
        # s_i symbol -> index i, read off the degree of its defining polynomial
        index = {s: Poly(expr, *xs).total_degree() for s, expr in defs}
        symbols = sorted(index, key=index.get)
        if not symbols:
            out.append((j, ((_sympy_int(sym), (0,) * e),)))
            continue
        rewritten = Poly(sym, *symbols)
        monomials = []
        for exps, coeff in rewritten.as_dict().items():
            powers = [0] * e
            for s, p in zip(symbols, exps):
                powers[index[s] - 1] += p
            monomials.append((_sympy_int(coeff), tuple(powers)))
        out.append((j, tuple(sorted(monomials, key=lambda t: t[1]))))
    return tuple(out)


def _evaluate(ring: GrassmannRing, chern: Sequence[GrassmannClass], monomials) -> GrassmannClass:
    out = ring.zero()
    for coeff, exps in monomials:
        term = ring.one() * coeff
        for i, p in enumerate(exps):
            if p:
                term = term * chern[i] ** p
                if term.is_zero():
                    break
        out = out + term
    return out


def sym_power_chern(
    bundle: BundleData,
    k: int,
    twist: Optional[GrassmannClass] = None,
    budget: int = DEFAULT_SYM_BUDGET,
    truncate_at: Optional[int] = None,
) -> BundleData:
    """
    Chern classes of Sym^k(E) (x) L, where `twist` is c_1(L). Classes above
    `truncate_at` (default: the dimension of the Grassmannian) are dropped,
    and they vanish there anyway.
    """
    if k < 1:
        raise ValueError(f"symmetric power must be >= 1, got {k}")
    e = bundle.rank
    rank = sym_power_rank(e, k)
    if rank > budget:
        raise BudgetExceededError(f"rank of Sym^{k} of a rank-{e} bundle is {rank}, budget is {budget}")
    ring = bundle.ring
    ceiling = ring.dim if truncate_at is None else min(truncate_at, ring.dim)
    max_degree = min(ceiling, rank)
    log.debug(f"[schubert {ring}] Sym^{k} of rank {e}: rank {rank}, degrees <= {max_degree}")

    chern = [ring.zero()] * rank
    if e > 0 and max_degree > 0:
        for j, monomials in _sym_power_polynomials(e, k, max_degree):
            chern[j - 1] = _evaluate(ring, bundle.chern, monomials)
    result = BundleData(ring, rank, tuple(chern))
    return twist_chern(result, twist) if twist is not None else result


def det_sym_multiplier(m: int, k: int) -> int:
    """c_1(Sym^k E) = multiplier * c_1(E) for E of rank m: k C(m-1+k, k) / m."""
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    return as_int(Fraction(k * binomial(m - 1 + k, k), m))


def det_sym_multiplier_bruteforce(m: int, k: int) -> int:
    """Sum of the first exponent over all degree-k exponent vectors in m variables."""
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    return sum(combo.count(0) for combo in combinations_with_replacement(range(m), k))


def published_closed_form_a(r: int, d: int) -> Fraction:
    """Closed form quoted for a; d(d+1)/2 when r = 1."""
    if r == 1:
        return Fraction(d * (d + 1), 2)
    return Fraction(r ** (d + 1) - r * (d + 1) + d, (r - 1) ** 2)


def published_closed_form_b(r: int, d: int) -> Fraction:
    """Closed form quoted for b; d(2d+1) when r = 1."""
    if r == 1:
        return Fraction(d * (2 * d + 1))
    return Fraction(r ** (2 * d + 1) - r * (2 * d + 1) + 2 * d, (r - 1) ** 2)


# ------------------------------------------------------------------
# Projective bundles
# ------------------------------------------------------------------

ZetaPoly = tuple[GrassmannClass, ...]   # entry j is the coefficient of zeta^j


class ProjBundleRing:
    """
    H* of the bundle of lines P(E) over the Grassmannian, zeta = c_1(O(1)),
    with zeta^e + c_1 zeta^{e-1} + ... + c_e = 0.
    """

    def __init__(self, bundle: BundleData):
        if bundle.rank < 1:
            raise ValueError("projectivization needs a bundle of rank >= 1")
        self.base = bundle.ring
        self.bundle = bundle
        self.e = bundle.rank

    @property
    def dim(self) -> int:
        return self.base.dim + self.e - 1

    def zeta_power(self, j: int) -> ZetaPoly:
        return tuple(self.base.one() if i == j else self.base.zero() for i in range(j + 1))

    def reduce(self, poly: Sequence[GrassmannClass]) -> ZetaPoly:
        """Rewrite in the basis 1, zeta, ..., zeta^{e-1}."""
        coeffs = list(poly)
        for j in range(len(coeffs) - 1, self.e - 1, -1):
            a = coeffs[j]
            if a.is_zero():
                continue
            for i in range(1, self.e + 1):
                coeffs[j - i] = coeffs[j - i] - a * self.bundle.c(i)
            coeffs[j] = self.base.zero()
        coeffs = coeffs[: self.e]
        return tuple(coeffs) + tuple(self.base.zero() for _ in range(self.e - len(coeffs)))

    def power(self, j: int) -> ZetaPoly:
        return self.reduce(self.zeta_power(j))

    def push(self, poly: Sequence[GrassmannClass]) -> GrassmannClass:
        """Pushforward of a reduced element: its zeta^{e-1} coefficient."""
        if any(not c.is_zero() for c in list(poly)[self.e:]):
            raise ValueError(f"element has zeta-degree >= {self.e}; reduce it first")
        return poly[self.e - 1] if len(poly) >= self.e else self.base.zero()

    def push_power(self, j: int) -> GrassmannClass:
        """Segre route: push(zeta^j) = s_{j-e+1}(E)."""
        return self.bundle.segre(j - self.e + 1)

    def multiply(self, a: Sequence[GrassmannClass], b: Sequence[GrassmannClass]) -> ZetaPoly:
        out = [self.base.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self.reduce(out)


def proj_pushforward(ring: ProjBundleRing, x: Sequence[GrassmannClass]) -> GrassmannClass:
    """Push an arbitrary polynomial in zeta down to the Grassmannian."""
    return ring.push(ring.reduce(x))
