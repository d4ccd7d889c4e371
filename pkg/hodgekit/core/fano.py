"""
Fano schemes F_r(X) of r-planes on cyclic covers X -> P^n.

X is an m:1 cover branched along a hypersurface of degree m*d. An r-plane
on X maps isomorphically to an r-plane P in P^n on which the branch equation
restricts to an m-th power of a degree-d form, so the parameter space of
(plane, form) pairs is

    G_P(r) = P(O + Sym^d S^dual)   over   G(r, n)

and F_r(X) is cut out there by a section of O(m) (x) Sym^{md} S^dual. Everything
below is bookkeeping on that description: dimensions, the Euler characteristic
of the normal bundle, the canonical class, and the class of F_r(X) pushed down
to the Grassmannian.

The double cover (m = 2) is the case worked out in the literature. For m > 2
the same recipe is applied with 2d replaced by md and O(2) by O(m); results
carry `extrapolated = True`.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .consistency import ConsistencyReport
from .errors import ConsistencyError
from .exact import binomial, to_json_number
from .schubert import (
    DEFAULT_SYM_BUDGET,
    BundleData,
    GrassmannClass,
    ProjBundleRing,
    det_sym_multiplier,
    direct_sum,
    dual_subbundle,
    grassmann_ring,
    published_closed_form_a,
    published_closed_form_b,
    sym_power_chern,
)
from ..utils.log import get_logger

log = get_logger(__name__)


class Emptiness(str, Enum):
    EXPECT_EMPTY = "EXPECT_EMPTY"
    NONEMPTY = "NONEMPTY"
    BOUNDARY = "BOUNDARY"


class Positivity(str, Enum):
    GENERAL_TYPE = "GENERAL_TYPE"
    FANO = "FANO"
    CALABI_YAU_LIKE = "CALABI_YAU_LIKE"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class CoverTarget:
    n: int
    d: int
    r: int
    m: int = 2

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.m < 2:
            raise ValueError(f"cover order m must be >= 2, got {self.m}")
        if not 1 <= self.r <= self.n - 1:
            raise ValueError(f"plane dimension r must satisfy 1 <= r <= n-1, got r={self.r}, n={self.n}")

    @property
    def branch_degree(self) -> int:
        return self.m * self.d

    @property
    def extrapolated(self) -> bool:
        return self.m > 2

    def __str__(self) -> str:
        return f"F_{self.r} of the {self.m}:1 cover of P^{self.n} branched in degree {self.branch_degree}"

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "r": self.r, "m": self.m}


# ------------------------------------------------------------------
# Dimensions
# ------------------------------------------------------------------

def grassmannian_dimension(t: CoverTarget) -> int:
    return (t.r + 1) * (t.n - t.r)


def gp_dimension(t: CoverTarget) -> int:
    return grassmannian_dimension(t) + binomial(t.d + t.r, t.d)


def incidence_codim(t: CoverTarget) -> int:
    """Rank of Sym^{md} S^dual: the number of equations cutting out F_r(X)."""
    return binomial(t.branch_degree + t.r, t.branch_degree)


def expected_dimension(t: CoverTarget) -> int:
    return gp_dimension(t) - incidence_codim(t)


def emptiness_prediction(t: CoverTarget) -> Emptiness:
    """A prediction for general X, not a certificate."""
    delta = expected_dimension(t)
    if delta < 0:
        return Emptiness.EXPECT_EMPTY
    if delta == 0:
        return Emptiness.BOUNDARY
    return Emptiness.NONEMPTY


def normal_bundle_euler(t: CoverTarget) -> int:
    """chi(N) from 0 -> N -> O(d) + O(1)^{n-r} -> O(md) -> 0 on the plane."""
    value = binomial(t.d + t.r, t.r) + (t.n - t.r) * (t.r + 1) - binomial(t.branch_degree + t.r, t.r)
    delta = expected_dimension(t)
    if value != delta:
        raise ConsistencyError(f"[fano {t.to_dict()}] chi(N) = {value} but expected dimension is {delta}")
    return value


# ------------------------------------------------------------------
# Canonical class
# ------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalDescriptor:
    a: int
    b: int
    grassmann_coeff: int
    fiber_coeff: int
    positivity: Positivity
    extrapolated: bool = False
    published_a: Optional[object] = None
    published_b: Optional[object] = None

    def mismatches(self) -> list[dict]:
        out = []
        for name, engine, quoted in (("a", self.a, self.published_a), ("b", self.b, self.published_b)):
            if quoted is not None and quoted != engine:
                out.append({"coefficient": name, "engine": engine, "published": to_json_number(quoted)})
        return out

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "grassmann_coeff": self.grassmann_coeff,
            "fiber_coeff": self.fiber_coeff,
            "positivity": self.positivity.value,
            "extrapolated": self.extrapolated,
            "published_a": to_json_number(self.published_a) if self.published_a is not None else None,
            "published_b": to_json_number(self.published_b) if self.published_b is not None else None,
        }


def _positivity(grassmann_coeff: int, fiber_coeff: int) -> Positivity:
    if grassmann_coeff > 0 and fiber_coeff > 0:
        return Positivity.GENERAL_TYPE
    if grassmann_coeff < 0 and fiber_coeff < 0:
        return Positivity.FANO
    if grassmann_coeff == 0 and fiber_coeff == 0:
        return Positivity.CALABI_YAU_LIKE
    return Positivity.INDETERMINATE


def canonical_descriptor(t: CoverTarget) -> CanonicalDescriptor:
    """
    omega = gamma^* O(a + b - n - 1) (x) O_{G_P}(m C(md+r, md) - C(d+r, d) - 1)
    restricted to F_r(X), assuming F_r(X) smooth of expected dimension.
    """
    a = det_sym_multiplier(t.r + 1, t.d)
    b = det_sym_multiplier(t.r + 1, t.branch_degree)
    grassmann_coeff = a + b - t.n - 1
    fiber_coeff = t.m * incidence_codim(t) - binomial(t.d + t.r, t.d) - 1
    # quoted closed forms only exist for double covers
    published_a = published_closed_form_a(t.r, t.d) if t.m == 2 else None
    published_b = published_closed_form_b(t.r, t.d) if t.m == 2 else None
    return CanonicalDescriptor(
        a=a,
        b=b,
        grassmann_coeff=grassmann_coeff,
        fiber_coeff=fiber_coeff,
        positivity=_positivity(grassmann_coeff, fiber_coeff),
        extrapolated=t.extrapolated,
        published_a=published_a,
        published_b=published_b,
    )


# ------------------------------------------------------------------
# Profile
# ------------------------------------------------------------------

@dataclass(frozen=True)
class FanoSchemeProfile:
    target: CoverTarget
    gp_dim: int
    codim: int
    delta: int
    normal_chi: int
    canonical: CanonicalDescriptor
    verdict: Emptiness

    @property
    def extrapolated(self) -> bool:
        return self.target.extrapolated

    def to_dict(self) -> dict:
        return {
            "gp_dim": self.gp_dim,
            "codim": self.codim,
            "delta": self.delta,
            "normal_chi": self.normal_chi,
            "canonical": self.canonical.to_dict(),
            "verdict": self.verdict.value,
            "extrapolated": self.extrapolated,
        }


def fano_profile(t: CoverTarget) -> FanoSchemeProfile:
    profile = FanoSchemeProfile(
        target=t,
        gp_dim=gp_dimension(t),
        codim=incidence_codim(t),
        delta=expected_dimension(t),
        normal_chi=normal_bundle_euler(t),
        canonical=canonical_descriptor(t),
        verdict=emptiness_prediction(t),
    )
    log.debug(f"[fano {t.to_dict()}] delta={profile.delta} verdict={profile.verdict.value}")
    return profile


# ------------------------------------------------------------------
# Class of F_r(X)
# ------------------------------------------------------------------

@dataclass(frozen=True)
class FanoClass:
    target: CoverTarget
    pushed: GrassmannClass          # gamma_* [F_r(X)] on G(r, n)
    codim: int                      # codimension of the pushed class in G(r, n)
    count: Optional[int] = None     # expected number of planes when delta = 0
    report: Optional[ConsistencyReport] = None

    def to_dict(self) -> dict:
        return {
            "class": self.pushed.to_dict(),
            "codim": self.codim,
            "count": self.count,
            "report": self.report.to_dict() if self.report else None,
        }


def cover_bundles(t: CoverTarget, budget: int, truncate_at: Optional[int]) -> tuple[BundleData, BundleData]:
    ring = grassmann_ring(t.r, t.n)
    sdual = dual_subbundle(ring)
    forms = sym_power_chern(sdual, t.d, budget=budget, truncate_at=truncate_at)
    base = direct_sum(BundleData.trivial(ring, 1), forms)
    equations = sym_power_chern(sdual, t.branch_degree, budget=budget, truncate_at=truncate_at)
    return base, equations


def fano_class(
    t: CoverTarget,
    truncate_at: Optional[int] = None,
    budget: int = DEFAULT_SYM_BUDGET,
) -> FanoClass:
    """
    gamma_* c_R(O(m) (x) W), W = Sym^{md} S^dual of rank R, by two routes:
    reduce modulo the projective-bundle relation and push, or push every
    zeta power directly through the Segre classes of the base bundle.
    """
    base, equations = cover_bundles(t, budget, truncate_at)
    proj = ProjBundleRing(base)
    ring = proj.base
    rank = equations.rank

    # c_R(W (x) O(m)) = sum_k m^{R-k} c_k(W) zeta^{R-k}
    top = [ring.zero()] * (rank + 1)
    for k in range(rank + 1):
        top[rank - k] = equations.c(k) * t.m ** (rank - k)

    by_reduction = proj.push(proj.reduce(top))
    by_segre = ring.zero()
    for j, coeff in enumerate(top):
        if not coeff.is_zero():
            by_segre = by_segre + coeff * proj.push_power(j)

    if by_reduction != by_segre:
        raise ConsistencyError(
            f"[fano {t.to_dict()}] pushforward routes disagree: {by_reduction} vs {by_segre}"
        )

    codim = rank - (proj.e - 1)
    count = None
    report = None
    if expected_dimension(t) == 0:
        count = by_reduction.integral()
        report = ConsistencyReport(
            "count", {"reduction": count, "segre": by_segre.integral()}
        ).require_agreement(f"[fano {t.to_dict()}]")
    log.info(f"[fano {t.to_dict()}] class in codim {codim}: {by_reduction}")
    return FanoClass(t, by_reduction, codim, count, report)
