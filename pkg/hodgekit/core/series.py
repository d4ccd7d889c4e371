"""
Truncated formal power series over the rationals.

Series are dense: `coefficients[k]` is the coefficient of t^k for
0 <= k <= order. Binary operations truncate to the smaller order of the two
operands, so combining series of equal order preserves it.

Multivariate series are sympy polynomials cut at a total degree; the two
helpers at the bottom keep them truncated through products and inverses.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import Poly

from .exact import BigRat
from ..utils.formatting import format_series


@dataclass(frozen=True)
class TruncSeries:
    coefficients: tuple[BigRat, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients for order {self.order}, "
                f"got {len(self.coefficients)}"
            )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs: Iterable, order: int) -> "TruncSeries":
        """Series of a polynomial given low-to-high; terms above `order` are dropped."""
        values = [Fraction(c) for c in coeffs][: order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        return cls(tuple(values), order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.polynomial([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls.polynomial([], order)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.polynomial([other], self.order)

    def __add__(self, other) -> "TruncSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncSeries(
            tuple(self.coefficients[k] + other.coefficients[k] for k in range(order + 1)),
            order,
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-c for c in self.coefficients), self.order)

    def __sub__(self, other) -> "TruncSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            scalar = Fraction(other)
            return TruncSeries(tuple(c * scalar for c in self.coefficients), self.order)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coefficients[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return TruncSeries(tuple(out), order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self.coefficients[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [Fraction(1) / c0]
        for k in range(1, self.order + 1):
            acc = sum(self.coefficients[i] * out[k - i] for i in range(1, k + 1))
            out.append(-acc / c0)
        return TruncSeries(tuple(out), self.order)

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> "TruncSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def coefficient(self, k: int) -> BigRat:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient t^{k} is outside truncation order {self.order}")
        return self.coefficients[k]

    def integer_coefficients(self) -> list[int]:
        out = []
        for k, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise ValueError(f"coefficient of t^{k} is not integral: {c}")
            out.append(c.numerator)
        return out

    def is_palindromic(self, degree: int) -> bool:
        """Coefficient k equals coefficient degree-k wherever both are visible."""
        for k in range(self.order + 1):
            mirror = degree - k
            if 0 <= mirror <= self.order:
                if self.coefficients[k] != self.coefficients[mirror]:
                    return False
            elif self.coefficients[k] != 0 and mirror < 0:
                return False
        return True

    def __str__(self) -> str:
        return f"{format_series(self.coefficients)} + O(t^{self.order + 1})"


def geometric_quotient_series(
    numerator_exps: Sequence[int], denominator_exps: Sequence[int], order: int
) -> TruncSeries:
    """
    Expand prod(1 - t^a for a in numerator_exps) / prod(1 - t^b for b in denominator_exps)
    up to t^order. Every exponent must be >= 1.
    """
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    for b in denominator_exps:
        if b <= 0:
            raise ValueError(f"denominator exponents must be >= 1, got {b}")
    for a in numerator_exps:
        if a <= 0:
            raise ValueError(f"numerator exponents must be >= 1, got {a}")

    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for a in numerator_exps:
        # multiply by (1 - t^a), walking down so each entry is read before it is written
        for k in range(order, a - 1, -1):
            coeffs[k] -= coeffs[k - a]
    for b in denominator_exps:
        # multiply by 1/(1 - t^b) = 1 + t^b + t^2b + ...
        for k in range(b, order + 1):
            coeffs[k] += coeffs[k - b]
    return TruncSeries.polynomial(coeffs, order)


def series_coefficient(s: TruncSeries, k: int) -> BigRat:
    """Exact coefficient of t^k; asking beyond the truncation order is an error."""
    return s.coefficient(k)


# ------------------------------------------------------------------
# Multivariate (sympy) series
# ------------------------------------------------------------------

def truncate_total_degree(poly: Poly, max_degree: int) -> Poly:
    """Drop every monomial of total degree above `max_degree`."""
    kept = {m: c for m, c in poly.as_dict().items() if sum(m) <= max_degree}
    return Poly.from_dict(kept or {(0,) * len(poly.gens): 0}, *poly.gens)


def truncated_inverse(poly: Poly, max_degree: int) -> Poly:
    """Inverse of a polynomial with constant term +-1, as a series cut at `max_degree`."""
    c0 = poly.as_dict().get((0,) * len(poly.gens), 0)
    if c0 not in (1, -1):
        raise ValueError(f"constant term must be a unit, got {c0}")
    # 1/(c0 + t) = c0 * sum (-c0 t)^k, and t has no constant term
    step = (poly - c0) * (-c0)
    result = power = Poly(1, *poly.gens)
    for _ in range(max_degree):
        power = truncate_total_degree(power * step, max_degree)
        result = result + power
    return result * c0
