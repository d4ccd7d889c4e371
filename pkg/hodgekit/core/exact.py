"""
Exact scalar helpers shared by every module.

BigRat is Python's Fraction: always in lowest terms with a positive
denominator, and nothing in hodgekit ever converts to float.
"""

import math
from fractions import Fraction

BigRat = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k falls outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_int(value) -> int:
    """Return `value` as an int, refusing anything with a fractional part."""
    q = Fraction(value)
    if q.denominator != 1:
        raise ValueError(f"expected an integral value, got {q}")
    return q.numerator


def to_json_number(value):
    """Integral rationals become ints; the rest become 'p/q' strings."""
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else str(q)
