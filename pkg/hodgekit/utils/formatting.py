"""
Pure formatting helpers. No core imports.
"""

from fractions import Fraction
from typing import Iterable, Optional, Sequence


def format_rational(value) -> str:
    """3 -> '3', Fraction(3, 2) -> '3/2'"""
    q = Fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_partition(parts: Sequence[int]) -> str:
    """(2, 1, 1) -> '(2,1,1)'; the empty partition is '()'"""
    return "(" + ",".join(str(p) for p in parts) + ")"


def format_partition_key(parts: Sequence[int]) -> str:
    """JSON key for a Schubert class: (2, 1) -> '2,1', () -> '0'"""
    return ",".join(str(p) for p in parts) if parts else "0"


def format_series(coefficients: Iterable, variable: str = "t") -> str:
    """[1, -3, 9] -> '1 - 3t + 9t^2'"""
    terms = []
    for k, c in enumerate(coefficients):
        q = Fraction(c)
        if q == 0:
            continue
        sign = "-" if q < 0 else "+"
        mag = abs(q)
        if k == 0:
            body = format_rational(mag)
        else:
            power = variable if k == 1 else f"{variable}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_class_terms(terms: Iterable[tuple[Sequence[int], int]], symbol: str = "s") -> str:
    """[((2,), 1), ((1, 1), -2)] -> 's(2) - 2*s(1,1)'"""
    pieces = []
    for parts, coeff in terms:
        if not coeff:
            continue
        base = "1" if not parts else f"{symbol}{format_partition(parts)}"
        mag = abs(coeff)
        body = base if mag == 1 else f"{mag}*{base}"
        pieces.append(("-" if coeff < 0 else "+", body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_level(level: Optional[int]) -> str:
    """None (no cohomology in that degree) -> 'empty'"""
    return "empty" if level is None else str(level)
