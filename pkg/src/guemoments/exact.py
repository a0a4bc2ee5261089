"""Exact real numbers of the form ``sign * sqrt(q)`` with ``q`` a nonnegative rational.

Correlation coefficients are ``cov / sqrt(var_f * var_g)``; squaring clears the
root, so they are stored as (sign, square) and compared exactly that way.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

_SMALL_PRIMES = [p for p in range(2, 2000) if all(p % d for d in range(2, math.isqrt(p) + 1))]


def _split_square(n: int) -> tuple[int, int]:
    """Write ``n = s*s*r`` pulling out small square factors and a square cofactor."""
    s, r = 1, n
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > r:
            break
        while r % pp == 0:
            r //= pp
            s *= p
    root = math.isqrt(r)
    if root * root == r:
        return s * root, 1
    return s, r


@dataclass(frozen=True)
class SqrtRational:
    sign: int
    square: Fraction

    def __post_init__(self):
        square = Fraction(self.square)
        if square < 0:
            raise ValueError("square must be nonnegative")
        sign = 0 if square == 0 else (1 if self.sign > 0 else -1)
        object.__setattr__(self, "square", square)
        object.__setattr__(self, "sign", sign)

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> SqrtRational:
        q = Fraction(q)
        return cls(1 if q > 0 else -1, q * q)

    @classmethod
    def ratio(cls, num: Fraction | int, radicand: Fraction | int) -> SqrtRational:
        """``num / sqrt(radicand)``."""
        num, radicand = Fraction(num), Fraction(radicand)
        if radicand <= 0:
            raise ZeroDivisionError("radicand must be positive")
        return cls(1 if num > 0 else -1, num * num / radicand)

    @classmethod
    def zero(cls) -> SqrtRational:
        return cls(0, Fraction(0))

    def parts(self) -> tuple[Fraction, int]:
        """``(coeff, r)`` with ``self == coeff * sqrt(r)``."""
        if self.sign == 0:
            return Fraction(0), 1
        a, b = self.square.numerator, self.square.denominator
        s, r = _split_square(a * b)
        return self.sign * Fraction(s, b), r

    def is_rational(self) -> bool:
        return self.parts()[1] == 1

    def to_decimal(self, prec: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec
            root = (Decimal(self.square.numerator) / Decimal(self.square.denominator)).sqrt()
            return root if self.sign >= 0 else -root

    def __float__(self) -> float:
        return float(self.to_decimal(30))

    def __abs__(self) -> SqrtRational:
        return SqrtRational(abs(self.sign), self.square)

    def __neg__(self) -> SqrtRational:
        return SqrtRational(-self.sign, self.square)

    def __str__(self) -> str:
        coeff, r = self.parts()
        if r == 1:
            return str(coeff)
        sign = "-" if coeff < 0 else ""
        p, q = abs(coeff.numerator), coeff.denominator
        body = f"sqrt({r})" if p == 1 else f"{p}*sqrt({r})"
        return sign + body + (f"/{q}" if q != 1 else "")
