"""Large-N data of the moment polynomials in closed form.

Indices follow the even/odd split used throughout: an even trace exponent
``2i`` is recorded by ``i`` and an odd exponent ``2j+1`` by ``j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .exact import SqrtRational
from .moments import IndexMultiset


class UndefinedCorrelation(ValueError):
    """A variance vanishes identically, so the correlation is undefined."""


class QuadratureError(RuntimeError):
    pass


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def degree_formula(ks: Sequence[int] | IndexMultiset) -> int:
    """Degree in N of ``E[prod Tr X^k]``: half the exponent sum plus the number of even exponents."""
    ks = IndexMultiset.of(ks)
    if ks.total % 2:
        raise ValueError(f"exponent sum is odd: {ks.ks}")
    return ks.m + ks.q


def leading_even(is_: Sequence[int]) -> int:
    return math.prod(catalan(i) for i in is_)


def a_pair(i: int, j: int) -> int:
    num = (2 * i + 1) * (2 * j + 1) * math.comb(2 * i, i) * math.comb(2 * j, j)
    q, r = divmod(num, i + j + 1)
    assert r == 0, (i, j)
    return q


def a_pair_sum(i: int, j: int) -> int:
    """Same coefficient from the Catalan convolution; not manifestly symmetric."""
    return (2 * j + 1) * sum((r + 1) * catalan(r) * catalan(i + j - r) for r in range(i + 1))


def _check_even_length(js: Sequence[int]) -> tuple[int, ...]:
    js = tuple(int(j) for j in js)
    if len(js) % 2:
        raise ValueError(f"need an even number of odd indices, got {len(js)}")
    if any(j < 0 for j in js):
        raise ValueError("indices must be nonnegative")
    return js


@lru_cache(maxsize=None)
def _mu(js: tuple[int, ...]) -> Fraction:
    if not js:
        return Fraction(1)
    first, rest = js[0], js[1:]
    total = Fraction(0)
    for k, jk in enumerate(rest):
        total += Fraction(1, first + jk + 1) * _mu(tuple(sorted(rest[:k] + rest[k + 1:])))
    return total


def mu_multi(js: Sequence[int]) -> Fraction:
    """Chord-diagram sum of ``prod 1/(j_r + j_s + 1)`` over the chords ``{r, s}``."""
    return _mu(tuple(sorted(_check_even_length(js))))


@lru_cache(maxsize=None)
def _a_chords(js: tuple[int, ...]) -> int:
    if not js:
        return 1
    first, rest = js[0], js[1:]
    return sum(
        a_pair(first, jk) * _a_chords(tuple(sorted(rest[:k] + rest[k + 1:])))
        for k, jk in enumerate(rest)
    )


def a_multi(js: Sequence[int]) -> int:
    """Leading coefficient of ``E[prod Tr X^(2j+1)]``.

    Computed both as a chord sum of pair coefficients and as
    ``mu * prod (2j+1)!/(j!)^2``; the two must agree.
    """
    js = tuple(sorted(_check_even_length(js)))
    by_chords = _a_chords(js)
    by_mu = mu_multi(js) * math.prod(
        Fraction(math.factorial(2 * j + 1), math.factorial(j) ** 2) for j in js
    )
    if by_mu != by_chords:
        raise ArithmeticError(f"A{js}: chord sum {by_chords} != mu form {by_mu}")
    return by_chords


def leading_general(is_: Sequence[int], js: Sequence[int]) -> int:
    return leading_even(is_) * a_multi(js)


def subleading_single(i: int) -> int:
    """Coefficient of ``N^(i-1)`` in ``E[Tr X^(2i)]``."""
    if i < 2:
        return 0
    return math.comb(2 * i - 1, 3) * catalan(i - 2)


def c_tilde1(i: int, j: int) -> int:
    """Connected two-trace part of the subleading coefficient."""
    if i + j == 0:
        return 0
    val = Fraction(i * j, i + j) * math.comb(2 * i, i) * math.comb(2 * j, j)
    assert val.denominator == 1, (i, j)
    return val.numerator


def subleading_multi(is_: Sequence[int]) -> int:
    """Coefficient two below the top in ``E[prod Tr X^(2i)]``."""
    is_ = list(is_)
    k = len(is_)
    total = 0
    for r in range(k):
        others = is_[:r] + is_[r + 1:]
        total += subleading_single(is_[r]) * leading_even(others)
    for r, s in combinations(range(k), 2):
        others = [x for t, x in enumerate(is_) if t not in (r, s)]
        total += c_tilde1(is_[r], is_[s]) * leading_even(others)
    return total


@dataclass(frozen=True)
class TraceVariableSpec:
    """``prod Tr X^(2i) * prod Tr X^(2j+1)`` given the i's and j's."""

    evens: tuple[int, ...] = ()
    odds: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "evens", tuple(sorted(int(i) for i in self.evens)))
        object.__setattr__(self, "odds", tuple(sorted(int(j) for j in self.odds)))
        if any(x < 0 for x in self.evens + self.odds):
            raise ValueError("indices must be nonnegative")

    def exponents(self) -> IndexMultiset:
        return IndexMultiset(tuple(2 * i for i in self.evens) + tuple(2 * j + 1 for j in self.odds))

    def without_constants(self) -> TraceVariableSpec:
        """Drop ``Tr X^0 = N`` factors; they rescale the variable and leave correlations alone."""
        return TraceVariableSpec(tuple(i for i in self.evens if i), self.odds)


@dataclass(frozen=True)
class CorrelationLimit:
    case: int
    value: SqrtRational

    def __float__(self) -> float:
        return float(self.value)


def _even_pair_sum(a: Sequence[int], b: Sequence[int]) -> Fraction:
    return sum(
        (Fraction(i * j * (i + 1) * (j + 1), i + j) for i in a for j in b), Fraction(0)
    )


def correlation_limit(f: TraceVariableSpec, g: TraceVariableSpec) -> CorrelationLimit:
    """N -> infinity limit of the correlation of two multi-trace variables."""
    f, g = f.without_constants(), g.without_constants()
    for side, name in ((f, "f"), (g, "g")):
        if not side.evens and not side.odds:
            raise UndefinedCorrelation(f"{name} is constant (only zero even indices)")
    lf, lg = len(f.odds), len(g.odds)
    j, jp = f.odds, g.odds

    if (lf - lg) % 2:
        return CorrelationLimit(1, SqrtRational.zero())

    if lf % 2:
        num = mu_multi(j + jp)
        den = mu_multi(j + j) * mu_multi(jp + jp)
        return CorrelationLimit(2, SqrtRational.ratio(num, den))

    if lf and lg:
        num = mu_multi(j + jp) - mu_multi(j) * mu_multi(jp)
        var_f = mu_multi(j + j) - mu_multi(j) ** 2
        var_g = mu_multi(jp + jp) - mu_multi(jp) ** 2
        return CorrelationLimit(3, SqrtRational.ratio(num, var_f * var_g))

    if lf or lg:
        return CorrelationLimit(4, SqrtRational.zero())

    num = _even_pair_sum(f.evens, g.evens)
    den = _even_pair_sum(f.evens, f.evens) * _even_pair_sum(g.evens, g.evens)
    return CorrelationLimit(5, SqrtRational.ratio(num, den))


def _coeffs(q: Sequence) -> list[Fraction]:
    return [Fraction(c) for c in q]


def covariance_limit(f_coeffs: Sequence, g_coeffs: Sequence) -> Fraction:
    """Limit of ``Cov(Tr f(X/sqrt N), Tr g(X/sqrt N))``; coefficient lists start at ``x^0``."""
    f, g = _coeffs(f_coeffs), _coeffs(g_coeffs)

    def deriv(p: list[Fraction], r: int) -> Fraction:
        return p[r] * math.factorial(r) if r < len(p) else Fraction(0)

    fact = math.factorial
    total = Fraction(0)
    for i in range(1, len(f) // 2 + 1):
        for j in range(1, len(g) // 2 + 1):
            total += (
                deriv(f, 2 * i) * deriv(g, 2 * j)
                / ((i + j) * fact(i) * fact(i - 1) * fact(j) * fact(j - 1))
            )
    for i in range((len(f) + 1) // 2):
        for j in range((len(g) + 1) // 2):
            total += (
                deriv(f, 2 * i + 1) * deriv(g, 2 * j + 1)
                / ((i + j + 1) * fact(i) ** 2 * fact(j) ** 2)
            )
    return total


def semicircle_moment(q: Sequence) -> Fraction:
    """Integral of ``q`` against the semicircle density ``sqrt(4 - x^2) / 2pi``."""
    return sum((c * catalan(e // 2) for e, c in enumerate(_coeffs(q)) if e % 2 == 0), Fraction(0))


def numeric_semicircle_quadrature(q: Sequence, tolerance: float = 1e-10) -> float:
    """Adaptive quadrature of the same integral, independent of the Catalan closed form."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    from scipy import integrate  # deferred: scipy import dominates CLI startup

    coeffs = np.array([float(c) for c in q] or [0.0])
    scale = 2 * math.pi
    # weight='alg' with (1/2, 1/2) integrates against (x+2)^(1/2) (2-x)^(1/2)
    value, abserr = integrate.quad(
        lambda x: np.polynomial.polynomial.polyval(x, coeffs),
        -2.0,
        2.0,
        weight="alg",
        wvar=(0.5, 0.5),
        epsabs=tolerance * scale,
        epsrel=0.0,
        limit=200,
        full_output=1,
    )[:2]
    if abserr > tolerance * scale:
        raise QuadratureError(f"quadrature error estimate {abserr / scale:g} exceeds {tolerance:g}")
    return value / scale
