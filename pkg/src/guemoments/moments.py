"""GUE multi-trace moment polynomials.

``p(k1, ..., kn)`` is the sum over chord diagrams on ``k1 + ... + kn`` points of
``g**genus * v**boundaries`` for the ribbon graph with vertices of valency
``k1, ..., kn``.  Setting ``g = 1`` and ``v = N`` gives
``E[Tr X^k1 ... Tr X^kn]`` for the GUE with density ``exp(-Tr X^2 / 2)``.

Two independent routes compute it: brute-force chord enumeration and the
integration-by-parts recurrence

    p(k1, rest) = sum_{r=1}^{k1-1} p(r-1, k1-r-1, rest)
                + g * sum_{k in rest} k * p(k1+k-2, rest - {k}).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .bipoly import BivariatePolynomial
from .chords import DEFAULT_CONFIG, EnumerationConfig, eta_table
from .exact import SqrtRational

ONE = BivariatePolynomial.constant(1)
ZERO = BivariatePolynomial()


@dataclass(frozen=True)
class IndexMultiset:
    """Trace exponents, stored sorted descending so equal multisets compare equal."""

    ks: tuple[int, ...] = ()

    def __post_init__(self):
        ks = tuple(sorted((int(k) for k in self.ks), reverse=True))
        if any(k < 0 for k in ks):
            raise ValueError(f"trace exponents must be nonnegative: {ks}")
        object.__setattr__(self, "ks", ks)

    @classmethod
    def of(cls, ks: Iterable[int] | IndexMultiset) -> IndexMultiset:
        return ks if isinstance(ks, IndexMultiset) else cls(tuple(ks))

    def __iter__(self):
        return iter(self.ks)

    def __len__(self) -> int:
        return len(self.ks)

    def __add__(self, other: IndexMultiset) -> IndexMultiset:
        return IndexMultiset(self.ks + IndexMultiset.of(other).ks)

    @property
    def n(self) -> int:
        return len(self.ks)

    @property
    def total(self) -> int:
        return sum(self.ks)

    @property
    def m(self) -> int:
        return self.total // 2

    @property
    def q(self) -> int:
        return sum(1 for k in self.ks if k % 2 == 0)

    @property
    def zeros(self) -> int:
        return self.ks.count(0)

    def stripped(self) -> tuple[int, ...]:
        return tuple(k for k in self.ks if k)


class MomentCache:
    """Memo table ``stripped multiset -> polynomial``.

    Inserts go through ``dict.setdefault``, so concurrent writers racing on
    the same key all end up holding the single stored value.
    """

    def __init__(self):
        self._table: dict[tuple[int, ...], BivariatePolynomial] = {}

    def get(self, key: tuple[int, ...]) -> BivariatePolynomial | None:
        return self._table.get(key)

    def insert(self, key: tuple[int, ...], value: BivariatePolynomial) -> BivariatePolynomial:
        return self._table.setdefault(key, value)

    def clear(self) -> None:
        self._table.clear()

    def items(self):
        return list(self._table.items())

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key) -> bool:
        return key in self._table


DEFAULT_CACHE = MomentCache()


def _canon(ks: Iterable[int]) -> tuple[tuple[int, ...], int]:
    ks = list(ks)
    zeros = ks.count(0)
    return tuple(sorted((k for k in ks if k), reverse=True)), zeros


def _recurse(key: tuple[int, ...], cache: MomentCache) -> BivariatePolynomial:
    if not key:
        return ONE
    if sum(key) % 2:
        return ZERO
    hit = cache.get(key)
    if hit is not None:
        return hit

    k1, rest = key[0], key[1:]
    children: Counter = Counter()
    for r in range(1, k1):
        children[(_canon((r - 1, k1 - r - 1) + rest), 0)] += 1
    for v, mult in Counter(rest).items():
        reduced = list(rest)
        reduced.remove(v)
        children[(_canon([k1 + v - 2] + reduced), 1)] += mult * v

    out = ZERO
    for ((child, zeros), gamma), coeff in children.items():
        term = _recurse(child, cache).shift_nu(zeros)
        if gamma:
            term = term.shift_gamma(1)
        out = out + term.scale(coeff)
    return cache.insert(key, out)


def moment_by_recursion(
    ks: Iterable[int] | IndexMultiset, cache: MomentCache | None = None
) -> BivariatePolynomial:
    """``p^{g,v}`` from the recurrence, pivoting on the largest index."""
    key, zeros = _canon(IndexMultiset.of(ks))
    if sum(key) % 2:
        return ZERO
    return _recurse(key, DEFAULT_CACHE if cache is None else cache).shift_nu(zeros)


def moment_by_enumeration(
    ks: Iterable[int] | IndexMultiset, config: EnumerationConfig = DEFAULT_CONFIG
) -> BivariatePolynomial:
    """``p^{g,v}`` by summing ``g**genus * v**b`` over every chord diagram."""
    key, zeros = _canon(IndexMultiset.of(ks))
    if sum(key) % 2:
        return ZERO
    if not key:
        return ONE.shift_nu(zeros)
    return eta_table(key, config).to_polynomial().shift_nu(zeros)


def moment_nu(ks: Iterable[int] | IndexMultiset, cache: MomentCache | None = None):
    """``p^v``: the recurrence result with ``g = 1``."""
    return moment_by_recursion(ks, cache).set_gamma_one()


def expectation(ks: Iterable[int] | IndexMultiset, n: int, cache: MomentCache | None = None) -> int:
    """Exact ``E[prod Tr X^k]`` for the rank-``n`` GUE."""
    if n < 1:
        raise ValueError("N must be a positive integer")
    return moment_nu(ks, cache)(n)


@dataclass(frozen=True)
class FiniteNStatistics:
    n: int
    mean_f: int
    mean_g: int
    covariance: int
    variance_f: int
    variance_g: int
    # None when either variance vanishes
    correlation: SqrtRational | None

    @property
    def correlation_float(self) -> float | None:
        return None if self.correlation is None else float(self.correlation)


def finite_n_statistics(
    f: Iterable[int] | IndexMultiset,
    g: Iterable[int] | IndexMultiset,
    n: int,
    cache: MomentCache | None = None,
) -> FiniteNStatistics:
    """Covariance, variances and correlation of ``prod Tr X^f`` and ``prod Tr X^g``."""
    f, g = IndexMultiset.of(f), IndexMultiset.of(g)
    mf, mg = expectation(f, n, cache), expectation(g, n, cache)
    cov = expectation(f + g, n, cache) - mf * mg
    vf = expectation(f + f, n, cache) - mf * mf
    vg = expectation(g + g, n, cache) - mg * mg
    corr = SqrtRational.ratio(cov, vf * vg) if vf and vg else None
    return FiniteNStatistics(n, mf, mg, cov, vf, vg, corr)
