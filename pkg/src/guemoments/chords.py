"""Chord diagrams, the ribbon graphs they induce, and genus/boundary counts.

Two enumeration routes produce the same diagrams in the same order (smallest
unmatched point first, partner increasing):

* :func:`enumerate_chord_diagrams` streams :class:`ChordDiagram` objects one by
  one in pure Python;
* :func:`iter_matching_blocks` yields numpy arrays of up to
  ``(2*BLOCK_PAIRS - 1)!!`` rows, which :func:`eta_table` consumes.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .bipoly import BivariatePolynomial
from .ribbon import Permutation, RibbonGraph, invariants

# 13!! = 135135 rows per block
BLOCK_PAIRS = 7


class EnumerationCapExceeded(RuntimeError):
    """Raised when a chord enumeration would exceed the configured point cap."""


@dataclass(frozen=True)
class EnumerationConfig:
    # largest 2l that may be enumerated without an explicit override
    cap_points: int = 20
    workers: int = 1

    @classmethod
    def from_env(cls, **overrides) -> EnumerationConfig:
        workers = int(os.environ.get("GUEMOMENTS_THREADS", "1") or 1)
        return cls(**{"workers": max(1, workers), **overrides})

    def check(self, points: int) -> None:
        if points > self.cap_points:
            raise EnumerationCapExceeded(
                f"{points} points would need {double_factorial(points - 1)} chord diagrams; "
                f"cap is {self.cap_points} points (raise it with --cap)"
            )


DEFAULT_CONFIG = EnumerationConfig()


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass(frozen=True)
class ChordDiagram:
    """A perfect matching of ``0 .. 2l-1``; ``mate[i]`` is the partner of ``i``."""

    mate: tuple[int, ...]

    def __post_init__(self):
        mate = tuple(int(m) for m in self.mate)
        n = len(mate)
        if n % 2:
            raise ValueError("a chord diagram needs an even number of points")
        for i, m in enumerate(mate):
            if not (0 <= m < n) or m == i or mate[m] != i:
                raise ValueError(f"mate is not a fixed-point-free involution: {mate}")
        object.__setattr__(self, "mate", mate)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[int]], one_based: bool = True) -> ChordDiagram:
        shift = 1 if one_based else 0
        n = 2 * len(pairs)
        mate = [-1] * n
        for a, b in pairs:
            mate[a - shift], mate[b - shift] = b - shift, a - shift
        return cls(tuple(mate))

    @property
    def points(self) -> int:
        return len(self.mate)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, m) for i, m in enumerate(self.mate) if i < m]

    def __str__(self) -> str:
        return "".join(f"{{{a + 1},{b + 1}}}" for a, b in self.pairs())


def enumerate_chord_diagrams(
    l: int, config: EnumerationConfig = DEFAULT_CONFIG
) -> Iterator[ChordDiagram]:
    """Stream all ``(2l-1)!!`` chord diagrams on ``2l`` points, O(l) memory."""
    if l < 1:
        raise ValueError("l must be at least 1")
    config.check(2 * l)
    n = 2 * l
    mate = [-1] * n

    def rec(first: int) -> Iterator[ChordDiagram]:
        while first < n and mate[first] >= 0:
            first += 1
        if first == n:
            yield ChordDiagram(tuple(mate))
            return
        for partner in range(first + 1, n):
            if mate[partner] < 0:
                mate[first], mate[partner] = partner, first
                yield from rec(first + 1)
                mate[first] = mate[partner] = -1

    yield from rec(0)


@lru_cache(maxsize=None)
def _local_table(points: int) -> np.ndarray:
    """All matchings of ``0 .. points-1`` as rows of a mate array, canonical order."""
    if points == 0:
        return np.zeros((1, 0), dtype=np.int16)
    sub = _local_table(points - 2)
    blocks = []
    for partner in range(1, points):
        rest = np.array([p for p in range(1, points) if p != partner], dtype=np.int16)
        rows = np.empty((len(sub), points), dtype=np.int16)
        rows[:, 0] = partner
        rows[:, partner] = 0
        rows[:, rest] = rest[sub]
        blocks.append(rows)
    out = np.concatenate(blocks)
    out.setflags(write=False)
    return out


def iter_matching_blocks(
    points: int, first_partner: int | None = None, block_pairs: int = BLOCK_PAIRS
) -> Iterator[np.ndarray]:
    """Yield mate arrays covering every matching of ``points`` points.

    With ``first_partner`` set, only matchings pairing point 0 with it are
    produced; the ``points - 1`` such sub-streams partition the whole set.
    """
    if points % 2:
        raise ValueError("need an even number of points")
    prefix = np.full(points, -1, dtype=np.int16)

    def rec(free: list[int]) -> Iterator[np.ndarray]:
        if len(free) <= 2 * block_pairs:
            table = _local_table(len(free))
            idx = np.array(free, dtype=np.int16)
            block = np.broadcast_to(prefix, (len(table), points)).copy()
            if free:
                block[:, idx] = idx[table]
            yield block
            return
        first = free[0]
        for partner in free[1:]:
            prefix[first], prefix[partner] = partner, first
            yield from rec([p for p in free[1:] if p != partner])
            prefix[first] = prefix[partner] = -1

    if first_partner is None:
        yield from rec(list(range(points)))
    else:
        if not (0 < first_partner < points):
            raise ValueError("first_partner out of range")
        prefix[0], prefix[first_partner] = first_partner, 0
        yield from rec([p for p in range(1, points) if p != first_partner])


def count_cycles_rows(perms: np.ndarray) -> np.ndarray:
    """Cycle count of each row of a 2-d array of permutations (pointer doubling)."""
    m, n = perms.shape
    if n == 0:
        return np.zeros(m, dtype=np.int64)
    labels = np.broadcast_to(np.arange(n), (m, n)).copy()
    jump = perms.astype(np.intp, copy=True)
    span = 1
    while span < n:
        labels = np.minimum(labels, np.take_along_axis(labels, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
        span *= 2
    return (labels == np.arange(n)).sum(axis=1)


@dataclass(frozen=True)
class VertexProfile:
    """Vertex valencies ``k1..kn``, all positive, with even sum."""

    ks: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.ks)
        if any(k < 1 for k in ks):
            raise ValueError(f"vertex valencies must be positive: {ks}")
        if sum(ks) % 2:
            raise ValueError(f"valencies must have even sum: {ks}")
        object.__setattr__(self, "ks", ks)

    @property
    def n(self) -> int:
        return len(self.ks)

    @property
    def l(self) -> int:
        return sum(self.ks) // 2

    @property
    def points(self) -> int:
        return sum(self.ks)

    def sigma(self) -> tuple[int, ...]:
        """Vertex permutation: consecutive cycles of lengths k1, k2, ..."""
        images = []
        start = 0
        for k in self.ks:
            images.extend(start + (i + 1) % k for i in range(k))
            start += k
        return tuple(images)


def _profile(profile: VertexProfile | Sequence[int]) -> VertexProfile:
    return profile if isinstance(profile, VertexProfile) else VertexProfile(tuple(profile))


def build_graph(c: ChordDiagram, profile: VertexProfile | Sequence[int]) -> RibbonGraph:
    profile = _profile(profile)
    if profile.points != c.points:
        raise ValueError(f"profile sums to {profile.points} but diagram has {c.points} points")
    return RibbonGraph(Permutation(profile.sigma()), Permutation(c.mate))


@dataclass
class EtaTable:
    profile: VertexProfile
    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: EtaTable) -> EtaTable:
        out = dict(self.counts)
        for k, c in other.counts.items():
            out[k] = out.get(k, 0) + c
        return EtaTable(self.profile, out)

    def by_genus(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (g, _), c in self.counts.items():
            out[g] = out.get(g, 0) + c
        return out

    def by_boundary(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, b), c in self.counts.items():
            out[b] = out.get(b, 0) + c
        return out

    def rows(self) -> list[tuple[int, int, int]]:
        return [(g, b, self.counts[(g, b)]) for g, b in sorted(self.counts)]

    def to_polynomial(self) -> BivariatePolynomial:
        return BivariatePolynomial(self.counts)


def _partner_counts(ks: tuple[int, ...], first_partner: int) -> dict[tuple[int, int], int]:
    profile = VertexProfile(ks)
    sigma = np.array(profile.sigma(), dtype=np.intp)
    base = profile.n + profile.l
    counts: dict[tuple[int, int], int] = {}
    for block in iter_matching_blocks(profile.points, first_partner):
        b = count_cycles_rows(sigma[block])
        for bval, c in zip(*np.unique(b, return_counts=True)):
            bval = int(bval)
            key = ((base - bval) // 2, bval)
            counts[key] = counts.get(key, 0) + int(c)
    return counts


def eta_table(
    profile: VertexProfile | Sequence[int], config: EnumerationConfig = DEFAULT_CONFIG
) -> EtaTable:
    """Count chord diagrams by the (genus, boundaries) of the graph they build.

    Work is split by the partner of the first point; with ``config.workers > 1``
    the sub-streams run in separate processes and are merged in order, giving
    the same table as the serial run.
    """
    profile = _profile(profile)
    config.check(profile.points)
    partners = range(1, profile.points)
    table = EtaTable(profile)
    if profile.points == 0:
        return EtaTable(profile, {(0, 0): 1})
    if config.workers > 1 and profile.points >= 12:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = pool.map(_partner_counts, [profile.ks] * len(partners), partners)
            for part in parts:
                table = table.merge(EtaTable(profile, part))
    else:
        for partner in partners:
            table = table.merge(EtaTable(profile, _partner_counts(profile.ks, partner)))
    return table


def eta_table_streaming(
    profile: VertexProfile | Sequence[int], config: EnumerationConfig = DEFAULT_CONFIG
) -> EtaTable:
    """Same counts as :func:`eta_table`, one diagram at a time through the ribbon-graph API."""
    profile = _profile(profile)
    counts: dict[tuple[int, int], int] = {}
    for c in enumerate_chord_diagrams(profile.l, config):
        inv = invariants(build_graph(c, profile))
        key = (inv.genus, inv.boundaries)
        counts[key] = counts.get(key, 0) + 1
    return EtaTable(profile, counts)
