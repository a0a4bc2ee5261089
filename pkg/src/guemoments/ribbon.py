"""Ribbon graphs as a pair of permutations on half-edges.

A ribbon graph is stored as ``(sigma, kappa)`` acting on half-edges
``0 .. H-1``: the cycles of ``sigma`` are the vertices (with their cyclic
order) and ``kappa`` is a fixed-point-free involution pairing half-edges into
edges.  Boundary components are the cycles of ``beta = sigma o kappa``
(apply ``kappa`` first, then ``sigma``).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)))

    @classmethod
    def from_cycles(cls, size: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        images = list(range(size))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, h: int) -> int:
        return self.images[h]

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[other.images[h]] for h in range(self.size)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for h, t in enumerate(self.images):
            inv[t] = h
        return Permutation(tuple(inv))

    def is_involution(self) -> bool:
        return all(self.images[t] == h for h, t in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [h for h, t in enumerate(self.images) if h == t]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, ordered by that element."""
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cyc = []
            h = start
            while not seen[h]:
                seen[h] = True
                cyc.append(h)
                h = self.images[h]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(h) for h in c) + ")" for c in self.cycles()) or "()"


def cycle_count(p: Permutation | Sequence[int]) -> int:
    """Number of cycles of ``p``, fixed points included."""
    images = p.images if isinstance(p, Permutation) else p
    seen = bytearray(len(images))
    count = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        count += 1
        h = start
        while not seen[h]:
            seen[h] = 1
            h = images[h]
    return count


@dataclass(frozen=True)
class SurfaceInvariants:
    vertices: int
    edges: int
    boundaries: int
    genus: int
    euler_characteristic: int


@dataclass(frozen=True)
class RibbonGraph:
    sigma: Permutation
    kappa: Permutation

    def __post_init__(self):
        if self.sigma.size != self.kappa.size:
            raise ValueError("sigma and kappa act on different half-edge sets")
        if not self.kappa.is_involution():
            raise ValueError("kappa must be an involution")
        if self.kappa.fixed_points():
            raise ValueError("kappa must have no fixed points")

    @classmethod
    def from_cycles(
        cls, half_edges: int, vertices: Sequence[Sequence[int]], edges: Sequence[Sequence[int]]
    ) -> RibbonGraph:
        return cls(
            Permutation.from_cycles(half_edges, vertices),
            Permutation.from_cycles(half_edges, edges),
        )

    @property
    def half_edges(self) -> int:
        return self.sigma.size

    @property
    def is_empty(self) -> bool:
        return self.half_edges == 0

    def beta(self) -> Permutation:
        return self.sigma.compose(self.kappa)

    def edge_ids(self) -> list[int]:
        """Edges named by the smaller half-edge of each kappa-orbit."""
        return [h for h in range(self.half_edges) if h < self.kappa(h)]

    def vertex_of(self, h: int) -> tuple[int, ...]:
        """The sigma-cycle through ``h``, rotated to start at ``h``."""
        cyc = [h]
        t = self.sigma(h)
        while t != h:
            cyc.append(t)
            t = self.sigma(t)
        return tuple(cyc)

    def is_loop(self, e: int) -> bool:
        return self.kappa(e) in self.vertex_of(e)


def dual(g: RibbonGraph) -> RibbonGraph:
    """Dual ribbon graph: vertices become the cycles of ``sigma o kappa``."""
    return RibbonGraph(g.beta(), g.kappa)


def invariants(g: RibbonGraph) -> SurfaceInvariants:
    if g.is_empty:
        return SurfaceInvariants(0, 0, 0, 0, 2)
    v = cycle_count(g.sigma)
    e = g.half_edges // 2
    b = cycle_count(g.beta())
    twice_genus = v + e - b
    if twice_genus % 2:
        raise ValueError(f"V + E - b = {twice_genus} is odd; corrupted ribbon graph")
    return SurfaceInvariants(v, e, b, twice_genus // 2, 2 - v - e)


def _relabel(cycles: Sequence[Sequence[int]], removed: set[int], size: int) -> tuple[list, dict]:
    keep = [h for h in range(size) if h not in removed]
    new = {h: i for i, h in enumerate(keep)}
    return [[new[h] for h in c] for c in cycles if c], new


def contract_edge(g: RibbonGraph, e: int) -> RibbonGraph:
    """Contract the edge whose smaller half-edge is ``e``.

    A non-loop edge merges its two vertices ``(h h1..hk)(h' h'1..h'k')`` into
    ``(h1..hk h'1..h'k')``; a loop on ``(h h1..hk h' h'1..h'k')`` splits it into
    ``(h1..hk)(h'1..h'k')``.  Empty vertices disappear and the remaining
    half-edges are renumbered in increasing order.
    """
    if not (0 <= e < g.half_edges) or g.kappa(e) < e:
        raise KeyError(f"unknown edge identifier {e}")
    h, hp = e, g.kappa(e)
    vertices = [c for c in g.sigma.cycles() if h not in c and hp not in c]
    vh = g.vertex_of(h)
    if hp in vh:
        split = vh.index(hp)
        vertices.append(vh[1:split])
        vertices.append(vh[split + 1:])
    else:
        vertices.append(vh[1:] + g.vertex_of(hp)[1:])
    edges = [c for c in g.kappa.cycles() if h not in c]
    size = g.half_edges
    vertices, new = _relabel(vertices, {h, hp}, size)
    edges = [[new[a] for a in c] for c in edges]
    return RibbonGraph.from_cycles(size - 2, vertices, edges)


def delete_from_cycles(p: Permutation, removed: set[int]) -> tuple[list[list[int]], dict]:
    """Cycles of ``p`` with ``removed`` deleted, relabelled to a contiguous range."""
    cycles = [[h for h in c if h not in removed] for c in p.cycles()]
    return _relabel(cycles, removed, p.size)


def contract_edge_via_dual(g: RibbonGraph, e: int) -> RibbonGraph:
    """Contraction defined by deleting the edge from the dual graph.

    Independent of :func:`contract_edge`; used to cross-check it.
    """
    if not (0 <= e < g.half_edges) or g.kappa(e) < e:
        raise KeyError(f"unknown edge identifier {e}")
    removed = {e, g.kappa(e)}
    size = g.half_edges - 2
    beta_cycles, new = delete_from_cycles(g.beta(), removed)
    kappa_cycles = [[new[a] for a in c] for c in g.kappa.cycles() if e not in c]
    beta = Permutation.from_cycles(size, beta_cycles)
    kappa = Permutation.from_cycles(size, kappa_cycles)
    # beta = sigma o kappa and kappa is an involution, so sigma = beta o kappa
    return RibbonGraph(beta.compose(kappa), kappa)


def predicted_contraction_change(g: RibbonGraph, e: int) -> tuple[int, int]:
    """``(delta_genus, delta_boundaries)`` from the merge/split case analysis."""
    h, hp = e, g.kappa(e)
    vh = g.vertex_of(h)
    if hp in vh:
        split = vh.index(hp)
        k, kp = split - 1, len(vh) - split - 1
        return 0, -((k == 0) + (kp == 0))
    k, kp = len(vh) - 1, len(g.vertex_of(hp)) - 1
    return -1, (-1 if k == 0 and kp == 0 else 0)


def random_ribbon_graph(half_edges: int, rng: random.Random | None = None) -> RibbonGraph:
    """Uniform random ``sigma`` and uniform random perfect matching ``kappa``."""
    if half_edges % 2:
        raise ValueError("half_edges must be even")
    rng = rng or random.Random()
    sigma = list(range(half_edges))
    rng.shuffle(sigma)
    order = list(range(half_edges))
    rng.shuffle(order)
    kappa = [0] * half_edges
    for a, b in zip(order[::2], order[1::2]):
        kappa[a], kappa[b] = b, a
    return RibbonGraph(Permutation(tuple(sigma)), Permutation(tuple(kappa)))

