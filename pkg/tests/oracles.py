"""Independent reference computations for the tests.

Nothing here imports the package: matchings, face tracing and the
single-trace recursion are re-derived from scratch.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb, factorial


def matchings(points: list[int]):
    """All perfect matchings of ``points`` as lists of pairs (recursive, no numpy)."""
    if not points:
        yield []
        return
    a, rest = points[0], points[1:]
    for idx, b in enumerate(rest):
        for m in matchings(rest[:idx] + rest[idx + 1:]):
            yield [(a, b)] + m


def faces(next_in_vertex: dict[int, int], partner: dict[int, int]) -> int:
    """Boundary walks: from half-edge h cross the chord, then step around the vertex."""
    seen, count = set(), 0
    for start in next_in_vertex:
        if start in seen:
            continue
        count += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = next_in_vertex[partner[h]]
    return count


def brute_force_moment(ks) -> dict[tuple[int, int], int]:
    """``{(genus, boundaries): count}`` with zeros giving an extra boundary each."""
    ks = list(ks)
    zeros = ks.count(0)
    ks = [k for k in ks if k]
    total = sum(ks)
    if total % 2:
        return {}
    nxt, start = {}, 0
    for k in ks:
        for t in range(k):
            nxt[start + t] = start + (t + 1) % k
        start += k
    n, l = len(ks), total // 2
    out: Counter = Counter()
    for m in matchings(list(range(total))):
        partner = {}
        for a, b in m:
            partner[a], partner[b] = b, a
        b = faces(nxt, partner) if total else 0
        genus2 = n + l - b
        assert genus2 % 2 == 0
        out[(genus2 // 2, b + zeros)] += 1
    return dict(out)


def harer_zagier(k: int, n: int) -> int:
    """``E Tr X^(2k)`` at rank ``n`` from the three-term Harer-Zagier recursion."""
    t = [n, n * n]
    for j in range(2, k + 1):
        # (j+1) T_j = (4j-2) N T_{j-1} + (j-1)(2j-1)(2j-3) T_{j-2}
        val = (4 * j - 2) * n * t[j - 1] + (j - 1) * (2 * j - 1) * (2 * j - 3) * t[j - 2]
        assert val % (j + 1) == 0
        t.append(val // (j + 1))
    return t[k]


def catalan_by_factorials(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def mu_brute(js) -> Fraction:
    """Sum over all matchings of the positions of ``prod 1/(j_r + j_s + 1)``."""
    total = Fraction(0)
    for m in matchings(list(range(len(js)))):
        term = Fraction(1)
        for a, b in m:
            term /= js[a] + js[b] + 1
        total += term
    return total


def central_binomial(i: int) -> int:
    return comb(2 * i, i)


def partitions(total: int, largest: int | None = None):
    """Integer partitions of ``total`` into positive parts, descending."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest
