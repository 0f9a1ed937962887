"""Backtracking searches on small graphs: isomorphism and induced cycles."""

from __future__ import annotations

from typing import Iterator, Optional

from .graph import Graph, GraphError

ISO_CEILING = 16
CYCLE_CEILING = 32


def _degree_profile(g: Graph) -> list[int]:
    return sorted(len(nb) for nb in g.adj)


def iter_isomorphisms(a: Graph, b: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every bijection ``phi`` (``phi[v]`` = image of ``v``) from ``a`` onto ``b``.

    Mappings come out in lexicographic order.  No size guard: callers are
    expected to stay small.
    """
    n = a.n
    if n != b.n or a.m != b.m or _degree_profile(a) != _degree_profile(b):
        return
    am = a.masks()
    bm = b.masks()
    adeg = [len(nb) for nb in a.adj]
    bdeg = [len(nb) for nb in b.adj]
    phi = [-1] * n
    used = 0

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if i == n:
            yield tuple(phi)
            return
        for w in range(n):
            if used >> w & 1 or bdeg[w] != adeg[i]:
                continue
            ok = True
            for j in range(i):
                if (am[i] >> j & 1) != (bm[w] >> phi[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[i] = w
            used |= 1 << w
            yield from extend(i + 1)
            used &= ~(1 << w)
            phi[i] = -1

    yield from extend(0)


def is_isomorphic_small(a: Graph, b: Graph) -> Optional[tuple[int, ...]]:
    """First isomorphism from ``a`` to ``b`` in lexicographic order, or ``None``."""
    if a.n > ISO_CEILING or b.n > ISO_CEILING:
        raise GraphError(f"isomorphism test limited to {ISO_CEILING} vertices")
    return next(iter_isomorphisms(a, b), None)


def iter_induced_odd_cycles(g: Graph, length: int) -> Iterator[list[int]]:
    """Every induced (chordless) cycle of the given odd length, each once.

    A cycle is reported starting at its smallest vertex and oriented so that
    the second vertex is smaller than the last.
    """
    if length not in (5, 7):
        raise ValueError("length must be 5 or 7")
    if g.n > CYCLE_CEILING:
        raise GraphError(f"induced cycle search limited to {CYCLE_CEILING} vertices")
    masks = g.masks()

    def grow(path: list[int], forbidden: int) -> Iterator[list[int]]:
        # forbidden: vertices on the path or adjacent to an interior path vertex.
        k = len(path)
        last = path[-1]
        start = path[0]
        cand = masks[last] & ~forbidden
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if w < start:
                continue
            closes = bool(masks[w] >> start & 1)
            if k == length - 1:
                if closes and path[1] < w:
                    yield path + [w]
                continue
            if closes:
                continue
            yield from grow(path + [w], forbidden | masks[last] | (1 << w))

    for s in range(g.n):
        # Besides s itself, only its two cycle neighbours may touch it.
        for first in sorted(v for v in g.adj[s] if v > s):
            yield from grow([s, first], (1 << s) | (1 << first))


def find_induced_odd_cycle(g: Graph, length: int) -> Optional[list[int]]:
    """First induced cycle of the given odd length (5 or 7), in order, or ``None``."""
    return next(iter_induced_odd_cycles(g, length), None)
