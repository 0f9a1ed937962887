"""Exact matching oracles for desk-scale graphs.

Maximum matchings use Edmonds' blossom algorithm and work at any size.  The
minimum maximal matching search is exponential and refuses graphs above a
vertex ceiling instead of approximating.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, is_bipartite, is_connected

DEFAULT_ORACLE_CEILING = 20
LESK_DEGREE_GUARD = 20

Matching = frozenset  # frozenset of (u, v) pairs with u < v


class OracleCeilingError(ValueError):
    """The graph is larger than the exhaustive oracle accepts."""


class PreconditionError(ValueError):
    """The input violates an operation's stated precondition."""


def oracle_ceiling() -> int:
    return int(os.environ.get("EQUIMATCH_ORACLE_CEILING", DEFAULT_ORACLE_CEILING))


def _check_ceiling(g: Graph, ceiling: Optional[int]) -> None:
    limit = oracle_ceiling() if ceiling is None else ceiling
    if g.n > limit:
        raise OracleCeilingError(f"graph has {g.n} vertices, oracle ceiling is {limit}")


def _as_matching(mate: list[int]) -> frozenset[tuple[int, int]]:
    return frozenset((u, w) for u, w in enumerate(mate) if u < w)


def is_matching(g: Graph, edges) -> bool:
    """True when ``edges`` are pairwise disjoint edges of ``g``."""
    seen: set[int] = set()
    for u, v in edges:
        if u == v or v not in g.adj[u] or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_maximal_matching(g: Graph, edges) -> bool:
    if not is_matching(g, edges):
        return False
    covered = {x for e in edges for x in e}
    return all(u in covered or v in covered for u, v in g.edges())


# ---------------------------------------------------------------------------
# Edmonds' blossom algorithm


def _blossom_mate(g: Graph, alive: Optional[set[int]] = None) -> list[int]:
    n = g.n
    adj = g.adj
    if alive is None:
        alive = set(range(n))
    mate = [-1] * n
    # Greedy start; the augmenting phase fixes whatever it misses.
    for v in sorted(alive):
        if mate[v] == -1:
            for w in sorted(adj[v]):
                if w in alive and mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, inblossom: list[bool]) -> None:
            while base[v] != b:
                inblossom[base[v]] = inblossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if to not in alive or base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    inblossom = [False] * n
                    mark(v, cur, to, inblossom)
                    mark(to, cur, v, inblossom)
                    for i in range(n):
                        if inblossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        while to != -1:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in sorted(alive):
        if mate[v] == -1 and any(w in alive for w in adj[v]):
            augment_from(v)
    return mate


def maximum_matching(g: Graph) -> frozenset[tuple[int, int]]:
    return _as_matching(_blossom_mate(g))


def matching_number(g: Graph) -> int:
    return sum(1 for u, w in enumerate(_blossom_mate(g)) if u < w)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def _perfect_on(g: Graph, alive: set[int]) -> Optional[list[int]]:
    if len(alive) % 2:
        return None
    mate = _blossom_mate(g, alive)
    if all(mate[v] != -1 for v in alive):
        return mate
    return None


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    everyone = set(range(g.n))
    return all(_perfect_on(g, everyone - {v}) is not None for v in range(g.n))


# ---------------------------------------------------------------------------
# minimum maximal matching by branch and bound


def _min_maximal(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    masks = g.masks()
    n = g.n
    best_edges = sorted(_greedy_maximal(g))
    best = [len(best_edges), best_edges]
    chosen: list[tuple[int, int]] = []

    def search(free: int, exposed: int) -> None:
        count = len(chosen)
        # Free vertices next to an exposed one must still be matched.
        must = 0
        x = exposed
        while x:
            low = x & -x
            must |= masks[low.bit_length() - 1]
            x ^= low
        must &= free
        if count + (must.bit_count() + 1) // 2 >= best[0]:
            return
        y = must
        while y:
            low = y & -y
            if not masks[low.bit_length() - 1] & free:
                return
            y ^= low
        pick = -1
        f = free
        while f:
            low = f & -f
            v = low.bit_length() - 1
            if masks[v] & free:
                pick = v
                break
            f ^= low
        if pick < 0:
            # Every free vertex is isolated among free vertices, and none
            # touches an exposed one (must == 0 here), so this is maximal.
            best[0] = count
            best[1] = list(chosen)
            return
        v = pick
        rest = free & ~(1 << v)
        nb = masks[v] & rest
        while nb:
            low = nb & -nb
            w = low.bit_length() - 1
            nb ^= low
            chosen.append((v, w))
            search(rest & ~low, exposed)
            chosen.pop()
        if not masks[v] & exposed:
            search(rest, exposed | (1 << v))

    search((1 << n) - 1, 0)
    return best[0], best[1]


def _greedy_maximal(g: Graph) -> list[tuple[int, int]]:
    used: set[int] = set()
    out = []
    for u, v in g.edges():
        if u not in used and v not in used:
            used.update((u, v))
            out.append((u, v))
    return out


def min_maximal_matching_size(g: Graph, ceiling: Optional[int] = None) -> int:
    """Smallest cardinality of a maximal matching (exhaustive, guarded)."""
    _check_ceiling(g, ceiling)
    return _min_maximal(g)[0]


@dataclass(frozen=True)
class EquimatchabilityReport:
    verdict: bool
    max_size: int
    min_maximal_size: int
    witness_small: Optional[frozenset[tuple[int, int]]] = None


def is_equimatchable_oracle(g: Graph, ceiling: Optional[int] = None) -> EquimatchabilityReport:
    """Compare the maximum matching number with the minimum maximal matching size."""
    _check_ceiling(g, ceiling)
    nu = matching_number(g)
    low, edges = _min_maximal(g)
    if low == nu:
        return EquimatchabilityReport(True, nu, low)
    return EquimatchabilityReport(False, nu, low, frozenset(edges))


def is_randomly_matchable(g: Graph) -> bool:
    """Structural test: connected randomly matchable graphs are K_2n and K_n,n."""
    if not is_connected(g):
        raise PreconditionError("randomly matchable test needs a connected graph")
    n, m = g.n, g.m
    if n % 2:
        return False
    if m == n * (n - 1) // 2:
        return True
    sides = is_bipartite(g)
    if sides is None:
        return False
    a, b = len(sides[0]), len(sides[1])
    return a == b and m == a * b


@dataclass(frozen=True)
class TripleWitness:
    triple: tuple[int, int, int]
    matching: frozenset[tuple[int, int]]


def independent_triple_criterion(g: Graph, ceiling: Optional[int] = None) -> Optional[TripleWitness]:
    """First independent 3-set whose removal leaves a perfect matching.

    For factor-critical graphs, ``None`` means the graph is equimatchable.
    """
    _check_ceiling(g, ceiling)
    if not is_factor_critical(g):
        raise PreconditionError("independent triple criterion needs a factor-critical graph")
    everyone = set(range(g.n))
    for a, b, c in combinations(range(g.n), 3):
        if b in g.adj[a] or c in g.adj[a] or c in g.adj[b]:
            continue
        mate = _perfect_on(g, everyone - {a, b, c})
        if mate is not None:
            return TripleWitness((a, b, c), _as_matching(mate))
    return None


def bipartite_equimatchable_lesk(g: Graph, degree_guard: int = LESK_DEGREE_GUARD) -> bool:
    """Lesk's criterion on a connected bipartite graph with sides U, V (|U| <= |V|).

    Equimatchable iff every u in U has a nonempty X within N(u) with
    |N(X)| <= |X|.
    """
    sides = is_bipartite(g)
    if sides is None:
        raise PreconditionError("Lesk's criterion needs a bipartite graph")
    if not is_connected(g):
        raise PreconditionError("Lesk's criterion needs a connected graph")
    left, right = sides
    small = left if len(left) <= len(right) else right
    if any(len(g.adj[u]) > degree_guard for u in small):
        raise PreconditionError(f"a vertex of the smaller side exceeds degree {degree_guard}")
    verdicts: dict[frozenset[int], bool] = {}
    for u in sorted(small):
        nb = g.adj[u]
        if nb not in verdicts:
            verdicts[nb] = _lesk_vertex_ok(g, sorted(nb))
        if not verdicts[nb]:
            return False
    return True


def _lesk_vertex_ok(g: Graph, nbrs: list[int]) -> bool:
    if any(len(g.adj[x]) <= 1 for x in nbrs):
        return True
    if len(set().union(*(g.adj[x] for x in nbrs))) <= len(nbrs):
        return True
    # Exhaustive subset scan; N(X) kept as an integer bitmask over U-side ids.
    ids: dict[int, int] = {}
    for x in nbrs:
        for y in g.adj[x]:
            ids.setdefault(y, len(ids))
    bits = [sum(1 << ids[y] for y in g.adj[x]) for x in nbrs]
    union = [0] * (1 << len(nbrs))
    for mask in range(1, 1 << len(nbrs)):
        low = mask & -mask
        union[mask] = union[mask ^ low] | bits[low.bit_length() - 1]
        if union[mask].bit_count() <= mask.bit_count():
            return True
    return False
