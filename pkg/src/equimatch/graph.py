"""Simple undirected graphs and the structural primitives built on them.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable; every
function here is pure and returns fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


@dataclass(frozen=True)
class Graph:
    """Vertex count plus one neighbour set per vertex.

    Neighbour sets may be shared between vertices (blow-ups do this for all
    members of a block), which is safe because the sets are frozen.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        none: frozenset[int] = frozenset()
        return cls(n, (none,) * n)

    def validate(self) -> None:
        """Check symmetry, absence of loops and neighbour ranges."""
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for u, nb in enumerate(self.adj):
            if u in nb:
                raise GraphError(f"loop at vertex {u}")
            for v in nb:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbour {v} of {u} out of range")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric edge ({u}, {v})")

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def masks(self) -> list[int]:
        """Adjacency as one bitmask per vertex; meant for small graphs."""
        out = []
        for nb in self.adj:
            bits = 0
            for v in nb:
                bits |= 1 << v
            out.append(bits)
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        return induced_subgraph(self, keep)[0]


# ---------------------------------------------------------------------------
# small named graphs


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = ((u + a.n, v + a.n) for u, v in b.edges())
    return Graph.from_edges(a.n + b.n, list(a.edges()) + list(shifted))


# ---------------------------------------------------------------------------
# traversal


def _bfs_layers(g: Graph, root: int, seen: set[int]) -> list[set[int]]:
    # Layer-at-a-time BFS so the inner work happens inside set operations.
    layers = [{root}]
    seen.add(root)
    frontier = {root}
    while frontier:
        nxt = set().union(*(g.adj[u] for u in frontier))
        nxt -= seen
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    return layers


def connected_components(g: Graph) -> list[set[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen: set[int] = set()
    blocks = []
    for v in range(g.n):
        if v not in seen:
            blocks.append(set().union(*_bfs_layers(g, v, seen)))
    return blocks


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> Optional[tuple[set[int], set[int]]]:
    """Return colour classes ``(U, V)`` or ``None`` if an odd cycle exists.

    Within each component the class containing the smallest vertex goes to U.
    """
    seen: set[int] = set()
    left: set[int] = set()
    right: set[int] = set()
    for v in range(g.n):
        if v in seen:
            continue
        layers = _bfs_layers(g, v, seen)
        # A graph is bipartite iff no BFS layer contains an edge.
        for layer in layers:
            for u in layer:
                if not g.adj[u].isdisjoint(layer):
                    return None
        for depth, layer in enumerate(layers):
            (left if depth % 2 == 0 else right).update(layer)
    return left, right


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically first triangle ``(a, b, c)``, or ``None``."""
    for u in range(g.n):
        nu = g.adj[u]
        for v in sorted(nu):
            if v <= u:
                continue
            common = nu & g.adj[v]
            later = [w for w in common if w > v]
            if later:
                return (u, v, min(later))
    return None


def is_triangle_free(g: Graph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """``(True, None)`` for triangle-free graphs, else ``(False, witness)``."""
    tri = find_triangle(g)
    return tri is None, tri


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` when ``g`` is a forest."""
    best: Optional[int] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s`` with vertices renumbered in ascending order.

    Returns the subgraph and the list mapping new ids to original ids.
    """
    order = sorted(set(s))
    for v in order:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(order)}
    adj = tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in order)
    return Graph(len(order), adj), order


# ---------------------------------------------------------------------------
# blow-ups and twin contraction


def blow_up(h: Graph, mults: Sequence[int]) -> Graph:
    """Replace vertex ``i`` of ``h`` by an independent set of ``mults[i]`` twins.

    Blocks are laid out in template-vertex order; zero multiplicity drops the
    vertex altogether.
    """
    if len(mults) != h.n:
        raise GraphError(f"multiplicity vector has length {len(mults)}, template has {h.n} vertices")
    if any(k < 0 for k in mults):
        raise GraphError("multiplicities must be nonnegative")
    starts = []
    total = 0
    for k in mults:
        starts.append(total)
        total += k
    block_nbrs = []
    for i in range(h.n):
        members: list[int] = []
        for j in sorted(h.adj[i]):
            members.extend(range(starts[j], starts[j] + mults[j]))
        block_nbrs.append(frozenset(members))
    adj: list[frozenset[int]] = []
    for i in range(h.n):
        adj.extend([block_nbrs[i]] * mults[i])
    return Graph(total, tuple(adj))


@dataclass(frozen=True)
class TwinContraction:
    """Twin-free quotient, class sizes, and the vertex-to-class map."""

    quotient: Graph
    mults: tuple[int, ...]
    class_of: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.quotient.n)]
        for v, q in enumerate(self.class_of):
            out[q].append(v)
        return out


def twin_contract(g: Graph) -> TwinContraction:
    """Contract classes of vertices with identical open neighbourhoods.

    Grouping is by hashing the frozen neighbour sets, so the cost is linear
    in ``n + m``.  Classes are numbered by their smallest member.
    """
    first: dict[frozenset[int], int] = {}
    class_of = [0] * g.n
    reps: list[int] = []
    for v, nb in enumerate(g.adj):
        q = first.get(nb)
        if q is None:
            q = first[nb] = len(reps)
            reps.append(v)
        class_of[v] = q
    mults = [0] * len(reps)
    for q in class_of:
        mults[q] += 1
    qadj = tuple(frozenset({class_of[w] for w in g.adj[v]}) for v in reps)
    return TwinContraction(Graph(len(reps), qadj), tuple(mults), tuple(class_of))


def is_twin_free(g: Graph) -> bool:
    return len(set(g.adj)) == g.n
