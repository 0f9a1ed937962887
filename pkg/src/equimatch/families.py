"""The two twin-free templates and the fifteen multiplicity patterns over them.

Every connected triangle-free equimatchable non-bipartite graph is a blow-up
of a template (or of an induced subgraph of one, when some multiplicities
are zero) following one of the patterns below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping, Optional, Sequence

from .graph import Graph, blow_up, induced_subgraph, is_twin_free, twin_contract
from .iso import iter_isomorphisms
from .linear import Constraint, Linear, parse_constraints, solve
from .matching import PreconditionError

PARAM_ORDER = ("n", "m", "r", "s", "k", "l")
ENUMERATE_CEILING = 64
MATCH_CEILING = 11

# Template vertex u_i is index i-1.
TEMPLATE_EDGES = {
    "G1": [(1, 7), (7, 6), (6, 5), (5, 4), (4, 3), (3, 2), (2, 1)],
    "G2": [(1, 2), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (4, 8), (4, 9),
           (5, 6), (6, 7), (7, 8), (7, 11), (8, 10), (9, 10), (10, 11)],
}
TEMPLATE_ORDER = {"G1": 7, "G2": 11}

# (id, template, multiplicities, constraints)
_TABLE = [
    ("c5", "G2", "0,0,0,1,1,1,1,1,0,0,0", ""),
    ("c7", "G1", "1,1,1,1,1,1,1", ""),
    ("f11", "G2", "n,n,0,1,1,1,1,1,0,0,0", "n>=1"),
    ("f12", "G1", "n,n,1,1,1,1,1", "n>=2"),
    ("f21", "G2", "r,n,s,1,n+1-r-s,1,1,1,0,0,0", "n>=2; 1<=r<=n-1; 1<=s<=n-1"),
    ("f22", "G1", "n,r,1,1,1,1,n-r+1", "n>=2; 1<=r<=n"),
    ("f3", "G2", "0,0,0,1,1,1,r,s,0,n+1-r,n+1-s", "n>=1; 1<=r<=n; 1<=s<=n"),
    ("f4", "G2", "0,0,0,1,1,r,n+1,s,0,0,n+2-r-s", "n>=2; 2<=r<=n-2; 2<=s<=n-2"),
    ("g11", "G1", "n,n,1,m,m,1,1", "n>=2; m>=2"),
    ("g12", "G1", "n,r,1,m,m,1,n-r+1", "n>=2; 1<=r<=n; m>=2"),
    ("g21", "G2", "r,n,s,1,n+1-r-s,1,1,1,0,m,m",
     "n>=1; m>=1; 1<=r<=n-1; 1<=s<=n-1; r+s=n"),
    ("g22", "G2", "n,n,0,1,1,1,k,l,0,m+1-k,m+1-l",
     "n>=1; m>=1; 1<=k<=m; 1<=l<=m; k+l=m"),
    # The published tenth entry is blank; 0 mirrors the f4 row.
    ("g23", "G2", "n,n,0,1,1,r,m,s,0,0,m+1-r-s",
     "n>=1; m>=2; 2<=r<=m-2; 2<=s<=m-2; r+s=m"),
    ("g31", "G2", "r,n,s,1,n+1-r-s,1,1,m+1-k-l,l,m,k",
     "n>=1; 1<=r<=n-1; 1<=s<=n-1; r+s=n; m>=1; 1<=k<=m-1; 1<=l<=m-1; k+l=m"),
    ("g32", "G2", "r,n,s,1,n+1-r-s,1,k,l,0,m+1-k,m+1-l",
     "n>=1; 1<=r<=n-1; 1<=s<=n-1; r+s=n; m>=1; 1<=k<=m; 1<=l<=m; k+l=m"),
]

FAMILY_IDS = tuple(row[0] for row in _TABLE)


class FamilyError(ValueError):
    """Unknown family or parameters outside the family's constraints."""


@dataclass(frozen=True)
class FamilyPattern:
    family_id: str
    template: str
    params: tuple[str, ...]
    mult_exprs: tuple[Linear, ...]
    constraints: tuple[Constraint, ...]

    @property
    def vertex_count(self) -> Linear:
        total = Linear(())
        for e in self.mult_exprs:
            total = total + e
        return total

    def multiplicities(self, values: Mapping[str, int]) -> tuple[int, ...]:
        return tuple(e(values) for e in self.mult_exprs)

    def violations(self, values: Mapping[str, int]) -> list[str]:
        return [str(c) for c in self.constraints if not c.holds(values)]


def _build_pattern(fid: str, template: str, mults: str, cons: str) -> FamilyPattern:
    exprs = tuple(Linear.parse(x) for x in mults.split(","))
    if len(exprs) != TEMPLATE_ORDER[template]:
        raise AssertionError(f"{fid}: wrong multiplicity vector length")
    constraints: list[Constraint] = []
    for part in filter(None, (p.strip() for p in cons.split(";"))):
        constraints.extend(parse_constraints(part))
    # Multiplicities count vertices, so each one is kept nonnegative.
    for i, e in enumerate(exprs):
        if not e.is_constant:
            constraints.append(Constraint(e, "ge", f"multiplicity of u{i + 1} ({e}) >= 0"))
    used = set().union(*(e.variables for e in exprs))
    params = tuple(p for p in PARAM_ORDER if p in used)
    return FamilyPattern(fid, template, params, exprs, tuple(constraints))


PATTERNS: dict[str, FamilyPattern] = {row[0]: _build_pattern(*row) for row in _TABLE}


@dataclass(frozen=True)
class FamilyParams:
    family_id: str
    assignment: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, family_id: str, **values: int) -> "FamilyParams":
        pattern = pattern_for(family_id)
        return cls(pattern.family_id, tuple((p, values[p]) for p in pattern.params if p in values))

    @property
    def values(self) -> dict[str, int]:
        return dict(self.assignment)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.assignment)
        return f"{self.family_id}({inner})"


def pattern_for(family_id: str) -> FamilyPattern:
    try:
        return PATTERNS[family_id.lower()]
    except KeyError:
        raise FamilyError(f"unknown family {family_id!r}; expected one of {', '.join(FAMILY_IDS)}") from None


def template_graph(name: str) -> Graph:
    if name not in TEMPLATE_EDGES:
        raise FamilyError(f"unknown template {name!r}")
    return Graph.from_edges(TEMPLATE_ORDER[name], [(a - 1, b - 1) for a, b in TEMPLATE_EDGES[name]])


def check_params(p: FamilyParams) -> FamilyPattern:
    pattern = pattern_for(p.family_id)
    values = p.values
    missing = [x for x in pattern.params if x not in values]
    extra = [x for x in values if x not in pattern.params]
    if missing or extra:
        raise FamilyError(
            f"{pattern.family_id} takes parameters ({', '.join(pattern.params)}); "
            f"missing {missing or 'none'}, unexpected {extra or 'none'}")
    bad = pattern.violations(values)
    if bad:
        raise FamilyError(f"{p}: violates {'; '.join(bad)}")
    return pattern


def instantiate(p: FamilyParams) -> Graph:
    """The blow-up of the family's template under the evaluated multiplicities."""
    pattern = check_params(p)
    return blow_up(template_graph(pattern.template), pattern.multiplicities(p.values))


def enumerate_members(family_id: str, max_vertices: int) -> list[tuple[FamilyParams, Graph]]:
    """All members with at most ``max_vertices`` vertices, in lexicographic parameter order."""
    if max_vertices > ENUMERATE_CEILING:
        raise FamilyError(f"enumeration limited to {ENUMERATE_CEILING} vertices")
    pattern = pattern_for(family_id)
    size = Constraint(pattern.vertex_count.scaled(-1) + max_vertices, "ge")
    found = sorted(
        tuple(a[x] for x in pattern.params)
        for a in solve(pattern.params, [*pattern.constraints, size], max(max_vertices, 0)))
    out = []
    for vals in found:
        p = FamilyParams(pattern.family_id, tuple(zip(pattern.params, vals)))
        out.append((p, instantiate(p)))
    return out


# ---------------------------------------------------------------------------
# multiplicity-pattern matching


@dataclass(frozen=True)
class RelevantSubgraph:
    """A template with the vertices in ``deleted`` removed, contracted to be twin-free.

    ``classes[c]`` lists the template vertices that merge into quotient vertex ``c``.
    """

    family_id: str
    deleted: frozenset[int]
    quotient: Graph
    classes: tuple[tuple[int, ...], ...]


def _zero_pattern_constraints(pattern: FamilyPattern, deleted: frozenset[int]) -> list[Constraint]:
    cons = list(pattern.constraints)
    for i, e in enumerate(pattern.mult_exprs):
        if e.is_constant:
            continue
        cons.append(Constraint(e, "eq") if i in deleted else Constraint(e - 1, "ge"))
    return cons


# Zero patterns are decided by small linear systems; any feasible pattern has
# a witness with all parameters within this bound.
_FEASIBILITY_BOUND = 12


@lru_cache(maxsize=None)
def relevant_subgraphs(family_id: str) -> tuple[RelevantSubgraph, ...]:
    """Every realisable zero pattern of the family, with its twin-free quotient."""
    pattern = pattern_for(family_id)
    template = template_graph(pattern.template)
    always = {i for i, e in enumerate(pattern.mult_exprs) if e.is_constant and e.const == 0}
    optional = [i for i, e in enumerate(pattern.mult_exprs) if not e.is_constant]
    out = []
    for k in range(len(optional) + 1):
        for extra in combinations(optional, k):
            deleted = frozenset(always | set(extra))
            cons = _zero_pattern_constraints(pattern, deleted)
            if next(solve(pattern.params, cons, _FEASIBILITY_BOUND), None) is None:
                continue
            keep = [i for i in range(template.n) if i not in deleted]
            sub, labels = induced_subgraph(template, keep)
            tc = twin_contract(sub)
            classes = tuple(tuple(labels[v] for v in members) for members in tc.classes())
            out.append(RelevantSubgraph(pattern.family_id, deleted, tc.quotient, classes))
    return tuple(out)


def _profile(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    return g.n, g.m, tuple(sorted(len(nb) for nb in g.adj))


@lru_cache(maxsize=None)
def _relevant_index() -> dict[tuple, tuple[RelevantSubgraph, ...]]:
    index: dict[tuple, list[RelevantSubgraph]] = {}
    for fid in FAMILY_IDS:
        for rel in relevant_subgraphs(fid):
            index.setdefault(_profile(rel.quotient), []).append(rel)
    return {k: tuple(v) for k, v in index.items()}


def candidate_shapes(h: Graph) -> tuple[RelevantSubgraph, ...]:
    """Relevant subgraphs (in family-table order) whose quotient is isomorphic to ``h``."""
    rels = _relevant_index().get(_profile(h), ())
    return tuple(r for r in rels if next(iter_isomorphisms(r.quotient, h), None) is not None)


def _check_match_input(h: Graph, mults: Sequence[int]) -> None:
    if h.n > MATCH_CEILING:
        raise PreconditionError(f"quotient has {h.n} vertices; patterns cover at most {MATCH_CEILING}")
    if len(mults) != h.n or any(k < 1 for k in mults):
        raise PreconditionError("need one positive multiplicity per quotient vertex")
    if not is_twin_free(h):
        raise PreconditionError("quotient graph is not twin-free")


def iter_matches(h: Graph, mults: Sequence[int],
                 shapes: Optional[Sequence[RelevantSubgraph]] = None) -> Iterator[FamilyParams]:
    """Yield parameter sets whose instance is isomorphic to ``blow_up(h, mults)``.

    Order: family table, then zero pattern, then isomorphism; duplicates are
    suppressed.
    """
    _check_match_input(h, mults)
    if shapes is None:
        shapes = candidate_shapes(h)
    bound = sum(mults) + 2
    seen: set[FamilyParams] = set()
    for rel in shapes:
        pattern = PATTERNS[rel.family_id]
        base = _zero_pattern_constraints(pattern, rel.deleted)
        for phi in iter_isomorphisms(rel.quotient, h):
            cons = list(base)
            for c, members in enumerate(rel.classes):
                total = Linear(())
                for i in members:
                    total = total + pattern.mult_exprs[i]
                cons.append(Constraint(total - mults[phi[c]], "eq"))
            for values in solve(pattern.params, cons, bound):
                p = FamilyParams(pattern.family_id, tuple((x, values[x]) for x in pattern.params))
                if p not in seen:
                    seen.add(p)
                    yield p


def match_multiplicities(h: Graph, mults: Sequence[int]) -> list[FamilyParams]:
    """Every family parameter set reproducing the blow-up ``h(mults)``."""
    return list(iter_matches(h, mults))
