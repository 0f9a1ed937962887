"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that the conftest prints in the terminal
summary.  Set EQUIMATCH_SKIP_EXTENDED=1 to leave out the 7-vertex sweep.
"""

from __future__ import annotations

import math
import os
import time

import networkx as nx
import pytest

from conftest import all_labeled_graphs, record_acceptance
from equimatch.families import instantiate, match_multiplicities, FamilyParams
from equimatch.graph import (Graph, complete_bipartite_graph, cycle_graph, is_bipartite,
                             is_connected, is_triangle_free, petersen_graph, twin_contract)
from equimatch.iso import find_induced_odd_cycle
from equimatch.matching import (bipartite_equimatchable_lesk, has_perfect_matching, independent_triple_criterion,
                                is_equimatchable_oracle, is_factor_critical, is_randomly_matchable)
from equimatch.recognition import classify, recognize_nonbipartite


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes)}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])


def _sweep(orders) -> tuple[int, int, list]:
    checked = positives = 0
    bad = []
    for n in orders:
        for g in all_labeled_graphs(n):
            if not is_connected(g) or is_bipartite(g) is not None:
                continue
            checked += 1
            expected = is_triangle_free(g)[0] and is_equimatchable_oracle(g).verdict
            positives += expected
            if recognize_nonbipartite(g).verdict != expected:
                bad.append(g)
    return checked, positives, bad


def test_exhaustive_recognition_up_to_6():
    start = time.perf_counter()
    checked, positives, bad = _sweep(range(1, 7))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record_acceptance("a  exhaustive recognition vs oracle, n<=6", ok,
                      f"{checked} graphs, {positives} positive, {len(bad)} disagreements, {elapsed:.1f}s")
    assert not bad, [list(g.edges()) for g in bad[:5]]
    assert elapsed < 300


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("EQUIMATCH_SKIP_EXTENDED") == "1", reason="extended sweep disabled")
def test_exhaustive_recognition_7_vertices():
    start = time.perf_counter()
    checked, positives, bad = _sweep([7])
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1800
    record_acceptance("b  exhaustive recognition vs oracle, n=7", ok,
                      f"{checked} graphs, {positives} positive, {len(bad)} disagreements, {elapsed:.1f}s")
    assert not bad, [list(g.edges()) for g in bad[:5]]
    assert elapsed < 1800


def test_family_soundness(corpus):
    failures = []
    for p, g in corpus:
        checks = {
            "connected": is_connected(g),
            "triangle_free": is_triangle_free(g)[0],
            "non_bipartite": is_bipartite(g) is None,
            "factor_critical": is_factor_critical(g),
            "equimatchable": is_equimatchable_oracle(g).verdict,
        }
        if not all(checks.values()):
            failures.append(f"{p}:{','.join(k for k, v in checks.items() if not v)}")
    record_acceptance("c  family soundness, <=14 vertices", not failures,
                      f"{len(corpus) - len(failures)}/{len(corpus)} pass"
                      + (f"; failing {' '.join(failures)}" if failures else ""))
    assert not failures


def test_round_trip_completeness(corpus):
    failures = []
    for p, g in corpus:
        tc = twin_contract(g)
        found = match_multiplicities(tc.quotient, tc.mults)
        if not any(nx.is_isomorphic(to_nx(instantiate(q)), to_nx(g)) for q in found):
            failures.append(str(p))
    record_acceptance("d  round trip contract/match/instantiate", not failures,
                      f"{len(corpus) - len(failures)}/{len(corpus)} pass"
                      + (f"; failing {' '.join(failures)}" if failures else ""))
    assert not failures


def _is_balanced_complete_bipartite(h: nx.Graph) -> bool:
    sides = nx.bipartite.sets(h) if h.number_of_nodes() > 1 and nx.is_bipartite(h) else None
    if sides is None:
        return False
    a, b = map(len, sides)
    return a == b and h.number_of_edges() == a * b


def _structure_problems(g: Graph) -> list[str]:
    problems = []
    cycle = find_induced_odd_cycle(g, 5) or find_induced_odd_cycle(g, 7)
    if cycle is None:
        return ["no induced C5 or C7"]
    h = to_nx(g)
    # Independent route: every chordless odd cycle must leave a bipartite rest.
    for c in nx.chordless_cycles(h):
        if len(c) % 2 and not nx.is_bipartite(h.subgraph(set(h) - set(c))):
            problems.append("two disjoint induced odd cycles")
            break
    rest = h.subgraph(set(h) - set(cycle))
    comps = [rest.subgraph(c) for c in nx.connected_components(rest)]
    if len(comps) > 2:
        problems.append(f"{len(comps)} components after removing the cycle")
    if not all(_is_balanced_complete_bipartite(c) for c in comps):
        problems.append("component not K_a,a")
    return problems


def test_odd_cycle_structure(corpus):
    failures = []
    for p, g in corpus:
        problems = _structure_problems(g)
        if problems:
            failures.append(f"{p}:{'/'.join(problems)}")
    record_acceptance("e  odd cycle and K_a,a structure", not failures,
                      f"{len(corpus) - len(failures)}/{len(corpus)} pass"
                      + (f"; failing {' '.join(failures)}" if failures else ""))
    assert not failures


def _connected_graphs_up_to_8():
    # Up to 7 vertices the atlas is complete up to isomorphism.  Every connected
    # 8-vertex graph is a connected 7-vertex graph plus one vertex joined to a
    # nonempty subset, since it has a vertex whose removal keeps it connected.
    seven = []
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            g = from_nx(h)
            yield g
            if g.n == 7:
                seven.append(g)
    for g in seven:
        edges = list(g.edges())
        for subset in range(1, 1 << 7):
            yield Graph.from_edges(8, edges + [(v, 7) for v in range(7) if subset >> v & 1])


def test_known_cases_and_random_matchability():
    failures = []
    for name, g in (("C5", cycle_graph(5)), ("C7", cycle_graph(7))):
        c = classify(g)
        if not (c.verdict and c.branch == "nonbipartite_family"):
            failures.append(f"{name} not accepted")
    for name, g in (("C9", cycle_graph(9)), ("Petersen", petersen_graph())):
        if classify(g).verdict or is_equimatchable_oracle(g).verdict:
            failures.append(f"{name} not rejected/negative")
    k33 = classify(complete_bipartite_graph(3, 3))
    if not (k33.branch == "bipartite_lesk_checked" and k33.verdict
            and bipartite_equimatchable_lesk(complete_bipartite_graph(3, 3))):
        failures.append("K3,3 not Lesk-positive")
    count = 0
    for g in _connected_graphs_up_to_8():
        count += 1
        oracle = is_equimatchable_oracle(g).verdict and has_perfect_matching(g)
        if is_randomly_matchable(g) != oracle:
            failures.append(f"Sumner mismatch {list(g.edges())}")
    record_acceptance("f  known positives/negatives and Sumner", not failures,
                      f"Sumner checked on {count} connected graphs <=8 vertices; {len(failures)} problems")
    assert not failures


def _fresh_copy(g: Graph) -> Graph:
    # Blow-ups share one neighbour set per block; recognition must be timed on
    # independent sets so the hashing work is really done.
    return Graph(g.n, tuple(frozenset(list(a)) for a in g.adj))


@pytest.mark.slow
def test_linear_scaling():
    rows = []
    for n in (500, 1000, 2000, 4000):
        shared = instantiate(FamilyParams.of("f3", n=n, r=1, s=1))
        best = math.inf
        for _ in range(3 if n < 4000 else 1):
            g = _fresh_copy(shared)
            start = time.perf_counter()
            verdict = recognize_nonbipartite(g).verdict
            best = min(best, time.perf_counter() - start)
            del g
        rows.append((n, shared.m, best, verdict))
        del shared
    ratios_ok = all(
        t2 / t1 <= 2.5 ** math.log2(m2 / m1)
        for (_, m1, t1, _), (_, m2, t2, _) in zip(rows, rows[1:]))
    ok = ratios_ok and rows[-1][2] < 30 and all(r[3] for r in rows)
    record_acceptance("g  linear-time recognition on f3", ok,
                      "; ".join(f"n={n} m={m} {t:.2f}s" for n, m, t, _ in rows))
    assert all(r[3] for r in rows)
    assert ratios_ok, rows
    assert rows[-1][2] < 30


def test_independent_triple_equivalence(corpus):
    pool = [g for n in range(1, 7) for g in all_labeled_graphs(n)] + [g for _, g in corpus if g.n <= 12]
    checked = 0
    bad = []
    for g in pool:
        if not is_factor_critical(g):
            continue
        checked += 1
        if is_equimatchable_oracle(g).verdict != (independent_triple_criterion(g) is None):
            bad.append(list(g.edges()))
    record_acceptance("h  independent-triple equivalence", not bad,
                      f"{checked} factor-critical graphs, {len(bad)} disagreements")
    assert not bad, bad[:3]
