from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from equimatch.families import FAMILY_IDS, enumerate_members
from equimatch.graph import Graph

CORPUS_MAX_VERTICES = 14

# criterion label -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record_acceptance(label: str, passed: bool, detail: str) -> None:
    ACCEPTANCE[label] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}: {detail}")


def naive_maximal_matching_sizes(g: Graph) -> set[int]:
    """Sizes of all maximal matchings, by plain enumeration of every matching."""
    edges = list(g.edges())
    sizes = set()

    def rec(i: int, used: frozenset[int], size: int) -> None:
        if i == len(edges):
            if all(u in used or v in used for u, v in edges):
                sizes.add(size)
            return
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, size + 1)
        rec(i + 1, used, size)

    rec(0, frozenset(), 0)
    return sizes


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@pytest.fixture(scope="session")
def corpus():
    return [member for fid in FAMILY_IDS for member in enumerate_members(fid, CORPUS_MAX_VERTICES)]
