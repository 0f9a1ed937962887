"""Recognition of connected triangle-free equimatchable graphs.

The non-bipartite case runs in linear time: contract twins, and if the
twin-free quotient has at most eleven vertices, look for a family pattern
whose relevant subgraph and multiplicities reproduce it.  Bipartite inputs
fall back on Lesk's criterion when its subset scan is affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .families import MATCH_CEILING, FamilyParams, candidate_shapes, iter_matches
from .graph import Graph, TwinContraction, connected_components, find_triangle, is_bipartite, twin_contract
from .matching import PreconditionError, bipartite_equimatchable_lesk

BRANCHES = ("nonbipartite_family", "bipartite_out_of_scope", "bipartite_lesk_checked",
            "disconnected", "rejected")
REJECT_REASONS = ("has_triangle", "not_connected", "quotient_too_large", "no_template_isomorphism",
                  "no_multiplicity_match", "oracle_negative", "bipartite_guard_exceeded")


@dataclass(frozen=True)
class Classification:
    verdict: bool
    branch: str
    family: Optional[FamilyParams] = None
    reject_reason: Optional[str] = None
    triangle: Optional[tuple[int, int, int]] = None


def _reject(reason: str, **extra) -> Classification:
    return Classification(False, "rejected", reject_reason=reason, **extra)


def _recognize_contracted(tc: TwinContraction) -> Classification:
    h, mults = tc.quotient, tc.mults
    if h.n > MATCH_CEILING:
        return _reject("quotient_too_large")
    shapes = candidate_shapes(h)
    if not shapes:
        return _reject("no_template_isomorphism")
    first = next(iter_matches(h, mults, shapes), None)
    if first is None:
        return _reject("no_multiplicity_match")
    return Classification(True, "nonbipartite_family", family=first)


def recognize_nonbipartite(g: Graph) -> Classification:
    """Decide whether a connected non-bipartite graph is triangle-free and equimatchable.

    On success the classification names the first matching family in table
    order.  Raises :class:`PreconditionError` for disconnected or bipartite input.
    """
    if len(connected_components(g)) != 1:
        raise PreconditionError("recognition needs a connected graph")
    if is_bipartite(g) is not None:
        raise PreconditionError("recognition needs a non-bipartite graph")
    return _recognize_contracted(twin_contract(g))


def classify(g: Graph) -> Classification:
    """Total classifier: routes disconnected, bipartite and non-bipartite inputs."""
    if len(connected_components(g)) != 1:
        return Classification(False, "disconnected", reject_reason="not_connected")
    if is_bipartite(g) is not None:
        try:
            ok = bipartite_equimatchable_lesk(g)
        except PreconditionError:
            return Classification(False, "bipartite_out_of_scope",
                                  reject_reason="bipartite_guard_exceeded")
        # Bipartite graphs are triangle-free, so Lesk's verdict is the answer.
        return Classification(ok, "bipartite_lesk_checked",
                              reject_reason=None if ok else "oracle_negative")
    tc = twin_contract(g)
    # Twin blocks are independent sets, so g has a triangle iff its quotient does.
    tri = find_triangle(tc.quotient)
    if tri is not None:
        reps = [members[0] for members in tc.classes()]
        witness = tuple(sorted(reps[q] for q in tri))
        return _reject("has_triangle", triangle=witness)
    return _recognize_contracted(tc)
