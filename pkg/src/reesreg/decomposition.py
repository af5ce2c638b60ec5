"""Gallai-Edmonds decomposition and the Tutte-Berge witness equation.

D(G) is the set of vertices missed by at least one maximum matching, found
here by the deletion characterization: v is in D(G) iff deleting v does not
drop the matching number.  A(G) collects the outside neighbors of D, and
C(G) is everything else.

A graph is called Tutte-Berge when some independent set T attains
|T| = |N(T)| + |V| - 2 mat(G), the maximum possible value.  That holds
exactly when every component of the subgraph induced on D(G) is a single
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLargeError
from .graphs import (
    Graph,
    VertexSet,
    components_within,
    independent_sets,
    induced_subgraph,
    labels_of,
    mask_is_bipartite,
    mask_of,
    max_independent_set,
    neighbor_mask,
)
from .matching import matching_number

INDEPENDENT_ENUM_LIMIT = 20


@dataclass(frozen=True)
class GallaiEdmonds:
    """The three-part decomposition, plus the components of D.

    All label tuples are sorted; `d_components` is ordered by smallest
    member.
    """

    d_set: VertexSet
    a_set: VertexSet
    c_set: VertexSet
    d_components: tuple[VertexSet, ...]


@dataclass(frozen=True)
class TutteBergeWitness:
    """An independent set attaining |T| = |N(T)| + deficiency."""

    t_set: VertexSet
    deficiency: int


def deficiency(g: Graph) -> int:
    """Number of vertices missed by a maximum matching: |V| - 2 mat(G)."""
    return g.n - 2 * matching_number(g)


def gallai_edmonds(g: Graph) -> GallaiEdmonds:
    """Compute D/A/C by n + 1 matching runs (one per deleted vertex)."""
    mat = matching_number(g)
    d_mask = 0
    all_mask = g.full_mask
    for v in g.vertices:
        rest, _ = induced_subgraph(g, labels_of(all_mask & ~(1 << v)))
        if matching_number(rest) == mat:
            d_mask |= 1 << v
    a_mask = neighbor_mask(g, d_mask) & ~d_mask
    c_mask = all_mask & ~d_mask & ~a_mask
    comps = tuple(labels_of(m) for m in components_within(g, d_mask))
    return GallaiEdmonds(
        d_set=labels_of(d_mask),
        a_set=labels_of(a_mask),
        c_set=labels_of(c_mask),
        d_components=comps,
    )


def is_tutte_berge(g: Graph) -> bool:
    """True when every component of D(G) is a single vertex.

    Equivalent to the existence of an independent witness for the
    deficiency equation; the empty graph and perfect-matching graphs pass
    with the empty witness.
    """
    return all(len(c) == 1 for c in gallai_edmonds(g).d_components)


def tutte_berge_bruteforce(g: Graph) -> TutteBergeWitness | None:
    """First independent set (smallest, then lexicographic) attaining the
    deficiency equation, or None.  Enumerates every independent set, so
    guarded to n <= 20."""
    if g.n > INDEPENDENT_ENUM_LIMIT:
        raise InstanceTooLargeError(
            f"n = {g.n} exceeds the independent-set enumeration limit"
        )
    defect = deficiency(g)
    for t in independent_sets(g):
        nb = neighbor_mask(g, mask_of(t))
        if len(t) == nb.bit_count() + defect:
            return TutteBergeWitness(t_set=t, deficiency=defect)
    return None


def tutte_berge_witness(g: Graph) -> TutteBergeWitness | None:
    """Constructive witness for Tutte-Berge graphs; None otherwise.

    Built per component: a maximum independent set for a bipartite
    component, the empty set for a non-bipartite component with a perfect
    matching, and otherwise D of the component together with maximum
    independent sets of the bipartite components of its C part.
    """
    if not is_tutte_berge(g):
        return None
    picked: list[int] = []
    for comp_mask in components_within(g, g.full_mask):
        comp, back = induced_subgraph(g, labels_of(comp_mask))
        part = _component_witness(comp)
        picked.extend(back[v] for v in part)
    return TutteBergeWitness(t_set=tuple(sorted(picked)), deficiency=deficiency(g))


def _component_witness(comp: Graph) -> VertexSet:
    if mask_is_bipartite(comp, comp.full_mask):
        return max_independent_set(comp)
    if 2 * matching_number(comp) == comp.n:
        return ()
    ge = gallai_edmonds(comp)
    picked = list(ge.d_set)
    for part_mask in components_within(comp, mask_of(ge.c_set)):
        if mask_is_bipartite(comp, part_mask):
            sub, back = induced_subgraph(comp, labels_of(part_mask))
            picked.extend(back[v] for v in max_independent_set(sub))
    return tuple(sorted(picked))


__all__ = [
    "GallaiEdmonds",
    "TutteBergeWitness",
    "deficiency",
    "gallai_edmonds",
    "is_tutte_berge",
    "tutte_berge_bruteforce",
    "tutte_berge_witness",
    "INDEPENDENT_ENUM_LIMIT",
]
