"""Edge-polytope half-space systems and the dilation search.

The edge polytope of a graph H on vertices 1..N is the convex hull of the
0/1 vectors e_u + e_v over the edges of H.  When H contains an odd cycle,
the polytope is exactly the set of points on the hyperplane sum(x) = 2 that
satisfy x_i >= 0 for every regular vertex i (a vertex whose deletion leaves
only components containing odd cycles) and, for every fundamental
independent set T, sum over T <= sum over N(T).

Everything here runs on the cone graph G* of an input graph G: G plus an
apex vertex n + 1 adjacent to all of G.  The q-th dilation of its edge
polytope carries the regularity cross-check: with q0 the least dilation
whose relative interior contains a lattice point, the regularity of the
(normal) Rees algebra is n + 1 - q0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import InstanceTooLargeError, InternalInvariantError, NoOddCycleError
from .graphs import (
    Graph,
    VertexSet,
    components_within,
    independent_sets,
    is_bipartite,
    labels_of,
    mask_is_bipartite,
    mask_of,
)
from .matching import matching_number
from .rees import is_rees_normal

LatticePoint = tuple[int, ...]

# Each unit dilation contributes 2 to the coordinate sum: polytope vertices
# are sums of two standard basis vectors.
UNIT_COORDINATE_SUM = 2

ENUM_AMBIENT_LIMIT = 12
ENUM_DILATION_LIMIT = 12
NORMALITY_QMAX_LIMIT = 4


def cone_graph(g: Graph) -> Graph:
    """G plus an apex vertex n + 1 adjacent to every vertex of G."""
    apex = g.n + 1
    edges = list(g.edges) + [(v, apex) for v in g.vertices]
    return Graph.from_edges(apex, edges)


def is_regular_vertex(h: Graph, v: int) -> bool:
    """Does every component of h minus v contain an odd cycle?"""
    h._check_vertex(v)
    rest = h.full_mask & ~(1 << v)
    return all(
        not mask_is_bipartite(h, comp) for comp in components_within(h, rest)
    )


def _b_graph_connected(h: Graph, t_mask: int, n_mask: int) -> bool:
    # Connectivity of B_H(T): vertex set T u N(T), but only the edges
    # between the two sides count.
    adj = h.adj_bits
    both = t_mask | n_mask
    start = both & -both
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            v_adj = adj[low.bit_length() - 1]
            if low & t_mask:
                nxt |= v_adj & n_mask
            else:
                nxt |= v_adj & t_mask
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == both


def is_fundamental_independent_set(h: Graph, t: VertexSet) -> bool:
    """Nonempty independent T with B_H(T) connected and every component of
    H minus (T u N(T)) containing an odd cycle."""
    if not t:
        return False
    t_mask = mask_of(t)
    n_mask = 0
    for v in t:
        if h.adj_bits[v] & t_mask:
            return False
        n_mask |= h.adj_bits[v]
    if not _b_graph_connected(h, t_mask, n_mask):
        return False
    outside = h.full_mask & ~t_mask & ~n_mask
    return all(
        not mask_is_bipartite(h, comp) for comp in components_within(h, outside)
    )


def fundamental_independent_sets(h: Graph) -> tuple[VertexSet, ...]:
    """All fundamental independent sets, in independent-set stream order
    (smallest first, lexicographic within a size)."""
    return tuple(
        t for t in independent_sets(h) if t and is_fundamental_independent_set(h, t)
    )


@dataclass(frozen=True)
class HalfSpaceSystem:
    """Half-space description of an edge polytope on the sum hyperplane.

    `coord_constraints` lists the regular vertices i (inequality x_i >= 0);
    `set_constraints` holds pairs (T, N(T)) for the fundamental independent
    sets (inequality sum_T x <= sum_N x).  The hyperplane itself is
    sum(x) = UNIT_COORDINATE_SUM * q at dilation q.
    """

    ambient_n: int
    coord_constraints: tuple[int, ...]
    set_constraints: tuple[tuple[VertexSet, VertexSet], ...]
    _t_idx: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    _n_idx: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "_t_idx",
            tuple(tuple(v - 1 for v in t) for t, _ in self.set_constraints),
        )
        object.__setattr__(
            self,
            "_n_idx",
            tuple(tuple(v - 1 for v in nb) for _, nb in self.set_constraints),
        )


def halfspace_system(h: Graph) -> HalfSpaceSystem:
    """Build the half-space description for a graph with an odd cycle.

    Raises NoOddCycleError for bipartite input (the description is only
    exact in the presence of an odd cycle) and InternalInvariantError if a
    listed inequality turns out to be an implicit equality, i.e. tight at
    every polytope vertex e_u + e_v.
    """
    if is_bipartite(h):
        raise NoOddCycleError("half-space description needs an odd cycle")
    coords = tuple(v for v in h.vertices if is_regular_vertex(h, v))
    sets = tuple(
        (t, labels_of(_neighbor_mask_of(h, t)))
        for t in fundamental_independent_sets(h)
    )
    for i in coords:
        if h.degree(i) == 0:
            raise InternalInvariantError(
                f"x_{i} >= 0 is an implicit equality (isolated regular vertex)"
            )
    for t, nb in sets:
        t_set = set(t)
        n_set = set(nb)
        if not any(
            len(t_set & {u, v}) < len(n_set & {u, v}) for u, v in h.edges
        ):
            raise InternalInvariantError(
                f"set constraint for T = {t} is an implicit equality"
            )
    return HalfSpaceSystem(
        ambient_n=h.n, coord_constraints=coords, set_constraints=sets
    )


def _neighbor_mask_of(h: Graph, t: VertexSet) -> int:
    m = 0
    for v in t:
        m |= h.adj_bits[v]
    return m


def point_membership(
    system: HalfSpaceSystem, q: int, point: LatticePoint, strict: bool = False
) -> bool:
    """Is `point` in the q-th dilation (strict: in its relative interior)?

    Non-strict: coordinate sum 2q and every listed inequality holds.
    Strict: every listed inequality holds strictly.  The construction guard
    rules out implicit equalities, so strictness on the listed inequalities
    is exactly relative interiority.
    """
    if q < 1:
        raise ValueError(f"dilation q must be >= 1, got {q}")
    if len(point) != system.ambient_n:
        raise ValueError(
            f"point has {len(point)} coordinates, ambient is {system.ambient_n}"
        )
    if sum(point) != UNIT_COORDINATE_SUM * q:
        return False
    low = 1 if strict else 0
    for i in system.coord_constraints:
        if point[i - 1] < low:
            return False
    for t_idx, n_idx in zip(system._t_idx, system._n_idx):
        lhs = sum(point[i] for i in t_idx)
        rhs = sum(point[i] for i in n_idx)
        if lhs > rhs or (strict and lhs == rhs):
            return False
    return True


def _compositions(total: int, mins: tuple[int, ...]) -> Iterator[list[int]]:
    # All integer vectors >= mins with the given coordinate sum, ascending
    # lexicographic.
    k = len(mins)
    if k == 0:
        if total == 0:
            yield []
        return
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mins[i]

    def rec(i: int, left: int, acc: list[int]) -> Iterator[list[int]]:
        if i == k - 1:
            if left >= mins[i]:
                yield acc + [left]
            return
        for c in range(mins[i], left - suffix[i + 1] + 1):
            yield from rec(i + 1, left - c, acc + [c])

    yield from rec(0, total, [])


def _check_enum_guard(system: HalfSpaceSystem, q: int) -> None:
    if q < 1:
        raise ValueError(f"dilation q must be >= 1, got {q}")
    if system.ambient_n > ENUM_AMBIENT_LIMIT or q > ENUM_DILATION_LIMIT:
        raise InstanceTooLargeError(
            f"lattice enumeration limited to ambient <= {ENUM_AMBIENT_LIMIT}"
            f" and q <= {ENUM_DILATION_LIMIT}"
        )


def lattice_points(system: HalfSpaceSystem, q: int) -> tuple[LatticePoint, ...]:
    """All lattice points of the q-th dilation, ascending lexicographic."""
    _check_enum_guard(system, q)
    mins = tuple(0 for _ in range(system.ambient_n))
    out = []
    for cand in _compositions(UNIT_COORDINATE_SUM * q, mins):
        p = tuple(cand)
        if point_membership(system, q, p, strict=False):
            out.append(p)
    return tuple(out)


def interior_lattice_points(system: HalfSpaceSystem, q: int) -> tuple[LatticePoint, ...]:
    """Lattice points strictly inside the q-th dilation, ascending
    lexicographic.  Candidates are restricted to >= 1 at coordinates with a
    listed constraint and >= 0 elsewhere."""
    _check_enum_guard(system, q)
    listed = set(system.coord_constraints)
    mins = tuple(1 if v + 1 in listed else 0 for v in range(system.ambient_n))
    target = UNIT_COORDINATE_SUM * q
    if sum(mins) > target:
        return ()
    out = []
    for cand in _compositions(target, mins):
        p = tuple(cand)
        ok = True
        for t_idx, n_idx in zip(system._t_idx, system._n_idx):
            lhs = sum(p[i] for i in t_idx)
            rhs = sum(p[i] for i in n_idx)
            if lhs >= rhs:
                ok = False
                break
        if ok:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the dilation search on the cone graph.

    q0 is the least dilation whose relative interior contains a lattice
    point, `interior_witness` the lexicographically smallest such point,
    and reg = n + 1 - q0 the regularity it certifies.
    """

    q0: int
    interior_witness: LatticePoint
    reg: int


def compute_q0(g: Graph) -> OracleResult:
    """Search dilations q = 1, 2, ... of the cone-graph polytope.

    Requires at least two edges and a normal Rees algebra.  The search is
    bounded by q <= n + 1 - mat(G); running past the bound would contradict
    reg >= mat and raises InternalInvariantError.
    """
    if g.m < 2:
        raise ValueError("oracle needs a graph with at least two edges")
    if not is_rees_normal(g):
        raise ValueError("oracle needs a normal Rees algebra")
    system = halfspace_system(cone_graph(g))
    bound = g.n + 1 - matching_number(g)
    for q in range(1, bound + 1):
        pts = interior_lattice_points(system, q)
        if pts:
            return OracleResult(q0=q, interior_witness=pts[0], reg=g.n + 1 - q)
    raise InternalInvariantError(
        f"no interior lattice point up to the bound q = {bound}"
    )


def reduction_move(a: LatticePoint, i: int) -> LatticePoint:
    """Shift one unit from coordinate i (a vertex of G) to the apex.

    `a` is a point in the cone ambient (length n + 1); requires
    1 <= i <= n and a_i >= 1.
    """
    n = len(a) - 1
    if not (1 <= i <= n):
        raise ValueError(f"index {i} not in 1..{n}")
    if a[i - 1] < 1:
        raise ValueError(f"coordinate {i} is {a[i - 1]}, cannot go below 0")
    b = list(a)
    b[i - 1] -= 1
    b[n] += 1
    return tuple(b)


def canonical_point(g: Graph) -> tuple[int, LatticePoint]:
    """The distinguished pair (q, p) = (n - mat, (1, ..., 1, n - 2 mat)).

    p always lies in the q-th dilation of the cone polytope; it is interior
    exactly when the graph fails to be Tutte-Berge (given a normal Rees
    algebra, at least two edges and positive deficiency).
    """
    mat = matching_number(g)
    return g.n - mat, (1,) * g.n + (g.n - 2 * mat,)


def verify_normality_small(g: Graph, q_max: int = 3) -> bool:
    """Directly test normality in low dilations.

    For q = 1..q_max, every lattice point of the q-th dilation of the
    cone-graph polytope must be a sum of q edge vectors of the cone graph.
    Desk scale only (n <= 8, q_max <= 4).  An edgeless graph passes
    trivially: its cone polytope is the apex simplex and every dilation
    point splits into apex edges.
    """
    if q_max < 1 or q_max > NORMALITY_QMAX_LIMIT:
        raise ValueError(f"q_max must be in 1..{NORMALITY_QMAX_LIMIT}")
    if g.n > 8:
        raise InstanceTooLargeError("normality check limited to n <= 8")
    if g.m == 0:
        return True
    star = cone_graph(g)
    system = halfspace_system(star)
    edge_idx = [(u - 1, v - 1) for u, v in star.edges]
    memo: dict[LatticePoint, bool] = {}

    def decomposable(p: LatticePoint) -> bool:
        if sum(p) == 0:
            return True
        cached = memo.get(p)
        if cached is not None:
            return cached
        ok = False
        for u, v in edge_idx:
            if p[u] >= 1 and p[v] >= 1:
                step = list(p)
                step[u] -= 1
                step[v] -= 1
                if decomposable(tuple(step)):
                    ok = True
                    break
        memo[p] = ok
        return ok

    for q in range(1, q_max + 1):
        for p in lattice_points(system, q):
            if not decomposable(p):
                return False
    return True


__all__ = [
    "LatticePoint",
    "HalfSpaceSystem",
    "OracleResult",
    "cone_graph",
    "is_regular_vertex",
    "is_fundamental_independent_set",
    "fundamental_independent_sets",
    "halfspace_system",
    "point_membership",
    "lattice_points",
    "interior_lattice_points",
    "compute_q0",
    "reduction_move",
    "canonical_point",
    "verify_normality_small",
    "UNIT_COORDINATE_SUM",
]
