"""Small simple graphs with 1-based labels, plus the enumerations the rest of
the package is built on.

Graphs are immutable and hashable.  Vertices are labelled 1..n and an edge is
an unordered pair stored as (u, v) with u < v.  Internally every set of
vertices is also kept as an integer bitmask (bit v stands for vertex v), which
is what makes the exhaustive corpus sweeps affordable in pure Python.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError

# A set of vertex labels is passed around as a sorted tuple.
VertexSet = tuple[int, ...]


def mask_of(labels: Iterable[int]) -> int:
    """Bitmask with bit v set for each label v."""
    m = 0
    for v in labels:
        m |= 1 << v
    return m


def labels_of(mask: int) -> VertexSet:
    """Ascending labels of a bitmask."""
    out = []
    v = 1
    m = mask >> 1
    while m:
        if m & 1:
            out.append(v)
        v += 1
        m >>= 1
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    `edges` must be canonical: sorted tuple of (u, v) pairs with
    1 <= u < v <= n and no repeats.  Use `Graph.from_edges` to normalize
    arbitrary input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj_bits: tuple[int, ...] = field(init=False, compare=False, repr=False)
    adj_lists: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        bits = [0] * (self.n + 1)
        prev = None
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {e} is not a pair 1 <= u < v <= {self.n}")
            if prev is not None and e <= prev:
                raise ValueError(f"edges not sorted/unique at {e}")
            prev = e
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        object.__setattr__(self, "adj_bits", tuple(bits))
        object.__setattr__(
            self, "adj_lists", tuple(labels_of(b) for b in bits)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, normalizing edge order and checking for loops/repeats."""
        canon = []
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            canon.append((u, v))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        return cls(n=n, edges=tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << (self.n + 1)) - 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj_bits[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return self.adj_lists[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj_bits[u] >> v & 1)

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} not in 1..{self.n}")


# ---------------------------------------------------------------------------
# file format


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with '#' and blank lines are ignored.  The first data line
    is "n m"; exactly m edge lines "u v" follow (either endpoint order).
    """
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise GraphFormatError("no header line 'n m' found")
    lineno, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: n and m must be >= 0")
    body = data[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge line must be two integers") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: edge {u} {v} out of range 1..{n}")
        edges.append((min(u, v), max(u, v)))
    if len(set(edges)) != len(edges):
        seen = set()
        for lineno, line in body:
            u, v = sorted(int(x) for x in line.split())
            if (u, v) in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add((u, v))
    return Graph.from_edges(n, edges)


def write_graph(g: Graph) -> str:
    """Serialize in the edge-list format (u < v, lexicographic, LF lines)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators


def cycle(k: int) -> Graph:
    """Cycle C_k, k >= 3."""
    if k < 3:
        raise ValueError(f"cycle needs k >= 3, got {k}")
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return Graph.from_edges(k, edges)


def path(k: int) -> Graph:
    """Path on k vertices (k - 1 edges), k >= 1."""
    if k < 1:
        raise ValueError(f"path needs k >= 1, got {k}")
    return Graph.from_edges(k, [(i, i + 1) for i in range(1, k)])


def complete(k: int) -> Graph:
    """Complete graph K_k, k >= 1."""
    if k < 1:
        raise ValueError(f"complete needs k >= 1, got {k}")
    return Graph.from_edges(k, [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph K_{a,b}; sides are 1..a and a+1..a+b."""
    if a < 0 or b < 0:
        raise ValueError("sides must be >= 0")
    edges = [(u, a + w) for u in range(1, a + 1) for w in range(1, b + 1)]
    return Graph.from_edges(a + b, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with a fixed seed.

    Uses the Mersenne Twister (`random.Random(seed)`); candidate pairs are
    scanned in lexicographic order and pair {u, v} is kept when the next
    draw is < p, so the graph is reproducible across runs and platforms.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; the second graph's labels are shifted by g1.n."""
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return Graph.from_edges(g1.n + g2.n, edges)


def paper_example() -> Graph:
    """Built-in 7-vertex example: two pendant vertices on a cut vertex that
    guards a K_4.  It is Tutte-Berge but neither Konig nor perfectly
    matchable, which is why it earns a place as a regression fixture."""
    return Graph.from_edges(
        7,
        [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
    )


GENERATOR_FAMILIES = (
    "cycle",
    "path",
    "complete",
    "complete-bipartite",
    "random",
    "disjoint-union",
    "paper-example",
)


def generate(family: str, *params) -> Graph:
    """Dispatch a generator family by name (the CLI `gen` vocabulary)."""
    name = family.replace("_", "-")
    if name == "cycle":
        (k,) = params
        return cycle(int(k))
    if name == "path":
        (k,) = params
        return path(int(k))
    if name == "complete":
        (k,) = params
        return complete(int(k))
    if name == "complete-bipartite":
        a, b = params
        return complete_bipartite(int(a), int(b))
    if name == "random":
        n, p, seed = params
        return random_graph(int(n), float(p), int(seed))
    if name == "disjoint-union":
        g1, g2 = params
        return disjoint_union(g1, g2)
    if name == "paper-example":
        if params:
            raise ValueError("paper-example takes no parameters")
        return paper_example()
    raise ValueError(f"unknown family {family!r}; known: {', '.join(GENERATOR_FAMILIES)}")


# ---------------------------------------------------------------------------
# subgraphs and components


def induced_subgraph(g: Graph, labels: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `labels`, relabelled 1..|S| in ascending order.

    Returns (subgraph, mapping) where mapping sends new labels to the
    original ones.
    """
    sel = sorted(set(labels))
    for v in sel:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} not in 1..{g.n}")
    new_of = {old: i + 1 for i, old in enumerate(sel)}
    keep = set(sel)
    edges = [
        (new_of[u], new_of[v]) for u, v in g.edges if u in keep and v in keep
    ]
    return Graph.from_edges(len(sel), edges), {i + 1: old for i, old in enumerate(sel)}


def components_within(g: Graph, mask: int) -> list[int]:
    """Connected components of the subgraph induced on `mask`, as masks.

    Ordered by smallest member label.
    """
    adj = g.adj_bits
    left = mask
    out = []
    v = 1
    while left:
        while not (left >> v & 1):
            v += 1
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & mask & ~comp
        out.append(comp)
        left &= ~comp
    return out


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest label."""
    return [labels_of(m) for m in components_within(g, g.full_mask)]


def mask_is_bipartite(g: Graph, mask: int) -> bool:
    """Is the subgraph induced on `mask` bipartite?  (2-coloring BFS.)"""
    adj = g.adj_bits
    color = {}
    left = mask
    v = 1
    while left:
        while not (left >> v & 1):
            v += 1
        color[v] = 0
        queue = [v]
        comp = 1 << v
        while queue:
            u = queue.pop()
            cu = color[u]
            nb = adj[u] & mask
            while nb:
                low = nb & -nb
                w = low.bit_length() - 1
                nb ^= low
                if w in color:
                    if color[w] == cu:
                        return False
                else:
                    color[w] = 1 - cu
                    comp |= low
                    queue.append(w)
        left &= ~comp
    return True


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of a bipartiteness test with a witness either way.

    If bipartite, `sides` is the 2-coloring (two sorted label tuples, the
    first containing the smallest vertex of each component).  Otherwise
    `odd_closed_walk` is a closed walk of odd edge count, given as a vertex
    sequence whose first and last entries coincide.
    """

    bipartite: bool
    sides: tuple[VertexSet, VertexSet] | None
    odd_closed_walk: tuple[int, ...] | None


def bipartite_check(g: Graph) -> BipartiteCheck:
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in g.adj_lists[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    walk = _odd_walk(parent, u, w)
                    return BipartiteCheck(False, None, walk)
    side0 = tuple(sorted(v for v in g.vertices if color[v] == 0))
    side1 = tuple(sorted(v for v in g.vertices if color[v] == 1))
    return BipartiteCheck(True, (side0, side1), None)


def _odd_walk(parent: dict[int, int | None], u: int, w: int) -> tuple[int, ...]:
    # Close the walk u -> root -> w -> u through the BFS tree.  Both chains
    # end at the same root, and equal colors make the total edge count odd.
    up = [u]
    while parent[up[-1]] is not None:
        up.append(parent[up[-1]])
    down = [w]
    while parent[down[-1]] is not None:
        down.append(parent[down[-1]])
    return tuple(up + down[::-1][1:] + [u])


def is_bipartite(g: Graph) -> bool:
    return mask_is_bipartite(g, g.full_mask)


# ---------------------------------------------------------------------------
# neighborhoods and independent sets


def neighbor_set(g: Graph, labels: Iterable[int]) -> VertexSet:
    """Union of the neighborhoods of `labels` (may intersect the input)."""
    m = 0
    for v in labels:
        g._check_vertex(v)
        m |= g.adj_bits[v]
    return labels_of(m)


def neighbor_mask(g: Graph, mask: int) -> int:
    adj = g.adj_bits
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return out


def _independent_of_size(g: Graph, k: int) -> Iterator[VertexSet]:
    """All independent k-subsets, lexicographic by member list."""
    n = g.n
    adj = g.adj_bits
    if k == 0:
        yield ()
        return

    def rec(start: int, chosen: list[int], forbidden: int) -> Iterator[VertexSet]:
        need = k - len(chosen)
        for v in range(start, n - need + 2):
            if forbidden >> v & 1:
                continue
            chosen.append(v)
            if need == 1:
                yield tuple(chosen)
            else:
                yield from rec(v + 1, chosen, forbidden | adj[v])
            chosen.pop()

    yield from rec(1, [], 0)


def independent_sets(g: Graph) -> Iterator[VertexSet]:
    """All independent sets, smallest first, lexicographic within a size.

    Includes the empty set.  Intended for n up to about 20.
    """
    for k in range(g.n + 1):
        yield from _independent_of_size(g, k)


def max_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set; ties break to the lexicographically
    smallest member list.  Brute force, so desk scale only."""
    for k in range(g.n, 0, -1):
        first = next(_independent_of_size(g, k), None)
        if first is not None:
            return first
    return ()


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))


# ---------------------------------------------------------------------------
# chordless cycles

Cycle = tuple[int, ...]


def iter_chordless_odd_cycles(g: Graph) -> Iterator[Cycle]:
    """Chordless odd cycles, one representative per rotation/reflection class.

    A cycle is emitted as its vertex tuple starting at its smallest vertex,
    oriented so the second vertex is smaller than the last.  The enumeration
    grows induced paths from the smallest cycle vertex, so a cycle is seen
    exactly once.
    """
    adj = g.adj_bits
    for s in g.vertices:
        s_bit = 1 << s
        for v1 in g.adj_lists[s]:
            if v1 <= s:
                continue
            stack = [([s, v1], s_bit | (1 << v1))]
            while stack:
                path_, mask = stack.pop()
                last = path_[-1]
                mid = mask & ~(1 << last) & ~s_bit
                for w in g.adj_lists[last]:
                    if w <= s or (mask >> w & 1) or (adj[w] & mid):
                        continue
                    if adj[w] & s_bit:
                        if len(path_) >= 2 and (len(path_) + 1) % 2 == 1 and path_[1] < w:
                            yield tuple(path_) + (w,)
                    else:
                        stack.append((path_ + [w], mask | (1 << w)))


def chordless_odd_cycles(g: Graph) -> tuple[Cycle, ...]:
    """All chordless odd cycles, shortest first, then lexicographic."""
    return tuple(sorted(iter_chordless_odd_cycles(g), key=lambda c: (len(c), c)))
