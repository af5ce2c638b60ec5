"""Maximum matchings.

`max_matching` is an unweighted blossom search (alternating BFS with cycle
contraction).  Roots are tried in ascending label order and adjacency is
scanned in ascending label order, so the returned matching itself is
deterministic, not just its size.  `matching_number_bruteforce` is the
independent oracle: plain branch and bound over the edge list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InstanceTooLargeError
from .graphs import Graph, VertexSet, independence_number, induced_subgraph, labels_of

BRUTEFORCE_EDGE_LIMIT = 26


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, sorted, each pair (u, v) with u < v."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> VertexSet:
        return tuple(sorted(v for e in self.edges for v in e))


def max_matching(g: Graph) -> Matching:
    """A maximum matching of g, deterministic for a fixed graph."""
    n = g.n
    mate = [0] * (n + 1)
    for root in range(1, n + 1):
        if mate[root] == 0:
            _try_augment(g, mate, root)
    edges = tuple(
        (v, mate[v]) for v in range(1, n + 1) if mate[v] > v
    )
    return Matching(edges=edges)


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def _try_augment(g: Graph, mate: list[int], root: int) -> None:
    # One phase of the blossom search: grow an alternating BFS forest from
    # `root`, contracting odd cycles via the `base` array, and flip the first
    # augmenting path found.
    n = g.n
    parent = [0] * (n + 1)
    base = list(range(n + 1))
    used = [False] * (n + 1)
    used[root] = True
    queue = deque([root])

    def find_base(a: int, b: int) -> int:
        seen = [False] * (n + 1)
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in g.adj_lists[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != 0 and parent[mate[to]] != 0):
                # Odd cycle: contract the blossom through the common base.
                cur_base = find_base(v, to)
                in_blossom = [False] * (n + 1)
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(1, n + 1):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == 0:
                parent[to] = v
                if mate[to] == 0:
                    # Augmenting path: flip matched/unmatched back to root.
                    while to != 0:
                        pv = parent[to]
                        next_exposed = mate[pv]
                        mate[pv] = to
                        mate[to] = pv
                        to = next_exposed
                    return
                used[mate[to]] = True
                queue.append(mate[to])


def matching_number_bruteforce(g: Graph) -> int:
    """Maximum matching size by branch and bound over the edge list.

    The bound is size + min(edges left, floor(free vertices / 2)).  Guarded
    to at most 26 edges.
    """
    if g.m > BRUTEFORCE_EDGE_LIMIT:
        raise InstanceTooLargeError(
            f"{g.m} edges exceeds the brute-force limit of {BRUTEFORCE_EDGE_LIMIT}"
        )
    edges = [(1 << u | 1 << v) for u, v in g.edges]
    total = len(edges)
    n = g.n
    best = 0

    def grow(i: int, used_mask: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        free = n - used_mask.bit_count()
        if size + min(total - i, free // 2) <= best:
            return
        for j in range(i, total):
            ej = edges[j]
            if not used_mask & ej:
                grow(j + 1, used_mask | ej, size + 1)

    grow(0, 0, 0)
    return best


def has_perfect_matching(g: Graph) -> bool:
    return 2 * matching_number(g) == g.n


def is_factor_critical(g: Graph) -> bool:
    """Does every single-vertex deletion leave a perfect matching?

    False for even |V| (including n = 0); a single vertex counts as
    factor-critical.
    """
    if g.n % 2 == 0:
        return False
    if g.n == 1:
        return True
    target = (g.n - 1) // 2
    if matching_number(g) < target:
        return False
    all_mask = g.full_mask
    for v in g.vertices:
        rest, _ = induced_subgraph(g, labels_of(all_mask & ~(1 << v)))
        if matching_number(rest) < target:
            return False
    return True


def is_konig(g: Graph) -> bool:
    """Konig property: independence number + matching number = |V|."""
    return independence_number(g) + matching_number(g) == g.n


__all__ = [
    "Matching",
    "max_matching",
    "matching_number",
    "matching_number_bruteforce",
    "has_perfect_matching",
    "is_factor_critical",
    "is_konig",
    "BRUTEFORCE_EDGE_LIMIT",
]
