"""Corpus sweeps: generate labeled graphs and check the two core claims.

For every graph the fast Tutte-Berge test must agree with the brute-force
witness search, and for every normal graph with at least two edges the
closed-form regularity must agree with the lattice-point oracle on the cone
graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .decomposition import is_tutte_berge, tutte_berge_bruteforce
from .graphs import Graph
from .polytope import compute_q0
from .rees import RegularityStatus, regularity


@dataclass(frozen=True)
class CorpusFailure:
    n: int
    edges: tuple[tuple[int, int], ...]
    check: str
    detail: str


@dataclass(frozen=True)
class CorpusSummary:
    graphs_tested: int
    normal_count: int
    tutte_berge_count: int
    failures: tuple[CorpusFailure, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "graphs_tested": self.graphs_tested,
            "normal_count": self.normal_count,
            "tutte_berge_count": self.tutte_berge_count,
            "failures": [
                {
                    "n": f.n,
                    "edges": [list(e) for e in f.edges],
                    "check": f.check,
                    "detail": f.detail,
                }
                for f in self.failures
            ],
        }


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on exactly n vertices, by edge bitmask order."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    total = len(pairs)
    for bits in range(1 << total):
        edges = tuple(pairs[i] for i in range(total) if bits >> i & 1)
        yield Graph(n=n, edges=edges)


def exhaustive_graphs(max_n: int) -> Iterator[Graph]:
    """All labeled graphs with 1 <= n <= max_n."""
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def random_graphs(max_n: int, samples: int, seed: int) -> Iterator[Graph]:
    """A reproducible stream of random graphs.

    One Mersenne Twister stream (`random.Random(seed)`) drives everything:
    for each sample, n is drawn uniformly from 1..max_n, p uniformly from
    [0, 1], then each pair (u, v) in lexicographic order is kept when the
    next draw is < p.
    """
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_n)
        p = rng.random()
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < p
        ]
        yield Graph.from_edges(n, edges)


@dataclass(frozen=True)
class GraphCheck:
    tutte_berge: bool
    normal: bool
    failures: tuple[CorpusFailure, ...]


def check_graph(g: Graph) -> GraphCheck:
    """Run both corpus assertions on one graph."""
    failures = []
    fast = is_tutte_berge(g)
    witness = tutte_berge_bruteforce(g)
    if fast != (witness is not None):
        failures.append(
            CorpusFailure(
                n=g.n,
                edges=g.edges,
                check="tutte_berge",
                detail=f"fast says {fast}, brute-force witness is {witness}",
            )
        )
    reg = regularity(g)
    if reg.status is RegularityStatus.COMPUTED:
        oracle = compute_q0(g)
        if oracle.reg != reg.reg:
            failures.append(
                CorpusFailure(
                    n=g.n,
                    edges=g.edges,
                    check="regularity",
                    detail=f"formula says {reg.reg}, oracle says {oracle.reg} (q0={oracle.q0})",
                )
            )
    return GraphCheck(
        tutte_berge=fast,
        normal=reg.status is not RegularityStatus.NOT_NORMAL,
        failures=tuple(failures),
    )


def corpus_run(
    max_n: int,
    random_samples: int | None = None,
    seed: int = 1,
) -> CorpusSummary:
    """Sweep a corpus and summarize.

    Exhaustive mode (random_samples None) walks every labeled graph with
    n <= max_n; random mode draws `random_samples` graphs from the seeded
    stream.
    """
    if random_samples is None:
        stream: Iterator[Graph] = exhaustive_graphs(max_n)
    else:
        stream = random_graphs(max_n, random_samples, seed)
    tested = 0
    normal = 0
    tutte_berge = 0
    failures: list[CorpusFailure] = []
    for g in stream:
        tested += 1
        result = check_graph(g)
        if result.normal:
            normal += 1
        if result.tutte_berge:
            tutte_berge += 1
        failures.extend(result.failures)
    return CorpusSummary(
        graphs_tested=tested,
        normal_count=normal,
        tutte_berge_count=tutte_berge,
        failures=tuple(failures),
    )
