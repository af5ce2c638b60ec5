"""Classification reports: one graph in, one flat record out.

The JSON rendering uses fixed snake_case keys and round-trips exactly;
`timings` (stage wall times in milliseconds) is excluded from equality so
reports for the same graph and options compare equal across runs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .decomposition import gallai_edmonds, tutte_berge_witness
from .graphs import Graph, VertexSet, is_bipartite
from .matching import is_factor_critical, is_konig, matching_number
from .polytope import OracleResult, compute_q0
from .rees import (
    RegularityResult,
    RegularityStatus,
    is_rees_normal,
    regularity,
    satisfies_odd_cycle_condition,
)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    m: int
    mat: int
    deficiency: int
    bipartite: bool
    perfect_matching: bool
    factor_critical: bool
    konig: bool
    tutte_berge: bool
    ge_d: VertexSet
    ge_a: VertexSet
    ge_c: VertexSet
    odd_cycle_condition: bool
    rees_normal: bool
    regularity: RegularityResult
    tb_witness: VertexSet | None
    oracle: OracleResult | None
    oracle_note: str | None
    timings: dict[str, float] = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "mat": self.mat,
            "deficiency": self.deficiency,
            "bipartite": self.bipartite,
            "perfect_matching": self.perfect_matching,
            "factor_critical": self.factor_critical,
            "konig": self.konig,
            "tutte_berge": self.tutte_berge,
            "ge": {
                "d": list(self.ge_d),
                "a": list(self.ge_a),
                "c": list(self.ge_c),
            },
            "odd_cycle_condition": self.odd_cycle_condition,
            "rees_normal": self.rees_normal,
            "regularity": {
                "status": self.regularity.status.value,
                "mat": self.regularity.mat,
                "tutte_berge": self.regularity.tutte_berge,
                "reg": self.regularity.reg,
            },
            "tb_witness": list(self.tb_witness) if self.tb_witness is not None else None,
            "oracle": (
                {
                    "q0": self.oracle.q0,
                    "interior_witness": list(self.oracle.interior_witness),
                    "reg": self.oracle.reg,
                }
                if self.oracle is not None
                else None
            ),
            "oracle_note": self.oracle_note,
            "timings": dict(self.timings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationReport":
        reg = d["regularity"]
        oracle = d["oracle"]
        return cls(
            n=d["n"],
            m=d["m"],
            mat=d["mat"],
            deficiency=d["deficiency"],
            bipartite=d["bipartite"],
            perfect_matching=d["perfect_matching"],
            factor_critical=d["factor_critical"],
            konig=d["konig"],
            tutte_berge=d["tutte_berge"],
            ge_d=tuple(d["ge"]["d"]),
            ge_a=tuple(d["ge"]["a"]),
            ge_c=tuple(d["ge"]["c"]),
            odd_cycle_condition=d["odd_cycle_condition"],
            rees_normal=d["rees_normal"],
            regularity=RegularityResult(
                status=RegularityStatus(reg["status"]),
                mat=reg["mat"],
                tutte_berge=reg["tutte_berge"],
                reg=reg["reg"],
            ),
            tb_witness=tuple(d["tb_witness"]) if d["tb_witness"] is not None else None,
            oracle=(
                OracleResult(
                    q0=oracle["q0"],
                    interior_witness=tuple(oracle["interior_witness"]),
                    reg=oracle["reg"],
                )
                if oracle is not None
                else None
            ),
            oracle_note=d["oracle_note"],
            timings=dict(d["timings"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ClassificationReport":
        return cls.from_dict(json.loads(text))


def build_report(
    g: Graph, with_oracle: bool = False, with_witness: bool = False
) -> ClassificationReport:
    """Classify one graph.  The oracle runs only when requested and its
    preconditions hold; otherwise `oracle_note` explains the skip."""
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    mat = matching_number(g)
    timings["matching"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    ge = gallai_edmonds(g)
    tb = all(len(c) == 1 for c in ge.d_components)
    timings["decomposition"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    occ = satisfies_odd_cycle_condition(g)
    normal = is_rees_normal(g)
    reg = regularity(g)
    timings["regularity"] = (time.perf_counter() - t0) * 1000.0

    tb_witness = None
    if with_witness:
        t0 = time.perf_counter()
        w = tutte_berge_witness(g)
        tb_witness = w.t_set if w is not None else None
        timings["witness"] = (time.perf_counter() - t0) * 1000.0

    oracle = None
    oracle_note = None
    if with_oracle:
        t0 = time.perf_counter()
        if g.m < 2:
            oracle_note = "oracle skipped: graph has fewer than two edges"
        elif not normal:
            oracle_note = "oracle skipped: Rees algebra is not normal"
        else:
            oracle = compute_q0(g)
        timings["oracle"] = (time.perf_counter() - t0) * 1000.0

    return ClassificationReport(
        n=g.n,
        m=g.m,
        mat=mat,
        deficiency=g.n - 2 * mat,
        bipartite=is_bipartite(g),
        perfect_matching=2 * mat == g.n,
        factor_critical=is_factor_critical(g),
        konig=is_konig(g),
        tutte_berge=tb,
        ge_d=ge.d_set,
        ge_a=ge.a_set,
        ge_c=ge.c_set,
        odd_cycle_condition=occ,
        rees_normal=normal,
        regularity=reg,
        tb_witness=tb_witness,
        oracle=oracle,
        oracle_note=oracle_note,
        timings=timings,
    )
