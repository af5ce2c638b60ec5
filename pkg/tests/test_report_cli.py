from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from reesreg import (
    ClassificationReport,
    RegularityStatus,
    build_report,
    complete,
    cycle,
    disjoint_union,
    paper_example,
    path,
    write_graph,
)
from reesreg.cli import main


def test_report_example_frozen_values():
    r = build_report(paper_example(), with_oracle=True, with_witness=True)
    assert (r.n, r.m, r.mat, r.deficiency) == (7, 9, 3, 1)
    assert not r.bipartite
    assert not r.perfect_matching
    assert not r.factor_critical
    assert not r.konig
    assert r.tutte_berge
    assert (r.ge_d, r.ge_a, r.ge_c) == ((1, 2), (3,), (4, 5, 6, 7))
    assert r.odd_cycle_condition
    assert r.rees_normal
    assert r.regularity.status is RegularityStatus.COMPUTED
    assert r.regularity.reg == 3
    assert r.tb_witness == (1, 2)
    assert r.oracle is not None
    assert (r.oracle.q0, r.oracle.reg) == (5, 3)
    assert r.oracle_note is None


def test_report_round_trip_and_timing_equality():
    r = build_report(paper_example(), with_oracle=True, with_witness=True)
    again = ClassificationReport.from_json(r.to_json())
    assert again == r
    rerun = build_report(paper_example(), with_oracle=True, with_witness=True)
    assert rerun == r
    assert set(r.timings) == {
        "matching",
        "decomposition",
        "regularity",
        "witness",
        "oracle",
    }


def test_report_oracle_skip_notes():
    two_triangles = disjoint_union(cycle(3), cycle(3))
    r = build_report(two_triangles, with_oracle=True)
    assert r.oracle is None
    assert r.oracle_note == "oracle skipped: Rees algebra is not normal"
    tiny = build_report(path(2), with_oracle=True)
    assert tiny.oracle is None
    assert tiny.oracle_note == "oracle skipped: graph has fewer than two edges"
    plain = build_report(cycle(5))
    assert plain.oracle is None
    assert plain.oracle_note is None


def test_report_witness_option():
    r = build_report(cycle(6), with_witness=True)
    assert r.tb_witness == (1, 3, 5)
    r5 = build_report(cycle(5), with_witness=True)
    assert r5.tb_witness is None
    off = build_report(cycle(6))
    assert off.tb_witness is None


def test_report_consistency_on_families():
    for g in (path(4), cycle(5), cycle(6), complete(5), paper_example()):
        r = build_report(g, with_oracle=True, with_witness=True)
        assert r.deficiency == r.n - 2 * r.mat
        assert r.perfect_matching == (r.deficiency == 0)
        assert r.tutte_berge == (r.tb_witness is not None)
        if r.regularity.status is RegularityStatus.COMPUTED:
            assert r.regularity.reg == r.mat + (0 if r.tutte_berge else 1)
            assert r.oracle is not None
            assert r.oracle.reg == r.regularity.reg


def _write(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(write_graph(g), encoding="utf-8")
    return str(p)


def test_cli_gen_to_stdout(capsys):
    assert main(["gen", "cycle", "5"]) == 0
    assert capsys.readouterr().out == write_graph(cycle(5))


def test_cli_gen_paper_example(capsys):
    assert main(["gen", "paper-example"]) == 0
    assert capsys.readouterr().out == write_graph(paper_example())


def test_cli_gen_to_file_then_classify_json(tmp_path, capsys):
    target = str(tmp_path / "c5.txt")
    assert main(["gen", "cycle", "5", "-o", target]) == 0
    capsys.readouterr()
    assert main(["classify", target, "--json", "--oracle", "--witness"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 5
    assert data["regularity"]["reg"] == 3
    assert data["tutte_berge"] is False
    assert data["tb_witness"] is None
    assert data["oracle"]["q0"] == 3
    assert data["ge"]["d"] == [1, 2, 3, 4, 5]


def test_cli_gen_disjoint_union(tmp_path, capsys):
    a = _write(tmp_path, "a.txt", cycle(3))
    b = _write(tmp_path, "b.txt", path(3))
    assert main(["gen", "disjoint-union", a, b]) == 0
    assert capsys.readouterr().out == write_graph(disjoint_union(cycle(3), path(3)))


def test_cli_classify_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph(cycle(4))))
    assert main(["classify", "-"]) == 0
    out = capsys.readouterr().out
    assert "matching number      2" in out
    assert "tutte-berge          True" in out
    assert "regularity           2" in out


def test_cli_classify_plain_not_normal(tmp_path, capsys):
    g = disjoint_union(cycle(3), cycle(3))
    target = _write(tmp_path, "tt.txt", g)
    assert main(["classify", target]) == 0
    out = capsys.readouterr().out
    assert "rees normal          False" in out
    assert "regularity           n/a (not_normal)" in out


def test_cli_regularity_with_oracle(tmp_path, capsys):
    target = _write(tmp_path, "c5.txt", cycle(5))
    assert main(["regularity", target, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "status       computed" in out
    assert "reg          3" in out
    assert "agreement    True" in out


def test_cli_regularity_json(tmp_path, capsys):
    target = _write(tmp_path, "k2.txt", path(2))
    assert main(["regularity", target, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["regularity"]["status"] == "too_few_edges"
    assert data["regularity"]["reg"] is None
    assert "oracle" not in data


def test_cli_ged_json(tmp_path, capsys):
    target = _write(tmp_path, "ex.txt", paper_example())
    assert main(["ged", target, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {
        "d": [1, 2],
        "a": [3],
        "c": [4, 5, 6, 7],
        "d_components": [[1], [2]],
    }


def test_cli_polytope_interior(tmp_path, capsys):
    target = _write(tmp_path, "k3.txt", complete(3))
    assert main(["polytope", target, "--q", "2", "--interior", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ambient_n"] == 4
    assert data["points"] == [[1, 1, 1, 1]]


def test_cli_polytope_plain(tmp_path, capsys):
    target = _write(tmp_path, "k3.txt", complete(3))
    assert main(["polytope", target, "--q", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "lattice points of 1P for the cone graph (6 found)"
    assert len(out) == 7


def test_cli_corpus_small(capsys):
    assert main(["corpus", "--max-n", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["graphs_tested"] == 75
    assert data["failures"] == []


def test_cli_corpus_random(capsys):
    assert main(["corpus", "--max-n", "6", "--random", "50", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "graphs tested      50" in out
    assert "failures           0" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "/nonexistent/graph.txt"],
        ["gen", "torus", "3"],
        ["gen", "cycle", "2"],
        ["gen", "cycle"],
        [],
        ["frobnicate"],
    ],
)
def test_cli_usage_errors_exit_2(argv, tmp_path, capsys):
    assert main(argv) == 2
    capsys.readouterr()


def test_cli_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n1 1\n", encoding="utf-8")
    assert main(["classify", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
    assert "loop" in err


def test_cli_polytope_needs_odd_cycle(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("3 0\n", encoding="utf-8")
    assert main(["polytope", str(empty), "--q", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_polytope_enum_guard(tmp_path, capsys):
    target = _write(tmp_path, "k12.txt", complete(12))
    assert main(["polytope", target, "--q", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "classify" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "reesreg", "gen", "cycle", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "3 3\n1 2\n1 3\n2 3\n"
