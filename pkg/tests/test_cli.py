"""Command-line behavior: verdict exit codes, machine-readable stdout,
error reporting, and the search/report workflow."""

from __future__ import annotations

import subprocess
import sys

import pytest

from p3ramsey.arrowing import check_certificate, parse_certificate
from p3ramsey.canon import canonical_form
from p3ramsey.cli import main
from p3ramsey.fixtures import build_named
from p3ramsey.graph6 import parse_graph6, write_graph6
from p3ramsey.graphs import Graph
from p3ramsey.search import parse_report


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_arrowing_host(capsys):
    k44e = write_graph6(build_named("K44_minus_e"))
    code, out, _ = run(capsys, "decide", k44e, "--n", "8")
    assert code == 0
    assert out.strip() == f"arrows {k44e}"


def test_decide_non_arrowing_host_emits_certificate(capsys):
    g6 = write_graph6(build_named("G4_bar"))
    code, out, _ = run(capsys, "decide", g6, "--n", "7")
    assert code == 1
    line = out.strip()
    assert line.startswith("does-not-arrow ")
    host, cert = parse_certificate(line.split(" ", 1)[1])
    assert canonical_form(host) == canonical_form(build_named("G4_bar"))
    assert check_certificate(host, cert)


def test_decide_defaults_n_to_order(capsys):
    code, out, _ = run(capsys, "decide", "C~")
    assert code == 0
    assert out.strip() == "arrows C~"


def test_decide_path_target(capsys):
    # K4 arrows the spanning path; the 4-cycle does not (a red perfect
    # matching leaves two disjoint edges)
    code, _, _ = run(capsys, "decide", "C~", "--target", "path")
    assert code == 0
    code, out, _ = run(capsys, "decide", "Cl", "--target", "path")
    assert code == 1
    assert "does-not-arrow" in out


def test_decide_file_input_worst_verdict_wins(capsys, tmp_path):
    lines = [write_graph6(build_named("K44_minus_e")),
             write_graph6(build_named("G4_bar"))]
    path = tmp_path / "mixed.g6"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "decide", str(path))
    assert code == 1
    out_lines = out.strip().splitlines()
    assert len(out_lines) == 2
    assert out_lines[0].startswith("arrows ")
    assert out_lines[1].startswith("does-not-arrow ")


def test_decide_cycle_host_gets_single_edge_certificate(capsys):
    # an 8-cycle is defeated by one red edge; the printed certificate is
    # inclusion-minimal
    c8 = write_graph6(Graph(8, [(i, (i + 1) % 8) for i in range(8)]))
    code, out, _ = run(capsys, "decide", c8)
    assert code == 1
    _, cert = parse_certificate(out.strip().split(" ", 1)[1])
    assert len(cert.red) == 1


def test_gen_infeasible_spec_is_empty_with_diagnostic(capsys, caplog):
    code, out, err = run(capsys, "gen", "--n", "5", "--m", "11")
    assert code == 0
    assert out == ""
    assert "0 classes" in err
    assert any("11" in r.message for r in caplog.records)


def test_malformed_graph6_is_an_error(capsys):
    code, _, err = run(capsys, "decide", "~~~bogus")
    assert code == 2
    assert "byte" in err


def test_search_stdout_is_a_parseable_report(capsys):
    code, out, _ = run(capsys, "search", "--n", "5", "--workers", "1")
    assert code == 0
    report = parse_report(out)
    assert report.r_star == 9
    assert report.witness_count == 1


def test_search_writes_report_and_witness_files(capsys, tmp_path):
    out_path = tmp_path / "n4.report"
    code, out, _ = run(capsys, "search", "--n", "4", "--workers", "1",
                       "--output", str(out_path))
    assert code == 0
    assert out_path.exists()
    witnesses = (tmp_path / "n4.witnesses.g6").read_text().split()
    assert witnesses == ["C~"]


def test_search_large_order_requires_ingest(capsys):
    code, _, err = run(capsys, "search", "--n", "11")
    assert code == 2
    assert "--ingest" in err


def test_search_budget_pause_returns_three(capsys, tmp_path):
    ckpt = tmp_path / "n7.ckpt"
    code, _, err = run(capsys, "search", "--n", "7", "--workers", "1",
                       "--budget", "0s", "--checkpoint", str(ckpt),
                       "--chunk-size", "5")
    assert code == 3
    assert ckpt.exists()
    assert "paused" in err


def test_gen_streams_classes(capsys):
    code, out, err = run(capsys, "gen", "--n", "6", "--m", "9")
    assert code == 0
    lines = out.split()
    assert len(lines) == 2
    assert all(parse_graph6(line).edge_count == 9 for line in lines)
    assert "2 classes" in err


def test_gen_rejects_invalid_spec(capsys):
    code, _, err = run(capsys, "gen", "--n", "40", "--m", "10")
    assert code == 2
    assert "error" in err


def test_turan_prints_value_and_classes(capsys):
    code, out, _ = run(capsys, "turan", "--n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "ex(5) = 6"
    assert len(lines) == 2


def test_canon_is_canonical_and_stable(capsys):
    g = build_named("F9")
    code, out, _ = run(capsys, "canon", write_graph6(g))
    assert code == 0
    assert out.strip() == canonical_form(g)
    code, out2, _ = run(capsys, "canon", out.strip())
    assert out2.strip() == out.strip()


def test_verify_paper_single_group(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "turan")
    assert code == 0
    assert "PASS turan" in out


def test_verify_paper_group_alias(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "thm1")
    assert code == 0
    assert "PASS turan" in out


def test_verify_paper_unknown_group(capsys):
    code, _, err = run(capsys, "verify-paper", "--only", "everything")
    assert code == 2
    assert "unknown check group" in err


def test_verify_paper_even_family_range(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "even-family",
                       "--n", "12..14")
    assert code == 0
    assert "PASS even-family n=12" in out
    assert "PASS even-family n=14" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "p3ramsey", "canon", "C~"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "C~"
