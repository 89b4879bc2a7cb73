"""End-to-end CLI behaviour: outputs, formats, and exit codes."""

from __future__ import annotations

import io
import json

from qt2ec import encode_graph6
from qt2ec.cli import build_parser, main
from qt2ec.families import cycle, figure_graph
from qt2ec.oracle import ALL_CHECKS
from qt2ec.report import CheckResult


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classes_family_k4_minus_e(capsys):
    code, out, _ = run(capsys, "classes", "--family", "k4_minus_e")
    assert code == 0
    assert out.splitlines() == [
        "k=3",
        "class 0: 0-1",
        "class 1: 0-2 0-3",
        "class 2: 1-2 1-3",
    ]


def test_classify_fig1_right(capsys):
    code, out, _ = run(capsys, "classify", "--family", "fig1_right")
    assert code == 0 and out.strip() == "TrivialOnly"


def test_classify_properly(capsys):
    code, out, _ = run(capsys, "classify", "--family", "double_path_apex,3")
    assert code == 0 and out.strip() == "Properly(3)"
    code, out, _ = run(capsys, "classify", "--family", "triangle_tail,3")
    assert code == 0 and out.strip() == "Unique"


def test_orient_c5_not_orientable(capsys):
    code, out, _ = run(capsys, "orient", "--family", "cycle,5")
    assert code == 0
    assert out.strip() == "not orientable, count=0"


def test_orient_seed_arc_emits_gamma(capsys):
    code, out, _ = run(
        capsys, "orient", "--family", "fig1_left", "--seed-arc", "v1,v2"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "orientable, k=4, count=16"
    assert sorted(lines[1:]) == sorted(
        ["v1 -> v2", "v3 -> v2", "v6 -> v2", "v1 -> v4", "v3 -> v4", "v6 -> v4"]
    )


def test_orient_enumerate(capsys):
    code, out, _ = run(capsys, "orient", "--family", "path,3", "--enumerate")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "orientable, k=1, count=2"
    assert sorted(lines[1:]) == ["0 -> 1; 2 -> 1", "1 -> 0; 1 -> 2"]


def test_witness_output(capsys):
    code, out, _ = run(capsys, "witness", "--family", "triangle_tail,3")
    assert code == 0 and out.strip() == "u v"
    code, out, _ = run(capsys, "witness", "--family", "fig1_right")
    assert code == 0 and out.strip() == "none"


def test_colour_enumerate(capsys):
    code, out, _ = run(capsys, "colour", "--family", "path,3", "--enumerate")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "count=2"
    assert lines[2:] == ["RR", "BB"]


def test_family_graph6_matches_library_encoder(capsys):
    code, out, _ = run(capsys, "family", "--family", "cycle,5", "--out", "graph6")
    assert code == 0 and out.strip() == encode_graph6(cycle(5))


def test_family_edge_list_round_trip(capsys):
    code, out, _ = run(capsys, "family", "--family", "threshold,4")
    assert code == 0
    assert out.startswith("vertices: v1 v2 v3 v4")


def test_graph6_stdin_pipeline(capsys, monkeypatch):
    monkeypatch.setattr(
        "sys.stdin", io.StringIO(encode_graph6(figure_graph("k4_minus_e")) + "\n")
    )
    code, out, _ = run(capsys, "classes", "-", "--in", "graph6")
    assert code == 0 and out.splitlines()[0] == "k=3"


def test_json_output_echoes_graph6_key(capsys):
    code, out, _ = run(
        capsys, "classes", "--family", "k4_minus_e", "--out", "json"
    )
    assert code == 0
    record = json.loads(out)
    assert record["schema"] == "qt2ec/1"
    assert record["graph6"] == encode_graph6(figure_graph("k4_minus_e"))
    assert record["k"] == 3


def test_usage_errors_exit_two(capsys, tmp_path):
    code, _, err = run(capsys, "classes")
    assert code == 2 and "input source" in err

    bad = tmp_path / "bad.txt"
    bad.write_text("a a\n")
    code, _, err = run(capsys, "classes", str(bad))
    assert code == 2 and "self-loop" in err

    code, _, err = run(capsys, "classes", "--family", "nope")
    assert code == 2 and "unknown family" in err


def test_refusals_exit_three(capsys, tmp_path):
    disconnected = tmp_path / "two_parts.txt"
    disconnected.write_text("a b\nc d\n")
    code, _, err = run(capsys, "classify", str(disconnected))
    assert code == 3 and "connected" in err

    code, _, err = run(capsys, "orient", "--family", "cycle,5", "--seed-arc", "0,1")
    assert code == 3 and "forced both ways" in err


def test_verify_small_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3")
    assert code == 0
    assert "graphs=6" in out.splitlines()[0]
    assert all(": PASS" in line for line in out.splitlines()[1:])


def test_verify_json_mode(capsys):
    code, out, _ = run(
        capsys, "verify", "--max-n", "2", "--checks", "colouring-count", "--out", "json"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[0])["schema"] == "qt2ec-report/1"
    assert all(json.loads(line)["passed"] for line in lines[1:])


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(g, p):
        return [CheckResult("broken", False, witness="intentional")]

    monkeypatch.setitem(ALL_CHECKS, "broken", broken)
    code, out, _ = run(capsys, "verify", "--max-n", "2", "--checks", "broken")
    assert code == 1
    assert "FAIL" in out


def test_oracle_subcommand(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "cycle,5")
    assert code == 0
    assert out.strip().splitlines() == ["colourings=2", "orientations=0"]


def test_threads_default_from_environment(monkeypatch):
    monkeypatch.setenv("QT2EC_THREADS", "3")
    args = build_parser().parse_args(["verify"])
    assert args.threads == 3


def test_dot_output(capsys):
    code, out, _ = run(capsys, "classes", "--family", "path,3", "--out", "dot")
    assert code == 0
    assert out.startswith("graph {") and "style=" in out

    code, out, _ = run(
        capsys, "orient", "--family", "path,3", "--seed-arc", "0,1", "--out", "dot"
    )
    assert code == 0
    assert out.startswith("digraph {") and "0 -> 1;" in out
