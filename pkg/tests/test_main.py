from __future__ import annotations

import json

import pytest

from matchgames import __version__, main

K32 = "bipartite 3 2\n0 0\n0 1\n1 0\n1 1\n2 0\n2 1\n"
C5 = "graph 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
K4 = "graph 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
STAR = "bipartite 2 1\n0 0\n1 0\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("k32", K32), ("c5", C5), ("k4", K4), ("star", STAR)):
        path = tmp_path / f"{name}.graph"
        path.write_text(text)
        out[name] = str(path)
    out["dir"] = tmp_path
    return out


def run(monkeypatch, *argv):
    monkeypatch.setattr("sys.argv", ["matchgames", *argv])
    with pytest.raises(SystemExit) as exc_info:
        main.cli()
    return exc_info.value.code


def test_split_global_args():
    assert main.split_global_args(["-f", "x.yml", "--log-level", "DEBUG", "value", "a"]) == (
        ["-f", "x.yml", "--log-level", "DEBUG"], "value", ["a"]
    )
    assert main.split_global_args(["-h", "analyze"]) == (["-h"], None, ["analyze"])
    assert main.split_global_args(["--", "reduce", "sharp"]) == ([], "reduce", ["sharp"])
    assert main.split_global_args([]) == ([], None, [])
    assert main.split_global_args(["--file=x.yml", "--log-level=INFO", "analyze", "g"]) == (
        ["--file=x.yml", "--log-level=INFO"], "analyze", ["g"]
    )


def test_value_dispatch(monkeypatch):
    calls = []

    def fake_command_value(path, game_kind, model, synchronous=False, as_json=False):
        calls.append((path, game_kind, model, synchronous, as_json))
        return 0

    monkeypatch.setattr("matchgames.cmd.value_command.command_value", fake_command_value)
    assert run(monkeypatch, "value", "g.graph", "--game", "pm", "--model", "ns", "--sync") == 0
    assert calls == [("g.graph", "pm", "ns", True, False)]


def test_classical_value_of_k32(monkeypatch, capsys, files):
    assert run(monkeypatch, "value", files["k32"], "--game", "bpm", "--model", "classical") == 0
    assert capsys.readouterr().out.strip() == "7/9"


def test_nonsignaling_value_of_k32(monkeypatch, capsys, files):
    assert run(monkeypatch, "value", files["k32"], "--game", "bpm", "--model", "ns", "--json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["value"] == "1/1"
    assert report["questions"] == 3
    assert report["answers"] == 6


def test_value_game_must_fit_the_graph(monkeypatch, capsys, files):
    assert run(monkeypatch, "value", files["k32"], "--game", "pm", "--model", "classical") == 2
    assert capsys.readouterr().err.startswith("Error: ")


def test_value_needs_game_and_model(monkeypatch, files):
    assert run(monkeypatch, "value", files["k32"]) == 2


def test_size_limit_exit_code(monkeypatch, capsys, files):
    monkeypatch.setenv("MATCHGAMES_MAX_LP_VARS", "10")
    assert run(monkeypatch, "value", files["c5"], "--game", "pm", "--model", "ns") == 3
    assert "exceeds limit 10" in capsys.readouterr().err


def test_settings_file_limits(monkeypatch, files):
    conf = files["dir"] / "tight.yml"
    conf.write_text("limits:\n  lp_vars: 10\n")
    assert run(monkeypatch, "-f", str(conf), "value", files["c5"], "--game", "pm", "--model", "ns") == 3


def test_settings_file_given_inline(monkeypatch, files):
    conf = files["dir"] / "tight.yml"
    conf.write_text("limits:\n  lp_vars: 10\n")
    assert run(monkeypatch, f"--file={conf}", "value", files["c5"], "--game", "pm", "--model", "ns") == 3


def test_bad_settings_file(monkeypatch, capsys, files):
    conf = files["dir"] / "bad.yml"
    conf.write_text("limits:\n  lp_vars: plenty\n")
    assert run(monkeypatch, "-f", str(conf), "sos", "verify-k32") == 2
    assert run(monkeypatch, "-f", str(files["dir"] / "missing.yml"), "sos", "verify-k32") == 2
    assert "Error:" in capsys.readouterr().err


def test_missing_input_file(monkeypatch, capsys, files):
    assert run(monkeypatch, "analyze", str(files["dir"] / "nope.graph")) == 2
    assert "cannot read" in capsys.readouterr().err


def test_malformed_input_file(monkeypatch, files):
    bad = files["dir"] / "bad.graph"
    bad.write_text("graph 3\n0 0\n")
    assert run(monkeypatch, "analyze", str(bad)) == 2


def test_analyze_c5_json(monkeypatch, capsys, files):
    assert run(monkeypatch, "analyze", "--json", files["c5"]) == 0
    report = json.loads(capsys.readouterr().out)
    statuses = report["statuses"]
    assert statuses["classical_pm"]["holds"] is False
    assert statuses["fpm"]["holds"] is True
    assert statuses["ns_pm_characterization"]["holds"] is True
    assert statuses["ns_pm_lp"]["holds"] is True
    assert all(report["agreement"].values())
    assert report["values"]["nonsignaling"] == "1/1"
    assert report["values"]["classical"] != "1/1"
    assert report["input"] == {"source": files["c5"], "kind": "graph", "vertices": 5, "edges": 5}
    assert report["version"] == __version__
    assert "timing_seconds" not in report


def test_analyze_empty_graph(monkeypatch, capsys, files):
    empty = files["dir"] / "empty.graph"
    empty.write_text("graph 0\n")
    assert run(monkeypatch, "analyze", "--json", str(empty)) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["input"]["vertices"] == 0
    assert all(s["holds"] for s in report["statuses"].values())
    assert all(report["agreement"].values())
    assert report["values"] == {
        "classical": "1/1",
        "nonsignaling": "1/1",
        "classical_sync": "1/1",
        "nonsignaling_sync": "1/1",
    }


def test_analyze_timing(monkeypatch, capsys, files):
    assert run(monkeypatch, "analyze", files["star"], "--json", "--timing") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["timing_seconds"] >= 0
    assert report["statuses"]["l_pm"]["holds"] is False
    assert report["statuses"]["ns_bpm_characterization"]["holds"] is False
    assert report["statuses"]["ns_bpm_lp"]["holds"] is False


def test_analyze_table(monkeypatch, capsys, files):
    assert run(monkeypatch, "analyze", files["k32"]) == 0
    out = capsys.readouterr().out
    assert out.startswith(f"bipartite {files['k32']}: 5 vertices, 6 edges")
    assert "ns_characterization_vs_lp: agree" in out
    assert "7/9" in out


def test_reduce_sharp_star(monkeypatch, capsys, files):
    assert run(monkeypatch, "reduce", "sharp", files["star"]) == 1
    assert capsys.readouterr().out.splitlines() == [
        "forced  L0 - R0",
        "lonely  L1",
        "remaining: 1 left, 0 right",
    ]


def test_reduce_sharp_k32(monkeypatch, capsys, files):
    assert run(monkeypatch, "reduce", "sharp", files["k32"], "--json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["forced"] == []
    assert report["lonely_left"] == []
    assert report["remaining_left"] == [0, 1, 2]


def test_reduce_needs_bipartite_graph(monkeypatch, files):
    assert run(monkeypatch, "reduce", "sharp", files["c5"]) == 2


def test_corr_build_and_verify(monkeypatch, capsys, files):
    corr = str(files["dir"] / "c5.corr")
    assert run(monkeypatch, "corr", "build", "odd-cycle", files["c5"], "-o", corr) == 0
    assert run(monkeypatch, "corr", "verify", files["c5"], corr) == 0
    out = capsys.readouterr().out
    assert "winning probability: 1\n" in out
    assert "nonsignaling: yes" in out


def test_corr_build_to_stdout(monkeypatch, capsys, files):
    assert run(monkeypatch, "corr", "build", "sharp", files["k32"]) == 0
    assert capsys.readouterr().out.startswith("corr 3 6\n")


def test_corr_build_absent(monkeypatch, capsys, files):
    assert run(monkeypatch, "corr", "build", "sharp", files["star"]) == 1
    assert run(monkeypatch, "corr", "build", "odd-cycle", files["k4"]) == 2


def test_corr_verify_against_hypergraph_game(monkeypatch, capsys, files):
    corr = files["dir"] / "c5.corr"
    assert run(monkeypatch, "corr", "build", "odd-cycle", files["c5"], "-o", str(corr)) == 0
    capsys.readouterr()
    assert run(monkeypatch, "corr", "verify", files["c5"], str(corr), "--game", "hpm", "--json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["nonsignaling"] is True
    assert report["winning_probability"] == "1/1"
    assert "violation" not in report


def test_corr_without_action(monkeypatch):
    assert run(monkeypatch, "corr") == 2
    assert run(monkeypatch, "corr", "mix") == 2


def test_sos_commands(monkeypatch, capsys):
    assert run(monkeypatch, "sos", "verify-k32", "--residual") == 0
    out = capsys.readouterr().out
    assert "symmetric certificate: verified" in out
    assert "two-pair certificate: fails" in out
    assert "ncpoly 3" in out
    assert run(monkeypatch, "sos", "verify-sync", "5") == 0
    assert "synchronous quantum value bound: 7/10" in capsys.readouterr().out
    assert run(monkeypatch, "sos", "verify-sync", "1") == 2


def test_quantum_commands(monkeypatch, capsys):
    assert run(monkeypatch, "quantum", "k32-demo") == 0
    assert "classical value:       7/9" in capsys.readouterr().out
    assert run(monkeypatch, "quantum", "sweep", "3", "--restarts", "5", "--seed", "2") == 0
    assert "seed: 2" in capsys.readouterr().out


def test_qpm_search_and_verify(monkeypatch, capsys, files):
    cert = str(files["dir"] / "k4.cert")
    assert run(monkeypatch, "qpm", "search", files["k4"], "1", "-o", cert) == 0
    assert run(monkeypatch, "qpm", "verify", files["k4"], cert) == 0
    assert "certificate: passed" in capsys.readouterr().out


def test_qpm_search_miss(monkeypatch, capsys, files):
    assert run(monkeypatch, "qpm", "search", files["c5"], "1") == 1
    assert "not a proof of absence" in capsys.readouterr().err


def test_qpm_verify_failing_certificate(monkeypatch, capsys, files):
    cert = files["dir"] / "bad.cert"
    cert.write_text("qpm 4 1\nedge 0 1\n1 0\nedge 0 2\n1 0\n")
    assert run(monkeypatch, "qpm", "verify", files["k4"], str(cert)) == 1
    assert "certificate: FAILED" in capsys.readouterr().out


def test_explore_half_integral(monkeypatch, capsys, files):
    assert run(monkeypatch, "explore", "half-integral", files["c5"]) == 0
    assert "half-integral one: yes" in capsys.readouterr().out


def test_version(monkeypatch, capsys):
    assert run(monkeypatch, "version") == 0
    assert capsys.readouterr().err.strip() == f"matchgames version {__version__}"
    assert run(monkeypatch, "-v", "--short") == 0
    assert capsys.readouterr().err.strip() == __version__


def test_no_command_prints_help(monkeypatch, capsys):
    assert run(monkeypatch) == 1
    assert "matchgames [OPTIONS] COMMAND" in capsys.readouterr().out


def test_help_before_command_shows_top_level_help(monkeypatch, capsys):
    assert run(monkeypatch, "-h", "analyze") == 0
    assert "matchgames [OPTIONS] COMMAND" in capsys.readouterr().out


def test_unknown_command(monkeypatch, capsys):
    assert run(monkeypatch, "frobnicate") == 2
    assert "unknown command: frobnicate" in capsys.readouterr().err
