"""End-to-end CLI tests: exit codes, JSON output, file round trips."""

import json

import pytest

from oriograph import cli
from oriograph.core import parse, read_graph, read_partition


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def paths(tmp_path, capsys):
    out = {}
    for family, params, name in [
        ("cycle-power", ["6", "2"], "c62"),
        ("cycle-power", ["5", "2"], "c52"),
        ("rotational", ["7", "1,2,4"], "t7"),
        ("s", [], "s"),
        ("d-abc", ["1", "1", "2"], "d"),
        ("d-abc", ["2", "2", "2"], "d2"),
        ("t-sk", ["2", "1"], "tsk21"),
        ("c3-barrier", ["2"], "barrier2"),
        ("rotational", ["3", "1"], "c3"),
    ]:
        target = tmp_path / f"{name}.dg"
        code = cli.main(["generate", family, *params, "-o", str(target)])
        assert code == 0
        out[name] = str(target)
    capsys.readouterr()
    return out


def test_generate_writes_graph_and_sidecar(tmp_path, capsys):
    target = tmp_path / "w.dg"
    code, _ = run(capsys, "generate", "t-sk", "2", "1", "-o", str(target))
    assert code == 0
    g = read_graph(str(target))
    assert g.n == 12
    parts = read_partition(str(tmp_path / "w.parts"))
    assert sorted(len(p) for p in parts.parts) == [3, 4, 5]


def test_generate_stdout_json(capsys):
    code, doc = run_json(capsys, "generate", "d-abc", "1", "1", "2")
    assert code == 0
    assert parse(doc["dg"]).n == 4
    assert "parts" in doc


def test_generate_bad_params(capsys):
    assert run(capsys, "generate", "rotational", "6", "1,2")[0] == 2
    assert run(capsys, "generate", "cycle-power", "5")[0] == 2
    assert run(capsys, "generate", "t-sk", "1", "1")[0] == 2


def test_embed_found_and_not_found(paths, capsys):
    code, out = run(capsys, "embed", "--pattern", paths["d"], "--host", paths["s"])
    assert code == 0
    assert len(out.split()) == 4
    code, _ = run(capsys, "embed", "--pattern", paths["c62"], "--host", paths["t7"])
    assert code == 1


def test_embed_count_and_vectors(paths, capsys):
    code, doc = run_json(capsys, "embed", "--pattern", paths["d"], "--host", paths["s"], "--count")
    assert code == 0
    assert doc["count"] == 1
    code, doc = run_json(
        capsys,
        "embed",
        "--pattern",
        paths["d2"],
        "--host",
        paths["tsk21"],
        "--parts",
        paths["tsk21"].replace(".dg", ".parts"),
        "--vectors",
    )
    assert code == 0
    assert doc["index_vectors"] == [[2, 2, 2]]


def test_embed_budget_exhaustion(paths, capsys):
    code, _ = run(capsys, "embed", "--pattern", paths["s"], "--host", paths["tsk21"], "--budget", "2")
    assert code == 3


def test_tile_found_with_certificate(paths, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    code, doc = run_json(
        capsys,
        "tile",
        "--pattern",
        paths["d"],
        "--host",
        paths["tsk21"],
        "--certificate",
        str(cert),
    )
    assert code == 0
    assert doc["mode"] == "found"
    assert sorted(v for copy in doc["copies"] for v in copy) == list(range(12))
    assert json.loads(cert.read_text()) == doc


def test_tile_lattice_refutation(paths, capsys):
    code, doc = run_json(
        capsys,
        "tile",
        "--pattern",
        paths["d2"],
        "--host",
        paths["tsk21"],
        "--parts",
        paths["tsk21"].replace(".dg", ".parts"),
    )
    assert code == 1
    assert doc["mode"] == "refuted-lattice"
    assert "unreachable" in doc["note"]


def test_tile_divisibility(paths, capsys):
    code, doc = run_json(capsys, "tile", "--pattern", paths["d"], "--host", paths["t7"])
    assert code == 1
    assert doc["mode"] == "refuted-divisibility"


def test_tile_budget(paths, capsys):
    code, doc = run_json(
        capsys, "tile", "--pattern", paths["d"], "--host", paths["tsk21"], "--budget", "1"
    )
    assert code == 3
    assert doc["mode"] == "inconclusive"


def test_lattice_report_and_target(paths, capsys):
    code, doc = run_json(
        capsys,
        "lattice",
        "--pattern",
        paths["c3"],
        "--host",
        paths["barrier2"],
        "--parts",
        paths["barrier2"].replace(".dg", ".parts"),
        "--target",
        "1,2,3",
    )
    assert code == 1
    assert doc["copies"] == 7
    assert doc["vectors"] == {"0,0,3": 1, "1,1,1": 6}
    assert doc["target_in_lattice"] is False
    code, doc = run_json(
        capsys,
        "lattice",
        "--pattern",
        paths["c3"],
        "--host",
        paths["barrier2"],
        "--parts",
        paths["barrier2"].replace(".dg", ".parts"),
    )
    assert code == 0
    assert doc["lattice_size"] >= 1


def test_analyze_vertex(paths, capsys):
    code, doc = run_json(capsys, "analyze", "--host", paths["t7"])
    assert code == 0
    assert doc["semi_regular"] is True
    assert doc["min_semi_degree"] == 3
    assert len(doc["vertices"]) == 7
    assert all(v["cyclic_edges"] == 6 for v in doc["vertices"])


def test_analyze_extremal(paths, capsys):
    code, doc = run_json(
        capsys,
        "analyze",
        "--host",
        paths["tsk21"],
        "--parts",
        paths["tsk21"].replace(".dg", ".parts"),
        "--stats",
        "extremal",
        "--gamma",
        "0.2",
    )
    assert code == 0
    assert doc["extremal"] is True
    assert doc["sizes"] == [3, 4, 5]


def test_analyze_extremal_search_failure(paths, capsys):
    code, doc = run_json(
        capsys, "analyze", "--host", paths["t7"], "--stats", "extremal", "--gamma", "0.05"
    )
    assert code == 1
    assert "no partition" in doc["note"]


def test_search_enumerate(tmp_path, capsys):
    code, doc = run_json(capsys, "search", "enumerate-rt", "--n", "5", "--out-dir", str(tmp_path))
    assert code == 0
    assert doc["classes"] == 1
    assert read_graph(str(tmp_path / "rt5-0.dg")).classify().is_regular


def test_search_probe(paths, capsys):
    code, doc = run_json(capsys, "search", "probe", "--pattern", paths["s"], "--n", "5,7")
    assert code == 0
    assert [e["containing"] for e in doc["per_n"]] == [1, 3]
    code, _ = run(capsys, "search", "probe", "--pattern", paths["c62"], "--n", "7")
    assert code == 1


def test_search_tile_probe(paths, capsys):
    code, doc = run_json(
        capsys, "search", "tile-probe", "--pattern", paths["d"], "--n", "8,10", "--samples", "3"
    )
    assert code == 0
    by_n = {e["n"]: e for e in doc["per_n"]}
    assert by_n[8]["tiled"] == 3
    assert "skipped" in by_n[10]


def test_verify_paper_fast(capsys):
    code, doc = run_json(capsys, "verify-paper", "--profile", "fast")
    assert code == 0
    statuses = {c["name"]: c["status"] for c in doc["checks"]}
    assert statuses["tsk-tiling-refuted"] == "INCONCLUSIVE"
    assert all(s == "PASS" for name, s in statuses.items() if name != "tsk-tiling-refuted")


def test_usage_errors(tmp_path, capsys):
    assert cli.main(["no-such-command"]) == 2
    capsys.readouterr()
    assert cli.main(["embed", "--pattern", "missing.dg", "--host", "also-missing.dg"]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.dg"
    bad.write_text("3 1\n0 99\n")
    assert cli.main(["analyze", "--host", str(bad)]) == 2
    capsys.readouterr()


def test_threads_env_override(paths, capsys, monkeypatch):
    monkeypatch.setenv("ORIOGRAPH_THREADS", "2")
    code, doc = run_json(capsys, "analyze", "--host", paths["t7"], "--threads", "8")
    assert code == 0
