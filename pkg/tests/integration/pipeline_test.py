"""End-to-end CLI pipeline: generate, run every algorithm, verify against dijkstra."""

from pathlib import Path

import pytest
from typer.testing import CliRunner

from tradeoff_sssp.cli.app import app

runner = CliRunner()

CASES = [
    ("random-gnm", "real", ["basic", "sparse", "dense"]),
    ("grid", "real", ["basic", "sparse", "dense"]),
    ("star", "real", ["basic", "sparse", "dense"]),
    ("complete", "lex", ["lex"]),
    ("layered", "bin", ["binary"]),
]


@pytest.mark.parametrize(("family", "kind", "algos"), CASES, ids=[f"{f}-{k}" for f, k, _ in CASES])
def test_generate_run_verify(tmp_path: Path, family: str, kind: str, algos: list[str]) -> None:
    graph = tmp_path / "graph.txt"
    args = ["generate", "--family", family, "--n", "20", "--seed", "3", "--kind", kind, "--out", str(graph)]
    if family == "random-gnm":
        args += ["--m", "60"]
    assert runner.invoke(app, args).exit_code == 0

    reference = tmp_path / "dijkstra.txt"
    result = runner.invoke(app, ["run", str(graph), "--kind", kind, "--out", str(reference)])
    assert result.exit_code == 0

    for algo in algos:
        for t in ("1", "3"):
            out = tmp_path / f"{algo}-{t}.txt"
            run_args = ["run", str(graph), "--kind", kind, "--algo", algo, "--t", t, "--out", str(out)]
            result = runner.invoke(app, run_args)
            assert result.exit_code == 0, result.output
            verdict = runner.invoke(app, ["verify", str(reference), str(out)])
            assert verdict.exit_code == 0
            assert "Identical" in verdict.output


def test_bench_sweep_csv(tmp_path: Path) -> None:
    graph = tmp_path / "graph.txt"
    runner.invoke(app, ["generate", "--family", "layered", "--n", "30", "--out", str(graph)])
    csv = tmp_path / "sweep.csv"
    result = runner.invoke(app, ["bench-sweep", str(graph), "--algo", "dense", "--t-grid", "1,2", "--out", str(csv)])
    assert result.exit_code == 0
    rows = csv.read_text().splitlines()
    assert rows[0] == "algo,n,m,t,ell,p,work,depth,steps,oracle_ok,ms"
    assert all(row.split(",")[9] == "true" for row in rows[1:])
