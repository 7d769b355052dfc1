from collections.abc import Sequence
from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console
from rich.table import Table

from tradeoff_sssp.core.generators import KINDS
from tradeoff_sssp.core.runner import IncompatibleAlgorithm, Outcome, execute, prepare
from tradeoff_sssp.core.runtime import Runtime, ThreadPoolBackend, get_runtime
from tradeoff_sssp.core.weights import InvalidParameter
from tradeoff_sssp.files.distances import write_distances
from tradeoff_sssp.files.graph_file import InputError, read_graph
from tradeoff_sssp.models import CSV_HEADER, RunReport

console = Console()

_ALGOS = "dijkstra, basic, sparse, dense, lex, binary"


def _render_reports(reports: Sequence[RunReport], out: Path) -> None:
    """Summarize a sweep whose CSV went to ``out``: one row per value of t."""
    first = reports[0]
    table = Table(title=f"{first.algo} on n={first.n}, m={first.m}", caption=f"written to {out}")
    table.add_column("t", justify="right")
    table.add_column("ell", justify="right")
    table.add_column("p", justify="right")
    table.add_column("work", justify="right")
    table.add_column("depth", justify="right")
    table.add_column("steps", justify="right")
    table.add_column("oracle")
    table.add_column("ms", justify="right")
    for r in reports:
        verdict = "[green]ok[/green]" if r.oracle_ok else "[red]mismatch[/red]"
        table.add_row(str(r.t), str(r.ell), str(r.p), str(r.work), str(r.depth), str(r.steps), verdict, f"{r.ms:.1f}")
    console.print(table)
    console.print(f"({len(reports)} rows)")


def _parse_grid(raw: str) -> list[int]:
    try:
        grid = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"--t-grid must be comma-separated integers, got {raw!r}") from exc
    if not grid or min(grid) < 1:
        raise InputError(f"--t-grid needs positive values, got {raw!r}")
    return grid


def _close(runtime: Runtime) -> None:
    if isinstance(runtime.backend, ThreadPoolBackend):
        runtime.backend.shutdown()


def run(
    graph: Annotated[Path, typer.Argument(help="Graph file.")],
    algo: Annotated[str, typer.Option(help=f"Algorithm: {_ALGOS}.")] = "dijkstra",
    t: Annotated[int, typer.Option(help="Vertices settled per discovery step.")] = 1,
    backend: Annotated[str | None, typer.Option(help="Execution backend: seq or par.")] = None,
    kind: Annotated[str, typer.Option(help=f"Weight kind of the graph file: {', '.join(KINDS)}.")] = "real",
    out: Annotated[Path | None, typer.Option(help="Distances file to write.")] = None,
) -> None:
    """Run one algorithm on a graph file and report its counters."""
    try:
        prepared = prepare(read_graph(graph, kind))
        runtime = get_runtime(backend)
    except (InputError, InvalidParameter) as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(1) from exc
    try:
        outcome: Outcome = execute(algo, prepared, t, runtime)
    except (IncompatibleAlgorithm, InvalidParameter) as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(1) from exc
    finally:
        _close(runtime)

    if out is not None:
        write_distances(out, outcome.distances)
    typer.echo(outcome.report.model_dump_json())
    typer.echo(CSV_HEADER)
    typer.echo(outcome.report.to_csv_row())
    if not outcome.report.oracle_ok:
        console.print("[red]Distances differ from dijkstra[/red]")
        raise typer.Exit(1)


def bench_sweep(
    graph: Annotated[Path, typer.Argument(help="Graph file.")],
    algo: Annotated[str, typer.Option(help=f"Algorithm: {_ALGOS}.")] = "basic",
    t_grid: Annotated[str, typer.Option(help="Comma-separated values of t.")] = "1,2,4,8",
    backend: Annotated[str | None, typer.Option(help="Execution backend: seq or par.")] = None,
    kind: Annotated[str, typer.Option(help=f"Weight kind of the graph file: {', '.join(KINDS)}.")] = "real",
    out: Annotated[Path | None, typer.Option(help="CSV file to write.")] = None,
) -> None:
    """Run one algorithm across a grid of t and emit one CSV row per run."""
    try:
        grid = _parse_grid(t_grid)
        prepared = prepare(read_graph(graph, kind))
        reports = []
        for t in grid:
            runtime = get_runtime(backend)
            try:
                reports.append(execute(algo, prepared, t, runtime).report)
            finally:
                _close(runtime)
    except (InputError, IncompatibleAlgorithm, InvalidParameter) as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(1) from exc

    lines = [CSV_HEADER, *(report.to_csv_row() for report in reports)]
    if out is not None:
        out.write_text("\n".join(lines) + "\n")
        _render_reports(reports, out)
        return
    for line in lines:
        typer.echo(line)
