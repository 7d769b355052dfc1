from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console

from tradeoff_sssp.core.generators import FAMILIES, KINDS, GenerationError
from tradeoff_sssp.core.generators import generate as _generate
from tradeoff_sssp.files.graph_file import format_graph, write_graph

console = Console()


def generate(
    family: Annotated[str, typer.Option(help=f"Graph family: {', '.join(FAMILIES)}.")] = "random-gnm",
    n: Annotated[int, typer.Option(help="Number of vertices.")] = 10,
    m: Annotated[int | None, typer.Option(help="Number of edges (random-gnm only).")] = None,
    seed: Annotated[int, typer.Option(help="Seed for edges and weights.")] = 0,
    kind: Annotated[str, typer.Option(help=f"Weight kind: {', '.join(KINDS)}.")] = "real",
    out: Annotated[Path | None, typer.Option(help="Graph file to write; stdout when omitted.")] = None,
) -> None:
    """Generate a seeded graph file."""
    try:
        instance = _generate(family, n, m, seed=seed, kind=kind)
    except GenerationError as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(1) from exc
    if out is None:
        typer.echo(format_graph(instance), nl=False)
        return
    write_graph(out, instance)
    console.print(f"[green]Wrote[/green] {family} graph n={instance.n} m={instance.m} to {out}")
