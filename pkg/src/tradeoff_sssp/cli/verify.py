from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console

from tradeoff_sssp.files.distances import compare_distances, read_distances
from tradeoff_sssp.files.graph_file import InputError

console = Console()


def verify(
    first: Annotated[Path, typer.Argument(help="Distances file A.")],
    second: Annotated[Path, typer.Argument(help="Distances file B.")],
) -> None:
    """Compare two distances files; exit 1 at the first differing vertex, 2 on a vertex count mismatch."""
    try:
        diff = compare_distances(read_distances(first), read_distances(second))
    except InputError as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(1) from exc
    if diff.code:
        console.print(f"[red]{diff.message}[/red]")
        raise typer.Exit(diff.code)
    console.print(f"[green]{diff.message}[/green]")
