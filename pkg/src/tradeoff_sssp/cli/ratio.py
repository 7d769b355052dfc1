from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console

from tradeoff_sssp.core.minratio import Comparator, RatioState, empty_state, insert_edge
from tradeoff_sssp.core.weights import InvalidParameter, InvariantBreach
from tradeoff_sssp.files.graph_file import InputError
from tradeoff_sssp.files.ratio_script import read_ratio_script
from tradeoff_sssp.models import ReplayStep

console = Console()


def _step(line: int, state: RatioState) -> ReplayStep:
    ratio = "inf" if state.ratio is None else str(state.ratio)
    cycle = [edge.tail for edge in state.cycle] if state.cycle else []
    checksum = "-" if state.potential is None else str(sum(state.potential.values()))
    return ReplayStep(line=line, ratio=ratio, cycle=cycle, checksum=checksum)


def ratio_replay(
    script: Annotated[Path, typer.Argument(help="Insertion script: 'p q c_num c_den t_num t_den' per line.")],
    comparator: Annotated[str, typer.Option(help="Parametric search comparator: basic or dense.")] = "basic",
    t: Annotated[int, typer.Option(help="t passed to the comparator.")] = 1,
) -> None:
    """Replay edge insertions and print the minimum ratio cycle after each one."""
    if comparator not in ("basic", "dense"):
        console.print(f"[red]Unknown comparator {comparator!r}; expected basic or dense[/red]")
        raise typer.Exit(1)
    chosen: Comparator = "basic" if comparator == "basic" else "dense"
    try:
        insertions = read_ratio_script(script)
        state = empty_state()
        for index, insertion in enumerate(insertions, start=1):
            state = insert_edge(state, insertion.tail, insertion.head, insertion.cost, insertion.time, chosen, t)
            step = _step(index, state)
            typer.echo(f"{step.line} {step.ratio} {' '.join(map(str, step.cycle)) or '-'} {step.checksum}")
    except (InputError, InvalidParameter, InvariantBreach) as exc:
        console.print(f"[red]{exc}[/red]")
        raise typer.Exit(1) from exc
