import logging
from typing import Annotated

import typer
from rich.logging import RichHandler

from tradeoff_sssp.cli.generate import generate
from tradeoff_sssp.cli.ratio import ratio_replay
from tradeoff_sssp.cli.run import bench_sweep, run
from tradeoff_sssp.cli.verify import verify

app = typer.Typer(
    name="tradeoff-sssp",
    help="Tradeoff SSSP CLI: generate graphs, run shortest path algorithms and check their counters.",
    no_args_is_help=True,
    context_settings={"help_option_names": ["-h", "--help"]},
)


@app.callback()
def configure(
    log_level: Annotated[str, typer.Option(help="Root log level (DEBUG, INFO, WARNING, ...).")] = "WARNING",
) -> None:
    logging.basicConfig(
        level=log_level.upper(),
        format="%(message)s",
        handlers=[RichHandler(show_path=False)],
        force=True,
    )


app.command("generate")(generate)
app.command("run")(run)
app.command("verify")(verify)
app.command("ratio-replay")(ratio_replay)
app.command("bench-sweep")(bench_sweep)


def main() -> None:
    app()
