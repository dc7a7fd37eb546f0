"""System commands: config, log."""

import typer

from kmaj import config as config_module
from kmaj import runlog

from .helpers import run_service

app = typer.Typer()


@app.command()
def config(
    set_: list[str] | None = typer.Option(None, "--set", help="key=value (threads, format)"),
) -> None:
    """Show or change configuration (~/.kmaj/config.yaml)"""
    for assignment in set_ or []:
        key, sep, value = assignment.partition("=")
        if not sep:
            typer.echo(f"Expected key=value, got {assignment!r}", err=True)
            raise typer.Exit(2)
        run_service(config_module.set_value, key.strip(), value.strip())

    current = config_module.effective()
    typer.echo(f"Config: {current['config_path']}")
    typer.echo(f"  threads: {current['threads']}")
    typer.echo(f"  format: {current['format']}")
    for suite, entry in sorted(current["suites"].items()):
        typer.echo(f"  suites.{suite}: {entry}")


@app.command()
def log(limit: int = typer.Option(20, "--limit", "-n")) -> None:
    """Recent verification runs"""
    lines = runlog.recent(limit)
    if not lines:
        typer.echo("No runs logged")
        return
    for line in lines:
        typer.echo(line)
