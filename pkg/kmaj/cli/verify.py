"""Verification commands: verify."""

import json

import typer

from kmaj import suites

from .helpers import run_service

app = typer.Typer()


@app.command()
def verify(
    name: str | None = typer.Argument(None, help="Suite name; omit with --list"),
    max_size: int | None = typer.Option(None, "--max-size", help="Largest n to check"),
    threads: int | None = typer.Option(None, "--threads", "-j", help="Worker processes"),
    list_suites: bool = typer.Option(False, "--list", help="List suites"),
) -> None:
    """Run a verification suite; exits 1 on failure"""
    if list_suites or name is None:
        for suite in suites.names():
            typer.echo(suite)
        if name is None and not list_suites:
            raise typer.Exit(2)
        return

    result = run_service(suites.run_suite, name, max_size, threads)
    status = "PASS" if result.passed else "FAIL"
    typer.echo(f"{status} {result.name} (checked {result.checked})")
    typer.echo(json.dumps(result.to_json(), sort_keys=True))
    if not result.passed:
        raise typer.Exit(1)
