"""Shared CLI helpers."""

import csv
import io
import json
from typing import Any

import typer

from kmaj import config


def run_service(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        typer.echo(str(exc), err=True)
        raise typer.Exit(2) from None


def resolve_format(fmt: str | None) -> str:
    chosen = fmt or config.get_format()
    if chosen not in config.FORMATS:
        typer.echo(f"Unknown format {chosen!r} ({', '.join(config.FORMATS)})", err=True)
        raise typer.Exit(2)
    return chosen


def emit(fmt: str, lines: list[str], payload: dict[str, Any], rows: list[dict[str, Any]]) -> None:
    if fmt == "json":
        typer.echo(json.dumps(payload))
        return
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        typer.echo(buffer.getvalue(), nl=False)
        return
    for line in lines:
        typer.echo(line)


def fmt_pairs(pairs) -> str:
    if not pairs:
        return "{}"
    return " ".join(f"({i},{j})" for i, j in sorted(pairs))


def fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def pairs_json(pairs) -> list[list[int]]:
    return [list(p) for p in sorted(pairs)]


FORMAT_OPTION = typer.Option(None, "--format", "-f", help="text, json or csv")
