"""Equivalence commands: classes."""

import typer

from kmaj import equivalence
from kmaj.models import parse_positions

from .helpers import FORMAT_OPTION, emit, fmt_pairs, resolve_format, run_service

app = typer.Typer()


@app.command()
def classes(
    n: int = typer.Option(..., "--n", "-n"),
    k: int = typer.Option(..., "--k", "-k"),
    spacers: str = typer.Option("", "--spacers", help="Fixed spacer positions"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """k-equivalence classes of S_n"""
    fmt = resolve_format(fmt)
    if k < 1:
        typer.echo(f"k must be a positive integer, got {k}", err=True)
        raise typer.Exit(2)
    mask = run_service(parse_positions, spacers)
    found = run_service(equivalence.k_classes, n, k, mask or None)

    lines = []
    for c in found:
        members = ", ".join(str(w) for w in c.members)
        lines.append(f"{{{members}}}  Des_{k}={fmt_pairs(c.shared_des_k)}  |Inv_{k}|={c.shared_inv_count}")
    lines.append(f"{len(found)} classes")
    rows = [
        {
            "class": index,
            "members": " ; ".join(str(w) for w in c.members),
            "des_k": fmt_pairs(c.shared_des_k),
            "inv_k": c.shared_inv_count,
        }
        for index, c in enumerate(found, start=1)
    ]
    emit(fmt, lines, equivalence.classes_to_json(k, found), rows)
