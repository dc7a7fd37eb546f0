"""Distribution commands: dist."""

import typer

from kmaj import distributions
from kmaj.models import Multiset, parse_positions
from kmaj.tableaux import Partition

from .helpers import FORMAT_OPTION, emit, resolve_format, run_service

app = typer.Typer()


@app.command()
def dist(
    multiset: str | None = typer.Option(None, "--multiset", "-m", help="e.g. '1:2,2:1'"),
    shape: str | None = typer.Option(None, "--shape", "-s", help="e.g. '4,3,1'"),
    spacers: str = typer.Option("", "--spacers", help="Spacer positions, e.g. '2,5'"),
    stat: distributions.Stat = typer.Option(distributions.Stat.MAJ_K, "--stat"),
    k: int = typer.Option(1, "--k", "-k"),
    oracle: bool = typer.Option(False, "--oracle", help="Also print the closed-form product"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """Generating polynomial of a statistic over words on a multiset or over SYT(shape)"""
    fmt = resolve_format(fmt)
    if (multiset is None) == (shape is None):
        typer.echo("Give exactly one of --multiset or --shape", err=True)
        raise typer.Exit(2)

    if shape is not None:
        lam = run_service(Partition.parse, shape)
        poly = run_service(distributions.syt_distribution, lam, k)
        reference = distributions.q_hook_oracle(lam) if oracle else None
        source = {"shape": list(lam.parts)}
        label = f"SYT{lam} maj_{k}"
    else:
        M = run_service(Multiset.parse, multiset)
        mask = run_service(parse_positions, spacers)
        poly = run_service(distributions.word_distribution, M, mask, stat, k)
        reference = distributions.q_multinomial(M) if oracle and not mask else None
        source = {"multiset": M.to_json(), "spacers": sorted(mask)}
        name = f"maj_{k}" if stat is distributions.Stat.MAJ_K else stat.value
        label = f"W{{{M}}} {name}"

    lines = [f"{label}: {poly}"]
    if reference is not None:
        lines.append(f"oracle: {reference} ({'match' if reference == poly else 'MISMATCH'})")
    payload = {**source, "stat": stat.value, "k": k, "distribution": poly.to_json()}
    if reference is not None:
        payload["oracle"] = reference.to_json()
    rows = [{"exponent": e, "count": c} for e, c in enumerate(poly.coeffs)]
    emit(fmt, lines, payload, rows)
