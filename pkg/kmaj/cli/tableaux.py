"""Tableau commands: tstats, Phi, rsk."""

import typer

from kmaj import tableaux as tab
from kmaj.models import Word

from .helpers import FORMAT_OPTION, emit, fmt_pairs, fmt_set, pairs_json, resolve_format, run_service

app = typer.Typer()

EXPERIMENTAL_OPTION = typer.Option(
    False, "--experimental", help="Allow k=4 (known to break statistic transfer)"
)


def _parse(text: str) -> tab.StandardTableau:
    return run_service(tab.StandardTableau.parse, text)


@app.command()
def tstats(
    tableau: str = typer.Option(..., "--tableau", "-t", help="Rows bottom-up: '1 3 4 7 / 2 5 6 / 8'"),
    k: int = typer.Option(1, "--k", "-k"),
    experimental: bool = EXPERIMENTAL_OPTION,
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """Descents, k-descents, k-inversions and maj_k of a standard tableau"""
    fmt = resolve_format(fmt)
    T = _parse(tableau)
    des_k = run_service(tab.descent_set_k_T, T, k, experimental)
    inv_k = tab.inversion_set_k_T(T, k, experimental)
    value = tab.maj_k_T(T, k, experimental)
    des = tab.descent_set_T(T)

    lines = [
        f"tableau: {T}",
        f"shape: {T.shape}",
        f"Des: {fmt_pairs(des)}  maj = {tab.maj_T(T)}",
        f"Des_{k}: {fmt_pairs(des_k)}",
        f"Inv_{k}: {fmt_pairs(inv_k)}",
        f"maj_{k} = {value}",
    ]
    payload = {
        "tableau": T.to_json(),
        "k": k,
        "des": pairs_json(des),
        "maj": tab.maj_T(T),
        "des_k": pairs_json(des_k),
        "inv_k": pairs_json(inv_k),
        "maj_k": value,
    }
    row = {
        "tableau": str(T),
        "k": k,
        "maj": tab.maj_T(T),
        "maj_k": value,
        "des_k": fmt_pairs(des_k),
        "inv_k": fmt_pairs(inv_k),
    }
    emit(fmt, lines, payload, [row])


@app.command("Phi")
def phi_tableau(
    tableau: str = typer.Option(..., "--tableau", "-t"),
    k: int = typer.Option(..., "--k", "-k"),
    inverse: bool = typer.Option(False, "--inverse", help="Apply Psi^(k) instead"),
    experimental: bool = EXPERIMENTAL_OPTION,
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """Phi^(k) on standard tableaux (k = 2, 3)"""
    fmt = resolve_format(fmt)
    T = _parse(tableau)
    fn = tab.Psi_T if inverse else tab.Phi_T
    image = run_service(fn, T, k, experimental)
    name = "Psi" if inverse else "Phi"
    emit(
        fmt,
        [str(image)],
        {"tableau": T.to_json(), "k": k, name: image.to_json()},
        [{"tableau": str(T), "k": k, name: str(image)}],
    )


@app.command()
def rsk(
    word: str = typer.Option(..., "--word", "-w"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """Robinson-Schensted of the positions of 1..n: (P, Q) is the classical (Q(w), P(w))"""
    fmt = resolve_format(fmt)
    w = run_service(Word.parse, word)
    pair = run_service(tab.rsk, w)
    recorded = tab.descent_positions_T(pair.Q)
    emit(
        fmt,
        [
            f"P: {pair.P}",
            f"Q: {pair.Q}",
            f"shape: {pair.P.shape}",
            f"Des(Q): {fmt_set(recorded)}",
        ],
        {"word": w.to_json(), "P": pair.P.to_json(), "Q": pair.Q.to_json(), "des_Q": sorted(recorded)},
        [{"word": str(w), "P": str(pair.P), "Q": str(pair.Q), "shape": str(pair.P.shape)}],
    )
