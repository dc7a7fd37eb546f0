"""Word commands: stats, phi, psi, phirange, foata."""

import typer

from kmaj import bijections
from kmaj import words as words_module
from kmaj.models import Word

from .helpers import FORMAT_OPTION, emit, fmt_pairs, fmt_set, pairs_json, resolve_format, run_service

app = typer.Typer()


def _parse(text: str) -> Word:
    return run_service(Word.parse, text)


@app.command()
def stats(
    word: str = typer.Option(..., "--word", "-w", help="e.g. '9 8 6 1 7 3 2 4 5' or '9 8 _ 6 1'"),
    k: int = typer.Option(1, "--k", "-k"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """k-descents, k-inversions and maj_k of a word"""
    fmt = resolve_format(fmt)
    w = _parse(word)
    des = run_service(words_module.descent_set_k, w, k)
    invs = run_service(words_module.inversion_set_k, w, k)
    value = words_module.maj_k(w, k)
    ides = words_module.ides(w) if w.is_permutation() else None

    lines = [
        f"word: {w}",
        f"Des_{k}: {fmt_pairs(des)}",
        f"Inv_{k}: {fmt_pairs(invs)}",
        f"maj_{k} = {value}",
        f"maj = {words_module.maj(w)}  inv = {words_module.inv(w)}",
    ]
    if ides is not None:
        lines.append(f"iDes: {fmt_set(ides)}")
    payload = {
        "word": w.to_json(),
        "k": k,
        "des_k": pairs_json(des),
        "inv_k": pairs_json(invs),
        "maj_k": value,
        "maj": words_module.maj(w),
        "inv": words_module.inv(w),
        "ides": sorted(ides) if ides is not None else None,
    }
    row = {
        "word": str(w),
        "k": k,
        "maj_k": value,
        "maj": payload["maj"],
        "inv": payload["inv"],
        "des_k": fmt_pairs(des),
        "inv_k": fmt_pairs(invs),
        "ides": fmt_set(ides) if ides is not None else "",
    }
    emit(fmt, lines, payload, [row])


def _emit_map(fmt: str, name: str, w: Word, image: Word, extra: dict, steps: list[str]) -> None:
    lines = [*steps, str(image)] if steps else [str(image)]
    payload = {"word": w.to_json(), **extra, name: image.to_json()}
    row = {"word": str(w), **extra, name: str(image)}
    emit(fmt, lines, payload, [row])


@app.command()
def phi(
    word: str = typer.Option(..., "--word", "-w"),
    k: int = typer.Option(..., "--k", "-k"),
    steps: bool = typer.Option(False, "--steps", help="Show each nontrivial gamma_j"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """phi^(k): carries maj_{k-1} to maj_k"""
    fmt = resolve_format(fmt)
    w = _parse(word)
    image = run_service(bijections.phi_k, w, k)
    trace = []
    if steps:
        current = w
        for j in range(k + 1, len(w) + 1):
            chain = bijections.gamma_index_set(current, j, k)
            current = bijections.gamma(current, j, k)
            if chain.indices:
                trace.append(f"gamma_{j} {fmt_set(chain.indices)}: {current}")
    _emit_map(fmt, "phi", w, image, {"k": k}, trace)


@app.command()
def psi(
    word: str = typer.Option(..., "--word", "-w"),
    k: int = typer.Option(..., "--k", "-k"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """psi^(k): inverse of phi^(k)"""
    fmt = resolve_format(fmt)
    w = _parse(word)
    _emit_map(fmt, "psi", w, run_service(bijections.psi_k, w, k), {"k": k}, [])


@app.command()
def phirange(
    word: str = typer.Option(..., "--word", "-w"),
    i: int = typer.Option(..., "--i"),
    h: int = typer.Option(..., "--h"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """phi^[i,h]: carries maj_h to maj_i"""
    fmt = resolve_format(fmt)
    w = _parse(word)
    image = run_service(bijections.phi_range, w, i, h)
    _emit_map(fmt, "phi", w, image, {"i": i, "h": h}, [])


@app.command()
def foata(
    word: str = typer.Option(..., "--word", "-w"),
    fmt: str | None = FORMAT_OPTION,
) -> None:
    """Foata's second fundamental transformation (maj -> inv)"""
    fmt = resolve_format(fmt)
    w = _parse(word)
    _emit_map(fmt, "foata", w, run_service(bijections.foata, w), {}, [])
