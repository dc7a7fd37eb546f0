"""Append-only log of verification runs."""

import time

from . import config


def log(msg: str) -> None:
    config.LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
    timestamp = time.strftime("%Y-%m-%d %H:%M:%S")
    with config.LOG_FILE.open("a") as f:
        f.write(f"{timestamp} {msg}\n")


def log_run(name: str, passed: bool, checked: int, elapsed: float) -> None:
    status = "PASS" if passed else "FAIL"
    log(f"{name} {status} checked={checked} elapsed={elapsed:.2f}s")


def recent(limit: int = 20) -> list[str]:
    if not config.LOG_FILE.exists():
        return []
    lines = config.LOG_FILE.read_text().strip().split("\n")
    lines = [line for line in lines if line]
    return lines[-limit:] if limit > 0 else []
