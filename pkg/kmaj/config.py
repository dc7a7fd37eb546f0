import os
from pathlib import Path
from typing import Any, ClassVar

import yaml

KMAJ_DIR = Path.home() / ".kmaj"
CONFIG_PATH = KMAJ_DIR / "config.yaml"
LOG_FILE = KMAJ_DIR / "verify.log"

FORMATS = ("text", "json", "csv")
THREADS_ENV = "KMAJ_THREADS"


class Config:
    _instance: ClassVar["Config | None"] = None
    _data: ClassVar[dict[str, Any]] = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            Config._data = {}
            cls._instance._load()
        return cls._instance

    def _load(self):
        if not CONFIG_PATH.exists():
            Config._data = {}
            return
        try:
            with CONFIG_PATH.open() as f:
                loaded = yaml.safe_load(f)
        except (OSError, yaml.YAMLError):
            loaded = None
        Config._data = loaded if isinstance(loaded, dict) else {}

    def _save(self):
        CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)
        with CONFIG_PATH.open("w") as f:
            yaml.dump(self._data, f, default_flow_style=False, allow_unicode=True)

    def get(self, key: str, default=None):
        return self._data.get(key, default)

    def set(self, key: str, value) -> None:
        self._data[key] = value
        self._save()

    @classmethod
    def reload(cls) -> "Config":
        cls._instance = None
        return cls()


def _positive_int(value: Any) -> int | None:
    try:
        number = int(value)
    except (TypeError, ValueError):
        return None
    return number if number >= 1 else None


def get_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is not None:
        return _positive_int(raw) or 1
    return _positive_int(Config().get("threads", 1)) or 1


def get_format() -> str:
    fmt = Config().get("format", "text")
    return fmt if fmt in FORMATS else "text"


def get_suite_max_size(name: str, default: int) -> int:
    suites: dict[str, Any] = Config().get("suites", {}) or {}
    entry = suites.get(name) or {}
    if not isinstance(entry, dict):
        return default
    return _positive_int(entry.get("max_size")) or default


def set_value(key: str, value: Any) -> None:
    if key == "threads" and _positive_int(value) is None:
        raise ValueError(f"threads must be a positive integer, got {value!r}")
    if key == "format" and value not in FORMATS:
        raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {value!r}")
    if key not in ("threads", "format"):
        raise ValueError(f"Unknown config key {key!r} (threads, format)")
    Config().set(key, int(value) if key == "threads" else value)


def effective() -> dict[str, Any]:
    return {
        "config_path": str(CONFIG_PATH),
        "threads": get_threads(),
        "format": get_format(),
        "suites": Config().get("suites", {}) or {},
    }
