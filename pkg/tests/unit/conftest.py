import pytest

from kmaj import config


@pytest.fixture(autouse=True)
def kmaj_home(tmp_path, monkeypatch):
    monkeypatch.setattr(config, "KMAJ_DIR", tmp_path)
    monkeypatch.setattr(config, "CONFIG_PATH", tmp_path / "config.yaml")
    monkeypatch.setattr(config, "LOG_FILE", tmp_path / "verify.log")
    monkeypatch.delenv(config.THREADS_ENV, raising=False)
    config.Config.reload()
    yield tmp_path
    config.Config._instance = None
