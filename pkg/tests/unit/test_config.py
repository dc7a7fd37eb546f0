import pytest
import yaml

from kmaj import config, runlog
from kmaj.pool import pmap


def test_defaults_without_file():
    assert config.get_threads() == 1
    assert config.get_format() == "text"
    assert config.get_suite_max_size("mahonian", 6) == 6


def test_reads_yaml_file(kmaj_home):
    (kmaj_home / "config.yaml").write_text(
        yaml.dump({"threads": 3, "format": "json", "suites": {"mahonian": {"max_size": 5}}})
    )
    config.Config.reload()
    assert config.get_threads() == 3
    assert config.get_format() == "json"
    assert config.get_suite_max_size("mahonian", 6) == 5
    assert config.get_suite_max_size("nclass", 6) == 6


def test_corrupt_file_means_defaults(kmaj_home):
    (kmaj_home / "config.yaml").write_text("threads: [unclosed")
    config.Config.reload()
    assert config.get_threads() == 1


def test_env_overrides_threads(monkeypatch):
    config.Config().set("threads", 4)
    monkeypatch.setenv("KMAJ_THREADS", "2")
    assert config.get_threads() == 2
    monkeypatch.setenv("KMAJ_THREADS", "zero")
    assert config.get_threads() == 1
    monkeypatch.setenv("KMAJ_THREADS", "-3")
    assert config.get_threads() == 1


def test_set_value_persists(kmaj_home):
    config.set_value("threads", "6")
    config.set_value("format", "csv")
    saved = yaml.safe_load((kmaj_home / "config.yaml").read_text())
    assert saved == {"threads": 6, "format": "csv"}
    config.Config.reload()
    assert config.get_threads() == 6


@pytest.mark.parametrize(("key", "value"), [("threads", "0"), ("format", "xml"), ("colour", "red")])
def test_set_value_validates(key, value):
    with pytest.raises(ValueError):
        config.set_value(key, value)


def test_runlog(kmaj_home):
    assert runlog.recent() == []
    runlog.log_run("nclass", True, 12, 0.5)
    runlog.log_run("foata", False, 3, 1.25)
    lines = runlog.recent()
    assert len(lines) == 2
    assert lines[0].endswith("nclass PASS checked=12 elapsed=0.50s")
    assert lines[1].endswith("foata FAIL checked=3 elapsed=1.25s")
    assert runlog.recent(limit=1) == lines[1:]
    assert (kmaj_home / "verify.log").exists()


def test_pmap_preserves_order():
    items = [-3, 1, -2, 5, -8]
    assert pmap(abs, items, workers=1) == [3, 1, 2, 5, 8]
    assert pmap(abs, items, workers=3) == [3, 1, 2, 5, 8]
    assert pmap(abs, [], workers=3) == []
