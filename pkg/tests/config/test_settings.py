import copy
import json
from dataclasses import fields

import pytest

from unirat.config import (
    ConfigError,
    Settings,
    configure_for_environment,
    load_settings_file,
    settings,
)


@pytest.fixture
def restore_settings(monkeypatch):
    """Let a test mutate the global settings."""
    for item in fields(Settings):
        monkeypatch.setattr(settings, item.name, copy.deepcopy(getattr(settings, item.name)))


def _write(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_from_file_overrides_nested_values(tmp_path):
    path = _write(tmp_path / "unirat.json", {"log_level": "INFO", "counting": {"default_bound": 7}})
    loaded = Settings.from_file(path)
    assert loaded.log_level == "INFO"
    assert loaded.counting.default_bound == 7
    assert loaded.sampling.seed == Settings().sampling.seed


def test_to_file_round_trips(tmp_path):
    original = Settings()
    original.modular.sigma0_threshold = 12
    original.reporting.output_dir = str(tmp_path / "out")
    path = str(tmp_path / "saved.json")
    original.to_file(path)
    assert Settings.from_file(path).to_dict() == original.to_dict()


@pytest.mark.parametrize(
    "data",
    [
        {"no_such_knob": 1},
        {"counting": {"workers": 2}},
        {"counting": 4},
        {"to_dict": None},
        [1, 2],
    ],
)
def test_from_file_rejects_bad_settings(tmp_path, data):
    with pytest.raises(ConfigError):
        Settings.from_file(_write(tmp_path / "bad.json", data))


def test_from_file_rejects_unreadable_files(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError, match="cannot read"):
        Settings.from_file(str(broken))
    with pytest.raises(ConfigError):
        Settings.from_file(str(tmp_path / "missing.json"))


def test_testing_environment_counts_serially(restore_settings):
    configure_for_environment("testing")
    assert settings.environment == "testing"
    assert settings.counting.jobs == 1
    assert settings.debug is True


def test_unknown_environment_only_sets_the_name(restore_settings):
    before = settings.to_dict()
    configure_for_environment("staging")
    assert settings.environment == "staging"
    assert {k: v for k, v in settings.to_dict().items() if k != "environment"} == {
        k: v for k, v in before.items() if k != "environment"
    }


def test_load_settings_file_updates_the_global_instance(tmp_path, restore_settings):
    counting = settings.counting
    load_settings_file(_write(tmp_path / "c.json", {"sampling": {"samples": 5}}))
    assert settings.sampling.samples == 5
    assert settings.counting is not counting
