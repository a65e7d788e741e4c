import copy
import importlib
import json
import logging
from dataclasses import fields, replace

import pytest
from click.testing import CliRunner

from unirat.cli import cli
from unirat.config import Settings, settings
from unirat.models import VarietyModel
from unirat.workflows import load_expectations

# The package re-exports the click group as `cli`, which shadows the submodule
# in dotted monkeypatch paths, so patch the module object directly.
cli_module = importlib.import_module("unirat.cli.cli")


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def restore_settings(monkeypatch):
    """Undo whatever --config or --env does to the global settings."""
    for item in fields(Settings):
        monkeypatch.setattr(settings, item.name, copy.deepcopy(getattr(settings, item.name)))


@pytest.fixture
def x_counts(monkeypatch, x_records):
    """Serve the session counts of X instead of recounting."""

    def fake_count_range(model, bound, jobs=None):
        assert model.name == "X"
        return [record for record in x_records if record.p <= bound]

    monkeypatch.setattr(cli_module, "count_range", fake_count_range)
    monkeypatch.setattr("unirat.workflows.paper.count_range", fake_count_range)


def test_count_builtin(runner):
    result = runner.invoke(cli, ["count", "X", "--bound", "10"])
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert [(row["p"], row["count"]) for row in rows] == [(3, 46), (5, 180), (7, 500)]
    assert rows[0]["good_reduction"] is False


def test_count_cross_check(runner):
    args = ["count", "fermat", "--bound", "7", "--cross-check", "--format", "csv"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "p,count,residue_weight4,good_reduction"
    assert len(result.stdout.splitlines()) == 4


def test_count_cross_check_mismatch(runner, monkeypatch):
    from unirat.count import count_points_naive

    def off_by_one(model, p):
        record = count_points_naive(model, p)
        return replace(record, count=record.count + 1)

    monkeypatch.setattr(cli_module, "count_points_naive", off_by_one)
    result = runner.invoke(cli, ["count", "Q", "--bound", "5", "--cross-check"])
    assert result.exit_code == 1
    assert "MISMATCH at p=3" in result.output


def test_count_without_primes(runner):
    result = runner.invoke(cli, ["count", "X", "--bound", "2"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == []


def test_exported_model_counts_identically(runner, tmp_path):
    path = tmp_path / "q.json"
    result = runner.invoke(cli, ["export-model", "Q", "--out", str(path)])
    assert result.exit_code == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["name"] == "Q" and data["kind"] == "hypersurface"

    from_file = runner.invoke(cli, ["count", str(path), "--bound", "13"])
    builtin = runner.invoke(cli, ["count", "Q", "--bound", "13"])
    assert from_file.exit_code == 0
    assert from_file.stdout == builtin.stdout


def test_export_model_to_stdout(runner, models):
    result = runner.invoke(cli, ["export-model", "S"])
    assert result.exit_code == 0
    assert VarietyModel.from_dict(json.loads(result.stdout)) == models["S"]


@pytest.mark.parametrize(
    "args",
    [
        ["count", "no_such_model"],
        ["export-model", "Y"],
        ["eta", "--spec", "1:1"],
        ["eta", "--spec", "2:x"],
        ["guess", "X", "--bound", "2"],
    ],
)
def test_input_errors_exit_2(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "Error:" in result.output


def test_invalid_variety_files_exit_2(runner, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert runner.invoke(cli, ["count", str(broken)]).exit_code == 2

    not_homogeneous = tmp_path / "inhomogeneous.json"
    not_homogeneous.write_text(
        json.dumps(
            {
                "name": "H",
                "variables": ["x", "y", "z"],
                "weights": [1, 1, 1],
                "kind": "hypersurface",
                "polynomial": "x^2 - y",
            }
        ),
        encoding="utf-8",
    )
    assert runner.invoke(cli, ["count", str(not_homogeneous)]).exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ["count", "X", "--bound", "-1"],
        ["count", "X", "--format", "html"],
        ["guess", "S", "--prime-class", "8-5"],
        ["verify-paper", "--sections", "cohomology"],
        ["no-such-command"],
        ["count"],
    ],
)
def test_usage_errors_exit_64(runner, args):
    assert runner.invoke(cli, args).exit_code == 64


def test_eta_prefixes(runner):
    result = runner.invoke(cli, ["eta", "--spec", "1:2,2:2,3:2,6:2", "--truncation", "11"])
    assert result.exit_code == 0
    lines = [line for line in result.stdout.splitlines() if not line.startswith("#")]
    assert [int(line.split()[1]) for line in lines] == [1, -2, -3, 4, 6, 6, -16, -8, 9, -12, 12]

    result = runner.invoke(cli, ["eta", "--spec", "4:6", "--truncation", "17"])
    lines = [line for line in result.stdout.splitlines() if not line.startswith("#")]
    nonzero = [line for line in lines if not line.endswith(" 0")]
    assert nonzero == ["1 1", "5 -6", "9 9", "13 10", "17 -30"]


def test_guess_x_with_weight4_form(runner, x_counts):
    result = runner.invoke(cli, ["guess", "X", "--bound", "100", "--form", "level6_weight4"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["guess"]["kind"] == "not_unirational_guess"
    assert data["congruence"]["kind"] == "congruence_pass"
    assert (data["exact_fit"]["c1"], data["exact_fit"]["c2"]) == (-8, 4)
    assert data["fit"]["kind"] == "exact_fit"
    assert data["guess"]["caveat"]


def test_guess_s_on_prime_classes(runner):
    args = ["guess", "S", "--bound", "60", "--form", "level8_weight3", "--convention", "weight3"]
    result = runner.invoke(cli, args + ["--prime-class", "8:5,7"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["guess"]["kind"] == "inconclusive"
    assert data["congruence"]["kind"] == "congruence_pass"
    assert all(p % 8 in (5, 7) for p in data["guess"]["sigma"])
    assert "exact_fit" not in data


def test_table1(runner, output_dir):
    result = runner.invoke(cli, ["table1", "--format", "markdown", "--save"])
    assert result.exit_code == 0
    assert "(1:0:0:1)" in result.stdout
    saved = output_dir / "table1.md"
    assert saved.read_text(encoding="utf-8") == result.stdout


def test_verify_paper_alphabet(runner):
    result = runner.invoke(cli, ["verify-paper", "--sections", "alphabet"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["ok"] is True
    assert [section["name"] for section in data["sections"]] == ["alphabet"]


def test_verify_paper_counts_and_fit(runner, x_counts):
    result = runner.invoke(cli, ["verify-paper", "--sections", "count,modular", "--format", "csv"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[1:] == ["count,48,48,True", "modular,7,7,True"]


def test_verify_paper_mismatch_exits_1(runner, x_counts, monkeypatch):
    expectations = load_expectations()
    corrupted = replace(expectations, counts={**expectations.counts, 97: 948381})
    monkeypatch.setattr("unirat.workflows.paper.load_expectations", lambda: corrupted)

    result = runner.invoke(cli, ["verify-paper", "--sections", "count"])
    assert result.exit_code == 1
    assert "#X_97: expected 948381, got 948380" in result.output


def test_log_file(runner, tmp_path):
    log_file = tmp_path / "logs" / "unirat.log"
    logger = logging.getLogger("unirat")
    previous = list(logger.handlers)
    try:
        args = ["--log-file", str(log_file), "count", "fermat", "--bound", "5"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        assert "count_range fermat" in log_file.read_text(encoding="utf-8")
    finally:
        for handler in logger.handlers[len(previous):]:
            handler.close()
            logger.removeHandler(handler)


@pytest.mark.parametrize(
    "field_name, value",
    [
        ("variables", "xyzt"),
        ("variables", ["x", "y", "z", 4]),
        ("weights", ["1", 1, 1, 1]),
        ("weights", 1),
        ("bad_primes", "2"),
        ("bad_primes", [2.5]),
        ("kind", ["hypersurface"]),
    ],
)
def test_malformed_variety_fields_exit_2(runner, tmp_path, models, field_name, value):
    data = models["fermat"].to_dict()
    data[field_name] = value
    path = tmp_path / "malformed.json"
    path.write_text(json.dumps(data), encoding="utf-8")

    result = runner.invoke(cli, ["count", str(path), "--bound", "5"])
    assert result.exit_code == 2
    assert field_name in result.output


def test_bad_primes_override(runner):
    result = runner.invoke(cli, ["count", "fermat", "--bound", "7", "--bad-primes", "2,5"])
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert [(row["p"], row["good_reduction"]) for row in rows] == [
        (3, True),
        (5, False),
        (7, True),
    ]

    builtin = json.loads(runner.invoke(cli, ["count", "fermat", "--bound", "7"]).stdout)
    assert [row["count"] for row in builtin] == [row["count"] for row in rows]
    assert all(row["good_reduction"] for row in builtin)


def test_empty_bad_primes_marks_every_prime_good(runner):
    result = runner.invoke(cli, ["count", "X", "--bound", "5", "--bad-primes", ""])
    assert result.exit_code == 0, result.output
    assert all(row["good_reduction"] for row in json.loads(result.stdout))


@pytest.mark.parametrize("value", ["3,x", "1", "-5", "3,4"])
def test_bad_primes_usage_errors_exit_64(runner, value):
    result = runner.invoke(cli, ["count", "fermat", "--bad-primes", value])
    assert result.exit_code == 64


def test_compare_model_with_itself(runner):
    result = runner.invoke(cli, ["compare", "fermat", "fermat", "--bound", "7"])
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert [row["p"] for row in rows] == [3, 5, 7]
    assert all(row["congruent"] and row["count_a"] == row["count_b"] for row in rows)


def test_config_file_sets_default_bound(runner, tmp_path, restore_settings):
    config = tmp_path / "unirat.json"
    config.write_text(json.dumps({"counting": {"default_bound": 7}}), encoding="utf-8")

    result = runner.invoke(cli, ["--config", str(config), "count", "fermat"])
    assert result.exit_code == 0, result.output
    assert [row["p"] for row in json.loads(result.stdout)] == [3, 5, 7]


def test_invalid_config_file_exits_2(runner, tmp_path, restore_settings):
    config = tmp_path / "unirat.json"
    config.write_text(json.dumps({"counting": {"workers": 2}}), encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(config), "show-config"])
    assert result.exit_code == 2
    assert "unknown setting 'workers'" in result.output

    missing = runner.invoke(cli, ["--config", str(tmp_path / "missing.json"), "show-config"])
    assert missing.exit_code == 64


def test_env_testing_counts_serially(runner, restore_settings):
    result = runner.invoke(cli, ["--env", "testing", "show-config"])
    assert result.exit_code == 0, result.output
    shown = json.loads(result.stdout)
    assert shown["environment"] == "testing"
    assert shown["counting"]["jobs"] == 1


def test_env_applies_after_config_file(runner, tmp_path, restore_settings):
    config = tmp_path / "unirat.json"
    config.write_text(json.dumps({"counting": {"jobs": 3, "default_bound": 11}}), encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(config), "--env", "testing", "show-config"])
    shown = json.loads(result.stdout)
    assert (shown["counting"]["jobs"], shown["counting"]["default_bound"]) == (1, 11)


def test_show_config_saves_a_loadable_file(runner, tmp_path, restore_settings):
    saved = tmp_path / "effective.json"
    result = runner.invoke(cli, ["show-config", "--out", str(saved)])
    assert result.exit_code == 0, result.output
    assert Settings.from_file(str(saved)).to_dict() == settings.to_dict()

    reloaded = runner.invoke(cli, ["--config", str(saved), "show-config"])
    assert json.loads(reloaded.stdout) == settings.to_dict()
