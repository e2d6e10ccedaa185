import json

import pytest

from src.cli.config import (
    config_from_dict,
    parse_config,
    pinned_instance_path,
    resolve_options,
)
from src.utils.errors import IdealInvalid, NotAssociative, ParseError, SchemaViolation


@pytest.fixture
def dual_data():
    with open(pinned_instance_path("dual_numbers_f2"), encoding="utf-8") as f:
        return json.load(f)


def test_pinned_instance(configs):
    config = configs["dual_numbers_f2"]
    assert config.name == "dual_numbers_f2"
    assert config.algebra.dim == 2
    assert config.ext.ideal.dim == 1
    assert config.options["dim_bound"] == 3


def test_missing_field(dual_data):
    del dual_data["unit"]
    with pytest.raises(SchemaViolation) as info:
        config_from_dict(dual_data)
    assert info.value.field == "unit"


def test_unknown_option(dual_data):
    dual_data["options"]["threads"] = 4
    with pytest.raises(SchemaViolation) as info:
        config_from_dict(dual_data)
    assert info.value.field == "options.threads"


def test_boolean_is_not_an_integer(dual_data):
    dual_data["p"] = True
    with pytest.raises(SchemaViolation):
        config_from_dict(dual_data)


def test_ideal_must_be_square_zero(dual_data):
    dual_data["ideal"] = [[1, 0]]
    with pytest.raises(IdealInvalid):
        config_from_dict(dual_data)


def test_broken_multiplication(dual_data):
    dual_data["basis"] = ["1", "x", "y"]
    dual_data["unit"] = [1, 0, 0]
    dual_data["mul"] = [
        [0, 0, 0, 1],
        [0, 1, 1, 1],
        [1, 0, 1, 1],
        [0, 2, 2, 1],
        [2, 0, 2, 1],
        [1, 1, 2, 1],
        [1, 2, 1, 1],
    ]
    dual_data["ideal"] = [[0, 0, 1]]
    with pytest.raises(NotAssociative):
        config_from_dict(dual_data)


def test_parse_error_reports_line(tmp_path):
    path = tmp_path / "broken.json"
    broken = '{\n  "name": "broken",\n  "p": ,\n  "basis": []\n}\n'
    path.write_text(broken, encoding="utf-8")
    with pytest.raises(ParseError) as info:
        parse_config(path)
    assert info.value.line == 3


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        parse_config(tmp_path / "absent.json")


def test_instance_options_are_used(configs, monkeypatch):
    monkeypatch.delenv("DEVISSAGE_SEED", raising=False)
    options = resolve_options(configs["dual_numbers_f2"])
    assert options.to_dict() == {
        "dim_bound": 3,
        "cap": 1000000,
        "seed": 0,
        "samples": 200,
    }


def test_command_line_beats_instance(configs, monkeypatch):
    monkeypatch.delenv("DEVISSAGE_SEED", raising=False)
    with pytest.warns(UserWarning, match="dim_bound"):
        options = resolve_options(configs["dual_numbers_f2"], dim_bound=2)
    assert options.dim_bound == 2


def test_environment_seed(configs, monkeypatch):
    monkeypatch.setenv("DEVISSAGE_SEED", "7")
    with pytest.warns(UserWarning, match="seed"):
        assert resolve_options(configs["dual_numbers_f2"]).seed == 7
    assert resolve_options(configs["dual_numbers_f2"], seed=0).seed == 0


def test_defaults_without_options(dual_data, monkeypatch):
    monkeypatch.delenv("DEVISSAGE_SEED", raising=False)
    del dual_data["options"]
    options = resolve_options(config_from_dict(dual_data))
    assert options.dim_bound == 3
    assert options.samples == 200


def test_bad_environment_seed(configs, monkeypatch):
    monkeypatch.setenv("DEVISSAGE_SEED", "seven")
    with pytest.raises(ValueError):
        resolve_options(configs["dual_numbers_f2"])


@pytest.mark.parametrize("key", ["dim_bound", "cap", "samples"])
def test_empty_runs_are_rejected(dual_data, key):
    dual_data["options"][key] = 0
    with pytest.raises(SchemaViolation) as info:
        config_from_dict(dual_data)
    assert info.value.field == f"options.{key}"


@pytest.mark.parametrize(
    "flags, field",
    [
        ({"samples": -3}, "--samples"),
        ({"samples": 0}, "--samples"),
        ({"dim_bound": 0}, "--dim-bound"),
        ({"cap": -1}, "--cap"),
        ({"seed": -1}, "--seed"),
    ],
)
def test_command_line_values_are_checked(configs, monkeypatch, flags, field):
    monkeypatch.delenv("DEVISSAGE_SEED", raising=False)
    with pytest.raises(SchemaViolation) as info:
        resolve_options(configs["dual_numbers_f2"], **flags)
    assert info.value.field == field
