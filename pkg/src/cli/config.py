"""
Instance configuration files.

An instance is a JSON document naming an algebra by sparse structure
constants, a square-zero ideal and run options. The embedded algebra and
ideal are validated as soon as the file is parsed.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path

from src.algebra_core.algebra import (
    Algebra,
    SquareZeroExtension,
    algebra_from_quadruples,
    square_zero_extension,
)
from src.utils.config_utils import (
    PROJECT_ROOT,
    WORKBENCH_CONFIG,
    default_dim_bound,
    seed_override,
)
from src.utils.errors import ParseError, SchemaViolation

REQUIRED_FIELDS = ("name", "p", "basis", "mul", "unit", "ideal")
OPTION_FIELDS = ("dim_bound", "cap", "seed", "samples")
# Smallest accepted value of each run option
OPTION_MINIMUMS = {"dim_bound": 1, "cap": 1, "seed": 0, "samples": 1}


@dataclass(frozen=True)
class RunOptions:
    dim_bound: int
    cap: int
    seed: int
    samples: int

    def to_dict(self) -> dict:
        return {
            "dim_bound": self.dim_bound,
            "cap": self.cap,
            "seed": self.seed,
            "samples": self.samples,
        }


@dataclass(frozen=True, eq=False)
class InstanceConfig:
    """A parsed instance with its validated algebra and ideal."""

    name: str
    p: int
    basis: tuple[str, ...]
    mul: tuple[tuple[int, int, int, int], ...]
    unit: tuple[int, ...]
    ideal: tuple[tuple[int, ...], ...]
    options: dict
    ext: SquareZeroExtension
    path: Path | None = None

    @property
    def algebra(self) -> Algebra:
        return self.ext.algebra


def _int_list(value, field: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise SchemaViolation(field, "expected a list of integers")
    return value


def config_from_dict(data, path: Path | None = None) -> InstanceConfig:
    """
    Validate a decoded instance document.

    Raises:
        SchemaViolation: If a field is missing or has the wrong shape
        AlgebraInvalid: If the structure constants do not define an algebra
        IdealInvalid: If the ideal is not a square-zero two-sided ideal
    """
    if not isinstance(data, dict):
        raise SchemaViolation("<root>", "expected a JSON object")
    for field in REQUIRED_FIELDS:
        if field not in data:
            raise SchemaViolation(field)

    name = data["name"]
    if not isinstance(name, str) or not name:
        raise SchemaViolation("name", "expected a nonempty string")
    p = data["p"]
    if not isinstance(p, int) or isinstance(p, bool):
        raise SchemaViolation("p", "expected an integer")
    basis = data["basis"]
    labels_ok = isinstance(basis, list) and all(isinstance(b, str) for b in basis)
    if not labels_ok or not basis:
        raise SchemaViolation("basis", "expected a nonempty list of labels")
    if not isinstance(data["mul"], list):
        raise SchemaViolation("mul", "expected a list of [i, j, k, c] entries")
    mul = [_int_list(entry, "mul") for entry in data["mul"]]
    if any(len(entry) != 4 for entry in mul):
        raise SchemaViolation("mul", "every entry must be [i, j, k, c]")
    unit = _int_list(data["unit"], "unit")
    if len(unit) != len(basis):
        raise SchemaViolation("unit", f"expected {len(basis)} coefficients")
    if not isinstance(data["ideal"], list):
        raise SchemaViolation("ideal", "expected a list of vectors")
    ideal = [_int_list(vector, "ideal") for vector in data["ideal"]]
    if any(len(vector) != len(basis) for vector in ideal):
        raise SchemaViolation("ideal", f"every vector needs {len(basis)} coefficients")

    options = data.get("options", {})
    if not isinstance(options, dict):
        raise SchemaViolation("options", "expected an object")
    for key, value in options.items():
        if key not in OPTION_FIELDS:
            raise SchemaViolation(f"options.{key}", "unknown option")
        _check_option(key, value, f"options.{key}")

    algebra = algebra_from_quadruples(p, basis, mul, unit, name)
    ext = square_zero_extension(algebra, ideal)
    return InstanceConfig(
        name,
        p,
        tuple(basis),
        tuple(tuple(entry) for entry in mul),
        tuple(unit),
        tuple(tuple(vector) for vector in ideal),
        dict(options),
        ext,
        path,
    )


def _check_option(key: str, value, field: str) -> None:
    minimum = OPTION_MINIMUMS[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise SchemaViolation(field, f"expected an integer >= {minimum}, got {value!r}")


def parse_config(path) -> InstanceConfig:
    """
    Load and validate an instance file.

    Args:
        path (str | Path): JSON instance file

    Returns:
        InstanceConfig: The validated instance

    Raises:
        FileNotFoundError: If the file does not exist
        ParseError: If the file is not valid JSON, with the offending line
        SchemaViolation: If a field is missing or malformed
        AlgebraInvalid: If the algebra is invalid
        IdealInvalid: If the ideal is invalid
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from exc
    return config_from_dict(data, path)


def pinned_instance_path(name: str) -> Path:
    """Location of a shipped fixture, e.g. dual_numbers_f2."""
    return PROJECT_ROOT / WORKBENCH_CONFIG["instances"]["directory"] / f"{name}.json"


def resolve_options(
    config: InstanceConfig,
    dim_bound: int | None = None,
    cap: int | None = None,
    seed: int | None = None,
    samples: int | None = None,
    defaults: dict | None = None,
) -> RunOptions:
    """
    Combine run options; command line beats environment beats instance beats defaults.

    Only the seed has an environment variable.

    Raises:
        SchemaViolation: If a command line or environment value is out of range
    """
    defaults = defaults or WORKBENCH_CONFIG
    instance = config.options

    def pick(cli_value, key, fallback):
        if cli_value is not None:
            if key in instance and instance[key] != cli_value:
                warnings.warn(
                    f"Instance option {key}={instance[key]} overridden by {cli_value}",
                    stacklevel=3,
                )
            return cli_value
        return instance.get(key, fallback)

    env_seed = seed_override()
    if seed is None and env_seed is not None:
        seed = env_seed
    given = {"dim_bound": dim_bound, "cap": cap, "seed": seed, "samples": samples}
    for key, value in given.items():
        if value is not None:
            _check_option(key, value, "--" + key.replace("_", "-"))
    return RunOptions(
        dim_bound=pick(
            dim_bound, "dim_bound", default_dim_bound(config.algebra.dim, defaults)
        ),
        cap=pick(cap, "cap", defaults["enumeration"]["cap"]),
        seed=pick(seed, "seed", defaults["sampling"]["seed"]),
        samples=pick(samples, "samples", defaults["sampling"]["samples"]),
    )
