"""Shared fixtures: the pinned instances and their K0 contexts."""

import os

import hypothesis
import numpy as np
import pytest

from src.algebra_core.algebra import algebra_from_quadruples, square_zero_extension
from src.algebra_core.lattice import simple_catalogue
from src.auslander.auslander_algebra import build_auslander_algebra
from src.cli.config import parse_config, pinned_instance_path
from src.grothendieck.classes import build_k0_context

hypothesis.settings.register_profile(
    "ci", max_examples=30, derandomize=True, deadline=None, print_blob=True
)
hypothesis.settings.register_profile(
    "dev", max_examples=10, derandomize=True, deadline=None
)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

CAP = 1_000_000
PINNED = ("dual_numbers_f2", "fat_point_f2", "triangular2_f2")


@pytest.fixture(scope="session")
def configs():
    return {name: parse_config(pinned_instance_path(name)) for name in PINNED}


@pytest.fixture(scope="session")
def dual(configs):
    return configs["dual_numbers_f2"].ext


@pytest.fixture(scope="session")
def fat_point(configs):
    return configs["fat_point_f2"].ext


@pytest.fixture(scope="session")
def triangular(configs):
    return configs["triangular2_f2"].ext


@pytest.fixture(scope="session", params=PINNED)
def ext(request, configs):
    return configs[request.param].ext


@pytest.fixture(scope="session")
def contexts(configs):
    return {name: build_k0_context(config.ext, CAP) for name, config in configs.items()}


@pytest.fixture(scope="session")
def dual_ctx(contexts):
    return contexts["dual_numbers_f2"]


@pytest.fixture(scope="session")
def semisimple():
    """F2 x F2 with the zero ideal."""
    algebra = algebra_from_quadruples(
        2, ["e", "f"], [[0, 0, 0, 1], [1, 1, 1, 1]], [1, 1], "F2xF2"
    )
    return square_zero_extension(algebra, [])


@pytest.fixture(scope="session")
def dual_aus(dual):
    return build_auslander_algebra(dual)


@pytest.fixture(scope="session")
def dual_simple(dual):
    """The simple module S of F2[t]/t^2 and the simple of A/I."""
    return simple_catalogue(dual.algebra, CAP).simples[0], simple_catalogue(
        dual.b_algebra, CAP
    ).simples[0]


@pytest.fixture
def rng():
    return np.random.default_rng(0)
