"""
Utilities Package

This package provides the configuration loaders and the error hierarchy
shared by every part of the workbench.
"""

from .config_utils import (
    WORKBENCH_CONFIG,
    default_dim_bound,
    load_environment,
    load_workbench_config,
    seed_override,
)

__all__ = [
    "WORKBENCH_CONFIG",
    "default_dim_bound",
    "load_environment",
    "load_workbench_config",
    "seed_override",
]
