"""
Configuration Utilities Module

This module provides shared functionality for loading the workbench
defaults, the optional .env file and the seed override.
"""

import os
import warnings
from pathlib import Path

import yaml
from dotenv import load_dotenv

# Get project root directory
PROJECT_ROOT = Path(__file__).parent.parent.parent.resolve()

SEED_VARIABLE = "DEVISSAGE_SEED"


def load_workbench_config(config_path=None):
    """
    Load workbench defaults from YAML file.

    Args:
        config_path (Path, optional): Alternative location of the YAML file

    Returns:
        dict: Configuration dictionary

    Raises:
        FileNotFoundError: If workbench.yml is not found
    """
    default_path = PROJECT_ROOT / "config" / "workbench.yml"
    config_path = Path(config_path) if config_path else default_path

    if not config_path.exists():
        raise FileNotFoundError(f"Workbench config file not found at {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def load_environment():
    """
    Load environment variables from .env file.

    The .env file is optional; DEVISSAGE_SEED may also be set directly
    in the environment.
    """
    env_path = PROJECT_ROOT / ".env"

    if not env_path.exists():
        warnings.warn(
            ".env file not found. Using the process environment as is.",
            stacklevel=2,
        )
        return

    load_dotenv(env_path)


def seed_override():
    """
    Read the seed override from the environment.

    Returns:
        int | None: The seed, or None if DEVISSAGE_SEED is unset or empty

    Raises:
        ValueError: If DEVISSAGE_SEED is set but not an integer
    """
    raw = os.getenv(SEED_VARIABLE)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_VARIABLE} must be an integer, got {raw!r}")


def default_dim_bound(algebra_dim, config=None):
    """
    Pick the oracle dimension bound for an algebra of the given dimension.

    Args:
        algebra_dim (int): Dimension of the algebra whose modules are enumerated
        config (dict, optional): Loaded workbench config

    Returns:
        int: The dimension bound
    """
    config = config or WORKBENCH_CONFIG
    bounds = config["enumeration"]["dim_bound"]
    if algebra_dim <= bounds["small_algebra_dim"]:
        return bounds["small"]
    return bounds["large"]


# Load configuration once at module level
WORKBENCH_CONFIG = load_workbench_config()
