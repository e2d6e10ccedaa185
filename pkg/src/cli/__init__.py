"""
CLI Package

Instance configuration, suite orchestration, report rendering and the
devissage command.
"""

from .config import InstanceConfig, RunOptions, parse_config, resolve_options
from .report import Report, emit_report
from .suites import SUITES, CheckResult, Workbench, run_suite

__all__ = [
    "CheckResult",
    "InstanceConfig",
    "Report",
    "RunOptions",
    "SUITES",
    "Workbench",
    "emit_report",
    "parse_config",
    "resolve_options",
    "run_suite",
]
