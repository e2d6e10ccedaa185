"""
Command line entry point.

Verbs: validate, check, k0, auslander and report. Reports go to stdout
(or --output); progress lines and errors go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from src.auslander.auslander_algebra import build_auslander_algebra
from src.cli.config import InstanceConfig, parse_config, resolve_options
from src.cli.report import FORMATS, Report, emit_report, render
from src.cli.suites import SUITES, Workbench, run_suite
from src.grothendieck.checks import k0_summary
from src.utils.config_utils import WORKBENCH_CONFIG, load_environment
from src.utils.errors import (
    EnumerationBudgetExceeded,
    InvalidInput,
    VerificationFailure,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _progress(line: str) -> None:
    print(line, file=sys.stderr)


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", type=Path, help="instance JSON file")
    common.add_argument("--seed", type=int, help="random seed (beats DEVISSAGE_SEED)")
    common.add_argument(
        "--dim-bound", type=int, help="largest module dimension enumerated"
    )
    common.add_argument("--cap", type=int, help="enumeration budget")
    common.add_argument("--samples", type=int, help="random samples per property suite")
    common.add_argument(
        "--format", choices=FORMATS, default=WORKBENCH_CONFIG["report"]["format"]
    )
    common.add_argument(
        "--timing", action="store_true", help="include wall time per check"
    )

    parser = argparse.ArgumentParser(
        prog="devissage", description="Dévissage workbench for square-zero extensions."
    )
    verbs = parser.add_subparsers(dest="verb", required=True)
    verbs.add_parser(
        "validate", parents=[common], help="parse and validate an instance"
    )
    suite_verbs = (
        ("check", "run check suites"),
        ("report", "run suites and write a report"),
    )
    for verb, text in suite_verbs:
        sub = verbs.add_parser(verb, parents=[common], help=text)
        sub.add_argument(
            "--suite",
            action="append",
            choices=list(SUITES) + ["all"],
            help="suite to run (repeatable, default all)",
        )
        sub.add_argument(
            "--output", type=Path, help="write the report here instead of stdout"
        )
    verbs.add_parser("k0", parents=[common], help="print K0 ranks and maps")
    verbs.add_parser("auslander", parents=[common], help="print the algebra D")
    return parser.parse_args(argv)


def _bench(config: InstanceConfig, args: argparse.Namespace) -> Workbench:
    options = resolve_options(
        config,
        dim_bound=args.dim_bound,
        cap=args.cap,
        seed=args.seed,
        samples=args.samples,
    )
    return Workbench(config, options)


def _validate_payload(config: InstanceConfig) -> dict:
    ext = config.ext
    return {
        "instance": config.name,
        "status": "valid",
        "p": config.p,
        "dims": {"A": ext.algebra.dim, "I": ext.ideal.dim, "B": ext.b_algebra.dim},
        "basis": list(config.basis),
    }


def _auslander_payload(config: InstanceConfig) -> dict:
    aus = build_auslander_algebra(config.ext)
    D = aus.algebra
    consts = D.structure_constants
    products = [
        [i, j, k, int(consts[i, j, k])]
        for i in range(D.dim)
        for j in range(D.dim)
        for k in range(D.dim)
        if consts[i, j, k]
    ]
    return {
        "instance": config.name,
        "dim": D.dim,
        "basis": list(D.basis_labels),
        "offsets": aus.offsets,
        "unit": [int(x) for x in D.unit],
        "products": products,
    }


def _write(data: bytes, output: Path | None) -> None:
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_bytes(data)
    _progress(f"Report written to {output}")


def run(args: argparse.Namespace) -> int:
    config = parse_config(args.config)
    _progress(f"Loaded instance {config.name} from {args.config}")
    if args.verb == "validate":
        _write(render(_validate_payload(config), args.format), None)
        return EXIT_PASS
    if args.verb == "auslander":
        _write(render(_auslander_payload(config), args.format), None)
        return EXIT_PASS

    bench = _bench(config, args)
    if args.verb == "k0":
        summary = k0_summary(bench.ctx, bench.options.dim_bound)
        payload = {"instance": config.name, **summary}
        _write(render(payload, args.format), None)
        return EXIT_PASS

    results = run_suite(bench, args.suite or "all", _progress)
    report = Report(config.name, bench.options, tuple(results))
    _write(emit_report(report, args.format, args.timing), args.output)
    _progress(f"{len(results)} checks, status {report.status}")
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    load_environment()
    try:
        return run(args)
    except FileNotFoundError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidInput as exc:
        print(f"Invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EnumerationBudgetExceeded as exc:
        print(f"Budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationFailure as exc:
        print(f"Check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
