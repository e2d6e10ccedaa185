import json

import pytest

from src.cli import suites
from src.cli.config import pinned_instance_path, resolve_options
from src.cli.main import EXIT_BUDGET, EXIT_FAIL, EXIT_INVALID, EXIT_PASS, main
from src.cli.suites import SUITES, Workbench, run_suite, select_suites
from src.utils.errors import InvalidInput, VerificationFailure

pytestmark = pytest.mark.filterwarnings("ignore::UserWarning")

DUAL = str(pinned_instance_path("dual_numbers_f2"))


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_validate(capsys):
    assert main(["validate", DUAL, "--format", "json"]) == EXIT_PASS
    payload = _json(capsys)
    assert payload["status"] == "valid"
    assert payload["dims"] == {"A": 2, "I": 1, "B": 1}


def test_auslander(capsys):
    assert main(["auslander", DUAL, "--format", "json"]) == EXIT_PASS
    payload = _json(capsys)
    assert payload["dim"] == 5
    assert payload["offsets"] == {"11": 0, "12": 2, "21": 3, "22": 4}


def test_k0(capsys):
    assert main(["k0", DUAL, "--format", "json", "--dim-bound", "2"]) == EXIT_PASS
    assert _json(capsys)["ranks"] == {"A": 1, "B": 1, "C": 2}


def test_check_passes(capsys):
    argv = ["check", DUAL, "--format", "json", "--dim-bound", "2"]
    argv += ["--suite", "k0-devissage"]
    assert main(argv + ["--suite", "k0-theta"]) == EXIT_PASS
    payload = _json(capsys)
    assert payload["status"] == "pass"
    assert [c["name"] for c in payload["checks"]] == ["k0-devissage", "k0-theta"]


def test_sampled_suites_pass(capsys):
    argv = ["check", DUAL, "--format", "json", "--samples", "3", "--seed", "11"]
    for name in ("axioms", "functors", "torsion"):
        argv += ["--suite", name]
    assert main(argv) == EXIT_PASS
    assert _json(capsys)["seed"] == 11


def test_report_to_file(tmp_path, capsys):
    output = tmp_path / "reports" / "dual.txt"
    argv = ["report", DUAL, "--dim-bound", "2", "--suite", "k0-sod"]
    argv += ["--output", str(output)]
    assert main(argv) == EXIT_PASS
    assert output.read_text(encoding="utf-8").startswith("instance: dual_numbers_f2")
    assert "Report written" in capsys.readouterr().err


def test_corrupted_instance(tmp_path, capsys):
    path = tmp_path / "corrupted.json"
    path.write_text(
        json.dumps(
            {
                "name": "corrupted",
                "p": 2,
                "basis": ["1", "x", "y"],
                "mul": [
                    [0, 0, 0, 1],
                    [0, 1, 1, 1],
                    [1, 0, 1, 1],
                    [0, 2, 2, 1],
                    [2, 0, 2, 1],
                    [1, 1, 2, 1],
                    [1, 2, 1, 1],
                ],
                "unit": [1, 0, 0],
                "ideal": [[0, 0, 1]],
            }
        ),
        encoding="utf-8",
    )
    assert main(["validate", str(path)]) == EXIT_INVALID
    assert "Invalid input" in capsys.readouterr().err


def test_missing_instance(tmp_path):
    assert main(["validate", str(tmp_path / "absent.json")]) == EXIT_INVALID


def test_budget_exceeded(capsys):
    assert main(["k0", DUAL, "--cap", "1"]) == EXIT_BUDGET
    assert "Budget exceeded" in capsys.readouterr().err


@pytest.mark.parametrize("samples", ["-1", "0"])
def test_sampled_suites_need_samples(capsys, samples):
    argv = ["check", DUAL, "--suite", "axioms", "--samples", samples]
    assert main(argv) == EXIT_INVALID
    assert "--samples" in capsys.readouterr().err


def test_unknown_suite_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["check", DUAL, "--suite", "nonsense"])


def test_failure_gives_exit_one(monkeypatch, capsys):
    def failing(bench, rng):
        raise VerificationFailure("k0-sod", "forced", {"phi": [[1]]})

    monkeypatch.delenv("DEVISSAGE_SEED", raising=False)
    monkeypatch.setitem(suites.SUITE_FUNCTIONS, "k0-sod", failing)
    assert main(["check", DUAL, "--format", "json", "--suite", "k0-sod"]) == EXIT_FAIL
    check = _json(capsys)["checks"][0]
    assert check["status"] == "fail"
    assert check["witness"] == {"phi": [[1]], "seed": 0}


def test_failure_outside_a_suite(monkeypatch, capsys):
    def failing(ctx, dim_bound):
        raise VerificationFailure("k0-sod", "adjoint classes are singular")

    monkeypatch.setattr("src.cli.main.k0_summary", failing)
    assert main(["k0", DUAL, "--dim-bound", "2"]) == EXIT_FAIL
    assert "Check failed: k0-sod" in capsys.readouterr().err


def test_suite_selection():
    assert select_suites("all") == list(SUITES)
    assert select_suites(["k0-theta", "axioms"]) == ["axioms", "k0-theta"]
    with pytest.raises(InvalidInput):
        select_suites(["nonsense"])


def test_run_suite_reports_progress(configs):
    config = configs["dual_numbers_f2"]
    bench = Workbench(config, resolve_options(config, dim_bound=2))
    lines = []
    results = run_suite(bench, "k0-sod", lines.append)
    assert [r.name for r in results] == ["k0-sod"] and results[0].passed
    assert len(lines) == 1
