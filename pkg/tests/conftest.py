from pathlib import Path

import pytest

from sentimix import parse_conll

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def mini_train():
    return parse_conll(DATA_DIR.joinpath("mini_train.conll").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def mini_eval():
    return parse_conll(DATA_DIR.joinpath("mini_eval.conll").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def preprocess_fixture_corpus():
    return parse_conll(DATA_DIR.joinpath("preprocess_fixture.conll").read_text(encoding="utf-8"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion test."""
    reports = []
    for outcome in ("passed", "failed", "error"):
        reports.extend(terminalreporter.stats.get(outcome, []))
    acceptance = sorted(
        (r for r in reports if "test_acceptance" in r.nodeid and r.when in ("call", "setup")),
        key=lambda r: r.nodeid,
    )
    if not acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for report in acceptance:
        if report.when == "setup" and report.outcome == "passed":
            continue
        name = report.nodeid.split("::")[-1]
        verdict = "PASS" if report.outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
