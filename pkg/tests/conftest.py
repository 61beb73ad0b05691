import io
import time
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from morse_carnot.spectra import EngineParams, validate_params
from morse_carnot.cli import main
from morse_carnot.verify import parse_report

# derandomized so the suite is reproducible run to run
settings.register_profile("default", max_examples=30, deadline=None, derandomize=True,
                          database=None)
settings.load_profile("default")

# filled by test_acceptance.py, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
SUITE_BUDGET_S = 5.0
_started = {}


@st.composite
def valid_params(draw):
    a = draw(st.floats(0.1, 10.0))
    d0 = draw(st.floats(0.5, 50.0))
    l1 = draw(st.floats(0.75 * a / d0 * 1.05, 0.75 * a / d0 * 1.05 + 20.0))
    r = draw(st.floats(3.05, 30.0))
    vbar = draw(st.floats(0.1, 10.0))
    return validate_params(EngineParams(a=a, d0=d0, l1=l1, r=r, vbar=vbar))


@pytest.fixture(scope="session")
def unit_params():
    return validate_params(EngineParams(a=1.0, d0=1.0, l1=1.0, r=6.0, vbar=1.0))


@pytest.fixture(scope="session")
def default_verify_run():
    """(exit code, JSON report) of ``verify --json`` with default flags, run once per session."""
    out = io.StringIO()
    code = main(["verify", "--json"], out=out)
    return code, out.getvalue()


@pytest.fixture(scope="session")
def default_ledger(default_verify_run):
    return parse_report(default_verify_run[1])


def _full_run(config) -> bool:
    if config.option.keyword or config.option.markexpr:
        return False
    here = Path(__file__).resolve().parent
    return [Path(config.rootpath, a).resolve() for a in config.args] == [here]


def pytest_sessionstart(session):
    _started["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - _started["t"]
    tr = terminalreporter
    tr.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        tr.write_line(line)
    # criterion 10 can only be judged once the whole session has run
    if not _full_run(tr.config):
        tr.write_line(f"[INFO] criterion 10: partial run, {elapsed:.2f} s (budget applies to full suite)")
        return
    status = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    tr.write_line(f"[{status}] criterion 10: full suite wall time {elapsed:.2f} s < {SUITE_BUDGET_S} s")


def pytest_sessionfinish(session, exitstatus):
    if not ACCEPTANCE_LINES or not _full_run(session.config):
        return
    if time.perf_counter() - _started["t"] >= SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES
