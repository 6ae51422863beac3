import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bangbang_qed import EwlState, Fock, PhysicalParams, PulseSchedule, validate  # noqa: E402

ACCEPTANCE_RESULTS = {}


def make_scenario(a=1.0, mu=math.sqrt(0.5), nu=-math.sqrt(0.5), g=1.0, omega=1.0, delta=0.0,
                  T=None, field1=None, field2=None):
    pulses = PulseSchedule.none() if T is None else PulseSchedule.ideal(T)
    return validate(PhysicalParams(g, omega, delta), pulses,
                    (field1 or Fock(0), field2 or Fock(0)), EwlState(a, mu, nu))


@pytest.fixture
def bell_vacuum():
    return make_scenario()


@pytest.fixture
def acceptance_record():
    def record(key, passed, detail):
        ACCEPTANCE_RESULTS[key] = (passed, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: [int(p) if p.isdigit() else p
                                                         for p in k.replace("-", " ").split()]):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {key}: {detail}")
