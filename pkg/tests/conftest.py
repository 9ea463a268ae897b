import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cpbreak.cayley_purser import cp_key_from_params, cp_keygen
from cpbreak.demos import CP_A, CP_C, CP_P, CP_Q, CP_R, SLV_A, SLV_C, SLV_P, SLV_Q, SLV_R
from cpbreak.slavin import slavin_key_from_params


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture(scope="session")
def ex1_keys():
    return cp_key_from_params(CP_P, CP_Q, CP_A, CP_C, CP_R)


@pytest.fixture(scope="session")
def ex3_keys():
    return slavin_key_from_params(SLV_P, SLV_Q, SLV_A, SLV_C, SLV_R)


@pytest.fixture(scope="session")
def cp64_keys():
    rng = random.Random(64)
    return [cp_keygen(64, rng) for _ in range(10)]


def pytest_terminal_summary(terminalreporter):
    from _report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[k])
