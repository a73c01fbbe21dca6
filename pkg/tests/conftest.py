import math
import sys

import pytest
from hypothesis import settings

from fourier_besov import extremals

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def dilated_p4():
    """Seven dyadic dilates (j = 0..6) normalised for L_4 on a 2^16-point grid."""
    return extremals.dilated_family_on_grid(
        extremals.default_dilation_profile(), 4, 1, 2**16, 128.0, range(7)
    )


@pytest.fixture(scope="session")
def modulation_base():
    return extremals.default_modulation_base(1, N=2048, L_x=32 * math.pi)


@pytest.fixture(scope="session")
def modulated_p2(modulation_base):
    return extremals.modulated_family(modulation_base, range(9), p=2)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS):
        terminalreporter.write_line(line)
