import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def device():
    from nanofet.geometry import DeviceSpec, assemble_device

    return assemble_device(DeviceSpec())


@pytest.fixture(scope="session")
def lonsdaleite_block():
    from nanofet.geometry import LonsdaleiteSpec, build_lonsdaleite

    return build_lonsdaleite(LonsdaleiteSpec((3, 3, 3)))


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
