import pytest

from omega_point import _kernels

ACCEPTANCE_LINES = []


@pytest.fixture(params=_kernels.BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
