import pytest

from pemc_casimir import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Each importable kernel module in turn."""
    return kernels.get_backend(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import summary_lines
    except ImportError:
        return
    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
