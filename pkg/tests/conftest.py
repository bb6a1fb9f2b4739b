import pytest

from w22quant.mutations import set_mutation


@pytest.fixture(autouse=True)
def _no_mutation():
    # every test starts and ends on the unmutated core
    set_mutation(None)
    yield
    set_mutation(None)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
