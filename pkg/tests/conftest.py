import pytest
from hypothesis import HealthCheck, settings

from retic import corpus

settings.register_profile("retic", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("retic")


@pytest.fixture(scope="session")
def z4():
    return corpus.zn(4)


@pytest.fixture(scope="session")
def z6():
    return corpus.zn(6)


@pytest.fixture(scope="session")
def z12():
    return corpus.zn(12)


@pytest.fixture(scope="session")
def lax():
    return corpus.lax_chain()


@pytest.fixture(scope="session")
def strict3():
    return corpus.strict_chain()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
