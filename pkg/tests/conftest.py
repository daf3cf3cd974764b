import pytest

from symqm.liealg import build_su_basis

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def su2():
    return build_su_basis(2)


@pytest.fixture(scope="session")
def su3():
    return build_su_basis(3)


@pytest.fixture(scope="session")
def su4():
    return build_su_basis(4)


@pytest.fixture(scope="session")
def bases(su2, su3, su4):
    return {2: su2, 3: su3, 4: su4}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
