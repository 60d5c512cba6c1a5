import pytest

from cyclofield.galois import new_context, subgroup_from_generators
from cyclofield.gf2poly import parse_poly

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def M():
    return parse_poly("T^4+T+1")


@pytest.fixture(scope="session")
def ctx5(M):
    return new_context(M, 5)


@pytest.fixture(scope="session")
def ctx1(M):
    return new_context(M, 1)


@pytest.fixture(scope="session")
def R(ctx5):
    """Fixing groups of R1..R4 in Z15 x Z5, keyed 1..4."""
    return {j: subgroup_from_generators(15, 5, [(a, 1), (5, 0)])
            for j, a in ((1, 3), (2, 12), (3, 6), (4, 9))}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title}")
