import pytest

from crossbound.generators import complete, complete_bipartite, petersen


@pytest.fixture(scope="session")
def named():
    """Named graphs with their crossing numbers."""
    return {
        "K4": (complete(4), 0),
        "K5": (complete(5), 1),
        "K3,3": (complete_bipartite(3, 3), 1),
        "K3,4": (complete_bipartite(3, 4), 2),
        "Petersen": (petersen(), 2),
        "K6": (complete(6), 3),
    }


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
