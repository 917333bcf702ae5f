import pytest
from hypothesis import settings, strategies as st

from irreg.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=9, min_m=0):
    while min_n * (min_n - 1) // 2 < min_m:
        min_n += 1
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_m, len(pairs)))
                  if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    def record(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        if not ok:
            pytest.fail(line, pytrace=False)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def exhaustive7():
    """One pass over every labeled graph with n <= 7 for all non-search entries."""
    from irreg.registry import registry
    from irreg.verifier import hunt_many

    ids = [c.id for c in registry() if not c.expect_violations]
    return hunt_many(ids, 7, max_violations=25)
