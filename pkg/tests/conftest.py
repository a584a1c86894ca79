import random

from hypothesis import strategies as st

from singlink.graph import PlumbingGraph


def random_tree(rng: random.Random, size: int, lo: int = -7, hi: int = -2) -> PlumbingGraph:
    ids = [f"v{i}" for i in range(size)]
    edges = [(ids[rng.randrange(i)], ids[i]) for i in range(1, size)]
    return PlumbingGraph.from_lists([(i, rng.randint(lo, hi)) for i in ids], edges)


@st.composite
def trees(draw, max_size: int = 8, lo: int = -7, hi: int = -2):
    size = draw(st.integers(1, max_size))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, size)]
    weights = [draw(st.integers(lo, hi)) for _ in range(size)]
    ids = [f"v{i}" for i in range(size)]
    return PlumbingGraph.from_lists(zip(ids, weights),
                                    [(ids[p], ids[i + 1]) for i, p in enumerate(parents)])


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
