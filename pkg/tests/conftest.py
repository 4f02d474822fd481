from fractions import Fraction

from hypothesis import strategies as st

from graphshare import GeneratorSpec, WeightedGraph, random_connected

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path_graph(weights) -> WeightedGraph:
    ws = [Fraction(w) for w in weights]
    return WeightedGraph(ws, [(i, i + 1) for i in range(len(ws) - 1)])


def cycle_graph(weights) -> WeightedGraph:
    ws = [Fraction(w) for w in weights]
    n = len(ws)
    return WeightedGraph(ws, [(i, (i + 1) % n) for i in range(n)])


@st.composite
def connected_graphs(draw, max_size: int = 9):
    size = draw(st.integers(min_value=1, max_value=max_size))
    seed = draw(st.integers(min_value=0, max_value=2**16))
    zero = draw(st.sampled_from([0.0, 0.3, 0.6]))
    spec = GeneratorSpec(
        family="randomConnected", size=size, seed=seed, zero_prob=zero
    )
    return random_connected(spec)
