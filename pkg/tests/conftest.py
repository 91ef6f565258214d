import random

import pytest
from hypothesis import strategies as st

from kshell_attack.datasets import is_available, load_dataset
from kshell_attack.graph import Graph

# Six-node graph consistent with the motivating example: node 3 sits in the
# 1-shell, and swapping 1-3, 4-6 for 1-4, 3-6 closes the cycle 3-4-5-6.
FIG1_EDGES = [(1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (5, 6)]


def labelled(edges) -> Graph:
    """Graph on 1-based labels, mapped to ids label-1."""
    n = max(max(e) for e in edges)
    return Graph(n, [(a - 1, b - 1) for a, b in edges], [str(i) for i in range(1, n + 1)])


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def gnm(n: int, m: int, seed: int) -> Graph:
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, rng.sample(pairs, m))


def triangle() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@st.composite
def graphs(draw, max_nodes=14):
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture(scope="session")
def karate() -> Graph:
    return load_dataset("karate")


def dataset_or_fail(name: str) -> Graph:
    """Load a registered dataset; a missing file is a test failure, not a skip."""
    if not is_available(name):
        pytest.fail(f"dataset {name!r} is not available; set KSHELL_DATA_DIR to a directory holding it")
    return load_dataset(name)


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def criterion(label: str, ok: bool, detail: str = "") -> None:
    """Record one acceptance check for the summary, then assert it."""
    ACCEPTANCE_LINES.append((label, bool(ok), detail))
    assert ok, f"{label}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
