import os
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

# Ensure src is in path for testing if not installed
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from powergraph.core.graph import Graph, build_graph
from powergraph.core.power import add_loops
from powergraph.generators.layered import build_gm, build_hm
from powergraph.system.settings import load_settings


def path_graph(n: int, loops_allowed: bool = False) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)]
    if loops_allowed:
        edges += [(i, i) for i in range(n)]
    return build_graph(n, edges, loops_allowed=loops_allowed)


def cycle_graph(n: int, loops_allowed: bool = False) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    if loops_allowed:
        edges += [(i, i) for i in range(n)]
    return build_graph(n, edges, loops_allowed=loops_allowed)


def complete_graph(n: int, loops_allowed: bool = False) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if loops_allowed:
        edges += [(i, i) for i in range(n)]
    return build_graph(n, edges, loops_allowed=loops_allowed)


def random_graph(rng: np.random.Generator, n: int, density: float, loops_allowed: bool = False) -> Graph:
    upper = np.triu(rng.random((n, n)) < density, k=0 if loops_allowed else 1)
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(upper))]
    return build_graph(n, edges, loops_allowed=loops_allowed)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Cada teste começa com as configurações padrão do YAML."""
    for key in (
        "POWERGRAPH_THREADS",
        "POWERGRAPH_ATTEMPT_BUDGET",
        "POWERGRAPH_EXHAUSTIVE_LIMIT",
        "POWERGRAPH_SAMPLE_SIZE",
        "POWERGRAPH_DEFAULT_SEED",
        "POWERGRAPH_OUTPUT_DIR",
    ):
        monkeypatch.delenv(key, raising=False)
    load_settings.cache_clear()
    yield
    load_settings.cache_clear()


@pytest.fixture
def gm_7_5():
    return build_gm(7, 5)


@pytest.fixture
def hm_6_1():
    return build_hm(6, 1)


@pytest.fixture
def loopy_h1(hm_6_1):
    return add_loops(hm_6_1[0])


@pytest.fixture
def loopy_h2():
    return add_loops(build_hm(6, 2)[0])


@st.composite
def graphs(draw, max_n: int = 12, loops: bool | None = None):
    """Grafos pequenos arbitrários, com ou sem laços."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    loops_allowed = draw(st.booleans()) if loops is None else loops
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    raw = draw(st.lists(pairs, max_size=3 * n))
    edges = [(u, v) for u, v in raw if loops_allowed or u != v]
    return build_graph(n, edges, loops_allowed=loops_allowed)
