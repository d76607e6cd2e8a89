from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from perfdiv.canon import enumerate_up_to
from perfdiv.graph import Graph, bits

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE: dict[str, str] = {}


# -- acceptance summary lines --------------------------------------------------

def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): acceptance criterion with a pass/fail summary line")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.user_properties and dict(report.user_properties).get("acceptance")
    if name:
        _ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"


def pytest_runtest_setup(item):
    m = item.get_closest_marker("acceptance")
    if m:
        item.user_properties.append(("acceptance", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{status}  {name}")


# -- corpora ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def corpus(n: int) -> tuple[Graph, ...]:
    """All graphs of order 1..n, one per isomorphism class."""
    return tuple(enumerate_up_to(n))


@pytest.fixture(scope="session")
def corpus7() -> tuple[Graph, ...]:
    return corpus(7)


# -- conversions and brute-force oracles ---------------------------------------

def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_clique_number(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        k = mask.bit_count()
        if k > best and all(g.adjacent(u, v) for u, v in combinations(bits(mask), 2)):
            best = k
    return best


def brute_chromatic_number(g: Graph) -> int:
    n = g.n
    if n == 0:
        return 0

    def colorable(k: int) -> bool:
        col = [-1] * n

        def go(v: int) -> bool:
            if v == n:
                return True
            for c in range(k):
                if all(col[u] != c for u in range(v) if g.adjacent(u, v)):
                    col[v] = c
                    if go(v + 1):
                        return True
            col[v] = -1
            return False

        return go(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def labeled_class_count(n: int) -> int:
    """Isomorphism classes on n labelled vertices, counted by orbit marking."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen = bytearray(1 << len(pairs))
    classes = 0
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        classes += 1
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        for p in perms:
            img = 0
            for u, v in edges:
                a, b = p[u], p[v]
                img |= 1 << index[(a, b) if a < b else (b, a)]
            seen[img] = 1
    return classes


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])
