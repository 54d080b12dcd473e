from __future__ import annotations

import sys

import pytest
from hypothesis import strategies as st

from cott.graphcore import Graph

NET_VERTICES = ["u", "x", "y", "z", "v", "w"]
NET_EDGES = [("u", "x"), ("x", "y"), ("x", "z"), ("y", "z"), ("y", "v"), ("z", "w")]


def net_graph() -> Graph:
    return Graph.from_labeled_edges(NET_VERTICES, NET_EDGES)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@pytest.fixture
def net() -> Graph:
    return net_graph()


def battery() -> list[tuple[str, Graph, bool]]:
    """Named fixtures with their expected co-TT status."""
    from cott.families import (
        family_Hn,
        family_Hstar,
        family_Tn,
        graph_H3prime,
        graph_T,
        graph_T0,
        graph_W,
        graph_W1,
        sun,
    )
    from cott.graphcore import delete_vertex

    w1 = graph_W1()
    x = w1.index_of("x")
    cases: list[tuple[str, Graph, bool]] = [
        ("W1", w1, True),
        ("W1+xx1", w1.with_edges([(x, w1.index_of("x1"))]), True),
        ("W1+xx5", w1.with_edges([(x, w1.index_of("x5"))]), True),
    ]
    cases += [(f"T{n}", family_Tn(n), True) for n in range(1, 5)]
    cases += [(f"H{n}", family_Hn(n), True) for n in range(2, 5)]
    for k in (4, 5):
        s = sun(k)
        cases += [(f"S{k}-{s.label(v)}", delete_vertex(s, v), True) for v in range(s.n)]
    cases += [
        ("T", graph_T(), False),
        ("W", graph_W(), False),
        ("T0", graph_T0(), False),
        ("H*2", family_Hstar(2), False),
        ("H*3", family_Hstar(3), False),
        ("H'3", graph_H3prime(), False),
        ("S3", sun(3), False),
        ("S4", sun(4), False),
        ("S5", sun(5), False),
        ("C4", cycle_graph(4), False),
        ("C5", cycle_graph(5), False),
    ]
    return cases


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
