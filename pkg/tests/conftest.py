import pytest
from hypothesis import strategies as st

from flamekit import Edge, RootedDigraph, parse_digraph

G1_TEXT = """\
# three vertices, two parallel edges into a
root r
edge e1 r a
edge e2 r a
edge e3 a b
edge e4 r b
"""
C1_TEXT = "root r\nedge e1 r a\nedge e2 a b\nedge e3 b a\n"
T1_TEXT = "root r\nedge e1 r v\n"
# cyclic instance whose maximal element {e1,e2,e3} of G(D) is not large
BAD_CYCLIC_TEXT = """\
root r
edge e1 r v3
edge e2 v1 v2
edge e3 v2 v1
edge e4 v3 v1
edge e5 v3 v2
"""


def truncated_backward_path(k):
    """Finite piece of the backward-infinite example: r->w, w->v_i, v_{i+1}->v_i."""
    edges = [Edge("rw", "r", "w")]
    edges += [Edge(f"w{i}", "w", f"v{i}") for i in range(k + 1)]
    edges += [Edge(f"b{i}", f"v{i + 1}", f"v{i}") for i in range(k)]
    return RootedDigraph.from_edges("r", edges)


@pytest.fixture
def G1():
    return parse_digraph(G1_TEXT)


@pytest.fixture
def C1():
    return parse_digraph(C1_TEXT)


@pytest.fixture
def T1():
    return parse_digraph(T1_TEXT)


@pytest.fixture
def bad_cyclic():
    return parse_digraph(BAD_CYCLIC_TEXT)


@st.composite
def digraphs(draw, max_vertices=4, max_edges=7, acyclic=False):
    """Small rooted multidigraphs; with ``acyclic`` edges follow vertex index order."""
    n = draw(st.integers(0, max_vertices))
    names = ["r"] + [f"v{i}" for i in range(1, n + 1)]
    if n == 0:
        return RootedDigraph.from_edges("r", [])
    if acyclic:
        arcs = [(names[i], names[j]) for i in range(n + 1) for j in range(i + 1, n + 1)]
    else:
        arcs = [(u, w) for u in names for w in names[1:] if u != w]
    picked = draw(st.lists(st.sampled_from(arcs), max_size=max_edges))
    return RootedDigraph.from_edges("r", [Edge(f"e{i}", u, w) for i, (u, w) in enumerate(picked)], names)
