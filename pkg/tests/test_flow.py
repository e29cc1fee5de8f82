import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flamekit import (BoundExceededError, PathSystem, RootedDigraph, edge_connectivity,
                      linkage_merge, max_edge_disjoint_paths, required_edge_paths,
                      residual_unreachable_set)
from flamekit.errors import UnknownEdgeError, UnknownVertexError
from flamekit.paths import path_problems
from flamekit.verifier.oracles import brute_lambda, separates, simple_paths

from conftest import digraphs


def test_max_paths_g1(G1):
    w = max_edge_disjoint_paths(G1, "r", "b")
    assert w.path_system == PathSystem.of(["e1", "e3"], ["e4"])
    assert w.cut == {"e3", "e4"}
    assert w.problems(G1, "r", "b") == []


def test_max_paths_trivial_and_unreachable(G1, T1):
    w = max_edge_disjoint_paths(T1, "r", "v")
    assert w.path_system.to_lists() == [["e1"]] and w.cut == {"e1"}
    w = max_edge_disjoint_paths(G1, "b", "a")
    assert len(w.path_system) == 0 and w.cut == frozenset()


def test_max_paths_errors(G1):
    with pytest.raises(ValueError):
        max_edge_disjoint_paths(G1, "a", "a")
    with pytest.raises(UnknownVertexError):
        max_edge_disjoint_paths(G1, "r", "nope")


def test_edge_connectivity_limit(G1):
    assert edge_connectivity(G1, "r", "a") == 2
    assert edge_connectivity(G1, "r", "a", limit=1) == 1


def test_required_edge_paths_examples(G1, C1):
    R = required_edge_paths(G1, "b", required={"e3"})
    assert R is not None and "e3" in R.edges()
    assert path_problems(G1, R, source="r", sink="b") == []
    assert required_edge_paths(C1, "a", required={"e3"}) is None
    assert required_edge_paths(G1, "b", forced_initial={"e3", "e4"}) == PathSystem.of(["e3"], ["e4"])


def test_required_edge_paths_errors(G1):
    with pytest.raises(UnknownEdgeError):
        required_edge_paths(G1, "b", required={"e9"})
    with pytest.raises(ValueError):
        required_edge_paths(G1, "r", forced_initial={"e1"})


def test_flow_cycle_needs_exhaustive_search():
    # the only flow through e2 and e3 runs around the cycle a->b->a
    D = RootedDigraph.from_edges("r", [("e1", "r", "a"), ("e2", "a", "b"),
                                       ("e3", "b", "a"), ("e4", "a", "t")])
    assert required_edge_paths(D, "t", required={"e2", "e3"}) is None
    assert required_edge_paths(D, "t", required={"e2"}) is None


def test_exhaustive_search_finds_reroute():
    # flow may pick r->a->b->a->t style circulations; a valid answer uses a separate route
    D = RootedDigraph.from_edges("r", [
        ("e1", "r", "a"), ("e2", "a", "b"), ("e3", "b", "c"), ("e4", "c", "a"),
        ("e5", "a", "t"), ("e6", "r", "c")])
    R = required_edge_paths(D, "t", required={"e4", "e5"})
    assert R == PathSystem.of(["e6", "e4", "e5"])


def test_exhaustive_bound(monkeypatch):
    D = RootedDigraph.from_edges("r", [("e1", "r", "a"), ("e2", "a", "b"),
                                       ("e3", "b", "a"), ("e4", "a", "t")])
    monkeypatch.setenv("FLAMEKIT_MAX_BRUTE", "2")
    with pytest.raises(BoundExceededError):
        required_edge_paths(D, "t", required={"e2", "e3"})


def test_residual_unreachable_set(G1, T1):
    assert residual_unreachable_set(G1, [["e4"], ["e1", "e3"]], "r") == {"b"}
    assert residual_unreachable_set(G1, [], "r") == frozenset()
    assert residual_unreachable_set(T1, [["e1"]], "r") == {"v"}


def test_linkage_merge_examples(G1):
    R = linkage_merge(G1, "r", "b", PathSystem.of(["e4"]), PathSystem.of(["e1", "e3"]))
    assert R == PathSystem.of(["e1", "e3"], ["e4"])
    R = linkage_merge(G1, "r", "a", PathSystem.of(["e1"]), PathSystem.of(["e2"]))
    assert R == PathSystem.of(["e1"], ["e2"])


def test_linkage_merge_rejects_bad_input(G1):
    with pytest.raises(ValueError):
        linkage_merge(G1, "r", "b", PathSystem.of(["e3"]), PathSystem())


# independent oracles: families of simple paths, searched exhaustively

def _families(D, s, t):
    paths = simple_paths(D, s, t)
    for k in range(len(paths) + 1):
        for combo in itertools.combinations(paths, k):
            if sum(map(len, combo)) == len(frozenset().union(*combo)):
                yield combo


def _brute_required(D, sink, required):
    return any(set(required) <= frozenset().union(*fam) for fam in _families(D, D.root, sink))


def _brute_forced(D, sink, forced):
    options = [simple_paths(D, D.tail(e), sink, first_edge=e) for e in sorted(forced)]
    for choice in itertools.product(*options):
        if sum(map(len, choice)) == len(frozenset().union(*choice)):
            return True
    return False


@settings(max_examples=150)
@given(digraphs(max_vertices=4, max_edges=8))
def test_max_paths_match_brute_force(D):
    for t in D.nonroot:
        w = max_edge_disjoint_paths(D, D.root, t)
        assert len(w.path_system) == brute_lambda(D, D.root, t)
        assert w.problems(D, D.root, t) == []
        assert separates(D, w.cut, D.root, t)


@settings(max_examples=150)
@given(digraphs(max_vertices=4, max_edges=7), st.data())
def test_required_paths_match_brute_force(D, data):
    if not D.nonroot or not D.edges:
        return
    sink = data.draw(st.sampled_from(D.nonroot))
    required = data.draw(st.sets(st.sampled_from(sorted(D.edge_ids)), max_size=3))
    required = {e for e in required if D.tail(e) != sink}
    R = required_edge_paths(D, sink, required=required)
    assert (R is not None) == _brute_required(D, sink, required)
    if R is not None:
        assert path_problems(D, R, source=D.root, sink=sink) == []
        assert required <= R.edges()


@settings(max_examples=150)
@given(digraphs(max_vertices=4, max_edges=7), st.data())
def test_forced_initial_match_brute_force(D, data):
    if not D.nonroot or not D.edges:
        return
    sink = data.draw(st.sampled_from(D.nonroot))
    forced = data.draw(st.sets(st.sampled_from(sorted(D.edge_ids)), max_size=3))
    forced = {e for e in forced if D.tail(e) != sink}
    R = required_edge_paths(D, sink, forced_initial=forced)
    assert (R is not None) == _brute_forced(D, sink, forced)
    if R is not None:
        assert R.initial_edges() == forced and len(R) == len(forced)
        assert path_problems(D, R, sink=sink) == []
