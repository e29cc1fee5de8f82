import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flamekit import (BoundExceededError, NotLargeError, PathSystem, delta_in, flame_failure,
                      g_failure, g_membership, gammoid_independent, is_flame, is_large,
                      largeness_certificate, largeness_witness, local_edge_connectivity,
                      maximal_g_elements)
from flamekit.flames import maximal_independent_sets
from flamekit.verifier.oracles import (brute_cover, brute_in_g, brute_is_flame, brute_is_large,
                                       brute_lambda, separates)

from conftest import digraphs, truncated_backward_path


@pytest.mark.parametrize("graph, v, expected", [("G1", "a", 2), ("G1", "b", 2), ("C1", "b", 1)])
def test_lambda(request, graph, v, expected):
    assert local_edge_connectivity(request.getfixturevalue(graph), v) == expected


def test_lambda_rejects_root(G1):
    with pytest.raises(ValueError):
        local_edge_connectivity(G1, "r")


def test_gammoid_independent(G1, C1):
    assert gammoid_independent(G1, "a", {"e1", "e2"}) == PathSystem.of(["e1"], ["e2"])
    assert gammoid_independent(C1, "a", {"e1", "e3"}) is None
    assert gammoid_independent(C1, "b", set()) == PathSystem()
    with pytest.raises(ValueError):
        gammoid_independent(G1, "a", {"e3"})


def test_g_membership(G1, C1):
    cert = g_membership(G1, {"e1", "e2", "e3", "e4"})
    assert cert and set(cert.witnesses) == {"a", "b"}
    cert = g_membership(C1, {"e1", "e2", "e3"})
    assert not cert and cert.failed_at == "a"
    assert g_membership(C1, set())


def test_is_flame(G1, C1):
    cert = is_flame(G1, {"e1", "e3", "e4"})
    assert cert.witnesses == {"a": PathSystem.of(["e1"]), "b": PathSystem.of(["e1", "e3"], ["e4"])}
    assert is_flame(C1, {"e1", "e2", "e3"}).failed_at == "a"
    assert is_flame(G1, set())


def test_member_of_g_that_is_not_a_flame(G1):
    # e3 lies on the root path e1 e3 of G1, but D({e3}) has no edge at the root
    assert g_membership(G1, {"e3"})
    cert = is_flame(G1, {"e3"})
    assert cert.failed_at == "b"
    assert flame_failure(G1, {"e3"}) == "b"


def test_is_large(G1, T1):
    assert not is_large(G1, {"e1", "e3", "e4"})
    assert not is_large(G1, {"e1", "e3", "e4"}, method="char")
    assert is_large(G1, G1.edge_ids) and is_large(G1, G1.edge_ids, method="char")
    assert is_large(T1, {"e1"})
    with pytest.raises(ValueError):
        is_large(T1, {"e1"}, method="other")


def test_largeness_witness(G1, T1):
    w = largeness_witness(G1, G1.edge_ids, "b")
    assert (w.path_system, w.cut) == (PathSystem.of(["e1", "e3"], ["e4"]), {"e3", "e4"})
    w = largeness_witness(T1, {"e1"}, "v")
    assert (w.path_system, w.cut) == (PathSystem.of(["e1"]), {"e1"})
    w = largeness_witness(G1, G1.edge_ids, "a")
    assert (w.path_system, w.cut) == (PathSystem.of(["e1"], ["e2"]), {"e1", "e2"})
    with pytest.raises(NotLargeError):
        largeness_witness(G1, {"e1", "e3", "e4"}, "a")


def test_maximal_g_elements(G1, C1, T1):
    assert maximal_g_elements(G1) == [frozenset({"e1", "e2", "e3", "e4"})]
    assert maximal_g_elements(C1) == [frozenset({"e1", "e2"})]
    assert maximal_g_elements(T1) == [frozenset({"e1"})]
    with pytest.raises(BoundExceededError):
        maximal_g_elements(G1, bound=3)


def test_backward_path_truncation_is_large():
    D = truncated_backward_path(4)
    for S in maximal_g_elements(D):
        assert is_large(D, S)
        assert is_flame(D, S)


@settings(max_examples=150)
@given(digraphs(max_vertices=4, max_edges=7), st.data())
def test_flame_tests_match_brute_force(D, data):
    F = data.draw(st.sets(st.sampled_from(sorted(D.edge_ids)))) if D.edges else set()
    expected = brute_is_flame(D, F)
    cert = is_flame(D, F)
    assert bool(cert) == expected
    assert (flame_failure(D, F) is None) == expected
    assert bool(g_membership(D, F)) == brute_in_g(D, F) == (g_failure(D, F) is None)
    if expected:
        assert g_membership(D, F)
        DF = D.restrict(F)
        for v, w in cert.witnesses.items():
            assert delta_in(DF, v) <= w.edges() <= DF.edge_ids


@settings(max_examples=150)
@given(digraphs(max_vertices=4, max_edges=7), st.data())
def test_largeness_methods_agree(D, data):
    L = data.draw(st.sets(st.sampled_from(sorted(D.edge_ids)))) if D.edges else set()
    lam = is_large(D, L)
    assert lam == is_large(D, L, method="char") == brute_is_large(D, L)
    if lam:
        for v, w in largeness_certificate(D, L).items():
            assert w.path_system.edges() <= frozenset(L)
            assert len(w.path_system) == brute_lambda(D, D.root, v)
            assert separates(D, w.cut, D.root, v)
            assert all(len(w.cut & set(p)) == 1 for p in w.path_system)


@settings(max_examples=80)
@given(digraphs(max_vertices=4, max_edges=6))
def test_gammoid_matroid_axioms(D):
    for v in D.nonroot:
        ins = sorted(delta_in(D, v))
        indep = {frozenset(c) for k in range(len(ins) + 1) for c in itertools.combinations(ins, k)
                 if brute_cover(D, v, c)}
        for I in indep:
            assert (gammoid_independent(D, v, I) is not None)
            assert all(I - {e} in indep for e in I)
        for I, J in itertools.product(indep, repeat=2):
            if len(I) < len(J):
                assert any(I | {e} in indep for e in J - I)
        maxima = maximal_independent_sets(D, v)
        assert set(maxima) == {I for I in indep if not any(I < J for J in indep)}


@settings(max_examples=100)
@given(digraphs(max_vertices=4, max_edges=7, acyclic=True))
def test_maximal_elements_have_lambda_edges(D):
    for S in maximal_g_elements(D):
        for v in D.nonroot:
            assert len(S & delta_in(D, v)) == local_edge_connectivity(D, v)
        assert all(g_failure(D, S | {e}) is not None for e in D.edge_ids - S)
