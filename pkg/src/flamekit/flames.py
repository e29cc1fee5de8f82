"""Flame, gammoid and largeness oracles for rooted digraphs.

For a non-root vertex ``v`` the family ``G_D(v)`` holds the sets of edges
entering ``v`` that edge-disjoint root-``v`` paths can cover.  ``G(D)`` is
their direct sum over all non-root vertices.  ``F`` is a flame when ``F``
belongs to ``G(D(F))``, and ``L`` is large when it keeps every local
edge-connectivity from the root.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BoundExceededError, NotLargeError
from .flow import (edge_connectivity, max_brute, max_edge_disjoint_paths,
                   required_edge_paths, residual_unreachable_set)
from .graph import RootedDigraph, delta_in
from .linked import cut_witness_via_fill, largest_v_linked_set
from .paths import CutWitness, PathSystem


@dataclass(frozen=True)
class FlameCertificate:
    """Per-vertex covering path systems, or the first vertex where none exists.

    Truthy exactly when every vertex has a witness.
    """

    witnesses: dict = field(default_factory=dict)
    failed_at: str | None = None

    def __bool__(self):
        return self.failed_at is None


def local_edge_connectivity(D: RootedDigraph, v: str) -> int:
    """Maximum number of edge-disjoint paths from the root to ``v``."""
    if v == D.root:
        raise ValueError("connectivity is defined for non-root vertices")
    return edge_connectivity(D, D.root, v)


def gammoid_independent(D: RootedDigraph, v: str, I) -> PathSystem | None:
    """Edge-disjoint root-``v`` paths covering ``I``, or None if ``I`` is dependent."""
    I = frozenset(I)
    if not I <= delta_in(D, v):
        raise ValueError(f"I must consist of edges entering {v!r}")
    if not I:
        return PathSystem()
    return required_edge_paths(D, v, required=I)


def g_membership(D: RootedDigraph, S) -> FlameCertificate:
    S = frozenset(S)
    witnesses = {}
    for v in D.nonroot:
        w = gammoid_independent(D, v, S & delta_in(D, v))
        if w is None:
            return FlameCertificate(witnesses, failed_at=v)
        witnesses[v] = w
    return FlameCertificate(witnesses)


def is_flame(D: RootedDigraph, F) -> FlameCertificate:
    """Check that every edge of ``F`` into ``v`` ends its own path inside ``D(F)``."""
    F = frozenset(F)
    return g_membership(D.restrict(F), F)


def flame_failure(D: RootedDigraph, F) -> str | None:
    """First vertex where ``F`` fails to be a flame, None for a flame.

    Certificate-free variant of :func:`is_flame`: ``v`` is fine exactly when
    ``D(F)`` has as many edge-disjoint root-``v`` paths as ``F`` has edges into ``v``.
    """
    DF = D.restrict(F)
    for v in DF.nonroot:
        k = len(DF.in_edges(v))
        if k and edge_connectivity(DF, D.root, v, limit=k) < k:
            return v
    return None


def is_large(D: RootedDigraph, L, method: str = "lambda") -> bool:
    """Whether ``L`` is large.

    ``method="lambda"`` compares root connectivities in ``D(L)`` and ``D``;
    ``method="char"`` asks that the largest ``v``-linked set of ``D(L)`` holds
    the tail of every edge into ``v`` missing from ``L``.
    """
    L = frozenset(L)
    DL = D.restrict(L)
    if method == "lambda":
        for v in D.nonroot:
            need = edge_connectivity(D, D.root, v)
            if need and edge_connectivity(DL, D.root, v, limit=need) < need:
                return False
        return True
    if method == "char":
        for v in D.nonroot:
            tails = {e.tail for e in D.in_edges(v) if e.id not in L}
            if tails and not tails <= largest_v_linked_set(DL, v).linked_set:
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


def largeness_witness(D: RootedDigraph, L, v: str) -> CutWitness:
    """Root-``v`` paths in ``D(L)`` with a transversal that cuts ``v`` off in ``D``."""
    L = frozenset(L)
    DL = D.restrict(L)
    res = largest_v_linked_set(DL, v)
    witness = cut_witness_via_fill(DL, res)
    if v not in D.reachable_from(D.root, removed=witness.cut):
        return witness
    # The boundary of the linked set need not cut v off in D when L fails
    # elsewhere; a max flow of D(L) that is also maximum in D still works.
    paths = max_edge_disjoint_paths(DL, D.root, v).path_system
    if len(paths) != edge_connectivity(D, D.root, v):
        raise NotLargeError(v)
    reach = set(D.vertices) - residual_unreachable_set(D, paths, D.root)
    cut = frozenset(e.id for e in D.edges if e.tail in reach and e.head not in reach)
    return CutWitness(cut, paths)


def largeness_certificate(D: RootedDigraph, L) -> dict[str, CutWitness]:
    return {v: largeness_witness(D, L, v) for v in D.nonroot}


def _independent_fast(D, v, I):
    # paths end at v, so drop v's out-edges and its unselected in-edges
    if not I:
        return True
    sub = D.restrict(e.id for e in D.edges if e.tail != v and (e.head != v or e.id in I))
    return edge_connectivity(sub, D.root, v, limit=len(I)) == len(I)


def g_failure(D: RootedDigraph, S) -> str | None:
    """First vertex where ``S`` leaves ``G(D)``, None when ``S`` is a member."""
    S = frozenset(S)
    for v in D.nonroot:
        if not _independent_fast(D, v, delta_in(D, v) & S):
            return v
    return None


def maximal_independent_sets(D: RootedDigraph, v: str) -> list[frozenset[str]]:
    """Inclusion-maximal members of ``G_D(v)``, by exhaustive subset search."""
    ins = sorted(delta_in(D, v))
    indep = [frozenset(c) for k in range(len(ins) + 1)
             for c in itertools.combinations(ins, k) if _independent_fast(D, v, frozenset(c))]
    return [I for I in indep if not any(I < J for J in indep)]


def maximal_g_elements(D: RootedDigraph, bound: int | None = None) -> list[frozenset[str]]:
    """All inclusion-maximal members of ``G(D)``.

    ``G(D)`` is a direct sum over vertices, so its maximal members are the
    unions of one maximal independent set per vertex.
    """
    bound = max_brute() if bound is None else bound
    if len(D.edges) > bound:
        raise BoundExceededError(f"{len(D.edges)} edges exceed the brute-force bound {bound}")
    per_vertex = [maximal_independent_sets(D, v) for v in D.nonroot]
    return sorted((frozenset().union(*choice) for choice in itertools.product(*per_vertex)),
                  key=sorted)
