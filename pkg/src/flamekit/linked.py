"""v-linked sets, the largest v-linked set, and fillability.

A set ``X`` of non-root vertices is *v-linked* when ``v`` is in ``X`` and
every edge entering ``X`` starts its own path to ``v``, all paths pairwise
edge-disjoint.  ``X`` is *fillable* when edge-disjoint paths from the root
end exactly in the edges entering ``X``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import AugmentationError, DependentSetError, NotLinkedError, UnknownVertexError
from .flow import max_edge_disjoint_paths, required_edge_paths, residual_unreachable_set
from .graph import Edge, RootedDigraph, delta_in, delta_in_set
from .paths import CutWitness, PathSystem


@dataclass(frozen=True)
class LinkedSetResult:
    vertex: str
    linked_set: frozenset[str]
    boundary: frozenset[str]
    link_witness: PathSystem
    fill_witness: PathSystem


def _check_candidate(D, X, v=None):
    for u in X:
        if not D.has_vertex(u):
            raise UnknownVertexError(u)
    if D.root in X:
        raise ValueError("a linked or fillable set cannot contain the root")
    if v is not None and v not in X:
        raise ValueError(f"{v!r} is not in the candidate set")


def is_v_linked(D: RootedDigraph, X: Iterable[str], v: str) -> PathSystem | None:
    """A link witness for ``X`` (one path per edge entering ``X``), or None."""
    X = frozenset(X)
    _check_candidate(D, X, v)
    return required_edge_paths(D, v, forced_initial=delta_in_set(D, X))


def largest_v_linked_set(D: RootedDigraph, v: str) -> LinkedSetResult:
    """The inclusion-largest v-linked set with link and fill witnesses.

    Take a maximum family of edge-disjoint root-``v`` paths; the vertices the
    root cannot reach in its residual digraph form the set.  Each path enters
    the set exactly once, which splits it into a fill path and a link path.
    """
    if v == D.root:
        raise ValueError("the root has no linked set")
    flow = max_edge_disjoint_paths(D, D.root, v)
    X = residual_unreachable_set(D, flow.path_system, D.root)
    boundary = delta_in_set(D, X)
    fill, link = [], []
    for p in flow.path_system:
        k = next(i for i, e in enumerate(p) if e in boundary)
        fill.append(p[: k + 1])
        link.append(p[k:])
    return LinkedSetResult(v, X, boundary, PathSystem(tuple(link)), PathSystem(tuple(fill)))


def _fresh_name(D, base):
    name = base
    while D.has_vertex(name):
        name += "_"
    return name


def _fill_paths(D, X):
    # Contract X to one sink; fill paths never enter X before their last edge.
    t = _fresh_name(D, "__X__")
    edges = [e if e.head not in X else Edge(e.id, e.tail, t)
             for e in D.edges if e.tail not in X]
    contracted = RootedDigraph.from_edges(D.root, edges, [*D.vertices, t])
    return required_edge_paths(contracted, t, required=delta_in_set(D, X))


def is_fillable(D: RootedDigraph, X: Iterable[str]) -> PathSystem | None:
    """Root paths whose terminal edges are exactly the edges entering ``X``, or None."""
    X = frozenset(X)
    _check_candidate(D, X)
    if not X:
        raise ValueError("candidate set is empty")
    return _fill_paths(D, X)


def augment_fill_after_insert(D: RootedDigraph, res: LinkedSetResult, e: Edge) -> PathSystem:
    """Fill witness for ``res.linked_set`` after adding edge ``e`` to ``D``.

    Reverse the fill paths, search once for a root path reaching the set,
    and take the symmetric difference with the old witness.
    """
    X = res.linked_set
    if D.has_edge(e.id):
        raise ValueError(f"edge id {e.id!r} already exists")
    if e.head not in X:
        raise ValueError("the new edge must end in the linked set")
    if e.tail in X:
        return res.fill_witness
    D2 = D.with_edge(e)
    used = res.fill_witness.edges()
    prev = {D.root: None}
    queue = deque([D.root])
    hit = None
    while queue and hit is None:
        u = queue.popleft()
        steps = [(f.id, f.head) for f in D2.out_edges(u) if f.id not in used]
        steps += [(f.id, f.tail) for f in D2.in_edges(u) if f.id in used]
        for fid, w in sorted(steps):
            if w in prev:
                continue
            prev[w] = (fid, u)
            if w in X:
                hit = w
                break
            queue.append(w)
    if hit is None:
        raise AugmentationError("no augmenting path: input was not the largest v-linked set")
    aug = set()
    w = hit
    while prev[w] is not None:
        fid, w = prev[w]
        aug.add(fid)
    witness = _fill_paths(D2.restrict(used ^ aug), X)
    if witness is None or witness.terminal_edges() != delta_in_set(D2, X):
        raise AugmentationError("augmentation failed: input was not the largest v-linked set")
    return witness


def covering_linked_witness(D: RootedDigraph, v: str, X: Iterable[str], I: Iterable[str]) -> PathSystem:
    """A link witness for ``X`` whose paths also cover every edge of ``I``.

    ``I`` must be a set of edges entering ``v`` coverable by edge-disjoint
    root-``v`` paths.
    """
    X, I = frozenset(X), frozenset(I)
    _check_candidate(D, X, v)
    if not I <= delta_in(D, v):
        raise ValueError("I must consist of edges entering v")
    if is_v_linked(D, X, v) is None:
        raise NotLinkedError(f"set is not {v}-linked")
    if required_edge_paths(D, v, required=I) is None:
        raise DependentSetError(f"edges {sorted(I)} cannot be covered by disjoint paths to {v}")
    witness = required_edge_paths(D, v, forced_initial=delta_in_set(D, X), required=I)
    if witness is None:
        raise RuntimeError("no covering link witness; this contradicts the covering proposition")
    return witness


def cut_witness_via_fill(D: RootedDigraph, res: LinkedSetResult,
                         link_witness: PathSystem | None = None) -> CutWitness:
    """Splice fill paths onto link paths: root-``v`` paths with the boundary as transversal.

    ``link_witness`` defaults to ``res.link_witness``; any link witness for the
    same set works because its initial edges are the boundary.
    """
    link = res.link_witness if link_witness is None else link_witness
    paths = []
    for p in link:
        f = res.fill_witness.path_ending_with(p[0])
        paths.append(f[:-1] + p)
    return CutWitness(res.boundary, PathSystem(tuple(paths)))
