"""Extend a flame of an acyclic rooted digraph to a large flame.

Vertices are visited in a topological order.  At vertex ``v`` the current
edge set ``L`` is inspected: ``X`` is the largest ``v``-linked set of ``D(L)``
and ``P`` is a link witness for ``X`` that also covers the flame's edges into
``v``.  Edges into ``v`` not used by ``P`` are deleted.  Their tails lie in
``X``, and earlier vertices never see later in-edges, so the result keeps
every connectivity from the root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotAFlameError
from .flames import flame_failure
from .graph import RootedDigraph, delta_in, topological_order
from .linked import covering_linked_witness, cut_witness_via_fill, largest_v_linked_set
from .paths import PathSystem


@dataclass(frozen=True)
class ConstructionStep:
    vertex: str
    linked_set: frozenset[str]
    link_paths: PathSystem     # P: starts on the boundary of linked_set, ends at vertex
    root_paths: PathSystem     # Q: P extended back to the root
    deleted: frozenset[str]
    kept: frozenset[str]


@dataclass(frozen=True)
class ConstructionTrace:
    order: tuple[str, ...]
    steps: tuple[ConstructionStep, ...] = field(default=())

    def problems(self, D: RootedDigraph, F) -> list[str]:
        """Check the per-step invariants of the construction against ``D`` and ``F``."""
        F = frozenset(F)
        out = []
        rank = {v: i for i, v in enumerate(self.order)}
        for step in self.steps:
            v = step.vertex
            if step.deleted & F:
                out.append(f"{v}: deleted flame edges {sorted(step.deleted & F)}")
            if not step.deleted <= delta_in(D, v):
                out.append(f"{v}: deleted edges not entering {v}")
            stray = {D.tail(e) for e in step.deleted} - step.linked_set
            if stray:
                out.append(f"{v}: deleted edges with tails {sorted(stray)} outside the linked set")
            if step.root_paths.terminal_edges() != step.kept:
                out.append(f"{v}: kept in-edges differ from the path ends")
            for p in step.root_paths:
                if D.tail(p[0]) != D.root or D.head(p[-1]) != v:
                    out.append(f"{v}: path {list(p)} is not a root-{v} path")
                late = [e for e in p if rank[D.head(e)] > rank[v]]
                if late:
                    out.append(f"{v}: path {list(p)} enters later vertices via {late}")
        return out


def extend_to_large_flame(D: RootedDigraph, F=frozenset(), order: Sequence[str] | None = None):
    """Return ``(L, trace)`` with ``L`` a large flame containing the flame ``F``.

    ``order`` may supply any topological order starting at the root; the
    default is :func:`flamekit.graph.topological_order`.  Raises
    :class:`~flamekit.errors.CycleError` for cyclic input and
    :class:`~flamekit.errors.NotAFlameError` when ``F`` is not a flame.
    """
    F = frozenset(F)
    default = topological_order(D)
    if order is None:
        order = default
    else:
        order = list(order)
        rank = {v: i for i, v in enumerate(order)}
        if sorted(order) != sorted(D.vertices) or order[0] != D.root or any(
                rank[e.tail] >= rank[e.head] for e in D.edges):
            raise ValueError("order is not a topological order starting at the root")
    bad = flame_failure(D, F)
    if bad is not None:
        raise NotAFlameError(bad)

    L = set(D.edge_ids)
    steps = []
    for v in order[1:]:
        DL = D.restrict(L)
        res = largest_v_linked_set(DL, v)
        link = covering_linked_witness(DL, v, res.linked_set, F & delta_in(D, v))
        root_paths = cut_witness_via_fill(DL, res, link).path_system
        kept = link.terminal_edges()
        deleted = delta_in(DL, v) - kept
        L -= deleted
        steps.append(ConstructionStep(v, res.linked_set, link, root_paths, frozenset(deleted), kept))
    return frozenset(L), ConstructionTrace(tuple(order), tuple(steps))


def large_flame(D: RootedDigraph) -> frozenset[str]:
    """A large flame of an acyclic digraph; its size is the sum of root connectivities."""
    return extend_to_large_flame(D)[0]
