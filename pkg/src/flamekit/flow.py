"""Unit-capacity edge-disjoint path computations.

Everything reduces to flows in :class:`flamekit._network.Network` with one
arc per edge, scanned in ascending edge-id order.  Flow cycles are dropped
when a flow is split into paths.
"""
from __future__ import annotations

import itertools
import os
from typing import Iterable

from ._network import Network
from .errors import BoundExceededError, UnknownEdgeError, UnknownVertexError
from .graph import RootedDigraph
from .paths import CutWitness, PathSystem, path_problems

DEFAULT_MAX_BRUTE = 16


def max_brute() -> int:
    """Edge-count cap for exhaustive searches (env ``FLAMEKIT_MAX_BRUTE``)."""
    return int(os.environ.get("FLAMEKIT_MAX_BRUTE", DEFAULT_MAX_BRUTE))


def _check_vertices(D, *vs):
    for v in vs:
        if not D.has_vertex(v):
            raise UnknownVertexError(v)


def _check_edges(D, ids):
    for e in ids:
        if not D.has_edge(e):
            raise UnknownEdgeError(e)


def _edge_paths(net, arc_paths):
    return PathSystem(tuple(tuple(net.key[i] for i in p if net.key[i] is not None) for p in arc_paths))


def max_edge_disjoint_paths(D: RootedDigraph, s: str, t: str) -> CutWitness:
    """Maximum family of edge-disjoint ``s``-``t`` paths plus a transversal cut.

    The cut is the minimum cut closest to ``s``: the edges leaving the set of
    vertices reachable from ``s`` in the residual digraph.
    """
    _check_vertices(D, s, t)
    if s == t:
        raise ValueError("source and sink coincide")
    net = Network()
    for e in D.edges:
        net.add_arc(e.tail, e.head, key=e.id)
    value = net.max_flow(s, t)
    system = _edge_paths(net, net.decompose(s, t, value))
    reach = net.residual_reachable(s)
    cut = frozenset(e.id for e in D.edges if e.tail in reach and e.head not in reach)
    return CutWitness(cut, system)


def edge_connectivity(D: RootedDigraph, s: str, t: str, limit: int | None = None) -> int:
    """Number of edge-disjoint ``s``-``t`` paths, optionally capped at ``limit``."""
    _check_vertices(D, s, t)
    if s == t:
        raise ValueError("source and sink coincide")
    net = Network()
    for e in D.edges:
        net.add_arc(e.tail, e.head)
    return net.max_flow(s, t) if limit is None else net.max_flow(s, t, limit)


def required_edge_paths(
    D: RootedDigraph,
    sink: str,
    *,
    source: str | None = None,
    required: Iterable[str] = (),
    forced_initial: Iterable[str] | None = None,
) -> PathSystem | None:
    """Edge-disjoint paths into ``sink`` meeting coverage constraints, or None.

    Two modes:

    * ``forced_initial`` given: one path per listed edge, starting with it.
    * otherwise paths start at ``source`` (default: the root).

    Every edge in ``required`` must lie on some returned path.  The search is
    a flow with unit lower bounds on the constrained arcs.  When a constrained
    edge can sit on a flow cycle (only possible for required edges away from
    the path ends in a cyclic digraph) the flow may not split into valid
    paths; an exhaustive search settles those cases.
    """
    required = frozenset(required)
    _check_vertices(D, sink)
    _check_edges(D, required)
    if forced_initial is not None:
        forced = frozenset(forced_initial)
        _check_edges(D, forced)
        start = None
    else:
        forced = None
        start = D.root if source is None else source
        _check_vertices(D, start)
        if start == sink:
            if required:
                raise ValueError("sink equals the source but edges are required")
            return PathSystem()
    if sink == D.root and (required or forced):
        raise ValueError("the root has no ingoing edges")

    net = Network()
    src = ("__source__",) if forced is not None else start
    net.add_node(src)
    if forced is not None:
        for e in D.edges:
            if e.id in forced:
                net.add_arc(src, ("__sub__", e.id), lower=1)
    for e in D.edges:
        if e.tail == sink or e.head == start:
            continue
        tail = ("__sub__", e.id) if forced is not None and e.id in forced else e.tail
        net.add_arc(tail, e.head, key=e.id, lower=1 if e.id in required else 0)
    net.add_node(sink)
    if not net.satisfy_lower_bounds(src, sink):
        return None
    count = sum(net.flow(i) for i in net.adj[src] if i % 2 == 0 and not net.helper[i])
    system = _edge_paths(net, net.decompose(src, sink, count))
    if _satisfies(D, system, sink, start, required, forced):
        return system
    return _exhaustive_paths(D, sink, start, required, forced)


def _satisfies(D, system, sink, start, required, forced):
    if path_problems(D, system, source=start, sink=sink):
        return False
    if not required <= system.edges():
        return False
    if forced is not None and (system.initial_edges() != forced or len(system) != len(forced)):
        return False
    return True


def _simple_paths(D, u, sink, visited, used):
    """Yield simple paths (edge-id lists) from ``u`` to ``sink`` avoiding ``used``."""
    if u == sink:
        yield []
        return
    for e in D.out_edges(u):
        if e.id in used or e.head in visited:
            continue
        visited.add(e.head)
        used.add(e.id)
        for rest in _simple_paths(D, e.head, sink, visited, used):
            yield [e.id] + rest
        visited.discard(e.head)
        used.discard(e.id)


def _exhaustive_paths(D, sink, start, required, forced):
    if len(D.edges) > max_brute():
        raise BoundExceededError(
            f"exact path search needs at most {max_brute()} edges, digraph has {len(D.edges)}")
    used: set[str] = set()
    found: list[list[str]] = []

    def place_forced(todo):
        if not todo:
            return required <= used
        e = D.edge(todo[0])
        used.add(e.id)
        for rest in _simple_paths(D, e.head, sink, {e.tail, e.head}, used):
            found.append([e.id] + rest)
            used.update(rest)
            if place_forced(todo[1:]):
                return True
            used.difference_update(rest)
            found.pop()
        used.discard(e.id)
        return False

    def cover(todo):
        todo = sorted(todo - used)
        if not todo:
            return True
        target = todo[0]
        for p in _simple_paths(D, start, sink, {start}, used):
            if target in p:
                found.append(p)
                used.update(p)
                if cover(frozenset(todo)):
                    return True
                used.difference_update(p)
                found.pop()
        return False

    ok = place_forced(sorted(forced)) if forced is not None else cover(required)
    return PathSystem(tuple(tuple(p) for p in found)) if ok else None


def residual_unreachable_set(D: RootedDigraph, flow_paths: Iterable, s: str) -> frozenset[str]:
    """Vertices not reachable from ``s`` once the edges of ``flow_paths`` are reversed."""
    _check_vertices(D, s)
    used = set(itertools.chain.from_iterable(flow_paths))
    _check_edges(D, used)
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        steps = [e.head for e in D.out_edges(u) if e.id not in used]
        steps += [e.tail for e in D.in_edges(u) if e.id in used]
        for w in steps:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(D.vertices) - seen


def linkage_merge(D: RootedDigraph, s: str, t: str, P: PathSystem, Q: PathSystem) -> PathSystem:
    """Edge-disjoint ``s``-``t`` paths keeping the first edges of ``P`` and the
    last edges of ``Q``.  Such a system always exists."""
    for name, system in (("P", P), ("Q", Q)):
        problems = path_problems(D, system, source=s, sink=t)
        if problems:
            raise ValueError(f"{name} is not an s-t path system: {problems[0]}")
    need = P.initial_edges() | Q.terminal_edges()
    R = required_edge_paths(D, t, source=s, required=need)
    if R is None:
        raise RuntimeError("linkage does not exist; inputs violate the linkage theorem")
    return R
