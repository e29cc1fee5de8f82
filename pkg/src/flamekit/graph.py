"""Rooted multidigraphs: representation, text format, in-edge queries, ordering.

Vertex and edge ids are opaque strings compared lexicographically.  Parallel
edges are distinct :class:`Edge` records with their own ids.

Graph file format (UTF-8, ``#`` starts a comment)::

    root <vertex-id>
    edge <edge-id> <tail-id> <head-id>
    vertex <vertex-id>        # optional, declares an isolated vertex

Edge-set files hold one edge id per line.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import CycleError, GraphFormatError, UnknownEdgeError, UnknownVertexError


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class RootedDigraph:
    """A finite loop-free multidigraph with a root that has no ingoing edges.

    Instances are immutable.  Use :meth:`from_edges` to build one with
    validation; ``edges`` is kept sorted by edge id.
    """

    root: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _by_id: Mapping[str, Edge] = field(init=False, repr=False, compare=False)
    _in: Mapping[str, tuple[Edge, ...]] = field(init=False, repr=False, compare=False)
    _out: Mapping[str, tuple[Edge, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_id = {e.id: e for e in self.edges}
        ins = {v: [] for v in self.vertices}
        outs = {v: [] for v in self.vertices}
        for e in self.edges:
            ins[e.head].append(e)
            outs[e.tail].append(e)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_in", {v: tuple(es) for v, es in ins.items()})
        object.__setattr__(self, "_out", {v: tuple(es) for v, es in outs.items()})

    @classmethod
    def from_edges(cls, root: str, edges: Iterable, vertices: Iterable[str] = ()) -> "RootedDigraph":
        """Validate and build a digraph.

        ``edges`` may hold :class:`Edge` objects or ``(id, tail, head)`` triples.
        Extra isolated vertices can be passed in ``vertices``.
        """
        es = [e if isinstance(e, Edge) else Edge(*e) for e in edges]
        seen = set()
        for e in es:
            if e.id in seen:
                raise GraphFormatError(f"duplicate edge id {e.id!r}")
            seen.add(e.id)
            if e.tail == e.head:
                raise GraphFormatError(f"edge {e.id!r} is a loop at {e.tail!r}")
            if e.head == root:
                raise GraphFormatError(f"edge {e.id!r} enters the root {root!r}")
        vs = {root, *vertices}
        for e in es:
            vs.add(e.tail)
            vs.add(e.head)
        return cls(root, tuple(sorted(vs)), tuple(sorted(es)))

    # -- queries ---------------------------------------------------------

    @property
    def nonroot(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if v != self.root)

    @property
    def edge_ids(self) -> frozenset[str]:
        return frozenset(self._by_id)

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdgeError(edge_id) from None

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._by_id

    def has_vertex(self, v: str) -> bool:
        return v in self._in

    def _check_vertex(self, v):
        if v not in self._in:
            raise UnknownVertexError(v)

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        self._check_vertex(v)
        return self._in[v]

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        self._check_vertex(v)
        return self._out[v]

    def tail(self, edge_id: str) -> str:
        return self.edge(edge_id).tail

    def head(self, edge_id: str) -> str:
        return self.edge(edge_id).head

    # -- derived digraphs ------------------------------------------------

    def restrict(self, edge_ids: Iterable[str]) -> "RootedDigraph":
        """The spanning subdigraph ``D(L)``: all vertices, only the given edges."""
        keep = set(edge_ids)
        for eid in keep:
            if eid not in self._by_id:
                raise UnknownEdgeError(eid)
        return RootedDigraph(self.root, self.vertices, tuple(e for e in self.edges if e.id in keep))

    def with_edge(self, edge: Edge) -> "RootedDigraph":
        return RootedDigraph.from_edges(self.root, self.edges + (edge,), self.vertices)

    def reachable_from(self, s: str, removed: Iterable[str] = ()) -> set[str]:
        """Vertices reachable from ``s`` when the edges in ``removed`` are deleted."""
        self._check_vertex(s)
        removed = set(removed)
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for e in self._out[u]:
                if e.id not in removed and e.head not in seen:
                    seen.add(e.head)
                    stack.append(e.head)
        return seen

    def is_acyclic(self) -> bool:
        try:
            topological_order(self)
        except CycleError:
            return False
        return True

    def __str__(self):
        return serialize_digraph(self)


def delta_in(D: RootedDigraph, v: str) -> frozenset[str]:
    """Ids of the edges entering ``v``; empty for the root."""
    return frozenset(e.id for e in D.in_edges(v))


def delta_in_set(D: RootedDigraph, X: Iterable[str]) -> frozenset[str]:
    """Ids of the edges with tail outside ``X`` and head inside ``X``."""
    X = set(X)
    for v in X:
        D._check_vertex(v)
    return frozenset(e.id for v in X for e in D._in[v] if e.tail not in X)


def topological_order(D: RootedDigraph, tiebreak=None) -> list[str]:
    """Source-deletion order starting at the root, smallest id first among ties.

    ``tiebreak`` may map vertices to sort keys to pick a different valid order.
    Raises :class:`CycleError` carrying the edges of a directed cycle.
    """
    key = (lambda v: v) if tiebreak is None else tiebreak
    indeg = {v: len(D._in[v]) for v in D.vertices}
    order = [D.root]
    heap = [(key(v), v) for v in D.vertices if indeg[v] == 0 and v != D.root]
    heapq.heapify(heap)
    current = D.root
    while True:
        for e in D._out[current]:
            indeg[e.head] -= 1
            if indeg[e.head] == 0:
                heapq.heappush(heap, (key(e.head), e.head))
        if not heap:
            break
        current = heapq.heappop(heap)[1]
        order.append(current)
    if len(order) < len(D.vertices):
        raise CycleError(_find_cycle(D, set(D.vertices) - set(order)))
    return order


def _find_cycle(D, remaining):
    # Every remaining vertex has an in-edge from another remaining vertex, so
    # walking backwards along smallest-id in-edges must close a cycle.
    v = min(remaining)
    pos = {}
    trail = []
    while v not in pos:
        pos[v] = len(trail)
        e = min(e for e in D._in[v] if e.tail in remaining)
        trail.append(e)
        v = e.tail
    cycle = [e.id for e in reversed(trail[pos[v]:])]
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


# -- text formats ---------------------------------------------------------

def parse_digraph(text: str) -> RootedDigraph:
    root = None
    edges = []
    extra = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "root" and len(parts) == 2:
            if root is not None:
                raise GraphFormatError("root declared twice", lineno)
            root = parts[1]
        elif kind == "edge" and len(parts) == 4:
            _, eid, tail, head = parts
            if eid in seen:
                raise GraphFormatError(f"duplicate edge id {eid!r} (first on line {seen[eid]})", lineno)
            if tail == head:
                raise GraphFormatError(f"edge {eid!r} is a loop", lineno)
            seen[eid] = lineno
            edges.append((lineno, Edge(eid, tail, head)))
        elif kind == "vertex" and len(parts) == 2:
            extra.append(parts[1])
        else:
            raise GraphFormatError(f"cannot parse {line!r}", lineno)
    if root is None:
        raise GraphFormatError("no root declared")
    for lineno, e in edges:
        if e.head == root:
            raise GraphFormatError(f"edge {e.id!r} enters the root {root!r}", lineno)
    return RootedDigraph.from_edges(root, [e for _, e in edges], extra)


def serialize_digraph(D: RootedDigraph) -> str:
    lines = [f"root {D.root}"]
    touched = {D.root}
    for e in D.edges:
        touched.update((e.tail, e.head))
    lines += [f"vertex {v}" for v in D.vertices if v not in touched]
    lines += [f"edge {e.id} {e.tail} {e.head}" for e in D.edges]
    return "\n".join(lines) + "\n"


def parse_edge_set(text: str, D: RootedDigraph | None = None) -> frozenset[str]:
    ids = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line.split()) != 1:
            raise GraphFormatError(f"expected a single edge id, got {line!r}", lineno)
        if D is not None and not D.has_edge(line):
            raise GraphFormatError(f"unknown edge id {line!r}", lineno)
        ids.add(line)
    return frozenset(ids)


def serialize_edge_set(edge_ids: Iterable[str]) -> str:
    return "".join(f"{e}\n" for e in sorted(edge_ids))
