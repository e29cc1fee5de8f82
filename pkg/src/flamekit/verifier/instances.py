"""Instance enumeration and seeded random generation."""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass
from typing import Iterator

from ..errors import BoundExceededError
from ..flames import flame_failure
from ..graph import Edge, RootedDigraph

ROOT = "r"
DEFAULT_CAP = 2_000_000


@dataclass(frozen=True)
class InstanceSpec:
    """Bounds for enumeration or random generation.

    Enumeration produces every digraph with exactly ``max_nonroot_vertices``
    non-root vertices unless ``min_nonroot_vertices`` lowers the range.
    Random generation ignores the minimum and uses ``seed``.
    """

    max_nonroot_vertices: int
    max_edges: int
    max_parallel: int = 1
    acyclic_only: bool = False
    seed: int | None = None
    min_nonroot_vertices: int | None = None
    canonical_only: bool = False
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.max_nonroot_vertices < 0 or self.max_edges < 0 or self.max_parallel < 1:
            raise ValueError("bounds must be non-negative and max_parallel positive")
        lo = self.min_nonroot_vertices
        if lo is not None and not 0 <= lo <= self.max_nonroot_vertices:
            raise ValueError("min_nonroot_vertices out of range")

    @property
    def vertex_counts(self) -> range:
        lo = self.max_nonroot_vertices if self.min_nonroot_vertices is None else self.min_nonroot_vertices
        return range(lo, self.max_nonroot_vertices + 1)

    def to_dict(self) -> dict:
        return asdict(self)


def vertex_names(n: int) -> list[str]:
    width = len(str(n))
    return [f"v{i:0{width}d}" for i in range(1, n + 1)]


def _edge_names(m: int) -> list[str]:
    width = len(str(m))
    return [f"e{i:0{width}d}" for i in range(1, m + 1)]


def _arcs(n):
    names = vertex_names(n)
    return [(u, w) for u in [ROOT] + names for w in names if u != w]


def labeled_count(n: int, max_edges: int, max_parallel: int) -> int:
    """Number of labeled multidigraphs before any acyclicity filter."""
    poly = [1]
    for _ in range(n * n):  # n arcs out of the root, n(n-1) between others
        new = [0] * min(len(poly) + max_parallel, max_edges + 1)
        for i, c in enumerate(poly):
            for j in range(max_parallel + 1):
                if i + j < len(new):
                    new[i + j] += c
        poly = new
    return sum(poly)


def _multiplicities(k, budget, max_parallel):
    if k == 0:
        yield ()
        return
    for first in range(min(budget, max_parallel) + 1):
        for rest in _multiplicities(k - 1, budget - first, max_parallel):
            yield (first,) + rest


def _acyclic(n_names, arcs, mult):
    succ = {v: [] for v in n_names}
    indeg = {v: 0 for v in n_names}
    for (u, w), k in zip(arcs, mult):
        if k and u != ROOT:
            succ[u].append(w)
            indeg[w] += 1
    stack = [v for v in n_names if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == len(n_names)


def _is_canonical(names, arcs, mult):
    index = {ROOT: 0, **{v: i + 1 for i, v in enumerate(names)}}
    coded = [(index[u], index[w], k) for (u, w), k in zip(arcs, mult) if k]
    own = sorted(coded)
    for perm in itertools.permutations(range(1, len(names) + 1)):
        relabel = (0,) + perm
        if sorted((relabel[a], relabel[b], k) for a, b, k in coded) < own:
            return False
    return True


def build(names, arcs, mult) -> RootedDigraph:
    ids = iter(_edge_names(sum(mult)))
    edges = [Edge(next(ids), u, w) for (u, w), k in zip(arcs, mult) for _ in range(k)]
    return RootedDigraph.from_edges(ROOT, edges, names)


def enumerate_instances(spec: InstanceSpec) -> Iterator[RootedDigraph]:
    """Every labeled rooted multidigraph within the bounds, in a fixed order.

    With ``canonical_only`` a digraph is kept only when its edge list is the
    smallest among all relabelings of its non-root vertices, so exactly one
    digraph per isomorphism class survives.
    """
    total = sum(labeled_count(n, spec.max_edges, spec.max_parallel) for n in spec.vertex_counts)
    if total > spec.cap:
        raise BoundExceededError(f"{total} instances exceed the cap {spec.cap}")
    for n in spec.vertex_counts:
        names = vertex_names(n)
        arcs = _arcs(n)
        for mult in _multiplicities(len(arcs), spec.max_edges, spec.max_parallel):
            if spec.acyclic_only and not _acyclic(names, arcs, mult):
                continue
            if spec.canonical_only and not _is_canonical(names, arcs, mult):
                continue
            yield build(names, arcs, mult)


def _random_graph(rng, n, m, max_parallel, acyclic):
    names = vertex_names(n)
    order = [ROOT] + rng.sample(names, n)
    if acyclic:
        pairs = [(order[i], order[j]) for i in range(n + 1) for j in range(i + 1, n + 1)]
    else:
        pairs = _arcs(n)
    slots = [p for p in pairs for _ in range(max_parallel)]
    chosen = rng.sample(slots, min(m, len(slots)))
    ids = _edge_names(len(chosen))
    return RootedDigraph.from_edges(ROOT, [Edge(i, u, w) for i, (u, w) in zip(ids, chosen)], names)


def random_dag(spec: InstanceSpec, rng: random.Random | None = None) -> RootedDigraph:
    """Acyclic digraph with ``max_nonroot_vertices`` non-root vertices and up to
    ``max_edges`` edges, all pointing forward in a random vertex order."""
    rng = random.Random(spec.seed) if rng is None else rng
    return _random_graph(rng, spec.max_nonroot_vertices, spec.max_edges, spec.max_parallel, True)


def random_digraph(spec: InstanceSpec, rng: random.Random | None = None) -> RootedDigraph:
    """Like :func:`random_dag` but edges may point either way between non-root vertices."""
    rng = random.Random(spec.seed) if rng is None else rng
    if spec.acyclic_only:
        return random_dag(spec, rng)
    return _random_graph(rng, spec.max_nonroot_vertices, spec.max_edges, spec.max_parallel, False)


def random_instances(count: int, max_vertices: int, max_edges: int, seed: int,
                     acyclic: bool = True, max_parallel: int = 2) -> Iterator[RootedDigraph]:
    """``count`` random digraphs with sizes drawn uniformly up to the bounds.

    ``max_vertices`` counts the root.
    """
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_vertices - 1)
        m = rng.randint(0, max_edges)
        spec = InstanceSpec(n, m, max_parallel, acyclic_only=acyclic)
        yield random_digraph(spec, rng)


def random_flame(D: RootedDigraph, rng: random.Random, stop: float = 0.1) -> frozenset[str]:
    """Grow a flame one edge at a time, stopping early with probability ``stop`` per step."""
    F: frozenset[str] = frozenset()
    while rng.random() >= stop:
        options = [e for e in sorted(D.edge_ids - F) if flame_failure(D, F | {e}) is None]
        if not options:
            break
        F = F | {rng.choice(options)}
    return F
