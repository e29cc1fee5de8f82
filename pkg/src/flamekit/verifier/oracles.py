"""Brute-force oracles built on explicit path enumeration.

Nothing in here touches the flow code: path families are found by listing
every simple path and searching over disjoint combinations.  Only meant for
digraphs with a handful of edges.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from ..errors import BoundExceededError
from ..graph import RootedDigraph

DEFAULT_VERTEX_BOUND = 6


def simple_paths(D: RootedDigraph, s: str, t: str, first_edge: str | None = None) -> list[frozenset]:
    """Edge sets of all simple ``s``-``t`` paths (optionally forced to start with ``first_edge``)."""
    out = []

    def walk(u, seen, taken):
        if u == t:
            out.append(frozenset(taken))
            return
        for e in D.out_edges(u):
            if e.head not in seen:
                seen.add(e.head)
                taken.append(e.id)
                walk(e.head, seen, taken)
                taken.pop()
                seen.discard(e.head)

    if first_edge is None:
        walk(s, {s}, [])
    else:
        e = D.edge(first_edge)
        if e.tail == s and e.head != s:
            if e.head == t:
                out.append(frozenset([e.id]))
            else:
                seen = {s, e.head}
                taken = [e.id]
                walk(e.head, seen, taken)
    return out


def max_disjoint_family(paths: list[frozenset]) -> int:
    """Largest number of pairwise disjoint sets among ``paths``."""
    paths = sorted(set(paths), key=len)

    @lru_cache(maxsize=None)
    def best(i, used):
        if i == len(paths):
            return 0
        skip = best(i + 1, used)
        if paths[i] & used:
            return skip
        return max(skip, 1 + best(i + 1, used | paths[i]))

    return best(0, frozenset())


def brute_lambda(D: RootedDigraph, s: str, t: str) -> int:
    return max_disjoint_family(simple_paths(D, s, t))


def brute_cover(D: RootedDigraph, v: str, I) -> bool:
    """Do edge-disjoint simple root-``v`` paths cover every edge of ``I``?"""
    paths = simple_paths(D, D.root, v)

    def search(todo, used):
        if not todo:
            return True
        e = min(todo)
        return any(search(todo - p, used | p) for p in paths if e in p and not p & used)

    return search(frozenset(I), frozenset())


def brute_in_g(D: RootedDigraph, S) -> bool:
    S = frozenset(S)
    return all(brute_cover(D, v, {e.id for e in D.in_edges(v)} & S) for v in D.nonroot)


def brute_is_flame(D: RootedDigraph, F) -> bool:
    F = frozenset(F)
    return brute_in_g(D.restrict(F), F)


def brute_is_large(D: RootedDigraph, L) -> bool:
    DL = D.restrict(L)
    return all(brute_lambda(DL, D.root, v) == brute_lambda(D, D.root, v) for v in D.nonroot)


def brute_v_linked(D: RootedDigraph, X, v: str) -> bool:
    """Path-enumeration check of the v-linked property."""
    X = frozenset(X)
    if v not in X or D.root in X:
        return False
    boundary = sorted(e.id for u in X for e in D.in_edges(u) if e.tail not in X)
    options = [simple_paths(D, D.tail(e), v, first_edge=e) for e in boundary]

    def search(i, used):
        if i == len(options):
            return True
        return any(search(i + 1, used | p) for p in options[i] if not p & used)

    return search(0, frozenset())


def brute_force_largest_v_linked(D: RootedDigraph, v: str, linked=None,
                                 bound: int = DEFAULT_VERTEX_BOUND) -> frozenset[str]:
    """Union of all v-linked sets, found by checking every candidate set.

    ``linked(D, X, v)`` decides v-linkedness; by default the library's
    :func:`flamekit.linked.is_v_linked`.
    """
    if len(D.vertices) > bound:
        raise BoundExceededError(f"{len(D.vertices)} vertices exceed the oracle bound {bound}")
    if linked is None:
        from ..linked import is_v_linked

        def linked(D, X, v):
            return is_v_linked(D, X, v) is not None
    others = [u for u in D.nonroot if u != v]
    union = set()
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            X = frozenset((v, *extra))
            if X <= union:
                continue
            if linked(D, X, v):
                union |= X
    return frozenset(union)


def brute_flames(D: RootedDigraph) -> set[frozenset]:
    ids = sorted(D.edge_ids)
    return {frozenset(c) for k in range(len(ids) + 1)
            for c in itertools.combinations(ids, k) if brute_is_flame(D, c)}


def separates(D: RootedDigraph, cut, s: str, t: str) -> bool:
    """Does deleting ``cut`` leave no ``s``-``t`` path?  Plain search, no flows."""
    cut = set(cut)
    seen, stack = {s}, [s]
    while stack:
        u = stack.pop()
        for e in D.out_edges(u):
            if e.id not in cut and e.head not in seen:
                seen.add(e.head)
                stack.append(e.head)
    return t not in seen
