"""Path systems and cut witnesses.

A path is a tuple of edge ids forming a directed walk that repeats no vertex.
A path system is a collection of pairwise edge-disjoint paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import RootedDigraph

Path = tuple[str, ...]


@dataclass(frozen=True)
class PathSystem:
    paths: tuple[Path, ...] = ()

    def __post_init__(self):
        # canonical form: paths sorted by initial edge id
        object.__setattr__(self, "paths", tuple(sorted(tuple(p) for p in self.paths)))

    @classmethod
    def of(cls, *paths: Sequence[str]) -> "PathSystem":
        return cls(tuple(tuple(p) for p in paths))

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __bool__(self):
        # an empty system is still a valid witness
        return True

    def edges(self) -> frozenset[str]:
        return frozenset(e for p in self.paths for e in p)

    def initial_edges(self) -> frozenset[str]:
        return frozenset(p[0] for p in self.paths)

    def terminal_edges(self) -> frozenset[str]:
        return frozenset(p[-1] for p in self.paths)

    def path_starting_with(self, edge_id: str) -> Path:
        for p in self.paths:
            if p[0] == edge_id:
                return p
        raise KeyError(edge_id)

    def path_ending_with(self, edge_id: str) -> Path:
        for p in self.paths:
            if p[-1] == edge_id:
                return p
        raise KeyError(edge_id)

    def to_lists(self) -> list[list[str]]:
        return [list(p) for p in self.paths]

    def __str__(self):
        return "{" + ", ".join("[" + ",".join(p) + "]" for p in self.paths) + "}"


def path_problems(D: RootedDigraph, system: Iterable[Sequence[str]], source=None, sink=None) -> list[str]:
    """Describe everything wrong with ``system`` as a path system in ``D``.

    ``source`` / ``sink`` may be a vertex id or a set of vertex ids that every
    path must start / end in.  An empty list means the system is valid.
    """
    problems = []
    used = set()
    for p in system:
        if not p:
            problems.append("empty path")
            continue
        if not all(D.has_edge(e) for e in p):
            problems.append(f"path {list(p)} uses an edge not in the digraph")
            continue
        verts = [D.tail(p[0])]
        for a, b in zip(p, p[1:]):
            if D.head(a) != D.tail(b):
                problems.append(f"path {list(p)} is not a walk at {a},{b}")
                break
        verts += [D.head(e) for e in p]
        if len(set(verts)) != len(verts):
            problems.append(f"path {list(p)} repeats a vertex")
        if source is not None and not _matches(verts[0], source):
            problems.append(f"path {list(p)} does not start at {source}")
        if sink is not None and not _matches(verts[-1], sink):
            problems.append(f"path {list(p)} does not end at {sink}")
        for e in p:
            if e in used:
                problems.append(f"edge {e} is used twice")
            used.add(e)
    return problems


def _matches(v, target):
    if isinstance(target, str):
        return v == target
    return v in target


def is_valid_path_system(D, system, source=None, sink=None) -> bool:
    return not path_problems(D, system, source, sink)


@dataclass(frozen=True)
class CutWitness:
    """Edge-disjoint ``s``-``t`` paths together with an ``s``-``t`` cut meeting
    each of them in exactly one edge."""

    cut: frozenset[str]
    path_system: PathSystem

    def problems(self, D: RootedDigraph, s: str, t: str) -> list[str]:
        out = path_problems(D, self.path_system, s, t)
        for p in self.path_system:
            k = len(self.cut.intersection(p))
            if k != 1:
                out.append(f"path {list(p)} meets the cut in {k} edges")
        if t in D.reachable_from(s, removed=self.cut):
            out.append("cut does not separate")
        return out
