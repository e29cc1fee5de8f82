"""Executable theorem checks, open-question searches and their reports.

Every check returns a list of :class:`Violation`.  A violation carries a
JSON-friendly certificate that :func:`reverify` re-checks with the
brute-force oracles only.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..construct import extend_to_large_flame
from ..errors import BoundExceededError, CycleError
from ..flames import flame_failure, g_failure, is_flame, is_large, local_edge_connectivity, maximal_g_elements
from ..flow import edge_connectivity, linkage_merge, max_brute, max_edge_disjoint_paths
from ..graph import RootedDigraph, parse_digraph, serialize_digraph, topological_order
from ..linked import largest_v_linked_set
from ..paths import PathSystem, path_problems
from . import oracles
from .instances import (InstanceSpec, enumerate_instances, random_digraph, random_flame,
                        random_instances)

GREEDOID = "greedoid-exchange"
SZESZLER = "maximal-g-elements-large"
MATROID = "matroid-basis-exchange"
CONSTRUCTOR = "constructor"
LARGENESS = "largeness-characterization"
LINKED = "largest-linked-set"
QUESTION = "question-maximal-flames"
CONJECTURE = "conjecture-flame-extension"


@dataclass
class Violation:
    instance: RootedDigraph
    claim: str
    certificate: dict

    def to_json(self) -> dict:
        return {"instance": serialize_digraph(self.instance), "claim": self.claim,
                "certificate": self.certificate}

    @classmethod
    def from_json(cls, data: dict) -> "Violation":
        return cls(parse_digraph(data["instance"]), data["claim"], data["certificate"])


def _ids(edge_set):
    return sorted(edge_set)


def _require_bound(D):
    if len(D.edges) > max_brute():
        raise BoundExceededError(f"{len(D.edges)} edges exceed the brute-force bound {max_brute()}")


def all_flames(D: RootedDigraph) -> set[frozenset]:
    """Every flame of ``D``.

    Flames lie in ``G(D)``, which is closed under taking subsets, so a set is
    only examined when all its one-smaller subsets are in ``G(D)``.
    """
    _require_bound(D)
    ids = sorted(D.edge_ids)
    members = {frozenset()}
    flames = {frozenset()}
    for k in range(1, len(ids) + 1):
        for c in itertools.combinations(ids, k):
            S = frozenset(c)
            if not all(S - {e} in members for e in S) or g_failure(D, S) is not None:
                continue
            members.add(S)
            if flame_failure(D, S) is None:
                flames.add(S)
    return flames


# -- theorem checks ----------------------------------------------------

def check_greedoid_exchange(D: RootedDigraph) -> list[Violation]:
    flames = all_flames(D)
    out = []
    for F, G in itertools.product(flames, repeat=2):
        if len(F) < len(G) and not any(F | {e} in flames for e in G - F):
            out.append(Violation(D, GREEDOID, {"smaller": _ids(F), "larger": _ids(G)}))
    return sorted(out, key=lambda v: json.dumps(v.certificate))


def check_maximal_elements_large(D: RootedDigraph) -> list[Violation]:
    topological_order(D)
    out = []
    for S in maximal_g_elements(D):
        if not is_large(D, S):
            v = next(v for v in D.nonroot
                     if edge_connectivity(D.restrict(S), D.root, v) != local_edge_connectivity(D, v))
            out.append(Violation(D, SZESZLER, {"set": _ids(S), "vertex": v}))
    return out


def maximal_flames(D: RootedDigraph) -> list[frozenset]:
    flames = all_flames(D)
    return sorted((F for F in flames if not any(F | {e} in flames for e in D.edge_ids - F)), key=sorted)


def check_matroid_bases(D: RootedDigraph) -> list[Violation]:
    topological_order(D)
    bases = maximal_flames(D)
    basis_set = set(bases)
    out = []
    for B1, B2 in itertools.product(bases, repeat=2):
        for e in sorted(B1 - B2):
            if not any((B1 - {e}) | {f} in basis_set for f in B2 - B1):
                out.append(Violation(D, MATROID, {"basis": _ids(B1), "other": _ids(B2), "removed": e}))
    return out


def check_constructor(D: RootedDigraph, F=frozenset(), order=None) -> list[Violation]:
    F = frozenset(F)
    L, trace = extend_to_large_flame(D, F, order)
    failures = []
    if not F <= L:
        failures.append("does-not-contain-F")
    if not is_flame(D, L):
        failures.append("not-a-flame")
    if not is_large(D, L):
        failures.append("not-large")
    total = sum(local_edge_connectivity(D, v) for v in D.nonroot)
    if len(L) != total:
        failures.append("size-differs-from-connectivity-sum")
    for v in D.nonroot:
        if len(D.restrict(L).in_edges(v)) != local_edge_connectivity(D, v):
            failures.append(f"indegree-mismatch:{v}")
    failures += ["trace:" + p for p in trace.problems(D, F)]
    if not failures:
        return []
    cert = {"flame": _ids(F), "result": _ids(L), "order": list(trace.order), "failures": failures}
    return [Violation(D, CONSTRUCTOR, cert)]


def check_largeness_characterization(D: RootedDigraph, L) -> list[Violation]:
    a, b = is_large(D, L, "lambda"), is_large(D, L, "char")
    if a == b:
        return []
    return [Violation(D, LARGENESS, {"set": _ids(L), "lambda": a, "char": b})]


def check_largest_linked(D: RootedDigraph, linked=None) -> list[Violation]:
    """Residual-based largest v-linked sets against the subset sweep, plus nesting."""
    out = []
    sets = {v: largest_v_linked_set(D, v).linked_set for v in D.nonroot}
    for v in D.nonroot:
        brute = oracles.brute_force_largest_v_linked(D, v, linked)
        if brute != sets[v]:
            out.append(Violation(D, LINKED, {"vertex": v, "residual": sorted(sets[v]),
                                             "brute": sorted(brute)}))
        for w in sets[v]:
            if not sets[w] <= sets[v]:
                out.append(Violation(D, LINKED, {"vertex": v, "nested": w, "residual": sorted(sets[v]),
                                                 "inner": sorted(sets[w])}))
    return out


# -- open-question searches ------------------------------------------------

def _separating_cut(D, S, v):
    # a minimum cut in D(S) is smaller than the number of S-edges entering v
    return _ids(max_edge_disjoint_paths(D.restrict(S), D.root, v).cut)


def question_findings(D: RootedDigraph) -> list[Violation]:
    """Maximal members of G(D) that are not flames (acyclic ``D``)."""
    out = []
    for S in maximal_g_elements(D):
        v = flame_failure(D, S)
        if v is not None:
            out.append(Violation(D, QUESTION, {"set": _ids(S), "vertex": v, "cut": _separating_cut(D, S, v)}))
    return out


def conjecture_findings(D: RootedDigraph) -> list[Violation]:
    """Flames with no large flame containing them."""
    flames = all_flames(D)
    large = [L for L in flames if is_large(D, L)]
    return [Violation(D, CONJECTURE, {"flame": _ids(F)})
            for F in sorted(flames, key=sorted) if not any(F <= L for L in large)]


# -- sweeps and reports -----------------------------------------------------

@dataclass
class SweepReport:
    spec: dict
    instance_count: int = 0
    violations: list = field(default_factory=list)
    runtime: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"spec": self.spec, "instance_count": self.instance_count,
                "violations": [v.to_json() for v in self.violations], "runtime": self.runtime}

    def summary(self) -> str:
        return (f"{self.spec.get('suite', self.spec.get('question', 'sweep'))}: "
                f"{self.instance_count} instances, {len(self.violations)} violations, "
                f"{self.runtime:.1f}s")


def sweep(instances: Iterable[RootedDigraph], check: Callable[[RootedDigraph], list],
          spec: dict) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(spec)
    for D in instances:
        report.instance_count += 1
        report.violations += check(D)
    report.violations.sort(key=lambda v: (serialize_digraph(v.instance), json.dumps(v.certificate)))
    report.runtime = time.perf_counter() - start
    return report


def search_question_maximal_flames(spec: InstanceSpec) -> SweepReport:
    acyclic = InstanceSpec(**{**spec.to_dict(), "acyclic_only": True})
    return sweep(enumerate_instances(acyclic), question_findings,
                 {"question": QUESTION, **acyclic.to_dict()})


def _has_cycle(D):
    try:
        topological_order(D)
    except CycleError:
        return True
    return False


def search_conjecture_flame_extension_cyclic(spec: InstanceSpec) -> SweepReport:
    instances = (D for D in enumerate_instances(spec) if _has_cycle(D))
    return sweep(instances, conjecture_findings, {"question": CONJECTURE, **spec.to_dict()})


def constructor_sweep(count: int, seed: int, max_vertices: int = 12, max_edges: int = 30) -> SweepReport:
    """Random DAGs, each run with the empty flame and with a randomly grown one."""
    rng = random.Random(seed ^ 0x5EED)

    def check(D):
        return check_constructor(D) + check_constructor(D, random_flame(D, rng))

    return sweep(random_instances(count, max_vertices, max_edges, seed), check,
                 {"suite": "constructor", "count": count, "seed": seed,
                  "max_vertices": max_vertices, "max_edges": max_edges})


# -- independent re-verification -----------------------------------------

def reverify(v: Violation) -> bool:
    """Re-check a violation's certificate using only the brute-force oracles."""
    D, c = v.instance, v.certificate
    if v.claim == GREEDOID:
        F, G = frozenset(c["smaller"]), frozenset(c["larger"])
        return (len(F) < len(G) and oracles.brute_is_flame(D, F) and oracles.brute_is_flame(D, G)
                and not any(oracles.brute_is_flame(D, F | {e}) for e in G - F))
    if v.claim in (SZESZLER, QUESTION):
        S = frozenset(c["set"])
        if not oracles.brute_in_g(D, S) or any(oracles.brute_in_g(D, S | {e}) for e in D.edge_ids - S):
            return False
        if v.claim == SZESZLER:
            u = c["vertex"]
            return oracles.brute_lambda(D.restrict(S), D.root, u) != oracles.brute_lambda(D, D.root, u)
        u, cut = c["vertex"], frozenset(c["cut"])
        indeg = len([e for e in D.in_edges(u) if e.id in S])
        return (cut <= S and len(cut) < indeg and oracles.separates(D.restrict(S), cut, D.root, u)
                and not oracles.brute_is_flame(D, S))
    if v.claim == MATROID:
        flames = oracles.brute_flames(D)
        bases = {F for F in flames if not any(F | {e} in flames for e in D.edge_ids - F)}
        B1, B2, e = frozenset(c["basis"]), frozenset(c["other"]), c["removed"]
        return (B1 in bases and B2 in bases and e in B1 - B2
                and not any((B1 - {e}) | {f} in bases for f in B2 - B1))
    if v.claim == CONSTRUCTOR:
        F, L = frozenset(c["flame"]), frozenset(c["result"])
        total = sum(oracles.brute_lambda(D, D.root, u) for u in D.nonroot)
        return (not F <= L or not oracles.brute_is_flame(D, L) or not oracles.brute_is_large(D, L)
                or len(L) != total)
    if v.claim == LARGENESS:
        return True  # two library methods disagreeing is itself the finding
    if v.claim == LINKED:
        u = c["vertex"]
        if "nested" in c:
            return not frozenset(c["inner"]) <= frozenset(c["residual"])
        brute = oracles.brute_force_largest_v_linked(D, u, linked=oracles.brute_v_linked)
        return brute != frozenset(c["residual"])
    if v.claim == CONJECTURE:
        F = frozenset(c["flame"])
        if not oracles.brute_is_flame(D, F):
            return False
        rest = sorted(D.edge_ids - F)
        return not any(oracles.brute_is_flame(D, F | set(extra)) and oracles.brute_is_large(D, F | set(extra))
                       for k in range(len(rest) + 1) for extra in itertools.combinations(rest, k))
    raise ValueError(f"unknown claim {v.claim!r}")


# -- flow-level suites ---------------------------------------------------------

FLOW = "max-flow-oracle"
LINKAGE = "linkage-merge"


def check_flow_oracle(D: RootedDigraph) -> list[Violation]:
    """Max path families against path enumeration, for every ordered vertex pair."""
    out = []
    for s, t in itertools.permutations(D.vertices, 2):
        w = max_edge_disjoint_paths(D, s, t)
        brute = oracles.brute_lambda(D, s, t)
        problems = w.problems(D, s, t)
        if len(w.path_system) != brute or len(w.cut) != brute:
            problems.append(f"size {len(w.path_system)} / cut {len(w.cut)} but brute force finds {brute}")
        if not oracles.separates(D, w.cut, s, t):
            problems.append("cut does not separate (plain search)")
        if problems:
            out.append(Violation(D, FLOW, {"source": s, "sink": t, "paths": w.path_system.to_lists(),
                                           "cut": _ids(w.cut), "problems": problems}))
    return out


def random_path_system(D: RootedDigraph, s: str, t: str, rng: random.Random, tries: int = 4) -> PathSystem:
    """Edge-disjoint ``s``-``t`` paths picked by randomized depth-first search."""
    used: set[str] = set()
    paths = []
    for _ in range(tries):
        path = _random_path(D, s, t, used, rng)
        if path:
            paths.append(tuple(path))
            used.update(path)
    return PathSystem(tuple(paths))


def _random_path(D, s, t, used, rng):
    stack = [(s, [], {s})]
    while stack:
        u, path, seen = stack.pop()
        if u == t:
            return path
        steps = [e for e in D.out_edges(u) if e.id not in used and e.head not in seen]
        rng.shuffle(steps)
        for e in steps:
            stack.append((e.head, path + [e.id], seen | {e.head}))
    return None


def check_linkage(D: RootedDigraph, s: str, t: str, P: PathSystem, Q: PathSystem) -> list[Violation]:
    R = linkage_merge(D, s, t, P, Q)
    problems = path_problems(D, R, s, t)
    if not P.initial_edges() <= R.initial_edges():
        problems.append("initial edges of P missing")
    if not Q.terminal_edges() <= R.terminal_edges():
        problems.append("terminal edges of Q missing")
    if not problems:
        return []
    return [Violation(D, LINKAGE, {"source": s, "sink": t, "P": P.to_lists(), "Q": Q.to_lists(),
                                   "R": R.to_lists(), "problems": problems})]


def linkage_sweep(count: int, seed: int, max_vertices: int = 8, max_edges: int = 16) -> SweepReport:
    rng = random.Random(seed)
    start = time.perf_counter()
    report = SweepReport({"suite": "linkage", "count": count, "seed": seed,
                          "max_vertices": max_vertices, "max_edges": max_edges})
    while report.instance_count < count:
        n = rng.randint(1, max_vertices - 1)
        D = random_digraph(InstanceSpec(n, rng.randint(1, max_edges), 2), rng)
        s, t = rng.sample(list(D.vertices), 2)
        report.instance_count += 1
        P = random_path_system(D, s, t, rng)
        Q = random_path_system(D, s, t, rng)
        report.violations += check_linkage(D, s, t, P, Q)
    report.runtime = time.perf_counter() - start
    return report


def random_large_pairs(count: int, seed: int, max_vertices: int = 7, max_edges: int = 12):
    """Random ``(D, L)`` pairs on possibly cyclic digraphs, ``L`` of random density."""
    rng = random.Random(seed)
    for D in random_instances(count, max_vertices, max_edges, seed, acyclic=False):
        keep = rng.random()
        yield D, frozenset(e for e in sorted(D.edge_ids) if rng.random() < keep)


def largeness_sweep(spec: InstanceSpec, count: int, seed: int) -> SweepReport:
    """Both largeness tests on every edge subset of every enumerated instance,
    then on ``count`` random pairs."""
    start = time.perf_counter()
    report = SweepReport({"suite": "lemma9-equiv", "random_pairs": count, "seed": seed, **spec.to_dict()})
    for D in enumerate_instances(spec):
        ids = sorted(D.edge_ids)
        for k in range(len(ids) + 1):
            for L in itertools.combinations(ids, k):
                report.instance_count += 1
                report.violations += check_largeness_characterization(D, L)
    for D, L in random_large_pairs(count, seed):
        report.instance_count += 1
        report.violations += check_largeness_characterization(D, L)
    report.runtime = time.perf_counter() - start
    return report
