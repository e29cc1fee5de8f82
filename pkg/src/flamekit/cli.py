"""Command-line front end.

Exit codes: 0 = property holds / sweep clean, 1 = property fails,
2 = usage or input error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import __version__
from .construct import extend_to_large_flame
from .errors import CycleError, FlameKitError, NotAFlameError
from .flames import (g_membership, is_flame, is_large, largeness_certificate,
                     local_edge_connectivity)
from .flow import edge_connectivity
from .graph import parse_digraph, parse_edge_set, topological_order
from .linked import largest_v_linked_set
from .verifier import suites
from .verifier.instances import InstanceSpec, enumerate_instances

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

SUITES = ("greedoid", "szeszler", "matroid", "constructor", "lemma9-equiv", "linked-oracle",
          "linkage", "flow")
QUESTIONS = ("maximal-flames", "flame-extension-cyclic")

SUITE_DEFAULTS = {
    "greedoid": dict(n=3, m=5, p=2),
    "szeszler": dict(n=4, m=6, p=2),
    "matroid": dict(n=4, m=6, p=2),
    "lemma9-equiv": dict(n=4, m=6, p=2, canon=1),
    "linked-oracle": dict(n=4, m=8, p=1),
    "flow": dict(n=3, m=8, p=2),
    "constructor": dict(n=12, m=30, p=2),
    "linkage": dict(n=8, m=16, p=2),
}
QUESTION_DEFAULTS = {
    "maximal-flames": dict(n=3, m=6, p=2),
    "flame-extension-cyclic": dict(n=3, m=5, p=2),
}


class InputError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path):
    text = _read(path)
    try:
        return parse_digraph(text), hashlib.sha256(text.encode()).hexdigest()
    except FlameKitError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_edges(path, D):
    try:
        return parse_edge_set(_read(path), D)
    except FlameKitError as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_bounds(text, defaults):
    bounds = dict(defaults)
    if text:
        for item in text.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in ("n", "m", "p", "min", "canon"):
                raise InputError(f"bad bound {item!r}; use n=,m=,p=,min=,canon=")
            try:
                bounds[key] = int(value)
            except ValueError:
                raise InputError(f"bound {key} needs an integer") from None
    return bounds


def _spec(bounds, acyclic=False):
    try:
        return InstanceSpec(bounds["n"], bounds["m"], bounds.get("p", 1), acyclic_only=acyclic,
                            min_nonroot_vertices=bounds.get("min", 0),
                            canonical_only=bool(bounds.get("canon", 0)))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(args, report, lines):
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _report(command, digest, result, start):
    return {"command": command, "input_digest": digest, "result": result,
            "duration": round(time.perf_counter() - start, 6)}


def _fmt(ids):
    return "{" + ",".join(sorted(ids)) + "}"


# -- commands ------------------------------------------------------------

def cmd_analyze(args):
    start = time.perf_counter()
    D, digest = _load_graph(args.graph)
    try:
        topological_order(D)
        acyclic, cycle = True, None
    except CycleError as exc:
        acyclic, cycle = False, exc.cycle
    vertices = {}
    lines = [f"vertices: {len(D.vertices)}  edges: {len(D.edges)}  root: {D.root}",
             "acyclic: yes" if acyclic else f"acyclic: no (cycle {' '.join(cycle)})"]
    for v in D.nonroot:
        res = largest_v_linked_set(D, v)
        lam = local_edge_connectivity(D, v)
        vertices[v] = {"lambda": lam, "linked_set": sorted(res.linked_set),
                       "boundary": sorted(res.boundary)}
        lines.append(f"  {v}: lambda={lam}  X={_fmt(res.linked_set)}  |boundary|={len(res.boundary)}")
    if args.dot:
        lines.append(to_dot(D))
    result = {"acyclic": acyclic, "cycle": cycle, "vertices": vertices}
    _emit(args, _report(["analyze", args.graph], digest, result, start), lines)
    return EXIT_OK


def to_dot(D):
    out = ["digraph G {", f'  "{D.root}" [shape=doublecircle];']
    out += [f'  "{e.tail}" -> "{e.head}" [label="{e.id}"];' for e in D.edges]
    out += [f'  "{v}";' for v in D.vertices if not D.in_edges(v) and not D.out_edges(v)]
    out.append("}")
    return "\n".join(out)


def _paths_json(system):
    return system.to_lists()


def cmd_check(args):
    start = time.perf_counter()
    D, digest = _load_graph(args.graph)
    S = _load_edges(args.edges, D)
    if args.flame or args.g_member:
        cert = is_flame(D, S) if args.flame else g_membership(D, S)
        holds = bool(cert)
        kind = "flame" if args.flame else "g-member"
        result = {"property": kind, "holds": holds, "failed_at": cert.failed_at,
                  "witnesses": {v: _paths_json(w) for v, w in cert.witnesses.items()}}
        lines = [f"{kind}: {'holds' if holds else 'fails'}"]
        if holds:
            lines += [f"  {v}: {w}" for v, w in sorted(cert.witnesses.items())]
        else:
            lines.append(f"  fails at vertex {cert.failed_at}")
    else:
        holds = is_large(D, S)
        result = {"property": "large", "holds": holds}
        lines = [f"large: {'holds' if holds else 'fails'}"]
        if holds:
            cert = largeness_certificate(D, S)
            result["certificate"] = {v: {"paths": _paths_json(w.path_system), "cut": sorted(w.cut)}
                                     for v, w in cert.items()}
            lines += [f"  {v}: paths {w.path_system} cut {_fmt(w.cut)}" for v, w in sorted(cert.items())]
        else:
            DS = D.restrict(S)
            for v in D.nonroot:
                full, kept = edge_connectivity(D, D.root, v), edge_connectivity(DS, D.root, v)
                if full != kept:
                    result.update(failed_at=v, lambda_graph=full, lambda_subgraph=kept)
                    lines.append(f"  at {v}: lambda drops from {full} to {kept}")
                    break
    _emit(args, _report(["check", args.graph, args.edges], digest, result, start), lines)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_build(args):
    start = time.perf_counter()
    D, digest = _load_graph(args.graph)
    F = _load_edges(args.extend, D) if args.extend else frozenset()
    command = ["build", args.graph] + (["--extend", args.extend] if args.extend else [])
    try:
        L, trace = extend_to_large_flame(D, F)
    except CycleError as exc:
        _emit(args, _report(command, digest, {"error": "cyclic", "cycle": exc.cycle}, start),
              [f"error: digraph is cyclic; cycle: {' '.join(exc.cycle)}"])
        return EXIT_FAIL
    except NotAFlameError as exc:
        _emit(args, _report(command, digest, {"error": "not-a-flame", "vertex": exc.vertex}, start),
              [f"error: extension set is not a flame (fails at {exc.vertex})"])
        return EXIT_FAIL
    total = sum(local_edge_connectivity(D, v) for v in D.nonroot)
    result = {"flame": sorted(L), "size": len(L), "lambda_sum": total}
    lines = [f"large flame: {_fmt(L)}", f"size: {len(L)}  sum of lambda: {total}"]
    if args.trace:
        result["trace"] = [{"vertex": s.vertex, "linked_set": sorted(s.linked_set),
                            "link_paths": _paths_json(s.link_paths), "root_paths": _paths_json(s.root_paths),
                            "deleted": sorted(s.deleted), "kept": sorted(s.kept)} for s in trace.steps]
        lines += [f"  {s.vertex}: X={_fmt(s.linked_set)} kept={_fmt(s.kept)} deleted={_fmt(s.deleted)}"
                  for s in trace.steps]
    _emit(args, _report(command, digest, result, start), lines)
    return EXIT_OK


def _run_suite(name, bounds, count, seed):
    if name == "greedoid":
        spec = _spec(bounds)
        return suites.sweep(enumerate_instances(spec), suites.check_greedoid_exchange,
                            {"suite": name, **spec.to_dict()})
    if name in ("szeszler", "matroid"):
        spec = _spec(bounds, acyclic=True)
        check = suites.check_maximal_elements_large if name == "szeszler" else suites.check_matroid_bases
        return suites.sweep(enumerate_instances(spec), check, {"suite": name, **spec.to_dict()})
    if name == "linked-oracle":
        spec = _spec(bounds)
        return suites.sweep(enumerate_instances(spec), suites.check_largest_linked, {"suite": name, **spec.to_dict()})
    if name == "flow":
        spec = _spec(bounds)
        return suites.sweep(enumerate_instances(spec), suites.check_flow_oracle, {"suite": name, **spec.to_dict()})
    if name == "constructor":
        return suites.constructor_sweep(count, seed, bounds["n"], bounds["m"])
    if name == "lemma9-equiv":
        spec = _spec(bounds, acyclic=True)
        return suites.largeness_sweep(spec, count, seed)
    if name == "linkage":
        return suites.linkage_sweep(count, seed, bounds["n"], bounds["m"])
    raise InputError(f"unknown suite {name}")


def cmd_verify(args):
    start = time.perf_counter()
    bounds = parse_bounds(args.bounds, SUITE_DEFAULTS[args.suite])
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2**63)
    report = _run_suite(args.suite, bounds, args.random, seed)
    report.spec.setdefault("seed", seed)
    payload = report.to_json()
    lines = [report.summary()]
    lines += [f"  {v.claim}: {json.dumps(v.certificate)}" for v in report.violations[:20]]
    _emit(args, _report(["verify", args.suite, args.bounds or ""], None, payload, start), lines)
    return EXIT_OK if report.clean else EXIT_FAIL


def cmd_search(args):
    start = time.perf_counter()
    bounds = parse_bounds(args.bounds, QUESTION_DEFAULTS[args.question])
    try:
        out = open(args.out, "a", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    with out:
        if args.question == "maximal-flames":
            report = suites.search_question_maximal_flames(_spec(bounds, acyclic=True))
        else:
            report = suites.search_conjecture_flame_extension_cyclic(_spec(bounds))
        payload = report.to_json()
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    lines = [report.summary().replace("violations", "findings"), f"report appended to {args.out}"]
    _emit(args, _report(["search", args.question, args.bounds or ""], None, payload, start), lines)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="flamekit", description="Flames and large edge sets in rooted digraphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.set_defaults(func=func)
        return p

    p = add("analyze", cmd_analyze, "connectivities and largest linked sets")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true", help="also print the digraph in DOT format")

    p = add("check", cmd_check, "test an edge set")
    p.add_argument("graph")
    p.add_argument("edges")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--flame", action="store_true")
    mode.add_argument("--large", action="store_true")
    mode.add_argument("--g-member", action="store_true")

    p = add("build", cmd_build, "build a large flame of an acyclic digraph")
    p.add_argument("graph")
    p.add_argument("--extend", metavar="EDGE_SET", help="flame to extend")
    p.add_argument("--trace", action="store_true")

    p = add("verify", cmd_verify, "run a theorem suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--bounds", help="comma list such as n=3,m=5,p=2")
    p.add_argument("--random", type=int, default=100, metavar="N", help="random instances (random suites)")
    p.add_argument("--seed", type=int)

    p = add("search", cmd_search, "counterexample search for an open question")
    p.add_argument("--question", choices=QUESTIONS, required=True)
    p.add_argument("--bounds")
    p.add_argument("--out", required=True, help="findings file (JSON lines, appended)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FlameKitError) as exc:
        print(f"flamekit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
