"""``arborswap`` command-line front end.

Exit codes: 0 success or feasible, 1 infeasible or invalid sequence,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .digraph import Digraph
from .fileio import FormatError, InstanceFile, SequenceFile, write_dot_states
from .generate import generate_instance
from .matroid import demo_report
from .multiroot import check_feasible_multiroot, decompose_multiroot, reconfigure_multiroot
from .oracle import BudgetExceeded, exchange_graph, find_hard
from .packing import (
    CutViolation,
    DegreeViolation,
    FeasibilityVerdict,
    PackingInstance,
    SizeViolation,
    check_feasible,
    decompose,
)
from .reconfig import LemmaViolation, length_bound, reconfigure, verify_walk

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path: str) -> InstanceFile:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return InstanceFile.loads(text)
    except FormatError as exc:
        raise UsageError(str(exc)) from exc


def _multiroot(inst: InstanceFile, flag: bool) -> bool:
    if flag and inst.root is not None:
        raise UsageError("--multiroot given but the instance has a root")
    return inst.root is None


def _verdict(inst: InstanceFile, F: frozenset[int]) -> FeasibilityVerdict:
    D = inst.digraph
    if inst.root is None:
        return check_feasible_multiroot(inst.k, D, F)
    return check_feasible(PackingInstance(D, inst.k, inst.root), F)


def _describe(verdict: FeasibilityVerdict) -> dict:
    v = verdict.violation
    if v is None:
        return {"feasible": True}
    out: dict = {"feasible": False}
    if isinstance(v, DegreeViolation):
        out["certificate"] = {
            "type": "degree",
            "vertex": v.vertex,
            "indegree": v.indegree,
            "expected": v.expected,
        }
    elif isinstance(v, CutViolation):
        out["certificate"] = {
            "type": "cut",
            "vertices": sorted(v.vertices),
            "entering_arcs": list(v.arcs),
            "required": v.required,
        }
    elif isinstance(v, SizeViolation):
        out["certificate"] = {"type": "size", "size": v.size, "expected": v.expected}
    return out


def _emit(obj, out: Optional[str]) -> None:
    text = json.dumps(obj, indent=2) if not isinstance(obj, str) else obj
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _named_sets(inst: InstanceFile, which: str) -> dict[str, frozenset[int]]:
    sets = {name: F for name, F in (("S", inst.S), ("T", inst.T)) if F is not None}
    if which == "all":
        return {"arcs": frozenset(range(len(inst.arcs)))}
    if which == "auto":
        return sets or {"arcs": frozenset(range(len(inst.arcs)))}
    if which not in sets:
        raise UsageError(f"instance has no {which}")
    return {which: sets[which]}


def cmd_check(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _multiroot(inst, args.multiroot)
    report = {}
    for name, F in _named_sets(inst, args.set).items():
        report[name] = _describe(_verdict(inst, F))
    _emit(report, args.output)
    return OK if all(r["feasible"] for r in report.values()) else FAIL


def cmd_decompose(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    _multiroot(inst, args.multiroot)
    name, F = next(iter(_named_sets(inst, args.set).items()))
    verdict = _verdict(inst, F)
    if not verdict:
        _emit({name: _describe(verdict)}, args.output)
        return FAIL
    D = inst.digraph
    if inst.root is None:
        parts = decompose_multiroot(inst.k, D, F)
    else:
        parts = decompose(PackingInstance(D, inst.k, inst.root), F)
    _emit({"set": name, "arborescences": [sorted(p) for p in parts]}, args.output)
    return OK


def _require_pair(inst: InstanceFile) -> tuple[frozenset[int], frozenset[int]]:
    if inst.S is None or inst.T is None:
        raise UsageError("instance needs both S and T")
    return inst.S, inst.T


def cmd_reconfigure(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    multi = _multiroot(inst, args.multiroot)
    S, T = _require_pair(inst)
    for name, F in (("S", S), ("T", T)):
        verdict = _verdict(inst, F)
        if not verdict:
            print(json.dumps({name: _describe(verdict)}), file=sys.stderr)
            return FAIL
    D = inst.digraph
    try:
        if multi:
            seq = reconfigure_multiroot(inst.k, D, S, T)
        else:
            seq = reconfigure(PackingInstance(D, inst.k, inst.root), S, T)
    except LemmaViolation as exc:  # pragma: no cover - would be a bug
        print(f"internal error: {exc}", file=sys.stderr)
        return FAIL
    if args.trace:
        for i, (step, trace) in enumerate(zip(seq.steps, seq.traces)):
            row = {"step": i, "remove": step.remove, "add": step.add, "kind": step.kind.value}
            if trace is not None:
                row.update(trace.to_json())
            print(json.dumps(row), file=sys.stderr)
    if args.emit_dot:
        write_dot_states(D, seq, T, args.emit_dot)
    out = SequenceFile.from_sequence(inst, seq, length_bound(len(S - T), inst.k))
    _emit(out.dumps(), args.output)
    return OK


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _load(args.instance)
    S, T = _require_pair(inst)
    try:
        text = Path(args.sequence).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.sequence}: {exc.strerror}") from exc
    try:
        sf = SequenceFile.loads(text)
    except FormatError as exc:
        raise UsageError(str(exc)) from exc
    problems = []
    if sf.instance_digest != inst.digest():
        problems.append("instance digest mismatch")
    m = len(inst.arcs)
    if any(not (0 <= s.remove < m and 0 <= s.add < m) for s in sf.steps):
        problems.append("sequence references unknown arcs")
    elif not verify_walk(S, T, S, sf.steps, lambda F: _verdict(inst, F).feasible):
        problems.append("sequence is not a feasible walk from S to T")
    if sf.length > sf.bound:
        problems.append(f"length {sf.length} exceeds reported bound {sf.bound}")
    print(json.dumps({"valid": not problems, "length": sf.length, "problems": problems}))
    return FAIL if problems else OK


def _fmt_distance(d: float):
    return None if d == math.inf else int(d)


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.find_hard:
        seed = _env_seed(args.seed)
        found = find_hard(args.budget, k=args.k, seed=seed, max_difference=args.max_difference)
        if not found:
            _emit({"found": False, "budget": args.budget, "seed": seed}, args.output)
            return FAIL
        h = found[0]
        D = h.digraph
        inst = InstanceFile(D.n, D.root, h.k, tuple((a.tail, a.head) for a in D.arcs), h.S, h.T)
        report = {
            "found": True,
            "distance": h.distance,
            "difference": h.difference,
            "instance": inst.to_json(),
        }
        _emit(report, args.output)
        return OK
    if args.instance is None:
        raise UsageError("oracle needs an instance unless --find-hard is given")
    inst = _load(args.instance)
    D = inst.digraph
    try:
        G = exchange_graph(D, inst.k, inst.root, max_arcs=args.max_arcs)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from exc
    report: dict = {"feasible_sets": len(G.nodes)}
    status = OK
    if args.connectivity or not args.distance:
        comps = G.components()
        report["components"] = len(comps)
        report["connected"] = len(comps) <= 1
    if args.distance:
        S, T = _require_pair(inst)
        if S not in G.index or T not in G.index:
            report["distance"] = None
            report["error"] = "S or T is infeasible"
            status = FAIL
        else:
            report["distance"] = _fmt_distance(G.distance(S, T))
            report["difference"] = len(S - T)
    _emit(report, args.output)
    return status


def cmd_matroid_demo(args: argparse.Namespace) -> int:
    lines, ok = demo_report()
    print("\n".join(lines))
    return OK if ok else FAIL


def _env_seed(seed: int) -> int:
    raw = os.environ.get("ARBOR_SEED")
    if raw is None or raw == "":
        return seed
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"ARBOR_SEED must be an integer, got {raw!r}") from exc


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1 or args.k < 1 or args.extra < 0:
        raise UsageError("need n >= 1, k >= 1 and extra >= 0")
    if not args.multiroot and not 0 <= args.root < args.n:
        raise UsageError(f"root {args.root} is not a vertex")
    g = generate_instance(
        args.n, args.k, _env_seed(args.seed), args.extra, multiroot=args.multiroot, root=args.root
    )
    D: Digraph = g.digraph
    inst = InstanceFile(D.n, D.root, g.k, tuple((a.tail, a.head) for a in D.arcs), g.S, g.T)
    _emit(inst.dumps(), args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arborswap",
        description="Arborescence packings: feasibility, decomposition and reconfiguration.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, instance: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, description=help)
        if instance:
            sp.add_argument("instance", help="instance JSON file ('-' for stdin)")
        sp.add_argument("-o", "--output", help="write the result here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    c = add("check", cmd_check, "decide feasibility of S and T (or all arcs)")
    c.add_argument("--set", choices=["auto", "S", "T", "all"], default="auto")
    c.add_argument("--multiroot", action="store_true")

    d = add("decompose", cmd_decompose, "split a feasible set into k arborescences")
    d.add_argument("--set", choices=["auto", "S", "T", "all"], default="auto")
    d.add_argument("--multiroot", action="store_true")

    r = add("reconfigure", cmd_reconfigure, "compute an exchange sequence from S to T")
    r.add_argument("--multiroot", action="store_true")
    r.add_argument("--emit-dot", metavar="DIR", help="write state_<i>.dot files into DIR")
    r.add_argument("--trace", action="store_true", help="per-step JSON lines on stderr")

    v = add("verify", cmd_verify, "replay a sequence file against an instance")
    v.add_argument("sequence", help="sequence JSON file")

    o = sub.add_parser("oracle", help="brute-force exchange graph reports")
    o.add_argument("instance", nargs="?")
    o.add_argument("-o", "--output")
    o.add_argument("--distance", action="store_true", help="shortest exchange distance S to T")
    o.add_argument("--connectivity", action="store_true", help="component count")
    o.add_argument("--find-hard", action="store_true", help="search for distance > |S - T|")
    o.add_argument("--budget", type=int, default=5000)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--k", type=int, default=2)
    o.add_argument("--max-difference", type=int, default=2)
    o.add_argument("--max-arcs", type=int, default=16)
    o.set_defaults(func=cmd_oracle)

    add("matroid-demo", cmd_matroid_demo, "verify the small matroid pair example", instance=False)

    g = add("gen", cmd_gen, "random instance with two feasible sets", instance=False)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, default=0, help="overridden by ARBOR_SEED")
    g.add_argument("--extra", type=int, default=0, help="additional random arcs")
    g.add_argument("--root", type=int, default=0)
    g.add_argument("--multiroot", action="store_true", help="arbitrary roots; root is null")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"arborswap: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
