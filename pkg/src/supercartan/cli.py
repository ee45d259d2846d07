"""Command line interface.  Vertices are numbered from 1 on the command line.

Exit codes: 0 verdict produced, 1 verdict ``no``/``fails``, 2 truncated,
64 usage error, 65 data error, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify, families, freelie, growth, orbit, reflection
from .cartan import CartanSpec
from .conditions import check_lm23
from .errors import BranchClassificationFailure, CartanError
from .scalar import format_scalar
from .specfile import orbit_to_dot, parse_specfile, print_spec, to_dot

EXIT_OK, EXIT_NO, EXIT_TRUNCATED = 0, 1, 2
EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 64, 65, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x) -> str:
    return format_scalar(x)


def _matrix(rows) -> list[list[str]]:
    return [[_fmt(x) for x in row] for row in rows]


def _spec_json(s: CartanSpec) -> dict:
    return {"n": s.n, "parity": "".join(map(str, s.parity)), "entries": _matrix(s.entries)}


def _read_spec(path: str) -> CartanSpec:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CartanError(f"cannot read {path}: {exc.strerror}") from None
    return parse_specfile(text).spec


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream
        self.data: dict = {}

    def text(self, line: str = "") -> None:
        if self.fmt == "text":
            print(line, file=self.stream)

    def put(self, key: str, value) -> None:
        self.data[key] = value

    def finish(self) -> None:
        if self.fmt == "json":
            json.dump(self.data, self.stream, indent=2, ensure_ascii=False)
            print(file=self.stream)


def _vertex(spec: CartanSpec, v: int) -> int:
    if not 1 <= v <= spec.n:
        raise UsageError(f"vertex {v} out of range 1..{spec.n}")
    return v - 1


# -- subcommands ----------------------------------------------------------------

def cmd_reflect(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    state = reflection.BaseState.initial(spec)
    for v in args.vertices:
        k = _vertex(spec, v)
        if args.even:
            state = reflection.even_reflect(state, k)
        else:
            state, _ = reflection.odd_reflect(state, k)
    out.text(print_spec(state.spec).rstrip())
    out.text("# roots (rows, in original simple roots):")
    for row in state.R:
        out.text("#   " + " ".join(map(str, row)))
    out.text("# coroots (rows, in original coroots):")
    for row in state.H:
        out.text("#   " + " ".join(_fmt(x) for x in row))
    if state.any_singular:
        out.text("# a singular reflection was applied")
    out.put("spec", _spec_json(state.spec))
    out.put("R", [list(r) for r in state.R])
    out.put("H", _matrix(state.H))
    out.put("singular", state.any_singular)
    return EXIT_OK


def _write_orbit_dot(directory: str, nodes, edges) -> None:
    try:
        os.makedirs(directory, exist_ok=True)
        with open(os.path.join(directory, "orbit.dot"), "w", encoding="utf-8") as fh:
            fh.write(orbit_to_dot(nodes, edges))
        for i, spec in enumerate(nodes, 1):
            with open(os.path.join(directory, f"node{i}.dot"), "w", encoding="utf-8") as fh:
                fh.write(to_dot(spec, f"node{i}"))
    except OSError as exc:
        raise CartanError(f"cannot write dot files to {directory}: {exc.strerror}") from None


def cmd_orbit(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    g = orbit.explore(spec, odd_only=not args.even, allow_singular=args.allow_singular,
                      max_depth=args.max_depth, max_states=args.max_states)
    keys = sorted(g.nodes, key=lambda k: (g.depth[k], k))
    index = {k: i + 1 for i, k in enumerate(keys)}
    out.text(f"status: {g.status}")
    out.text(f"matrices: {len(g)}")
    out.text(f"max depth: {g.max_depth_reached}")
    out.text(f"singular vertex seen: {'yes' if g.any_singular_vertex else 'no'}")
    out.text(f"all GCM: {'yes' if g.all_nodes_gcm else 'no'}")
    for k in keys:
        out.text(f"  #{index[k]} depth {g.depth[k]}: {g.nodes[k]}")
    for e in g.edges:
        if e.source != e.target or e.kind == "even":
            out.text(f"  #{index[e.source]} --{e.kind} {e.vertex + 1}{' (singular)' if e.singular else ''}--> #{index[e.target]}")
    out.put("status", g.status)
    out.put("nodes", [dict(_spec_json(g.nodes[k]), depth=g.depth[k]) for k in keys])
    out.put("edges", [{"source": index[e.source], "target": index[e.target], "vertex": e.vertex + 1,
                       "kind": e.kind, "singular": e.singular} for e in g.edges])
    if args.dot:
        _write_orbit_dot(args.dot, [g.nodes[k] for k in keys],
                         [(index[e.source], index[e.target], e.vertex + 1, e.kind, e.singular) for e in g.edges])
        out.text(f"dot files written to {args.dot}")
    return EXIT_TRUNCATED if g.truncated else EXIT_OK


def _verdict_json(v: classify.Verdict) -> dict:
    d = {"answer": v.answer.value, "matrices": len(v.orbit), "status": v.orbit.status}
    if v.witness is not None:
        d["witness"] = _spec_json(v.witness)
    if v.depth_verified is not None:
        d["depth_verified"] = v.depth_verified
    return d


def cmd_classify(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    report = check_lm23(spec)
    out.text("conditions:")
    for name, ok in report.holds().items():
        out.text(f"  {name}: {'pass' if ok else 'fail'}")
    out.text(f"GCM: {'yes' if report.gcm else 'no'}")
    out.put("conditions", report.holds())
    out.put("gcm", report.gcm)
    verdicts = {
        "admissible": classify.is_admissible(spec, args.max_depth, args.max_states),
        "regular_kac_moody": classify.is_regular_kac_moody(spec, args.max_depth, args.max_states),
    }
    for name, v in verdicts.items():
        out.text(f"{name}: {v}")
        out.put(name, _verdict_json(v))
    answers = {v.answer for v in verdicts.values()}
    if classify.Answer.NO in answers:
        return EXIT_NO
    if classify.Answer.TRUNCATED in answers:
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_identify(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    tag = classify.identify_family(spec, args.max_depth)
    out.text(str(tag))
    out.put("family", tag.name)
    out.put("params", [str(p) for p in tag.params])
    return EXIT_OK


def cmd_qsolve(args, out: Output) -> int:
    sol = families.solve_Q(args.m, args.n, args.t)
    p, q, r = sol.quadratic
    out.text(f"quadratic in a: ({p}) a^2 + ({q}) a + ({r}) = 0")
    out.text(f"irrational: {'yes' if sol.irrational else 'no'}")
    out.put("quadratic", [str(p), str(q), str(r)])
    out.put("irrational", sol.irrational)
    for name in ("minus", "plus"):
        x = sol.branch(name)
        res = sol.residuals(name)
        d = x.a * x.b * x.c
        out.text(f"Q{name}: a = {_fmt(x.a)}, b = {_fmt(x.b)}, c = {_fmt(x.c)}")
        out.text(f"  residuals: {', '.join(_fmt(v) for v in res)}")
        out.text(f"  abc = {_fmt(d)}, det = 1 + abc = {_fmt(1 + d)}")
        out.put(name, {"a": _fmt(x.a), "b": _fmt(x.b), "c": _fmt(x.c),
                       "residuals": [_fmt(v) for v in res], "abc": _fmt(d), "det": _fmt(1 + d)})
    return EXIT_OK


def cmd_dims(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    g = freelie.graded_dims(spec, args.N)
    out.text("m  dim g_m")
    for m, d in enumerate(g.dims):
        out.text(f"{m:<2} {d}")
    if g.total is not None:
        out.text(f"total dimension: {g.total}")
    else:
        out.text("no vanishing degree found up to N")
    out.put("dims", list(g.dims))
    out.put("total", g.total)
    return EXIT_OK


def cmd_growth(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    ev = growth.finite_growth_evidence(spec, args.max_depth)
    pr = ev.principal
    out.text(f"principal roots ({len(pr)}, bound 2n = {ev.bound}, search {'complete' if pr.complete else 'truncated'}):")
    for r in pr.roots:
        out.text(f"  {r}   coroot ({' '.join(_fmt(x) for x in r.coroot)})")
    out.text(f"B = {ev.matrix}")
    for block, t in ev.blocks:
        out.text(f"  block {[i + 1 for i in block]}: {t.value if t else 'not an even GCM'}")
    out.text(f"verdict: {ev.verdict.value}")
    for reason in ev.reasons:
        out.text(f"  {reason}")
    out.put("principal_roots", [list(r.root) for r in pr.roots])
    out.put("complete", pr.complete)
    out.put("B", _matrix(ev.matrix.B))
    out.put("blocks", [{"indices": [i + 1 for i in b], "type": t.value if t else None} for b, t in ev.blocks])
    out.put("verdict", ev.verdict.value)
    if args.N:
        gd = freelie.graded_dims(spec, args.N)
        gc = growth.growth_classify(gd)
        out.text(f"graded dims: {' '.join(map(str, gd.dims))}")
        out.text(f"growth of graded dims: {gc}")
        out.put("dims", list(gd.dims))
        out.put("growth", gc.kind.value)
    return EXIT_NO if ev.verdict is growth.GrowthVerdict.FAILS else EXIT_OK


def cmd_scan2(args, out: Output) -> int:
    if args.lo > args.hi:
        raise UsageError("lo must not exceed hi")
    result = classify.two_vertex_scan(args.lo, args.hi, args.max_depth)
    rows = []
    for a, entry in result.items():
        if entry.positive:
            out.text(f"a = {a}: regular Kac-Moody, {entry.tag}")
        else:
            w = entry.reflected_entry
            out.text(f"a = {a}: rejected, reflected label -a/(a+1) = {_fmt(w)}")
        rows.append({"a": a, "positive": entry.positive, "tag": str(entry.tag),
                     "reflected": None if entry.reflected_entry is None else _fmt(entry.reflected_entry)})
    out.put("scan", rows)
    return EXIT_OK


def cmd_dot(args, out: Output) -> int:
    spec = _read_spec(args.spec)
    out.text(to_dot(spec).rstrip())
    out.put("dot", to_dot(spec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="supercartan", description="Exact workbench for contragredient Lie superalgebras.")
    p.add_argument("--max-depth", type=int, default=classify.DEFAULT_DEPTH)
    p.add_argument("--max-states", type=int, default=classify.DEFAULT_MAX_STATES)
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("reflect", help="reflect at one or more vertices in sequence")
    s.add_argument("spec")
    s.add_argument("vertices", type=int, nargs="+")
    s.add_argument("--even", action="store_true", help="even reflections instead of odd")
    s.set_defaults(func=cmd_reflect)

    s = sub.add_parser("orbit", help="explore the reflection orbit")
    s.add_argument("spec")
    s.add_argument("--even", action="store_true", help="include even reflections")
    s.add_argument("--allow-singular", action="store_true")
    s.add_argument("--dot", metavar="DIR", help="write orbit.dot and one diagram per node into DIR")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("classify", help="conditions, admissibility and regular Kac-Moody test")
    s.add_argument("spec")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("identify", help="name the family")
    s.add_argument("spec")
    s.set_defaults(func=cmd_identify)

    s = sub.add_parser("qsolve", help="solve the Q system for m n t")
    for name in ("m", "n", "t"):
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_qsolve)

    s = sub.add_parser("dims", help="graded dimensions of the principal grading")
    s.add_argument("spec")
    s.add_argument("N", type=int)
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("growth", help="principal roots, B and growth evidence")
    s.add_argument("spec")
    s.add_argument("--N", type=int, default=0, help="also classify graded dims up to N")
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("scan2", help="regular Kac-Moody scan of the rank 2 family")
    s.add_argument("lo", type=int)
    s.add_argument("hi", type=int)
    s.set_defaults(func=cmd_scan2)

    s = sub.add_parser("dot", help="Graphviz export of the diagram")
    s.add_argument("spec")
    s.set_defaults(func=cmd_dot)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.max_depth < 0 or args.max_states < 1:
            raise UsageError("--max-depth must be >= 0 and --max-states >= 1")
        out = Output(args.format, stdout)
        code = args.func(args, out)
        out.finish()
        return code
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except BranchClassificationFailure as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except CartanError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
