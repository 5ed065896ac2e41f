"""Command line front end.

Exit codes: 0 success, 1 malformed input, 2 verification failed,
3 precondition violated, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from rxindex.bounds import (
    BoundParams,
    alpha0_bound,
    layered_chain_bound,
    ramsey_sum,
    ramsey_upper,
    steiner_rainbow_constant,
)
from rxindex.detect import classify_family, is_free, parse_pattern, recognize_pattern
from rxindex.errors import (
    BudgetExceededError,
    ContractError,
    InputDomainError,
    PreconditionError,
    VerificationError,
)
from rxindex.graph import build_named, read_graph, write_graph
from rxindex.metrics import ecc_rad_diam, sdiam3
from rxindex.painter import color_complete_small, color_layered, color_p4_star_free
from rxindex.rainbow import all_distinct, is_3rainbow, read_coloring, write_coloring
from rxindex.reproduce import format_table, reproduce
from rxindex.solver import DEFAULT_BUDGET, rx3_bounds, rx3_exact

OK, MALFORMED, UNVERIFIED, PRECONDITION, BUDGET = 0, 1, 2, 3, 4

BATTERY = ("P3", "P4", "K1,3", "K1,4", "K3h", "P5")
FAMILY_ALIASES = {"hairy": "hairy_clique", "clique": "complete"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(args, text: str, data: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2))
    else:
        print(text)


def cmd_gen(args) -> int:
    kind = FAMILY_ALIASES.get(args.family, args.family)
    g = build_named(kind, args.param)
    if args.out:
        write_graph(g, args.out, args.format)
    elif args.format == "text":
        sys.stdout.write(g.to_text())
    else:
        print(json.dumps(g.to_dict()))
    return OK


def cmd_analyze(args) -> int:
    g = read_graph(args.input)
    g.require_connected()
    ecc = ecc_rad_diam(g)
    report = {"n": g.n, "m": g.m, "radius": ecc.radius, "diameter": ecc.diameter}
    if g.n >= 3:
        b = rx3_bounds(g)
        report.update(sdiam3=sdiam3(g), rx3_lower=b.lower, rx3_upper=b.upper)
    free = {}
    for name in BATTERY:
        free[name] = is_free(g, [parse_pattern(name)]).free
    report["free"] = free
    status = OK
    if args.exact_rx3 and g.n >= 3:
        try:
            res = rx3_exact(g, budget=args.budget)
            report["rx3_exact"] = res.value
        except BudgetExceededError as exc:
            report["rx3_exact"] = None
            report["rx3_bracket"] = [exc.lower, exc.upper]
            status = BUDGET
    lines = [f"{k}: {v}" for k, v in report.items() if k != "free"]
    lines.append("free: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in free.items()))
    _emit(args, "\n".join(lines), report)
    return status


def cmd_color(args) -> int:
    g = read_graph(args.input)
    info: dict = {"method": args.method}
    if args.method == "thm7":
        res = color_p4_star_free(g, args.r, remark=args.remark)
        coloring = res.coloring
        info.update(S=res.partition.S, X=res.partition.X, Y=res.partition.Y, z=res.partition.z)
    elif args.method == "layered":
        res = color_layered(g, args.r, args.s, args.l, remark=args.remark)
        coloring = res.coloring
        info["layer_alphas"] = res.per_layer_alphas
    elif args.method == "exact":
        coloring = rx3_exact(g, budget=args.budget).witness
    elif args.method == "complete":
        if g.m != g.n * (g.n - 1) // 2:
            raise InputDomainError("method 'complete' needs a complete graph")
        coloring = color_complete_small(g.n)
    else:
        coloring = all_distinct(g)
    info["colors_used"] = coloring.t
    if args.out:
        write_coloring(coloring, args.out)
    else:
        info["coloring"] = coloring.to_dict()["colors"]
    text = "\n".join(f"{k}: {v}" for k, v in info.items() if k != "coloring")
    if "coloring" in info and not args.json:
        text += "\n" + "\n".join(f"{u} {v} {c}" for (u, v), c in coloring.items())
    _emit(args, text, info)
    return OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    c = read_coloring(g, args.coloring)
    check = is_3rainbow(g, c)
    data = {"valid": check.valid, "colors": c.t,
            "failing_triple": list(check.failing_triple) if check.failing_triple else None}
    text = "valid" if check.valid else f"invalid: no rainbow tree for triple {check.failing_triple}"
    _emit(args, text, data)
    return OK if check.valid else UNVERIFIED


def cmd_classify(args) -> int:
    family = [parse_pattern(tok) for tok in args.patterns]
    result = classify_family(family)
    shapes = []
    for tok, h in zip(args.patterns, family):
        p = recognize_pattern(h)
        shapes.append({"pattern": tok, "shape": p.shape, "param": p.param,
                       "hairy_fragment": p.hairy_fragment})
    data = {"bounded": result.bounded, "matched": result.matched,
            "members": [args.patterns[i] for i in result.members], "shapes": shapes}
    lines = [f"bounded: {'yes' if result.bounded else 'no'}"]
    if result.bounded:
        lines.append(f"matched: {result.matched} via {', '.join(data['members'])}")
    if args.graph:
        g = read_graph(args.graph)
        rep = is_free(g, family)
        data["free"] = rep.free
        data["witnesses"] = {tok: w for tok, (_, w) in zip(args.patterns, rep.entries)}
        lines.append(f"graph free: {'yes' if rep.free else 'no'}")
        for tok, (ok, w) in zip(args.patterns, rep.entries):
            if not ok:
                lines.append(f"  induced {tok} on vertices {w}")
    _emit(args, "\n".join(lines), data)
    return OK


def cmd_bound(args) -> int:
    if args.ramsey:
        a, b = args.ramsey
        value = ramsey_upper(a, b)
        _emit(args, str(value), {"ramsey_upper": str(value)})
        return OK
    p = BoundParams(args.r, args.s, args.l)
    data = {"r": p.r, "s": p.s, "l": p.ell,
            "ramsey_sum": str(ramsey_sum(p.r, p.s, p.ell)),
            "chain_bound": str(layered_chain_bound(p)),
            "constant": str(steiner_rainbow_constant(p))}
    if args.i:
        data["alpha0"] = str(alpha0_bound(p.r, p.s, args.i))
    _emit(args, "\n".join(f"{k}: {v}" for k, v in data.items()), data)
    return OK


def cmd_reproduce(args) -> int:
    rows, notes = reproduce(budget=args.budget)
    if args.csv:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["claim", "params", "quoted", "computed", "verdict"])
        w.writeheader()
        for r in rows:
            w.writerow(r.as_dict())
        sys.stdout.write(buf.getvalue())
    elif args.json:
        print(json.dumps({"rows": [r.as_dict() for r in rows], "notes": notes}, indent=2))
    else:
        print(format_table(rows))
        print()
        for note in notes:
            print("note:", note)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rxindex", description="3-rainbow index and Steiner diameter toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a named graph")
    g.add_argument("--family", required=True,
                   choices=["complete", "clique", "cycle", "path", "star", "hairy", "hairy_clique"])
    g.add_argument("--param", type=int, required=True)
    g.add_argument("--out")
    g.add_argument("--format", choices=["json", "text"])
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="metrics, bounds and freeness battery")
    a.add_argument("--in", dest="input", required=True)
    a.add_argument("--exact-rx3", action="store_true")
    a.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("color", help="build a 3-rainbow coloring")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--method", choices=["thm7", "layered", "exact", "complete", "distinct"],
                   default="thm7")
    c.add_argument("--r", type=int, default=3)
    c.add_argument("--s", type=int, default=3)
    c.add_argument("--l", type=int, default=5)
    c.add_argument("--remark", action="store_true", help="use the one-color-saving variant")
    c.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    c.add_argument("--out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring is 3-rainbow")
    v.add_argument("--graph", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="decide whether a forbidden family bounds rx3 - sdiam3")
    k.add_argument("patterns", nargs="+", help="P3, P4, P<l>, K1,<r>, K<s>h, C<n>, K<n>, @file")
    k.add_argument("--graph", help="also report freeness of this graph")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_classify)

    b = sub.add_parser("bound", help="Ramsey-type constants")
    b.add_argument("--r", type=int, default=3)
    b.add_argument("--s", type=int, default=3)
    b.add_argument("--l", type=int, default=5)
    b.add_argument("--i", type=int)
    b.add_argument("--ramsey", type=int, nargs=2, metavar=("A", "B"))
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound)

    r = sub.add_parser("reproduce", help="recompute the quoted small-case values")
    r.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    fmt = r.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reproduce)
    return p


def run(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return PRECONDITION
    except BudgetExceededError as exc:
        print(f"budget exceeded: rx3 in [{exc.lower}, {exc.upper}]", file=sys.stderr)
        return BUDGET
    except (ContractError, VerificationError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return UNVERIFIED
    except (InputDomainError, OSError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
