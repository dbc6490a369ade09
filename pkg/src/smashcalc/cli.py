"""Command-line surface.

Subcommands map one-to-one onto verification suites: check-hopf,
check-calculus, build-smash, check-exactness, connections each run the
matching suite of a scenario; run executes every suite a scenario requests;
frt-demo builds an R-matrix from flags and reports the Yang-Baxter gate plus
the quantum-matrix relations it induces; nf is a line-by-line normal-form
evaluator over the scenario's expression context.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or schema
error, 3 theorem-level contradiction.
"""

import argparse
import json
import sys

from . import frt
from .errors import (ExprSyntaxError, GateFailure, PreconditionFailed,
                     RelationIncompatible, SchemaError, SmashcalcError,
                     TheoremViolation, UnknownGenerator)
from .ncalg import Element, check_local_confluence
from .parser import FormsContext, parse_expression, parse_scalar
from .reports import content_hash
from .scenario import (REPORT_SCHEMA, report_text, run_scenario,
                       scenario_path, shipped_scenarios)

# subcommand -> suite to select, per model kind; None means "not applicable"
_SUITE_FOR = {
    "check-hopf": {"fd": "hopf-axioms", "frt": "bialgebra-axioms"},
    "check-calculus": {"fd": "calculus", "frt": "smash-relations"},
    "build-smash": {"fd": "smash-product", "frt": "smash-product"},
    "check-exactness": {"fd": "exactness", "frt": None},
    "connections": {"fd": "connections", "frt": None},
}


def _add_common(sub):
    sub.add_argument("--scenario", metavar="PATH",
                     help="scenario file (default: shipped h4_universal)")
    sub.add_argument("--degree", type=int, metavar="N",
                     help="truncation degree for bounded checks (default 2)")
    sub.add_argument("--gamma", metavar="SCALAR",
                     help="overall scale for the r-form (frt scenarios)")
    sub.add_argument("--out", metavar="PATH",
                     help="write the report to this file instead of stdout")
    sub.add_argument("--format", choices=("json", "text"), default="text",
                     help="report rendering (default text)")
    sub.add_argument("--enable-right-bijection", action="store_true",
                     help="evaluate the flagged right-connection "
                          "reconstruction under verification")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="smashcalc",
        description="Exact verification of smash products and their "
                    "differential calculi.")
    sp = ap.add_subparsers(dest="command", required=True)

    descriptions = {
        "run": "run every suite a scenario requests",
        "check-hopf": "Hopf/bialgebra axiom suite",
        "check-calculus": "first-order calculus suite",
        "build-smash": "smash-product structure suite",
        "check-exactness": "exact-sequence suite",
        "connections": "connection geometry suite",
    }
    for name in ("run", "check-hopf", "check-calculus", "build-smash",
                 "check-exactness", "connections"):
        sub = sp.add_parser(name, help=descriptions[name])
        _add_common(sub)

    demo = sp.add_parser("frt-demo", help="Yang-Baxter gate and the "
                                          "relations an R-matrix induces")
    demo.add_argument("--r", default="standard-sl2",
                      choices=("standard-sl2", "identity"),
                      help="which R-matrix to build (default standard-sl2)")
    demo.add_argument("--gamma", default="1", metavar="SCALAR",
                      help="overall scale (default 1)")
    demo.add_argument("--out", metavar="PATH")
    demo.add_argument("--format", choices=("json", "text"), default="text")

    nf = sp.add_parser("nf", help="read expressions line by line and print "
                                  "normal forms and degrees")
    nf.add_argument("exprs", nargs="*", metavar="EXPR",
                    help="expressions to evaluate (default: read stdin)")
    nf.add_argument("--scenario", metavar="PATH",
                    help="evaluate in this scenario's smash context "
                         "(default: the quantum-plane calculus)")
    return ap


def _emit(doc, args):
    if args.format == "json":
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        text = report_text(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _scenario_file(args):
    return args.scenario or scenario_path("h4_universal")


def _run_suite_command(args):
    path = _scenario_file(args)
    options = {"enable_right_bijection": args.enable_right_bijection}
    if args.command == "run":
        suites = None
    else:
        with open(path) as fh:
            try:
                kind = json.load(fh).get("model", {}).get("kind")
            except ValueError as err:
                raise SchemaError("cannot read scenario %s: %s" % (path, err))
        suite = _SUITE_FOR[args.command].get(kind)
        if suite is None:
            raise SchemaError("%s has no suite for model kind %r; "
                              "use an fd scenario" % (args.command, kind))
        suites = [suite]
    doc, code = run_scenario(path, degree=args.degree, gamma=args.gamma,
                             suites=suites, options=options)
    _emit(doc, args)
    return code


def _frt_demo(args):
    gamma = parse_scalar(args.gamma)
    R = (frt.standard_sl2_r(gamma=gamma) if args.r == "standard-sl2"
         else frt.identity_r(gamma=gamma))
    ybe = frt.check_ybe(R)
    doc = {"schema": REPORT_SCHEMA, "scenario": "frt-demo", "kind": "frt",
           "ok": ybe.ok, "suites": [dict(ybe.to_dict(), suite="yang-baxter")],
           "relations": []}
    if ybe.ok:
        b = frt.frt_bialgebra(R)
        overlaps = check_local_confluence(b.pres, max_len=3)
        doc["suites"].append({
            "suite": "confluence", "ok": not overlaps,
            "counts": {"total": 1, "failed": 1 if overlaps else 0},
            "checks": [{"name": "rewriting/%s" % b.pres.label,
                        "anchor": "all overlaps resolve",
                        "ok": not overlaps,
                        "details": {"unresolved": len(overlaps)}}]})
        doc["ok"] = doc["ok"] and not overlaps
        for lhs, rhs in sorted(b.pres.rules.items()):
            doc["relations"].append("%s -> %s" % (b.pres.word_str(lhs),
                                                  Element(b.pres, rhs)))
    doc["suites"].sort(key=lambda e: e["suite"])
    doc["hash"] = content_hash(doc)
    if args.format == "json":
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        lines = [report_text({k: doc[k] for k in
                              ("schema", "scenario", "kind", "ok",
                               "suites", "hash")})]
        if doc["relations"]:
            lines.append("relations of %s:" % args.r)
            lines.extend("  %s" % r for r in doc["relations"])
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if doc["ok"] else 1


def _nf(args):
    if args.scenario:
        from .scenario import build_model, load_scenario
        ctx = build_model(load_scenario(args.scenario)).expression_context()
    else:
        ctx = FormsContext(frt.quantum_plane_forms())
    lines = args.exprs if args.exprs else sys.stdin
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            terms = parse_expression(line, ctx)
        except (ExprSyntaxError, UnknownGenerator) as err:
            print("error: %s" % err)
            continue
        deg, fdeg = ctx.degrees(terms)
        print("%s  [degree %d, form degree %d]"
              % (ctx.print_terms(terms), deg, fdeg))
    return 0


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "frt-demo":
            return _frt_demo(args)
        if args.command == "nf":
            return _nf(args)
        return _run_suite_command(args)
    except TheoremViolation as err:
        print("theorem violation: %s" % err, file=sys.stderr)
        return 3
    except SchemaError as err:
        print("schema error: %s" % err, file=sys.stderr)
        return 2
    except (GateFailure, PreconditionFailed, RelationIncompatible) as err:
        print("gate failure: %s" % err, file=sys.stderr)
        return 1
    except SmashcalcError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
