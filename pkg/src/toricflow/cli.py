"""Command-line front end.

Instances are JSON objects such as ``{d:3, b:[4,5,-9], c:[3,1,2]}``; bare
keys are accepted.  Arc-indexed arrays follow the lexicographic arc
order.  Non-integral numbers are printed as "p/q" strings.

Exit status: 0 on success, 1 for infeasible instances or failed checks,
2 for usage errors.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .algebra import TermOrder, binomial_to_json, monomial_to_json
from .catalog import catalog_cost, closed_form, validate_dual_cost
from .errors import InfeasibleError, OrderError, ToricFlowError
from .fan import enumerate_fan
from .graph import build_tournament
from .ideals import engine_gb
from .pairs import arithmetic_degree, max_arith_degree_check, standard_pairs_dual, standard_pairs_primal
from .solver import FlowInstance, solve_instance
from .suite import run_suite, table_row


class UsageError(Exception):
    pass


_BARE_KEY = re.compile(r'([{,]\s*)([A-Za-z_][A-Za-z0-9_]*)\s*:')


def parse_instance(text):
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(_BARE_KEY.sub(r'\1"\2":', text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _number(x):
    if isinstance(x, bool):
        raise UsageError(f"not a number: {x!r}")
    if isinstance(x, float):
        return Fraction(str(x))
    try:
        return Fraction(x)
    except (TypeError, ValueError):
        raise UsageError(f"not a number: {x!r}") from None


def _numbers(values, name):
    if not isinstance(values, list):
        raise UsageError(f"{name} must be an array")
    return [_number(x) for x in values]


def jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _emit(obj, out=None):
    text = json.dumps(jsonable(obj), indent=2)
    print(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _dim(inst, args):
    d = inst.get("d", args.d) if isinstance(inst, dict) else args.d
    if not isinstance(d, int) or d < 2:
        raise UsageError("instance needs an integer d >= 2")
    return d


def _arity(values, d, name):
    n = d * (d - 1) // 2
    if len(values) != n:
        raise UsageError(f"{name} needs {n} arc entries for d={d}, got {len(values)}")
    return values


def _side_and_weights(inst, args, d):
    side = args.side
    if side is None:
        side = "dual" if "btilde" in inst else "primal"
    key = "btilde" if side == "dual" else "c"
    if key not in inst:
        raise UsageError(f"the {side} side needs '{key}' in the instance")
    return side, _arity(_numbers(inst[key], key), d, key)


def _labels(d):
    g = build_tournament(d)
    return [g.label(k) for k in range(g.n)]


def cmd_gb(args):
    inst = parse_instance(args.instance)
    d = _dim(inst, args)
    side, w = _side_and_weights(inst, args, d)
    if side == "dual" and not validate_dual_cost(d, w)[0]:
        raise OrderError("b~ has no nonnegative equivalent; it defines no term order")
    G = engine_gb(side, d, TermOrder(tuple(w)), method=args.method or "universal")
    labels = _labels(d)
    _emit({"side": side, "d": d, "size": len(G), "order": G.order.to_json(),
           "basis": [binomial_to_json(g, labels) for g in G.elements]}, args.out)
    return 0


def cmd_solve(args):
    inst = parse_instance(args.instance)
    d = _dim(inst, args)
    if "b" not in inst or "c" not in inst:
        raise UsageError("solve needs 'b' and 'c'")
    b = _numbers(inst["b"], "b")
    if any(x.denominator != 1 for x in b):
        raise UsageError("supplies must be integers")
    c = _arity(_numbers(inst["c"], "c"), d, "c")
    if len(b) != d:
        raise UsageError(f"b needs {d} entries for d={d}, got {len(b)}")
    method = args.method or inst.get("method", "ct")
    if method not in ("ct", "pairs", "oracle"):
        raise UsageError(f"unknown method {method!r}; use ct, pairs or oracle")
    res = solve_instance(FlowInstance(d, tuple(int(x) for x in b), tuple(c)), method)
    _emit({"x": list(res.x), "objective": res.objective, "method": res.method,
           "pairs_examined": res.pairs_examined}, args.out)
    return 0


def cmd_pairs(args):
    inst = parse_instance(args.instance)
    d = _dim(inst, args)
    side, w = _side_and_weights(inst, args, d)
    pairs = standard_pairs_dual(d, w) if side == "dual" else standard_pairs_primal(d, w)
    labels = _labels(d)
    _emit({"side": side, "d": d, "arithmetic_degree": arithmetic_degree(pairs),
           "pairs": [{"root": monomial_to_json(p.root, labels), "sigma": [labels[k] for k in p.sigma]}
                     for p in pairs]}, args.out)
    return 0


def cmd_fan(args):
    if args.d is None:
        raise UsageError("fan needs --d")
    side = args.side or "primal"
    summary, bases = enumerate_fan(side, args.d, budget=args.budget, parallel=args.parallel,
                                   collect=bool(args.out))
    report = {"side": side, "d": args.d, "count": summary.count, "max": summary.maxCard,
              "min": summary.minCard, "partial": summary.partial,
              "cones_without_valid_cost": summary.cones_without_valid_cost}
    print(json.dumps(report, indent=2))
    if args.out:
        labels = _labels(args.d)
        dump = [[binomial_to_json(g, labels) for g in G.elements] for G in bases]
        with open(args.out, "w") as fh:
            json.dump({"summary": report, "bases": dump}, fh)
            fh.write("\n")
    return 0


def cmd_catalog(args):
    if args.d is None:
        raise UsageError("catalog needs --d")
    labels = _labels(args.d)
    if args.cost:
        cost = catalog_cost(args.which, args.d)
        _emit({"which": args.which, "kind": cost.kind, "d": args.d, "cost": list(cost.values)}, args.out)
        return 0
    elements = sorted(closed_form(args.which, args.d), reverse=True)
    _emit({"which": args.which, "d": args.d, "size": len(elements),
           "basis": [binomial_to_json(g, labels) for g in elements]}, args.out)
    return 0


def cmd_volume(args):
    if args.d is None:
        raise UsageError("volume needs --d")
    report = max_arith_degree_check(args.d, seed=args.seed, volume=args.d <= 6)
    _emit(report, args.out)
    return 0 if report["ok"] else 1


def cmd_verify(args):
    results = run_suite(dmax=args.d or 5, seed=args.seed, parallel=args.parallel)
    for r in results:
        print(f"{'PASS' if r['ok'] else 'FAIL'}  {r['check']:<11} d={r['d']}  {json.dumps(jsonable(r['detail']))}")
    failed = sum(not r["ok"] for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(jsonable(results), fh, indent=2)
    return 1 if failed else 0


def cmd_tables(args):
    sides = [args.side] if args.side else ["primal", "dual"]
    rows = []
    for side in sides:
        ds = [args.d] if args.d else (range(3, 6) if side == "primal" else range(3, 7))
        for d in ds:
            rows.append(table_row(side, d, budget=args.budget, parallel=args.parallel))
    if len(rows) == 1:
        _emit(rows[0], args.out)
    else:
        _emit(rows, args.out)
    return 0 if all(r.get("matches_table", True) for r in rows) else 1


def build_parser():
    p = argparse.ArgumentParser(prog="toricflow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, instance=False):
        if instance:
            sp.add_argument("instance", help="instance JSON text or a file holding it")
        sp.add_argument("--d", type=int, help="number of vertices")
        sp.add_argument("--side", choices=["primal", "dual"])
        sp.add_argument("--budget", type=int, help="stop the fan walk after this many bases")
        sp.add_argument("--parallel", type=int, default=1, help="worker processes")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="also write the JSON result here")

    sp = sub.add_parser("gb", help="reduced Groebner basis for a cost")
    common(sp, instance=True)
    sp.add_argument("--method", choices=["universal", "buchberger"])
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("solve", help="solve a min-cost flow instance")
    common(sp, instance=True)
    sp.add_argument("--method", choices=["ct", "pairs", "oracle"])
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("pairs", help="standard pairs and arithmetic degree")
    common(sp, instance=True)
    sp.set_defaults(func=cmd_pairs)

    sp = sub.add_parser("fan", help="enumerate the Groebner fan")
    common(sp)
    sp.set_defaults(func=cmd_fan)

    sp = sub.add_parser("catalog", help="closed-form bases and cost vectors")
    common(sp)
    sp.add_argument("--which", choices=["type1", "type2", "type3", "dual"], default="type1")
    sp.add_argument("--cost", action="store_true", help="print the cost vector instead of the basis")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("volume", help="maximum arithmetic degree versus Catalan number")
    common(sp)
    sp.set_defaults(func=cmd_volume)

    sp = sub.add_parser("verify", help="run the invariant suite")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", help="reproduce fan statistics")
    common(sp)
    sp.set_defaults(func=cmd_tables)
    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        print(json.dumps({"infeasible": True, "prefix": exc.prefix, "message": str(exc)}, indent=2))
        return 1
    except OrderError as exc:
        print(f"order error: {exc}", file=sys.stderr)
        return 1
    except ToricFlowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
