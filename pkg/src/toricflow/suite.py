"""Invariant checks behind the ``verify`` command.

Each check returns (ok, detail).  They are small enough to run in a few
seconds each at the default sizes and are independent, so they can be
farmed out to worker processes.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from math import comb

from .algebra import TermOrder, buchberger, gb_from_universal
from .catalog import cost_type1, cost_type3, verify_catalog
from .errors import InfeasibleError
from .fan import enumerate_fan, fan_cross_check, fan_keys
from .graph import build_tournament, circuit_count, enumerate_cutsets, spanning_tree_masks
from .ideals import cospace, universal
from .pairs import catalan, count_pattern_trees, standard_pairs_primal, triangulation_faces
from .solver import FlowInstance, conti_traverso, oracle_optimum, solve_by_standard_pairs

TABLE1 = {3: (2, 1, 1), 4: (10, 5, 3), 5: (211, 15, 6), 6: (48312, 37, 10)}
TABLE2 = {3: (2, 2, 2), 4: (7, 5, 3), 5: (48, 10, 4), 6: (820, 20, 5), 7: (44288, 39, 6)}


def check_counts(d):
    g = build_tournament(d)
    got = (len(universal("primal", d)), len(enumerate_cutsets(g)), len(spanning_tree_masks(d)))
    want = (circuit_count(d), 2 ** (d - 1) - 1, d ** (d - 2))
    return got == want, {"got": got, "want": want}


def check_catalog(d):
    reports = [verify_catalog(d, w) for w in ("type1", "type2", "type3", "dual")]
    return all(r["equal"] for r in reports), {r["which"]: r["engine_size"] for r in reports}


def check_buchberger(d, trials=10, seed=0):
    rng = random.Random(seed)
    n = comb(d, 2)
    bad = 0
    for _ in range(trials):
        o = TermOrder(tuple(rng.randint(1, 30) for _ in range(n)))
        a = buchberger(universal("primal", d), o, cospace=cospace("primal", d))
        b = gb_from_universal(universal("primal", d), o, cospace=cospace("primal", d))
        bad += not a.same_basis(b)
    return bad == 0, {"trials": trials, "mismatches": bad}


def random_instance(d, rng):
    n = comb(d, 2)
    while True:
        b = [rng.randint(-10, 10) for _ in range(d - 1)]
        b.append(-sum(b))
        running, ok = 0, True
        for v in b:
            running += v
            ok = ok and running >= 0
        if ok:
            return FlowInstance(d, tuple(b), tuple(rng.randint(1, 20) for _ in range(n)))


def check_solvers(d, trials=20, seed=0):
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        inst = random_instance(d, rng)
        try:
            objs = {f(inst).objective for f in (conti_traverso, solve_by_standard_pairs, oracle_optimum)}
        except InfeasibleError:
            bad += 1
            continue
        bad += len(objs) != 1
    return bad == 0, {"trials": trials, "disagreements": bad}


def check_faces(d, trials=10, seed=0):
    rng = random.Random(seed)
    n = comb(d, 2)
    bad = 0
    for _ in range(trials):
        c = tuple(rng.randint(1, 1000) for _ in range(n))
        faces, generic = triangulation_faces(d, c)
        pairs = {p.sigma for p in standard_pairs_primal(d, c)}
        bad += {f.sigma for f in faces} != pairs
    return bad == 0, {"trials": trials, "mismatches": bad}


def check_catalan(d):
    deg = len(standard_pairs_primal(d, cost_type1(d).values))
    low = len(standard_pairs_primal(d, cost_type3(d).values))
    pat = count_pattern_trees(d)
    want = catalan(d - 1)
    return (deg, pat, low) == (want, want, 1), {"degree": deg, "pattern_trees": pat, "type3": low}


def check_fan(side, d, trials=50, seed=0):
    table = TABLE1 if side == "primal" else TABLE2
    summary, keys = fan_keys(side, d)
    got = (summary.count, summary.maxCard, summary.minCard)
    cross = fan_cross_check(side, d, trials, seed=seed, keys=keys)
    ok = got == table[d] and cross["missing"] == 0
    return ok, {"count": got, "table": table[d], "missing": cross["missing"]}


def table_row(side, d, budget=None, parallel=1):
    summary, _ = enumerate_fan(side, d, budget=budget, parallel=parallel, collect=False)
    table = TABLE1 if side == "primal" else TABLE2
    row = {"side": side, "d": d, "count": summary.count, "max": summary.maxCard,
           "min": summary.minCard, "partial": summary.partial}
    if d in table:
        row["matches_table"] = (summary.count, summary.maxCard, summary.minCard) == table[d]
    return row


def _plan(dmax, seed):
    plan = []
    for d in range(3, dmax + 1):
        plan.append(("counts", d, check_counts, (d,)))
        plan.append(("catalog", d, check_catalog, (d,)))
        plan.append(("catalan", d, check_catalan, (d,)))
        plan.append(("solvers", d, check_solvers, (d, 20, seed)))
        if d <= 5:
            plan.append(("buchberger", d, check_buchberger, (d, 10, seed)))
            plan.append(("faces", d, check_faces, (d, 10, seed)))
            plan.append(("fan-primal", d, check_fan, ("primal", d, 50, seed)))
        if d <= 6:
            plan.append(("fan-dual", d, check_fan, ("dual", d, 50, seed)))
    return plan


def _run(entry):
    name, d, fn, args = entry
    ok, detail = fn(*args)
    return {"check": name, "d": d, "ok": bool(ok), "detail": detail}


def run_suite(dmax=5, seed=0, parallel=1):
    plan = _plan(dmax, seed)
    if parallel > 1:
        with ProcessPoolExecutor(parallel) as pool:
            return list(pool.map(_run, plan))
    return [_run(e) for e in plan]
