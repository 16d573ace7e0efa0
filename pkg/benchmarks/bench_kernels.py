"""Compiled versus pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the phase-one LP on the facet systems met during a fan walk and the
square-free basis extraction over random weight chains, and checks that
both backends return identical results on every input.
"""

import argparse
import random
import time

from toricflow import _pykernels, kernels
from toricflow.fan import _context


def lp_inputs(side, d, count, seed=0):
    """Facet-style systems (free weights) of the bases on a short random walk."""
    ctx = _context(side, d)
    rng = random.Random(seed)
    out = []
    basis = ctx.extract([ctx.reduce_weights(_seed_weights(side, d))])
    while len(out) < count:
        for j in range(len(basis)):
            k = len(ctx.coords)
            others = [ctx.vector(e) for t, e in enumerate(basis) if t != j]
            m = len(others)
            rows = []
            for t, v in enumerate(others):
                row = list(v) + [-x for x in v] + [0] * m
                row[2 * k + t] = -1
                rows.append(row)
            rows.append(list(ctx.vector(basis[j])) + [-x for x in ctx.vector(basis[j])] + [0] * m)
            out.append((rows, [1] * m + [0]))
        nbs = ctx.neighbors(basis)
        basis = rng.choice(nbs)[0]
    return out[:count]


def _seed_weights(side, d):
    from toricflow.catalog import cost_type1, dual_cost_decreasing

    return (cost_type1(d) if side == "primal" else dual_cost_decreasing(d)).values


def extract_inputs(side, d, count, seed=0):
    ctx = _context(side, d)
    rng = random.Random(seed)
    k = len(ctx.coords)
    lo = 1 if ctx.dual else -50
    chains = [[[rng.randint(lo, 50) for _ in range(k)], [rng.randint(-3, 3) for _ in range(k)]] for _ in range(count)]
    return ctx, chains


def timed(fn, items, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        results = [fn(x) for x in items]
        best = min(best, time.perf_counter() - start)
    return best, results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    from toricflow import _kernels

    print(f"{'kernel':<10} {'case':<12} {'n':>5} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for side, d in (("primal", 5), ("primal", 6), ("dual", 6)):
        lps = lp_inputs(side, d, 300)
        tp, rp = timed(lambda x: _pykernels.phase_one(*x), lps, args.repeat)
        tc, rc = timed(lambda x: _kernels.phase_one(*x), lps, args.repeat)
        assert [r[0] for r in rp] == [r[0] for r in rc]
        print(f"{'phase_one':<10} {side + ' d=' + str(d):<12} {len(lps):>5} {tp:>10.3f} {tc:>11.3f} {tp / tc:>7.1f}x")
    for side, d in (("primal", 6), ("primal", 7), ("dual", 7)):
        ctx, chains = extract_inputs(side, d, 200)
        args_of = lambda ch: (ctx.red, ch, ctx.plus, ctx.minus, False)  # noqa: E731
        tp, rp = timed(lambda ch: sorted(_pykernels.extract_sqfree(*args_of(ch))), chains, args.repeat)
        tc, rc = timed(lambda ch: sorted(_kernels.extract_sqfree(*args_of(ch))), chains, args.repeat)
        assert rp == rc
        print(f"{'extract':<10} {side + ' d=' + str(d):<12} {len(chains):>5} {tp:>10.3f} {tc:>11.3f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
