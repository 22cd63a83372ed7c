"""Sizes of the enumerated term pools, plus a sampled estimate of the
complexity-3 pool (too large to enumerate).

    python3 scripts/pool_sizes.py --theta 2 --samples 20000
"""

import argparse
import math
import random
import time

from bhnotation.checks import PoolSampler
from bhnotation.terms import BaseOrder, Phi, Sum, Term, enumerate_terms, sort_terms, validate


def estimate_top(sampler: PoolSampler, base: BaseOrder, samples: int, rng: random.Random) -> dict:
    """Valid candidates at the top complexity, by kind: acceptance rate x candidate count."""
    low, prin = sampler.lower, sampler.principal
    hits = sum(isinstance(validate(Phi(rng.choice(low), rng.choice(low)), base), Term)
               for _ in range(samples))
    out = {"phi": hits / samples * len(low) ** 2, "psi": len(sampler.psi_terms())}
    for n in range(2, sampler.max_sum_len + 1):
        hits = 0
        for _ in range(samples):
            ps = sort_terms(rng.choice(prin) for _ in range(n))
            hits += isinstance(validate(Sum(tuple(reversed(ps))), base), Term)
        # sorted i.i.d. draws: ordered tuples / n! approximates multisets
        out[f"sum{n}"] = hits / samples * len(prin) ** n / math.factorial(n)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--theta", type=int, default=2)
    ap.add_argument("--max-g", type=int, default=2)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    base = BaseOrder.finite(args.theta)
    for g in range(args.max_g + 1):
        for cap in (2, 3):
            t = time.perf_counter()
            n = len(enumerate_terms(base, g, args.theta, max_sum_len=cap))
            print(f"G<={g} gamma<={args.theta} sum-len<={cap}: {n} terms "
                  f"({time.perf_counter() - t:.1f}s)")
    sampler = PoolSampler(base, args.max_g + 1, args.theta)
    est = estimate_top(sampler, base, args.samples, random.Random(args.seed))
    total = len(sampler.lower) + sum(est.values())
    for k, v in est.items():
        print(f"  estimated new {k} terms at G={args.max_g + 1}: {v:.3g}")
    print(f"estimated |pool G<={args.max_g + 1}| ~ {total:.3g}; pairs ~ {total ** 2 / 2:.3g}")


if __name__ == "__main__":
    main()
