"""Search for pairs (p, q) with pol(p*q) != pol(p) + pol(q) under the first-factor lowering rule."""
from __future__ import annotations

import argparse
import random
import time

from skeleton_mv.paths import SkeletonPath, all_fundamental, format_path
from skeleton_mv.polytopes import minkowski, pol


def exhaustive(n: int) -> tuple[int, int, list]:
    fund = all_fundamental(n)
    bad = []
    for a in fund:
        for b in fund:
            p, q = SkeletonPath(n, (a,)), SkeletonPath(n, (b,))
            if pol(p * q) != minkowski(pol(p), pol(q)):
                bad.append((p, q))
    return len(bad), len(fund) ** 2, bad


def sample(seed: int, count: int) -> tuple[int, int]:
    rng = random.Random(seed)
    fund = {n: all_fundamental(n) for n in range(1, 5)}
    sum_fail = comm_fail = 0
    for _ in range(count):
        n = rng.randint(1, 4)
        total = rng.randint(2, 5)
        a = rng.randint(1, total - 1)
        p = SkeletonPath(n, tuple(rng.choice(fund[n]) for _ in range(a)))
        q = SkeletonPath(n, tuple(rng.choice(fund[n]) for _ in range(total - a)))
        pq = pol(p * q)
        sum_fail += pq != minkowski(pol(p), pol(q))
        comm_fail += pq != pol(q * p)
    return sum_fail, comm_fail


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=3, help="rank bound for the exhaustive single-factor scan")
    ap.add_argument("--seed", type=int, default=20240)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--show", type=int, default=3, help="counterexamples to print per rank")
    args = ap.parse_args()
    for n in range(1, args.max_rank + 1):
        k, total, bad = exhaustive(n)
        print(f"n={n}: {k}/{total} single-factor pairs fail")
        for p, q in bad[: args.show]:
            print(f"  ({format_path(p)}) * ({format_path(q)}): "
                  f"concatenation {list(pol(p * q).vertices)} vs sum {list(minkowski(pol(p), pol(q)).vertices)}")
    t = time.time()
    s, c = sample(args.seed, args.pairs)
    print(f"random sample (seed {args.seed}, {args.pairs} pairs, n<=4, length<=5): "
          f"{s} sum failures, {c} commutation failures, {time.time() - t:.1f}s")


if __name__ == "__main__":
    main()
