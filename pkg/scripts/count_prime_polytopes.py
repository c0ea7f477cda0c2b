"""Count distinct non-point polytopes of fundamental paths, optionally adding interval-subquiver hulls."""
from __future__ import annotations

import argparse

from skeleton_mv.polytopes import prime_candidates


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>2} {'fundamental':>12} {'with intervals':>15}")
    for n in range(1, args.max_rank + 1):
        a = len(prime_candidates(n))
        b = len(prime_candidates(n, include_intervals=True))
        print(f"{n:>2} {a:>12} {b:>15}")


if __name__ == "__main__":
    main()
