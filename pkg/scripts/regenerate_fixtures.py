"""Rewrite the golden fixtures under tests/fixtures through the CLI."""
from __future__ import annotations

import argparse
from pathlib import Path

from skeleton_mv.cli import MAX_FIXTURE_RANK, run

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(ROOT / "tests" / "fixtures"))
    args = ap.parse_args()
    for n in range(1, MAX_FIXTURE_RANK + 1):
        code = run(["fixtures", str(n), "--out", args.out])
        if code:
            raise SystemExit(code)


if __name__ == "__main__":
    main()
