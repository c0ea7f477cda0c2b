from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from skeleton_mv.paths import FundamentalPath, SkeletonPath, all_fundamental  # noqa: E402
from skeleton_mv.weights import Weight  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_FUND = {n: all_fundamental(n) for n in range(1, 6)}


def fundamental_paths(n: int) -> st.SearchStrategy[FundamentalPath]:
    return st.sampled_from(_FUND[n])


@st.composite
def ranked_weight(draw, max_rank: int = 5, bound: int = 4):
    n = draw(st.integers(1, max_rank))
    coords = draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n))
    return Weight(n, tuple(coords))


@st.composite
def skeleton_paths(draw, n: int, max_len: int = 3, min_len: int = 0):
    factors = draw(st.lists(fundamental_paths(n), min_size=min_len, max_size=max_len))
    return SkeletonPath(n, tuple(factors))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
