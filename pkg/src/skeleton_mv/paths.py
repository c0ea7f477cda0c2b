"""One-skeleton paths stored by their prime decomposition.

A fundamental path is a weight in some Weyl orbit V_j = W . omega_j; a general
path is a finite sequence of fundamental factors.  Lowering/raising operators
act on fundamental paths by s_i when the i-th omega-coordinate is +1/-1, and on
general paths through the first factor with positive pairing.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .weights import Weight, alpha, format_weight, omega, pairing, to_root_coords


class NotFundamental(ValueError):
    """A weight outside every orbit V_j."""


class PathSyntaxError(ValueError):
    """A path literal that does not follow the factor grammar."""


def indicator(v: Weight) -> Optional[tuple[int, ...]]:
    """0/1 vector chi on {1..n+1} with chi(i) - chi(i+1) = a_i, if one exists.

    Only chi with 0 < sum(chi) < n+1 are returned; the level is sum(chi).
    """
    n = v.n
    for last in (0, 1):
        chi = [0] * (n + 1)
        chi[n] = last
        for i in range(n - 1, -1, -1):
            chi[i] = chi[i + 1] + v.coords[i]
        if all(c in (0, 1) for c in chi) and 0 < sum(chi) < n + 1:
            return tuple(chi)
    return None


def is_fundamental(v: Weight) -> Optional[int]:
    chi = indicator(v)
    return None if chi is None else sum(chi)


def from_indicator(n: int, subset) -> Weight:
    """sum over s in subset of (omega_s - omega_{s-1})."""
    w = Weight.zero(n)
    for s in subset:
        w = w + omega(n, s) - omega(n, s - 1)
    return w


@dataclass(frozen=True, order=True)
class FundamentalPath:
    weight: Weight
    level: int

    def __post_init__(self) -> None:
        lvl = is_fundamental(self.weight)
        if lvl is None:
            raise NotFundamental(f"{format_weight(self.weight)} is not in any V_j")
        if lvl != self.level:
            raise NotFundamental(f"{format_weight(self.weight)} lies in V_{lvl}, not V_{self.level}")

    @classmethod
    def of(cls, v: Weight) -> FundamentalPath:
        lvl = is_fundamental(v)
        if lvl is None:
            raise NotFundamental(f"{format_weight(v)} is not in any V_j")
        return cls(v, lvl)

    @property
    def n(self) -> int:
        return self.weight.n

    def __str__(self) -> str:
        return format_weight(self.weight)


def lower(p: FundamentalPath, i: int) -> Optional[FundamentalPath]:
    if pairing(p.weight, i) != 1:
        return None
    return FundamentalPath(p.weight - alpha(p.n, i), p.level)


def raise_(p: FundamentalPath, i: int) -> Optional[FundamentalPath]:
    if pairing(p.weight, i) != -1:
        return None
    return FundamentalPath(p.weight + alpha(p.n, i), p.level)


def depth(p: FundamentalPath) -> int:
    """Number of lowerings from omega_level down to p (height of the difference)."""
    return to_root_coords(omega(p.n, p.level) - p.weight).height()


def _vertex_key(p: FundamentalPath):
    return (depth(p), p.weight.coords)


@dataclass(frozen=True)
class Chain:
    """Colored graph of lowering operators on a set of fundamental paths."""

    n: int
    level: int
    vertices: tuple[FundamentalPath, ...]
    arrows: tuple[tuple[FundamentalPath, int, FundamentalPath], ...]

    def successors(self, v: FundamentalPath) -> list[tuple[int, FundamentalPath]]:
        return [(c, t) for s, c, t in self.arrows if s == v]

    def sources(self) -> list[FundamentalPath]:
        targets = {t for _, _, t in self.arrows}
        return [v for v in self.vertices if v not in targets]

    def sinks(self) -> list[FundamentalPath]:
        starts = {s for s, _, _ in self.arrows}
        return [v for v in self.vertices if v not in starts]

    def weights(self) -> list[Weight]:
        return [v.weight for v in self.vertices]


def _closure(start: FundamentalPath) -> Chain:
    n = start.n
    seen = {start}
    queue = deque([start])
    arrows = []
    while queue:
        v = queue.popleft()
        for i in range(1, n + 1):
            u = lower(v, i)
            if u is None:
                continue
            arrows.append((v, i, u))
            if u not in seen:
                seen.add(u)
                queue.append(u)
    vertices = tuple(sorted(seen, key=_vertex_key))
    order = {v: k for k, v in enumerate(vertices)}
    arrows.sort(key=lambda a: (order[a[0]], a[1]))
    return Chain(n, start.level, vertices, tuple(arrows))


def chain(n: int, j: int) -> Chain:
    if not 1 <= j <= n:
        raise ValueError(f"level {j} out of range 1..{n}")
    return _closure(FundamentalPath(omega(n, j), j))


def subchain(p: FundamentalPath) -> Chain:
    """Downward-reachable part of the chain containing p."""
    return _closure(p)


@dataclass(frozen=True)
class SkeletonPath:
    n: int
    factors: tuple[FundamentalPath, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.n != self.n:
                raise ValueError("rank mismatch")

    @classmethod
    def of(cls, *weights: Weight) -> SkeletonPath:
        if not weights:
            raise ValueError("use SkeletonPath(n) for the trivial path")
        return cls(weights[0].n, tuple(FundamentalPath.of(w) for w in weights))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[FundamentalPath]:
        return iter(self.factors)

    def __mul__(self, other: SkeletonPath) -> SkeletonPath:
        return concat(self, other)

    def __str__(self) -> str:
        return format_path(self)


def concat(p: SkeletonPath, q: SkeletonPath) -> SkeletonPath:
    if p.n != q.n:
        raise ValueError("rank mismatch")
    return SkeletonPath(p.n, p.factors + q.factors)


def weight_of(p: SkeletonPath) -> Weight:
    w = Weight.zero(p.n)
    for f in p.factors:
        w = w + f.weight
    return w


def lower_path(p: SkeletonPath, i: int) -> Optional[SkeletonPath]:
    for k, f in enumerate(p.factors):
        if pairing(f.weight, i) > 0:
            g = lower(f, i)
            return SkeletonPath(p.n, p.factors[:k] + (g,) + p.factors[k + 1:])
    return None


_TOKEN = re.compile(r"([+-]?)\s*(\d*)\s*w(\d+)")


def parse_weight(n: int, text: str) -> Weight:
    """Parse a signed combination of ``w<i>`` tokens, e.g. ``w1-w2`` or ``-w3``."""
    s = re.sub(r"\s+", "", text)
    if s == "0":
        return Weight.zero(n)
    if not s:
        raise PathSyntaxError("empty factor")
    coords = [0] * n
    pos = 0
    for m in _TOKEN.finditer(s):
        if m.start() != pos or (pos > 0 and not m.group(1)):
            raise PathSyntaxError(f"malformed factor {text!r}")
        i = int(m.group(3))
        if not 1 <= i <= n:
            raise PathSyntaxError(f"w{i} out of range for rank {n}")
        k = int(m.group(2)) if m.group(2) else 1
        coords[i - 1] += -k if m.group(1) == "-" else k
        pos = m.end()
    if pos != len(s):
        raise PathSyntaxError(f"malformed factor {text!r}")
    return Weight(n, tuple(coords))


def parse_path(n: int, text: str) -> SkeletonPath:
    """Comma-separated factors; the empty string is the trivial path."""
    if not text.strip():
        return SkeletonPath(n)
    factors = []
    for piece in text.split(","):
        v = parse_weight(n, piece)
        lvl = is_fundamental(v)
        if lvl is None:
            raise NotFundamental(f"factor {piece.strip()!r} is not a fundamental path")
        factors.append(FundamentalPath(v, lvl))
    return SkeletonPath(n, tuple(factors))


def format_path(p: SkeletonPath) -> str:
    return ", ".join(format_weight(f.weight) for f in p.factors)


def all_fundamental(n: int) -> list[FundamentalPath]:
    """Every fundamental path of rank n, level by level."""
    out = []
    for j in range(1, n + 1):
        out.extend(chain(n, j).vertices)
    return out
