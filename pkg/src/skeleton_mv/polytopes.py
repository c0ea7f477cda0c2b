"""Lattice polytopes in simple-root coordinates and the polytopal map.

Polytopes are identified up to translation: the canonical representative has
its coordinatewise-minimal vertex at the origin, and identity is equality of
the sorted vertex tuple.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from ._exact import extreme_points, in_convex_hull
from .paths import (
    Chain,
    FundamentalPath,
    SkeletonPath,
    all_fundamental,
    chain,
    lower_path,
    subchain,
    weight_of,
)
from .weights import Permutation, RootVector, Weight, omega, simple_root, to_root_coords


class AmbiguousMinimum(ValueError):
    """The hull has no vertex below every other point in the dominance order."""


@dataclass(frozen=True, order=True)
class LatticePolytope:
    n: int
    vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(tuple(v) for v in self.vertices)))
        if not self.vertices:
            raise ValueError("empty polytope")
        if any(len(v) != self.n for v in self.vertices):
            raise ValueError("vertex dimension does not match rank")

    @classmethod
    def point(cls, n: int) -> LatticePolytope:
        return cls(n, ((0,) * n,))

    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def top(self) -> tuple[int, ...]:
        """The coordinatewise-maximal vertex (the weight of the polytope)."""
        return tuple(max(v[i] for v in self.vertices) for i in range(self.n))

    def contains(self, x: Iterable[int]) -> bool:
        return in_convex_hull(tuple(x), self.vertices)

    def root_vertices(self) -> list[RootVector]:
        return [RootVector(self.n, v) for v in self.vertices]

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> LatticePolytope:
        return hull([RootVector(data["n"], v) for v in data["vertices"]])


def _canonical(n: int, pts: Iterable[tuple[int, ...]]) -> LatticePolytope:
    verts = extreme_points(list(pts))
    low = tuple(min(v[i] for v in verts) for i in range(n))
    if low not in verts:
        raise AmbiguousMinimum(f"no dominance-minimal vertex among {verts}")
    return LatticePolytope(n, tuple(tuple(a - b for a, b in zip(v, low)) for v in verts))


def hull(points: Iterable[RootVector]) -> LatticePolytope:
    pts = list(points)
    if not pts:
        raise ValueError("hull of an empty set")
    n = pts[0].n
    if any(p.n != n for p in pts):
        raise ValueError("rank mismatch")
    return _canonical(n, (p.coords for p in pts))


def hull_of_vertexset(n: int, weights: Iterable[Weight]) -> LatticePolytope:
    ws = list(weights)
    if not ws:
        raise ValueError("empty weight set")
    ref = ws[0]
    return hull(to_root_coords(w - ref) for w in ws)


def reachable(p: SkeletonPath) -> set[SkeletonPath]:
    """All states reachable from p by lowering operators, keyed by full factor sequence."""
    seen = {p}
    queue = deque([p])
    while queue:
        q = queue.popleft()
        for i in range(1, p.n + 1):
            r = lower_path(q, i)
            if r is not None and r not in seen:
                seen.add(r)
                queue.append(r)
    return seen


def reached_weights(p: SkeletonPath) -> set[Weight]:
    return {weight_of(q) for q in reachable(p)}


def pol(p: SkeletonPath | FundamentalPath) -> LatticePolytope:
    if isinstance(p, FundamentalPath):
        p = SkeletonPath(p.n, (p,))
    return hull_of_vertexset(p.n, reached_weights(p))


def minkowski(a: LatticePolytope, b: LatticePolytope) -> LatticePolytope:
    if a.n != b.n:
        raise ValueError("rank mismatch")
    sums = {tuple(x + y for x, y in zip(u, v)) for u in a.vertices for v in b.vertices}
    return _canonical(a.n, sums)


def segment(n: int, i: int) -> LatticePolytope:
    """The segment [0, alpha_i]."""
    return hull([RootVector.zero(n), simple_root(n, i)])


def subchain_weights(p: FundamentalPath) -> list[RootVector]:
    """Vertex weights of Q_p in the normalisation of pol(p) (minimum at the origin)."""
    q = subchain(p)
    sink = q.sinks()[0].weight
    return [to_root_coords(v.weight - sink) for v in q.vertices]


def is_good(poly: LatticePolytope, orbit_weights: Iterable[RootVector]) -> bool:
    orbit = {tuple(w.coords) for w in orbit_weights}
    return all(v in orbit for v in poly.vertices)


def lowering_color_sequences(p: FundamentalPath) -> set[tuple[int, ...]]:
    q = subchain(p)
    succ: dict[FundamentalPath, list[tuple[int, FundamentalPath]]] = {v: [] for v in q.vertices}
    for s, c, t in q.arrows:
        succ[s].append((c, t))
    out: set[tuple[int, ...]] = set()

    def walk(v: FundamentalPath, acc: tuple[int, ...]) -> None:
        if not succ[v]:
            out.add(acc)
            return
        for c, t in succ[v]:
            walk(t, acc + (c,))

    walk(p, ())
    return out


def lusztig_datum(n: int, colors: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Zero-padded 0/1 Lusztig datum read off a lowering color sequence.

    Reading the colors bottom-up gives a word u; it is completed to a reduced
    word of w_0 by a reduced word of u^{-1} w_0.  Returns (word, datum).
    """
    u = tuple(reversed(colors))
    perm = Permutation.from_word(n, u)
    if perm.length() != len(u):
        raise ValueError(f"color sequence {colors} does not give a reduced word")
    rest = (perm.inverse() * Permutation.longest(n)).reduced_word()
    return u + rest, (1,) * len(u) + (0,) * len(rest)


def lusztig_vertices(n: int, word: tuple[int, ...], datum: tuple[int, ...]) -> list[tuple[int, ...]]:
    v = [0] * n
    out = [tuple(v)]
    for i, a in zip(word, datum):
        v[i - 1] += a
        out.append(tuple(v))
    return out


def hn_string(n: int, a: int, b: int) -> LatticePolytope:
    """HN polytope of the string module on [a, b]: submodules have suffix supports."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"interval [{a},{b}] out of range for rank {n}")
    pts = [RootVector.zero(n)]
    for k in range(a, b + 1):
        pts.append(RootVector(n, tuple(1 if k <= s <= b else 0 for s in range(1, n + 1))))
    return hull(pts)


def string_path(n: int, a: int, b: int) -> FundamentalPath:
    """omega_a - omega_{a-1} - omega_{b+1}."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"interval [{a},{b}] out of range for rank {n}")
    return FundamentalPath.of(omega(n, a) - omega(n, a - 1) - omega(n, b + 1))


def interval_subquivers(c: Chain) -> list[list[FundamentalPath]]:
    """Vertex sets {x : low <= x <= high} for every comparable pair in a chain."""
    below: dict[FundamentalPath, set[FundamentalPath]] = {}
    for v in reversed(c.vertices):
        acc = {v}
        for s, _, t in c.arrows:
            if s == v:
                acc |= below[t]
        below[v] = acc
    out = []
    for hi in c.vertices:
        for lo in below[hi]:
            out.append(sorted(x for x in below[hi] if lo in below[x]))
    return out


def fundamental_polytopes(n: int) -> dict[FundamentalPath, LatticePolytope]:
    return {p: pol(p) for p in all_fundamental(n)}


def prime_candidates(n: int, include_intervals: bool = False) -> set[LatticePolytope]:
    """Distinct non-point polytopes from fundamental paths (and interval subquivers)."""
    out = {P for P in fundamental_polytopes(n).values() if not P.is_point()}
    if include_intervals:
        for j in range(1, n + 1):
            for verts in interval_subquivers(chain(n, j)):
                P = hull_of_vertexset(n, [v.weight for v in verts])
                if not P.is_point():
                    out.add(P)
    return out

