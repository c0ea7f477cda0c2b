"""Exact rational linear algebra: rank, span membership, convex-hull membership.

Inputs are integer or Fraction vectors and every answer is exact.  Hull
membership may consult a floating-point LP, but only certified answers are used.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Sequence

Vec = Sequence[int]


def row_echelon(rows: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Return the nonzero rows of a reduced row echelon form."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        piv = m[pivot_row][col]
        m[pivot_row] = [x / piv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                c = m[r][col]
                m[r] = [a - c * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row]


def rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    return len(row_echelon(rows))


def in_span(v: Vec, basis: Sequence[Vec]) -> bool:
    if not basis:
        return all(x == 0 for x in v)
    return rank(list(basis) + [v]) == rank(basis)


def solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red = row_echelon(aug)
    if len(red) != n or any(red[i][i] != 1 for i in range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def _phase_one_feasible(a: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Is {x >= 0 : a x = b} nonempty?  Phase-I simplex with Bland's rule."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for r in range(rows):
        if b[r] < 0:
            a[r] = [-x for x in a[r]]
            b[r] = -b[r]
    # tableau columns: original vars, then one artificial per row, then rhs
    width = cols + rows
    tab = []
    for r in range(rows):
        art = [Fraction(0)] * rows
        art[r] = Fraction(1)
        tab.append(a[r] + art + [b[r]])
    basis = [cols + r for r in range(rows)]
    # reduced costs for minimising the sum of artificials
    z = [Fraction(0)] * (width + 1)
    for r in range(rows):
        for c in range(width + 1):
            z[c] -= tab[r][c]
    for r in range(rows):
        z[cols + r] = Fraction(0)
    while True:
        enter = next((c for c in range(width) if z[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(rows):
            if tab[r][enter] > 0:
                ratio = tab[r][width] / tab[r][enter]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # unbounded direction cannot occur in phase I; objective bounded below by 0
            break
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for r in range(rows):
            if r != leave and tab[r][enter] != 0:
                c = tab[r][enter]
                tab[r] = [x - c * y for x, y in zip(tab[r], tab[leave])]
        c = z[enter]
        z = [x - c * y for x, y in zip(z, tab[leave])]
        basis[leave] = enter
    return z[width] == 0


def _exact_combination(point: Vec, points: Sequence[Vec], support: Sequence[int]) -> bool:
    """Certify point = sum lambda_s q_s, sum lambda_s = 1, lambda >= 0 on a given support."""
    cols: list[int] = []
    for s in support:
        trial = cols + [s]
        if rank([list(points[k]) + [1] for k in trial]) == len(trial):
            cols = trial
    if not cols:
        return False
    d = len(point)
    aug = [[Fraction(points[k][i]) for k in cols] + [Fraction(point[i])] for i in range(d)]
    aug.append([Fraction(1)] * len(cols) + [Fraction(1)])
    red = row_echelon(aug)
    m = len(cols)
    if any(all(x == 0 for x in row[:m]) for row in red):
        return False
    lam = [Fraction(0)] * m
    for row in red:
        lead = next(j for j in range(m) if row[j] != 0)
        lam[lead] = row[m]
    return all(x >= 0 for x in lam)


def _integer_direction(direction) -> list[int]:
    c = [Fraction(float(x)).limit_denominator(10_000) for x in direction]
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in c]


def _exact_separation(point: Vec, points: Sequence[Vec], direction) -> bool:
    """Certify c.point > c.q for every q with c an integer rescaling of ``direction``."""
    c = _integer_direction(direction)
    top = sum(a * x for a, x in zip(c, point))
    return all(sum(a * x for a, x in zip(c, q)) < top for q in points)


def _float_decide(point: Vec, points: Sequence[Vec]) -> bool | None:
    """HiGHS proposes an answer; it is returned only once certified exactly."""
    import numpy as np
    from scipy.optimize import linprog

    q = np.array(points, dtype=float)
    p = np.array(point, dtype=float)
    a_eq = np.vstack([q.T, np.ones(len(points))])
    b_eq = np.append(p, 1.0)
    res = linprog(np.zeros(len(points)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status == 0:
        support = [k for k in np.argsort(-res.x) if res.x[k] > 1e-9]
        return True if _exact_combination(point, points, support) else None
    if res.status != 2:
        return None
    # separating direction: maximise c.p - t subject to c.q <= t, |c| <= 1
    d = len(point)
    obj = np.append(-p, 1.0)
    a_ub = np.hstack([q, -np.ones((len(points), 1))])
    bounds = [(-1, 1)] * d + [(None, None)]
    sep = linprog(obj, A_ub=a_ub, b_ub=np.zeros(len(points)), bounds=bounds, method="highs")
    if sep.status == 0 and _exact_separation(point, points, sep.x[:d]):
        return False
    return None


def in_convex_hull(point: Vec, points: Sequence[Vec]) -> bool:
    """Decide whether ``point`` is a convex combination of ``points``.

    A floating-point LP suggests the answer, which is then certified with
    rational arithmetic (an explicit convex combination or an explicit
    separating hyperplane).  Without a certificate the exact simplex decides.
    """
    if not points:
        return False
    p = tuple(point)
    if any(tuple(q) == p for q in points):
        return True
    d = len(p)
    for i in range(d):
        lo = min(q[i] for q in points)
        hi = max(q[i] for q in points)
        if not lo <= p[i] <= hi:
            return False
    pts = [tuple(q) for q in points]
    verdict = _float_decide(p, pts)
    if verdict is not None:
        return verdict
    a = [[Fraction(q[i]) for q in pts] for i in range(d)]
    a.append([Fraction(1)] * len(pts))
    b = [Fraction(x) for x in p] + [Fraction(1)]
    return _phase_one_feasible(a, b)


def in_convex_hull_exact(point: Vec, points: Sequence[Vec]) -> bool:
    """Pure rational simplex; slow, used as a cross-check."""
    if not points:
        return False
    d = len(point)
    a = [[Fraction(q[i]) for q in points] for i in range(d)]
    a.append([Fraction(1)] * len(points))
    b = [Fraction(x) for x in point] + [Fraction(1)]
    return _phase_one_feasible(a, b)


def _unique_maximisers(pts: list[tuple[int, ...]], directions) -> set[tuple[int, ...]]:
    out = set()
    for c in directions:
        vals = [sum(a * x for a, x in zip(c, q)) for q in pts]
        top = max(vals)
        hits = [q for q, v in zip(pts, vals) if v == top]
        if len(hits) == 1:
            out.add(hits[0])
    return out


def _extreme_points_screened(pts: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Screening by hull-membership tests only (slow path)."""
    d = len(pts[0])
    rng = random.Random(len(pts) * 1_000_003 + d)
    directions = [tuple(s if k == i else 0 for k in range(d)) for i in range(d) for s in (1, -1)]
    directions += [tuple(rng.randint(-7, 7) for _ in range(d)) for _ in range(8 * d)]
    certified = _unique_maximisers(pts, directions)
    for p in pts:
        if p in certified:
            continue
        if len(certified) > 1 and in_convex_hull(p, sorted(certified)):
            continue
        if not in_convex_hull(p, [q for q in pts if q != p]):
            certified.add(p)
    return sorted(certified)


def _affine_chart(pts: list[tuple[int, ...]]) -> list[int]:
    """Coordinates whose projection is injective on the affine span of pts."""
    base = pts[0]
    red = row_echelon([[a - b for a, b in zip(q, base)] for q in pts[1:]])
    return [next(j for j, x in enumerate(row) if x != 0) for row in red]


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    m = [list(r) for r in matrix]
    size = len(m)
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if size else 1


def _inside_simplex(p: Sequence[int], simplex: Sequence[Sequence[int]]) -> bool:
    """Exact barycentric sign test (Cramer's rule) against a full-dimensional simplex."""
    m = len(simplex)
    cols = [list(v) + [1] for v in simplex]
    target = list(p) + [1]
    full = int_det([[cols[c][r] for c in range(m)] for r in range(m)])
    if full == 0:
        return False
    for i in range(m):
        swapped = [target if c == i else cols[c] for c in range(m)]
        if int_det([[swapped[c][r] for c in range(m)] for r in range(m)]) * full < 0:
            return False
    return True


def _extreme_points_qhull(pts: list[tuple[int, ...]], chart: list[int]) -> list[tuple[int, ...]] | None:
    import numpy as np
    from scipy.spatial import ConvexHull, Delaunay, QhullError

    proj = [tuple(q[j] for j in chart) for q in pts]
    arr = np.array(proj, dtype=float)
    try:
        hull_ = ConvexHull(arr)
    except QhullError:
        return None
    cand = sorted(int(k) for k in hull_.vertices)
    keep = set()
    for k in cand:
        normals = hull_.equations[[k in simplex for simplex in hull_.simplices], :-1]
        others = [proj[m] for m in range(len(proj)) if m != k]
        if _exact_separation(proj[k], others, normals.sum(axis=0)):
            keep.add(k)
        elif not in_convex_hull(proj[k], others):
            keep.add(k)
    verts = sorted(keep)
    if len(verts) <= len(chart):
        return None
    try:
        tri = Delaunay(arr[verts])
    except QhullError:
        return None
    located = tri.find_simplex(arr)
    for m in range(len(proj)):
        if m in keep:
            continue
        s = int(located[m])
        if s >= 0 and _inside_simplex(proj[m], [proj[verts[v]] for v in tri.simplices[s]]):
            continue
        if not in_convex_hull(proj[m], [q for i, q in enumerate(proj) if i != m]):
            keep.add(m)
    return sorted(pts[k] for k in keep)


def extreme_points(points: Sequence[Vec]) -> list[tuple[int, ...]]:
    """Extreme points of a finite point set, in sorted order.

    Points are charted injectively onto their affine span.  Qhull proposes
    the vertices; each proposed vertex is confirmed by an exact separating
    direction and each remaining point by exact barycentric coordinates in a
    simplex of the proposed vertices.  Anything left unconfirmed goes through
    the exact hull-membership test.
    """
    pts = sorted({tuple(p) for p in points})
    if len(pts) <= 1:
        return pts
    chart = _affine_chart(pts)
    if len(chart) == 1:
        j = chart[0]
        return sorted({min(pts, key=lambda q: q[j]), max(pts, key=lambda q: q[j])})
    if len(pts) == len(chart) + 1:
        return pts  # affinely independent
    fast = _extreme_points_qhull(pts, chart)
    if fast is not None:
        return fast
    return _extreme_points_screened(pts)
