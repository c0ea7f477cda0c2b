"""Independent reference implementations used only by the tests.

None of these import the package's algorithms; they work in the permutation
(indicator-vector) realization of the orbits V_j, in sympy, or by brute
force, so agreement with the package is a genuine cross-check.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations, product
from typing import Iterable

import sympy


# --- orbits V_j as subsets of {1, ..., n+1} -------------------------------

def subset_to_omega(n: int, S: Iterable[int]) -> tuple[int, ...]:
    """omega-coordinates of sum_{s in S} (omega_s - omega_{s-1})."""
    S = set(S)
    chi = [1 if s in S else 0 for s in range(1, n + 2)]
    return tuple(chi[i] - chi[i + 1] for i in range(n))


def orbit(n: int, j: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in combinations(range(1, n + 2), j)]


def lower_subset(S: frozenset[int], i: int) -> frozenset[int] | None:
    """s_i swaps i and i+1; it lowers exactly when i is in S and i+1 is not."""
    if i in S and i + 1 not in S:
        return (S - {i}) | {i + 1}
    return None


def chain_edges(n: int, j: int) -> set[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    out = set()
    for S in orbit(n, j):
        for i in range(1, n + 1):
            T = lower_subset(S, i)
            if T is not None:
                out.add((subset_to_omega(n, S), i, subset_to_omega(n, T)))
    return out


def omega_to_subset(n: int, coords: tuple[int, ...]) -> frozenset[int]:
    for j in range(1, n + 1):
        for S in orbit(n, j):
            if subset_to_omega(n, S) == tuple(coords):
                return S
    raise ValueError(f"{coords} is not fundamental")


def reached_lowerings(n: int, factors: list[frozenset[int]]) -> set[tuple[int, ...]]:
    """Lowering-count vectors of every state reachable under the first-factor rule."""
    start = (tuple(factors), (0,) * n)
    seen = {start}
    queue = deque([start])
    while queue:
        state, count = queue.popleft()
        for i in range(1, n + 1):
            for k, S in enumerate(state):
                T = lower_subset(S, i)
                if T is not None:
                    c = list(count)
                    c[i - 1] += 1
                    nxt = (state[:k] + (T,) + state[k + 1:], tuple(c))
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
                    break
    return {c for _, c in seen}


def pol_points(n: int, factors: list[frozenset[int]]) -> set[tuple[int, ...]]:
    """Reached weights in simple-root coordinates measured from the lowest one."""
    counts = reached_lowerings(n, factors)
    top = tuple(max(c[i] for c in counts) for i in range(n))
    return {tuple(t - x for t, x in zip(top, c)) for c in counts}


# --- hulls ------------------------------------------------------------------

def extreme_points_2d(points: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Monotone-chain hull (integer cross products), collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return sorted(set(lower[:-1] + upper[:-1]))


def canonical(points: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    pts = list(points)
    low = tuple(min(p[i] for p in pts) for i in range(len(pts[0])))
    return tuple(sorted(tuple(a - b for a, b in zip(p, low)) for p in pts))


# --- Cartan data ------------------------------------------------------------

def cartan_sympy(n: int) -> sympy.Matrix:
    return sympy.Matrix(n, n, lambda i, j: 2 if i == j else (-1 if abs(i - j) == 1 else 0))


def root_coords_sympy(n: int, omega_coords: tuple[int, ...]) -> tuple:
    x = cartan_sympy(n).LUsolve(sympy.Matrix(omega_coords))
    return tuple(x)


# --- roots as e_a - e_b -----------------------------------------------------

def root_from_pair(n: int, a: int, b: int) -> tuple[int, ...]:
    """e_a - e_b in simple-root coordinates (a != b)."""
    lo, hi = min(a, b), max(a, b)
    sign = 1 if a < b else -1
    return tuple(sign if lo <= s < hi else 0 for s in range(1, n + 1))


def root_function_perm(n: int, word: list[int], face: set[int]) -> list[tuple[int, ...]]:
    """r(l) = w(alpha_{i_l}) with w the product of traversing letters before l, as permutations."""
    out = []
    perm = list(range(n + 2))  # perm[x] = w(x), 1-based
    for l, i in enumerate(word, start=1):
        out.append(root_from_pair(n, perm[i], perm[i + 1]))
        if l not in face:
            # w <- w * s_i : swap the images of i and i+1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return out


def inversions(images: tuple[int, ...]) -> int:
    return sum(1 for a, b in combinations(range(len(images)), 2) if images[a] > images[b])


# --- comultiplication by polynomial algebra --------------------------------

def sympy_delta(n: int, labels: list[tuple[int, int]]) -> dict:
    """Expand prod Delta(x_{i,j}) with separate left/right symbols; return {(left, right): coeff}."""
    L = {(i, j): sympy.Symbol(f"L_{i}_{j}") for i in range(1, n + 2) for j in range(i + 1, n + 2)}
    R = {(i, j): sympy.Symbol(f"R_{i}_{j}") for i in range(1, n + 2) for j in range(i + 1, n + 2)}

    def x(table, i, j):
        return sympy.Integer(1) if i == j else table[(i, j)]

    expr = sympy.Integer(1)
    for i, j in labels:
        expr *= sum(x(L, i, k) * x(R, k, j) for k in range(i, j + 1))
    poly = sympy.Poly(sympy.expand(expr), *L.values(), *R.values())
    lkeys, rkeys = list(L), list(R)
    out = {}
    for exps, c in poly.terms():
        left = []
        right = []
        for key, e in zip(lkeys, exps[: len(lkeys)]):
            left += [key] * e
        for key, e in zip(rkeys, exps[len(lkeys):]):
            right += [key] * e
        out[(tuple(sorted(left)), tuple(sorted(right)))] = int(c)
    return out


# --- Hall coefficients by brute force --------------------------------------

def interval_multisets(n: int, content: dict[int, int]) -> list[tuple[tuple[int, int], ...]]:
    """Every multiset of intervals whose labels add up to ``content``."""
    ivs = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    out = []

    def go(k: int, left: dict[int, int], acc: tuple):
        if all(v == 0 for v in left.values()):
            out.append(acc)
            return
        for idx in range(k, len(ivs)):
            a, b = ivs[idx]
            if all(left.get(s, 0) > 0 for s in range(a, b + 1)):
                nxt = dict(left)
                for s in range(a, b + 1):
                    nxt[s] -= 1
                go(idx, nxt, acc + ((a, b),))

    go(0, dict(content), ())
    return out


def hall_coefficient(C, A, B) -> int:
    """Suffix choices per part of C with suffixes = A and prefixes = B (as multisets)."""
    count = 0
    options = [[k for k in range(a - 1, b + 1)] for a, b in C]
    for cut in product(*options):
        subs = sorted((k + 1, b) for (a, b), k in zip(C, cut) if k < b)
        quots = sorted((a, k) for (a, b), k in zip(C, cut) if k >= a)
        if subs == sorted(A) and quots == sorted(B):
            count += 1
    return count


def hall_product_brute(n: int, A, B) -> dict:
    content: dict[int, int] = {}
    for a, b in list(A) + list(B):
        for s in range(a, b + 1):
            content[s] = content.get(s, 0) + 1
    out = {}
    for C in interval_multisets(n, content):
        g = hall_coefficient(C, A, B)
        if g:
            out[tuple(sorted(C))] = g
    return out
