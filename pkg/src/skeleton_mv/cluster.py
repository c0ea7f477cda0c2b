"""The initial seed of C[N] labelled by oriented edges of the fundamental alcove.

Seed indices follow the word i = (1..n, 1..n-1, ..., 1) preceded by n negative
letters.  The edge set E = {omega_i} u {omega_j - omega_k : j < k} labels the
frozen (omega_i) and mutable (omega_j - omega_k) variables through beta.

Exchange-matrix convention: b[t][t'] = #arrows(t' -> t) - #arrows(t -> t').
"""
from __future__ import annotations

from dataclasses import dataclass

from .paths import FundamentalPath
from .polytopes import LatticePolytope, pol
from .weights import cartan, format_weight, omega


@dataclass(frozen=True, order=True)
class EdgeLabel:
    """Either ('w', i, 0) for omega_i or ('d', j, k) for omega_j - omega_k, j < k."""

    kind: str
    j: int
    k: int
    n: int

    def __post_init__(self) -> None:
        if self.kind == "w":
            if not 1 <= self.j <= self.n or self.k != 0:
                raise ValueError(f"bad frozen edge omega_{self.j}")
        elif self.kind == "d":
            if not 1 <= self.j < self.k <= self.n:
                raise ValueError(f"bad mutable edge omega_{self.j}-omega_{self.k}")
        else:
            raise ValueError(f"unknown edge kind {self.kind!r}")

    @classmethod
    def frozen_edge(cls, n: int, i: int) -> EdgeLabel:
        return cls("w", i, 0, n)

    @classmethod
    def mutable_edge(cls, n: int, j: int, k: int) -> EdgeLabel:
        return cls("d", j, k, n)

    @property
    def frozen(self) -> bool:
        return self.kind == "w"

    @property
    def path(self) -> FundamentalPath:
        if self.frozen:
            return FundamentalPath.of(omega(self.n, self.j))
        return FundamentalPath.of(omega(self.n, self.j) - omega(self.n, self.k))

    def __str__(self) -> str:
        return format_weight(self.path.weight)


def edges(n: int) -> list[EdgeLabel]:
    """E ordered as omega_1..omega_n, then omega_j - omega_k lexicographically."""
    out = [EdgeLabel.frozen_edge(n, i) for i in range(1, n + 1)]
    out += [EdgeLabel.mutable_edge(n, j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    return out


@dataclass(frozen=True)
class SeedIndex:
    k: int
    letter: int
    kplus: int
    exchangeable: bool

    @property
    def frozen(self) -> bool:
        return self.k < 0


def reduced_word(n: int) -> tuple[int, ...]:
    """(1..n, 1..n-1, ..., 1), a reduced word for w_0."""
    word: list[int] = []
    for top in range(n, 0, -1):
        word.extend(range(1, top + 1))
    return tuple(word)


def seed_indices(n: int) -> list[SeedIndex]:
    if n < 2:
        raise ValueError("the seed needs rank at least 2")
    word = reduced_word(n)
    length = len(word)
    letters = {k: -k for k in range(-n, 0)}
    letters.update({k: word[k - 1] for k in range(1, length + 1)})
    order = list(range(-n, 0)) + list(range(1, length + 1))
    out = []
    for k in order:
        kplus = next((l for l in order if l > k and letters[l] == letters[k]), length + 1)
        out.append(SeedIndex(k, letters[k], kplus, 1 <= k and kplus <= length))
    return out


def exchangeable_set(n: int) -> set[int]:
    return {s.k for s in seed_indices(n) if s.exchangeable}


def _t(n: int, k: int, e: set[int]) -> int:
    return min(h for h in range(k + 1, n * (n + 1) // 2 + 2) if h not in e)


def beta(n: int, k: int) -> EdgeLabel:
    """The edge labelling seed index k (k frozen negative or exchangeable)."""
    if -n <= k <= -1:
        return EdgeLabel.frozen_edge(n, n + 1 + k)
    e = exchangeable_set(n)
    if k not in e:
        raise ValueError(f"index {k} is neither frozen nor exchangeable")
    word = reduced_word(n)
    t = _t(n, k, e)
    top = word[t - 1]
    return EdgeLabel.mutable_edge(n, top - word[k - 1], top)


def seed_labels(n: int) -> dict[int, EdgeLabel]:
    """beta on every frozen and exchangeable index."""
    ks = [s.k for s in seed_indices(n) if s.frozen or s.exchangeable]
    return {k: beta(n, k) for k in ks}


def _closed_form_arrows(n: int) -> set[tuple[EdgeLabel, EdgeLabel]]:
    w = lambda i: EdgeLabel.frozen_edge(n, i)
    d = lambda j, k: EdgeLabel.mutable_edge(n, j, k)
    arrows = set()
    for j in range(1, n):
        arrows.add((d(j, n), w(j)))
    for j in range(2, n + 1):
        arrows.add((w(j), d(j - 1, n)))
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            if j + 1 < k:
                arrows.add((d(j, k), d(j + 1, k)))
            if k + 1 <= n:
                arrows.add((d(j, k), d(j, k + 1)))
            if j >= 2:
                arrows.add((d(j, k), d(j - 1, k - 1)))
    return arrows


def _matrix(n: int, arrows) -> list[list[int]]:
    es = edges(n)
    pos = {t: a for a, t in enumerate(es)}
    b = [[0] * len(es) for _ in es]
    for s, t in arrows:
        b[pos[t]][pos[s]] += 1
        b[pos[s]][pos[t]] -= 1
    return b


def exchange_matrix(n: int) -> list[list[int]]:
    """Closed-form exchange matrix on E x E (rows and columns in ``edges(n)`` order).

    Arrows: omega_j - omega_n -> omega_j (j < n); omega_j -> omega_{j-1} - omega_n
    (j >= 2); and among mutable edges (j,k) -> (j+1,k), (j,k) -> (j,k+1),
    (j,k) -> (j-1,k-1) whenever the target is an edge.
    """
    if n < 2:
        raise ValueError("the seed needs rank at least 2")
    return _matrix(n, _closed_form_arrows(n))


def quiver_arrows(n: int) -> set[tuple[int, int]]:
    """Arrows of the seed quiver on frozen and exchangeable indices."""
    idx = seed_indices(n)
    info = {s.k: s for s in idx}
    e = {s.k for s in idx if s.exchangeable}
    c = cartan(n)
    arrows = set()
    for s in idx:
        for t in idx:
            k, l = s.k, t.k
            if not k < l or not ({k, l} & e):
                continue
            if s.kplus == l:
                arrows.add((k, l))
            if l < s.kplus < t.kplus and c[s.letter - 1][t.letter - 1] == -1:
                arrows.add((l, k))
    keep = {k for k, s in info.items() if s.frozen or s.exchangeable}
    return {(a, b) for a, b in arrows if a in keep and b in keep}


def exchange_matrix_from_quiver(n: int) -> list[list[int]]:
    if n < 2:
        raise ValueError("the seed needs rank at least 2")
    labels = seed_labels(n)
    return _matrix(n, {(labels[a], labels[b]) for a, b in quiver_arrows(n)})


def seed_polytopes(n: int) -> dict[EdgeLabel, LatticePolytope]:
    return {t: pol(t.path) for t in edges(n)}

