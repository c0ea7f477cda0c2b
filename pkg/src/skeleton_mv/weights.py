"""Type A_n weights, roots and the Weyl group as permutations.

Weights live in the fundamental-weight basis, roots in the simple-root basis.
Both are plain integer vectors; all arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class NotInRootLattice(ValueError):
    """A weight whose simple-root coordinates are not integral."""


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"simple-root index {i} out of range 1..{n}")


def cartan(n: int) -> list[list[int]]:
    _check_rank(n)
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]


@dataclass(frozen=True, order=True)
class Weight:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls(n, (0,) * n)

    def _same(self, other: Weight) -> None:
        if not isinstance(other, Weight) or other.n != self.n:
            raise ValueError("rank mismatch")

    def __add__(self, other: Weight) -> Weight:
        self._same(other)
        return Weight(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._same(other)
        return Weight(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(self.n, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> Weight:
        return Weight(self.n, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return format_weight(self)


@dataclass(frozen=True, order=True)
class RootVector:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, n: int) -> RootVector:
        return cls(n, (0,) * n)

    def __add__(self, other: RootVector) -> RootVector:
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return RootVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RootVector) -> RootVector:
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return RootVector(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> RootVector:
        return RootVector(self.n, tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self) -> bool:
        return not self.is_zero() and all(c >= 0 for c in self.coords)

    def height(self) -> int:
        return sum(self.coords)

    def __str__(self) -> str:
        return format_root(self)


def omega(n: int, i: int) -> Weight:
    """Fundamental weight; omega_0 and omega_{n+1} are zero by convention."""
    if i in (0, n + 1):
        return Weight.zero(n)
    _check_index(n, i)
    return Weight(n, tuple(1 if k == i else 0 for k in range(1, n + 1)))


def alpha(n: int, i: int) -> Weight:
    """Simple root alpha_i in omega-coordinates (the i-th Cartan column)."""
    _check_index(n, i)
    return Weight(n, tuple(row[i - 1] for row in cartan(n)))


def simple_root(n: int, i: int) -> RootVector:
    _check_index(n, i)
    return RootVector(n, tuple(1 if k == i else 0 for k in range(1, n + 1)))


def pairing(v: Weight, i: int) -> int:
    """<v, alpha_i^vee>; in omega-coordinates this is the i-th coordinate."""
    _check_index(v.n, i)
    return v.coords[i - 1]


def simple_reflection(v: Weight, i: int) -> Weight:
    return v - alpha(v.n, i) * pairing(v, i)


def to_weight(x: RootVector) -> Weight:
    c = cartan(x.n)
    return Weight(x.n, tuple(sum(c[i][j] * x.coords[j] for j in range(x.n)) for i in range(x.n)))


def to_root_coords(v: Weight) -> RootVector:
    """Solve C x = coords using the closed-form inverse Cartan matrix of A_n.

    (C^-1)_{ij} = min(i, j) (n + 1 - max(i, j)) / (n + 1).
    """
    n = v.n
    out = []
    for i in range(1, n + 1):
        num = sum(min(i, j) * (n + 1 - max(i, j)) * v.coords[j - 1] for j in range(1, n + 1))
        q = Fraction(num, n + 1)
        if q.denominator != 1:
            raise NotInRootLattice(f"{format_weight(v)} is not in the root lattice")
        out.append(int(q))
    return RootVector(n, tuple(out))


def root_pairing(x: RootVector, y: RootVector) -> int:
    """<x, y^vee> for root-lattice vectors (symmetric in the simply-laced case)."""
    c = cartan(x.n)
    return sum(x.coords[i] * c[i][j] * y.coords[j] for i in range(x.n) for j in range(x.n))


def reflect_root(x: RootVector, i: int) -> RootVector:
    _check_index(x.n, i)
    k = root_pairing(x, simple_root(x.n, i))
    coords = list(x.coords)
    coords[i - 1] -= k
    return RootVector(x.n, tuple(coords))


def act_word(word: Sequence[int], x: RootVector) -> RootVector:
    """Apply s_{w_1} s_{w_2} ... s_{w_m} to x (rightmost letter acts first)."""
    for i in reversed(word):
        x = reflect_root(x, i)
    return x


def positive_roots(n: int) -> list[RootVector]:
    """alpha_a + ... + alpha_b for 1 <= a <= b <= n."""
    return [
        RootVector(n, tuple(1 if a <= k <= b else 0 for k in range(1, n + 1)))
        for a in range(1, n + 1)
        for b in range(a, n + 1)
    ]


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of {1, ..., n+1} stored by its images; (p * q)(x) = p(q(x))."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images) - 1

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 2)))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        _check_index(n, i)
        im = list(range(1, n + 2))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> Permutation:
        p = cls.identity(n)
        for i in word:
            p = p * cls.simple(n, i)
        return p

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n + 1, 0, -1)))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other.images) != len(self.images):
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word, peeling right descents."""
        word: list[int] = []
        p = self
        while True:
            i = next((i for i in range(1, len(p.images)) if p.images[i - 1] > p.images[i]), None)
            if i is None:
                break
            word.append(i)
            p = p * Permutation.simple(self.rank, i)
        return tuple(reversed(word))

    def act(self, v: Weight) -> Weight:
        if v.n != self.rank:
            raise ValueError("rank mismatch")
        for i in reversed(self.reduced_word()):
            v = simple_reflection(v, i)
        return v


def _format_combination(coords: Sequence[int], symbol: str) -> str:
    parts = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{symbol}{i}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def format_weight(v: Weight) -> str:
    return _format_combination(v.coords, "w")


def format_root(x: RootVector) -> str:
    return _format_combination(x.coords, "a")
