"""String-path generators of C[N] and their comultiplication.

The generator with support [a, b] is the fundamental path
omega_a - omega_{a-1} - omega_{b+1} and the coordinate function x_{a,b+1}.
Delta(x_{i,j}) = sum_{k=i}^{j} x_{i,k} (x) x_{k,j} with x_{t,t} = 1, extended
multiplicatively to monomials.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .paths import FundamentalPath
from .polytopes import string_path
from .weights import RootVector, Weight

Label = tuple[int, int]


@dataclass(frozen=True, order=True)
class StringGen:
    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b <= self.n:
            raise ValueError(f"interval [{self.a},{self.b}] out of range for rank {self.n}")

    @property
    def label(self) -> Label:
        return (self.a, self.b + 1)

    @property
    def path(self) -> FundamentalPath:
        return string_path(self.n, self.a, self.b)

    def __str__(self) -> str:
        return f"x[{self.a},{self.b + 1}]"


def string_gen(n: int, a: int, b: int) -> StringGen:
    return StringGen(n, a, b)


def gen_from_label(n: int, i: int, j: int) -> StringGen:
    """x_{i,j} with i < j <= n+1."""
    if not 1 <= i < j <= n + 1:
        raise ValueError(f"x[{i},{j}] out of range for rank {n}")
    return StringGen(n, i, j - 1)


@dataclass(frozen=True, order=True)
class Monomial:
    """Commutative product of generators stored as a sorted label tuple."""

    n: int
    labels: tuple[Label, ...] = ()

    def __post_init__(self) -> None:
        labs = tuple(sorted(tuple(x) for x in self.labels))
        for i, j in labs:
            if not 1 <= i < j <= self.n + 1:
                raise ValueError(f"x[{i},{j}] out of range for rank {self.n}")
        object.__setattr__(self, "labels", labs)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls(n, ())

    @classmethod
    def of(cls, *gens: StringGen) -> Monomial:
        if not gens:
            raise ValueError("use Monomial.one(n) for the unit")
        return cls(gens[0].n, tuple(g.label for g in gens))

    def is_one(self) -> bool:
        return not self.labels

    def degree(self) -> int:
        return len(self.labels)

    def gens(self) -> Iterator[StringGen]:
        return (gen_from_label(self.n, i, j) for i, j in self.labels)

    def __mul__(self, other: Monomial) -> Monomial:
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return Monomial(self.n, self.labels + other.labels)

    def __str__(self) -> str:
        if not self.labels:
            return "1"
        parts = []
        for (i, j), k in sorted(Counter(self.labels).items()):
            parts.append(f"x[{i},{j}]" + (f"^{k}" if k > 1 else ""))
        return "*".join(parts)


def root_content(m: Monomial) -> RootVector:
    """Grading by support: x_{i,j} has degree alpha_i + ... + alpha_{j-1}."""
    coords = [0] * m.n
    for i, j in m.labels:
        for s in range(i, j):
            coords[s - 1] += 1
    return RootVector(m.n, tuple(coords))


def path_weight(m: Monomial) -> Weight:
    """Sum of generator path weights (not additive under delta; see root_content)."""
    w = Weight.zero(m.n)
    for g in m.gens():
        w = w + g.path.weight
    return w


@dataclass
class TensorPoly:
    """Integer combination of pure tensors of monomials; zero terms are dropped."""

    n: int
    terms: dict[tuple[Monomial, Monomial], int] = field(default_factory=dict)

    def add(self, left: Monomial, right: Monomial, coeff: int = 1) -> None:
        key = (left, right)
        c = self.terms.get(key, 0) + coeff
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    def __mul__(self, other: TensorPoly) -> TensorPoly:
        out = TensorPoly(self.n)
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                out.add(a * x, b * y, c * d)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorPoly) and self.n == other.n and self.terms == other.terms

    def items(self) -> list[tuple[Monomial, Monomial, int]]:
        return sorted((a, b, c) for (a, b), c in self.terms.items())

    def to_json(self) -> list[dict]:
        return [
            {"left": [list(x) for x in a.labels], "right": [list(x) for x in b.labels], "coeff": c}
            for a, b, c in self.items()
        ]

    def __str__(self) -> str:
        return " + ".join(f"{c}*({a} (x) {b})" for a, b, c in self.items()) or "0"


def _x(n: int, i: int, j: int) -> Monomial:
    return Monomial.one(n) if i == j else Monomial(n, ((i, j),))


def delta_gen(g: StringGen) -> TensorPoly:
    i, j = g.label
    out = TensorPoly(g.n)
    for k in range(i, j + 1):
        out.add(_x(g.n, i, k), _x(g.n, k, j))
    return out


def delta(m: Monomial) -> TensorPoly:
    out = TensorPoly(m.n, {(Monomial.one(m.n), Monomial.one(m.n)): 1})
    for g in m.gens():
        out = out * delta_gen(g)
    return out


def counit(m: Monomial) -> int:
    return 1 if m.is_one() else 0


def counit_left(t: TensorPoly) -> Counter:
    """(epsilon (x) id) applied to t, as a Counter of monomials."""
    out: Counter = Counter()
    for (a, b), c in t.terms.items():
        if counit(a):
            out[b] += c
    return +out


def counit_right(t: TensorPoly) -> Counter:
    out: Counter = Counter()
    for (a, b), c in t.terms.items():
        if counit(b):
            out[a] += c
    return +out


def delta_left(t: TensorPoly) -> Counter:
    """(delta (x) id) t as a Counter of monomial triples."""
    out: Counter = Counter()
    for (a, b), c in t.terms.items():
        for (x, y), d in delta(a).terms.items():
            out[(x, y, b)] += c * d
    return +out


def delta_right(t: TensorPoly) -> Counter:
    out: Counter = Counter()
    for (a, b), c in t.terms.items():
        for (x, y), d in delta(b).terms.items():
            out[(a, x, y)] += c * d
    return +out


def all_gens(n: int) -> list[StringGen]:
    return [StringGen(n, a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


_FACTOR = re.compile(r"x\[(\d+),(\d+)\](?:\^(\d+))?$")


def parse_monomial(n: int, text: str) -> Monomial:
    """``x[i,j]`` tokens joined by ``*``, each optionally raised to ``^k``; ``1`` is the unit."""
    s = re.sub(r"\s+", "", text)
    if s == "1":
        return Monomial.one(n)
    if not s:
        raise SyntaxError("empty monomial")
    labels: list[Label] = []
    for piece in s.split("*"):
        m = _FACTOR.match(piece)
        if not m:
            raise SyntaxError(f"malformed factor {piece!r}")
        i, j = int(m.group(1)), int(m.group(2))
        power = int(m.group(3)) if m.group(3) else 1
        labels.extend([(i, j)] * power)
    return Monomial(n, tuple(labels))


def monomials_from(n: int, gens: Iterable[StringGen]) -> Monomial:
    return Monomial(n, tuple(g.label for g in gens))
