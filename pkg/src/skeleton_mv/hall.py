"""Hall algebra of the subquiver category over the standard quadruple.

Objects are multisets of intervals [a, b] in [1, n].  An admissible subobject
of an interval is a suffix, the quotient is the complementary prefix.  The
coefficient of [C] in A * B counts the ways of choosing one suffix of each
part of C so that the suffixes are the parts of A and the prefixes the parts
of B.  Identical parts of C are distinguishable, so E_i * E_i = 2 [{i, i}].
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from .coalgebra import Monomial, TensorPoly
from .galleries import standard_quadruple  # noqa: F401  (re-exported)

Interval = tuple[int, int]


def _check_interval(n: int, iv: Interval) -> Interval:
    a, b = iv
    if not 1 <= a <= b <= n:
        raise ValueError(f"interval [{a},{b}] out of range for rank {n}")
    return (a, b)


@dataclass(frozen=True, order=True)
class HallObject:
    n: int
    parts: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(sorted(_check_interval(self.n, tuple(p)) for p in self.parts))
        object.__setattr__(self, "parts", parts)

    @classmethod
    def simple(cls, n: int, i: int) -> HallObject:
        return cls(n, ((i, i),))

    def content(self) -> Counter:
        """Multiset of underlying vertex labels."""
        out: Counter = Counter()
        for a, b in self.parts:
            out.update(range(a, b + 1))
        return out

    def __str__(self) -> str:
        return json.dumps([list(p) for p in self.parts], separators=(",", ":"))


@dataclass
class HallElement:
    n: int
    terms: dict[HallObject, int] = field(default_factory=dict)

    @classmethod
    def basis(cls, obj: HallObject) -> HallElement:
        return cls(obj.n, {obj: 1})

    def _add_term(self, obj: HallObject, c: int) -> None:
        v = self.terms.get(obj, 0) + c
        if v:
            self.terms[obj] = v
        else:
            self.terms.pop(obj, None)

    def __add__(self, other: HallElement) -> HallElement:
        out = HallElement(self.n, dict(self.terms))
        for k, c in other.terms.items():
            out._add_term(k, c)
        return out

    def __neg__(self) -> HallElement:
        return HallElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: HallElement) -> HallElement:
        return self + (-other)

    def __rmul__(self, k: int) -> HallElement:
        return HallElement(self.n, {o: k * c for o, c in self.terms.items() if k * c})

    def __mul__(self, other: HallElement) -> HallElement:
        if isinstance(other, int):
            return other * self
        out = HallElement(self.n)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                for obj, g in _structure_constants(a, b):
                    out._add_term(obj, c * d * g)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HallElement) and self.n == other.n and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        return [
            {"object": [list(p) for p in obj.parts], "coeff": c}
            for obj, c in sorted(self.terms.items())
        ]


def admissible_sub(H: Interval, J: Interval) -> bool:
    """H is an admissible subobject of J: a nonempty suffix of J."""
    return J[0] <= H[0] <= H[1] == J[1]


def admissible_quotient(H: Interval, J: Interval) -> bool:
    return J[0] == H[0] <= H[1] <= J[1]


def splittings(iv: Interval) -> list[tuple[Optional[Interval], Optional[Interval]]]:
    """(prefix quotient, suffix sub) pairs of an interval, empty sides as None."""
    a, b = iv
    out = []
    for k in range(a - 1, b + 1):
        prefix = (a, k) if k >= a else None
        suffix = (k + 1, b) if k < b else None
        out.append((prefix, suffix))
    return out


def _count(parts: tuple[Interval, ...], subs: Counter, quots: Counter) -> int:
    """Assignments of one splitting per part matching the given sub/quotient multisets."""
    choices = [splittings(p) for p in parts]
    total = 0
    for pick in product(*choices):
        got_sub = Counter(s for _, s in pick if s is not None)
        got_quot = Counter(q for q, _ in pick if q is not None)
        if got_sub == subs and got_quot == quots:
            total += 1
    return total


def _glued_objects(n: int, A: tuple[Interval, ...], B: tuple[Interval, ...]) -> set[HallObject]:
    """Every C obtained by gluing some B-parts [h,l] to distinct A-parts [l+1,j]."""
    out: set[HallObject] = set()

    def go(k: int, used: frozenset[int], glued: tuple[Interval, ...], lone_b: tuple[Interval, ...]) -> None:
        if k == len(B):
            lone_a = tuple(A[i] for i in range(len(A)) if i not in used)
            out.add(HallObject(n, glued + lone_a + lone_b))
            return
        h, l = B[k]
        go(k + 1, used, glued, lone_b + (B[k],))
        for i, (a, j) in enumerate(A):
            if i not in used and a == l + 1:
                go(k + 1, used | {i}, glued + ((h, j),), lone_b)

    go(0, frozenset(), (), ())
    return out


@lru_cache(maxsize=None)
def _structure_constants(A: HallObject, B: HallObject) -> tuple[tuple[HallObject, int], ...]:
    subs, quots = Counter(A.parts), Counter(B.parts)
    out = []
    for C in sorted(_glued_objects(A.n, A.parts, B.parts)):
        g = _count(C.parts, subs, quots)
        if g:
            out.append((C, g))
    return tuple(out)


def hall_product(A: HallObject, B: HallObject) -> HallElement:
    """A * B: A is the admissible subobject, B the quotient."""
    if A.n != B.n:
        raise ValueError("rank mismatch")
    return HallElement(A.n, dict(_structure_constants(A, B)))


def E(n: int, i: int) -> HallElement:
    return HallElement.basis(HallObject.simple(n, i))


def serre_element(n: int, i: int, j: int) -> HallElement:
    """E_i E_i E_j - 2 E_i E_j E_i + E_j E_i E_i."""
    ei, ej = E(n, i), E(n, j)
    return ei * ei * ej - 2 * (ei * ej * ei) + ej * ei * ei


def serre_check(n: int) -> bool:
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if abs(i - j) == 1 and not serre_element(n, i, j).is_zero():
                return False
            if abs(i - j) > 1 and not (E(n, i) * E(n, j) - E(n, j) * E(n, i)).is_zero():
                return False
    return True


DualTerm = tuple[Optional[Interval], Optional[Interval]]


def dual_delta(n: int, C: Interval) -> dict[DualTerm, int]:
    """Delta([h,j]*) = sum_{k=h-1}^{j} [h,k]* (x) [k+1,j]*, empty intervals read as 1."""
    _check_interval(n, C)
    return {split: 1 for split in splittings(C)}


def dual_delta_from_products(n: int, C: Interval) -> dict[DualTerm, int]:
    """The same coproduct read off Hall structure constants g^C_{A,B} (prefix (x) suffix)."""
    obj = HallObject(n, (C,))
    out: dict[DualTerm, int] = {(None, C): 1, (C, None): 1}
    for prefix, suffix in splittings(C):
        if prefix is None or suffix is None:
            continue
        g = hall_product(HallObject(n, (suffix,)), HallObject(n, (prefix,))).terms.get(obj, 0)
        if g:
            out[(prefix, suffix)] = g
    return out


def interval_to_monomial(n: int, iv: Optional[Interval]) -> Monomial:
    """Dictionary e*_{h,k} -> x_{h,k+1}; the empty interval goes to 1."""
    if iv is None:
        return Monomial.one(n)
    return Monomial(n, ((iv[0], iv[1] + 1),))


def dual_to_coalgebra(n: int, d: dict[DualTerm, int]) -> TensorPoly:
    out = TensorPoly(n)
    for (left, right), c in d.items():
        out.add(interval_to_monomial(n, left), interval_to_monomial(n, right), c)
    return out


def indecomposables(n: int) -> list[Interval]:
    return [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def objects_up_to(n: int, max_parts: int) -> list[HallObject]:
    """All objects with at most max_parts parts (including the zero object)."""
    ivs = indecomposables(n)
    out = {HallObject(n, ())}
    frontier = [()]
    for _ in range(max_parts):
        nxt = []
        for parts in frontier:
            for iv in ivs:
                if parts and iv < parts[-1]:
                    continue
                new = parts + (iv,)
                out.add(HallObject(n, new))
                nxt.append(new)
        frontier = nxt
    return sorted(out)


def parse_object(n: int, text: str) -> HallObject:
    """``[[a,b],...]`` as JSON."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SyntaxError(f"malformed object {text!r}") from exc
    if not isinstance(data, list) or any(
        not isinstance(p, list) or len(p) != 2 or not all(isinstance(x, int) for x in p) for p in data
    ):
        raise SyntaxError(f"malformed object {text!r}")
    return HallObject(n, tuple(tuple(p) for p in data))


def parse_interval(n: int, text: str) -> Interval:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SyntaxError(f"malformed interval {text!r}") from exc
    if not isinstance(data, list) or len(data) != 2 or not all(isinstance(x, int) for x in data):
        raise SyntaxError(f"malformed interval {text!r}")
    return _check_interval(n, (data[0], data[1]))


def sum_of(elements: Iterable[HallElement], n: int) -> HallElement:
    out = HallElement(n)
    for e in elements:
        out = out + e
    return out
