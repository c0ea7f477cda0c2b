"""Quadruples (W, Q, pi, I), root functions, folded galleries and flats.

Positions are 1-based.  A position in I is a reflection (folded) position,
every other position is traversing.  Products over positions run left to
right in increasing order, so the rightmost letter acts first.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ._exact import in_span, rank
from .weights import Permutation, RootVector, act_word, root_pairing, simple_root


class MalformedGallery(ValueError):
    """No simple reflection solves the reconstruction recursion at some step."""


class NotAFlat(ValueError):
    """A position set that is not closed under the span of its roots."""


class NotInClassA(ValueError):
    """Face roots do not form a basis, or pi is not the longest element."""


def parabolic_longest(n: int, letters: Iterable[int]) -> Permutation:
    """Longest element of the parabolic subgroup generated by s_i, i in letters."""
    im = list(range(1, n + 2))
    ls = sorted(set(letters))
    k = 0
    while k < len(ls):
        a = ls[k]
        b = a
        while k + 1 < len(ls) and ls[k + 1] == b + 1:
            k += 1
            b = ls[k]
        im[a - 1 : b + 1] = reversed(im[a - 1 : b + 1])
        k += 1
    return Permutation(tuple(im))


def is_maximal_face(n: int, word: Sequence[int], pi: Permutation, face: Iterable[int]) -> bool:
    """Deleting the face positions leaves a reduced word for pi."""
    face = set(face)
    if any(not 1 <= p <= len(word) for p in face):
        return False
    rest = [word[p - 1] for p in range(1, len(word) + 1) if p not in face]
    return Permutation.from_word(n, rest) == pi and pi.length() == len(rest)


@dataclass(frozen=True)
class Quadruple:
    rank: int
    word: tuple[int, ...]
    pi: Permutation
    face: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "face", frozenset(self.face))
        if any(not 1 <= i <= self.rank for i in self.word):
            raise ValueError("letter out of range")
        if self.pi.rank != self.rank:
            raise ValueError("rank mismatch")
        if not is_maximal_face(self.rank, self.word, self.pi, self.face):
            raise ValueError("face is not a maximal face of the subword complex")

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.word)))

    def traversing(self) -> list[int]:
        return [p for p in range(1, self.length + 1) if p not in self.face]

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "generators": list(self.generators),
            "word": list(self.word),
            "pi": list(self.pi.images),
            "pi_word": list(self.pi.reduced_word()),
            "face": sorted(self.face),
        }


def standard_quadruple(n: int) -> Quadruple:
    """Word (1..n)(1..n)(1..n-1)...(1), face = the first n positions, pi = w_0."""
    word: list[int] = list(range(1, n + 1))
    for top in range(n, 0, -1):
        word.extend(range(1, top + 1))
    return Quadruple(n, tuple(word), Permutation.longest(n), frozenset(range(1, n + 1)))


def _product_root(word: Sequence[int], positions: Iterable[int], letter: int, n: int) -> RootVector:
    return act_word([word[p - 1] for p in sorted(positions)], simple_root(n, letter))


def root_function(X: Quadruple) -> list[RootVector]:
    out = []
    for l in range(1, X.length + 1):
        before = [p for p in range(1, l) if p not in X.face]
        out.append(_product_root(X.word, before, X.word[l - 1], X.rank))
    return out


@dataclass(frozen=True)
class FoldedGallery:
    """Signed roots (negated at folded positions) and the folded flags."""

    roots: tuple[RootVector, ...]
    folded: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(self.roots))
        object.__setattr__(self, "folded", tuple(bool(f) for f in self.folded))
        if len(self.roots) != len(self.folded):
            raise ValueError("roots and flags differ in length")

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def face(self) -> frozenset[int]:
        return frozenset(l for l, f in enumerate(self.folded, start=1) if f)

    def unsigned(self) -> list[RootVector]:
        return [-r if f else r for r, f in zip(self.roots, self.folded)]

    def to_json(self) -> list[dict]:
        return [{"root": list(r.coords), "folded": f} for r, f in zip(self.roots, self.folded)]


def encode_gallery(X: Quadruple) -> FoldedGallery:
    r = root_function(X)
    flags = [l in X.face for l in range(1, X.length + 1)]
    return FoldedGallery(tuple(-x if f else x for x, f in zip(r, flags)), tuple(flags))


def _simple_index(x: RootVector) -> int | None:
    if sorted(x.coords) == [0] * (x.n - 1) + [1]:
        return x.coords.index(1) + 1
    return None


def decode_gallery(g: FoldedGallery, n: int | None = None) -> Quadruple:
    """Rebuild the quadruple: each letter solves w(alpha_letter) = r_l for the traversed prefix w."""
    if n is None:
        if not len(g):
            raise MalformedGallery("the rank of an empty gallery must be given")
        n = g.roots[0].n
    traversed: list[int] = []
    word: list[int] = []
    for l, (x, folded) in enumerate(zip(g.unsigned(), g.folded), start=1):
        base = act_word(list(reversed(traversed)), x)
        letter = _simple_index(base)
        if letter is None:
            raise MalformedGallery(f"step {l}: {x} is not the image of a simple root")
        word.append(letter)
        if not folded:
            traversed.append(letter)
    pi = Permutation.from_word(n, traversed)
    try:
        return Quadruple(n, tuple(word), pi, g.face)
    except ValueError as exc:
        raise MalformedGallery(str(exc)) from exc


def _closure(roots: Sequence[RootVector], positions: Iterable[int]) -> frozenset[int]:
    basis = [roots[p - 1].coords for p in positions]
    return frozenset(l for l in range(1, len(roots) + 1) if in_span(roots[l - 1].coords, basis))


def flat_of(X: Quadruple, J: Iterable[int]) -> frozenset[int]:
    """Positions whose roots lie in the span of the roots at J."""
    return _closure(root_function(X), J)


def is_flat(X: Quadruple, F: Iterable[int]) -> bool:
    F = frozenset(F)
    return flat_of(X, F) == F


def _require_flat_positions(roots: Sequence[RootVector], F: frozenset[int]) -> None:
    if any(not 1 <= p <= len(roots) for p in F) or _closure(roots, F) != F:
        raise NotAFlat(f"{sorted(F)} is not a flat")


def project(g: FoldedGallery, F: Iterable[int]) -> FoldedGallery:
    """Restrict a gallery to the positions of a flat, re-indexed in increasing order."""
    F = frozenset(F)
    _require_flat_positions(g.unsigned(), F)
    keep = sorted(F)
    return FoldedGallery(tuple(g.roots[p - 1] for p in keep), tuple(g.folded[p - 1] for p in keep))


def beta_sequence(X: Quadruple, F: Iterable[int]) -> list[RootVector]:
    """beta_k: traversing letters before j_k and outside F applied to alpha_{i_{j_k}}."""
    F = frozenset(F)
    _require_flat_positions(root_function(X), F)
    out = []
    for j in sorted(F):
        before = [p for p in range(1, j) if p not in X.face and p not in F]
        out.append(_product_root(X.word, before, X.word[j - 1], X.rank))
    return out


def beta_simple_roots(X: Quadruple, F: Iterable[int]) -> list[RootVector]:
    """Distinct entries of beta_sequence in order of first appearance."""
    out: list[RootVector] = []
    for b in beta_sequence(X, F):
        if b not in out:
            out.append(b)
    return out


def subquadruple(X: Quadruple, F: Iterable[int]) -> Quadruple:
    """X_F built from beta_F: letters are the indices of the simple roots beta_k."""
    F = frozenset(F)
    keep = sorted(F)
    word = []
    for b in beta_sequence(X, F):
        letter = _simple_index(b)
        if letter is None:
            raise NotImplementedError(f"{b} is not a simple root of the ambient system")
        word.append(letter)
    face = {k for k, p in enumerate(keep, start=1) if p in X.face}
    rest = [w for k, w in enumerate(word, start=1) if k not in face]
    return Quadruple(X.rank, tuple(word), Permutation.from_word(X.rank, rest), frozenset(face))


@dataclass(frozen=True)
class CharacterQuiver:
    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]

    def restrict(self, J: Iterable[int]) -> CharacterQuiver:
        J = set(J)
        return CharacterQuiver(
            tuple(v for v in self.vertices if v in J),
            tuple(a for a in self.arrows if a[0] in J and a[1] in J),
        )

    def relabel(self, mapping: dict[int, int]) -> CharacterQuiver:
        return CharacterQuiver(
            tuple(sorted(mapping[v] for v in self.vertices)),
            tuple(sorted((mapping[a], mapping[b]) for a, b in self.arrows)),
        )

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}


def in_class_a(X: Quadruple) -> bool:
    r = root_function(X)
    face = sorted(X.face)
    basis = [r[p - 1].coords for p in face]
    if rank(basis) != len(face) or rank([x.coords for x in r]) != len(face):
        return False
    return X.pi == parabolic_longest(X.rank, X.generators)


def character_quiver(X: Quadruple) -> CharacterQuiver:
    if not in_class_a(X):
        raise NotInClassA("face roots are not a basis or pi is not longest")
    r = root_function(X)
    face = sorted(X.face)
    arrows = tuple(
        (i, j)
        for i in face
        for j in face
        if i != j and (i - j) * root_pairing(r[i - 1], r[j - 1]) > 0
    )
    return CharacterQuiver(tuple(face), arrows)


def maximal_faces(n: int, word: Sequence[int], pi: Permutation) -> list[frozenset[int]]:
    """All faces I with |word| - |I| = length(pi) whose complement is reduced for pi."""
    size = len(word) - pi.length()
    if size < 0:
        return []
    return [
        frozenset(I)
        for I in combinations(range(1, len(word) + 1), size)
        if is_maximal_face(n, word, pi, I)
    ]


def subsets(items: Sequence[int]) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]
