from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import fundamental_paths, ranked_weight, skeleton_paths
from oracles import chain_edges, orbit, subset_to_omega
from skeleton_mv.paths import (
    FundamentalPath,
    NotFundamental,
    PathSyntaxError,
    SkeletonPath,
    all_fundamental,
    chain,
    concat,
    format_path,
    is_fundamental,
    lower,
    lower_path,
    parse_path,
    parse_weight,
    raise_,
    subchain,
    weight_of,
)
from skeleton_mv.weights import Weight, alpha, omega, pairing


def W(n, *coords):
    return Weight(n, coords)


def F(n, *coords):
    return FundamentalPath.of(Weight(n, coords))


def test_is_fundamental_examples():
    assert is_fundamental(omega(3, 2)) == 2
    assert is_fundamental(W(3, 1, -1, 1)) == 2
    assert is_fundamental(Weight.zero(3)) is None
    assert is_fundamental(W(2, 2, -1)) is None


def test_fundamental_path_rejects_bad_weight():
    with pytest.raises(NotFundamental):
        FundamentalPath.of(W(2, 1, 1))
    with pytest.raises(NotFundamental):
        FundamentalPath(omega(3, 1), 2)


def test_lower_examples():
    assert lower(F(2, 1, 0), 1) == F(2, -1, 1)
    assert lower(F(2, -1, 1), 2) == F(2, 0, -1)
    assert lower(F(2, 0, 1), 1) is None


def test_raise_examples():
    assert raise_(F(2, 0, -1), 2) == F(2, -1, 1)
    assert raise_(F(2, 1, 0), 1) is None


@pytest.mark.parametrize("n", range(1, 6))
def test_operators_defined_exactly_on_unit_coordinates(n):
    for p in all_fundamental(n):
        for i in range(1, n + 1):
            a = pairing(p.weight, i)
            assert (lower(p, i) is not None) == (a == 1)
            assert (raise_(p, i) is not None) == (a == -1)
            if a == 1:
                assert raise_(lower(p, i), i) == p
                assert lower(p, i).weight == p.weight - alpha(n, i)


@pytest.mark.parametrize("n", range(1, 7))
def test_orbit_sizes(n):
    for j in range(1, n + 1):
        assert len(chain(n, j).vertices) == comb(n + 1, j)


@pytest.mark.parametrize("n", range(1, 6))
def test_chain_matches_subset_realization(n):
    for j in range(1, n + 1):
        c = chain(n, j)
        assert {v.weight.coords for v in c.vertices} == {subset_to_omega(n, S) for S in orbit(n, j)}
        assert {(s.weight.coords, i, t.weight.coords) for s, i, t in c.arrows} == chain_edges(n, j)


@pytest.mark.parametrize("n", range(1, 5))
def test_chain_source_sink_and_maximal_path_lengths(n):
    for j in range(1, n + 1):
        c = chain(n, j)
        assert [v.weight for v in c.sources()] == [omega(n, j)]
        assert [v.weight for v in c.sinks()] == [-omega(n, n + 1 - j)]
        lengths = set()

        def walk(v, k):
            succ = c.successors(v)
            if not succ:
                lengths.add(k)
            for _, t in succ:
                walk(t, k + 1)

        walk(c.sources()[0], 0)
        assert lengths == {j * (n + 1 - j)}


def test_chain_rank_two_level_one():
    c = chain(2, 1)
    assert [format_path(SkeletonPath(2, (v,))) for v in c.vertices] == ["w1", "-w1+w2", "-w2"]
    assert [i for _, i, _ in c.arrows] == [1, 2]


def test_chain_rank_three_level_two_is_a_diamond():
    c = chain(3, 2)
    assert len(c.vertices) == 6
    middle = {v.weight for v in c.vertices if len(c.successors(v)) == 1 and v.weight not in (omega(3, 2),)}
    assert W(3, -1, 0, 1) in middle and W(3, 1, 0, -1) in middle


def test_chain_rank_four_level_one_colours():
    assert [i for _, i, _ in chain(4, 1).arrows] == [1, 2, 3, 4]


def test_chain_level_out_of_range():
    with pytest.raises(ValueError):
        chain(3, 4)


@pytest.mark.parametrize("n", range(2, 6))
def test_alcove_edges_and_negatives_are_fundamental(n):
    E = [omega(n, i) for i in range(1, n + 1)]
    E += [omega(n, j) - omega(n, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    for v in E:
        assert is_fundamental(v) is not None
        assert is_fundamental(-v) is not None


def test_lower_path_examples():
    p = SkeletonPath.of(omega(2, 1), omega(2, 1) - omega(2, 2))
    assert lower_path(p, 1) == SkeletonPath.of(omega(2, 2) - omega(2, 1), omega(2, 1) - omega(2, 2))
    assert lower_path(p, 2) is None
    assert lower_path(SkeletonPath(2), 1) is None


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), skeleton_paths(n, 4))), st.data())
def test_lower_path_acts_on_first_positive_factor(np_, data):
    n, p = np_
    i = data.draw(st.integers(1, n))
    q = lower_path(p, i)
    firsts = [k for k, f in enumerate(p.factors) if pairing(f.weight, i) > 0]
    if not firsts:
        assert q is None
        return
    k = firsts[0]
    assert q.factors[:k] == p.factors[:k] and q.factors[k + 1:] == p.factors[k + 1:]
    assert q.factors[k] == lower(p.factors[k], i)
    assert weight_of(q) == weight_of(p) - alpha(n, i)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*(skeleton_paths(n, 3) for _ in range(3)))))
def test_concat_is_associative_with_unit(abc):
    a, b, c = abc
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    unit = SkeletonPath(a.n)
    assert concat(a, unit) == a == concat(unit, a)


def test_concat_rank_mismatch():
    with pytest.raises(ValueError):
        concat(SkeletonPath(2), SkeletonPath(3))


def test_weight_of_examples():
    assert weight_of(SkeletonPath.of(omega(2, 1), omega(2, 1) - omega(2, 2))).coords == (2, -1)
    assert weight_of(SkeletonPath(3)) == Weight.zero(3)


def test_subchain_examples():
    tail = subchain(F(2, -1, 1))
    assert len(tail.vertices) == 2 and [i for _, i, _ in tail.arrows] == [2]
    assert subchain(FundamentalPath.of(omega(3, 2))) == chain(3, 2)
    assert len(subchain(FundamentalPath.of(-omega(3, 2))).vertices) == 1


def test_parse_path_grammar():
    p = parse_path(3, " w1 - w2 ,w2")
    assert p == SkeletonPath.of(omega(3, 1) - omega(3, 2), omega(3, 2))
    assert parse_path(3, "") == SkeletonPath(3)
    assert parse_weight(3, "-w1+w3-w2").coords == (-1, -1, 1)
    for bad in ("w1-", "x1", "w4", "w1 w2", "+"):
        with pytest.raises(PathSyntaxError):
            parse_path(3, bad)
    with pytest.raises(NotFundamental):
        parse_path(3, "w1+w2")


@given(st.integers(1, 5).flatmap(lambda n: skeleton_paths(n, 4)))
def test_format_parse_round_trip(p):
    assert parse_path(p.n, format_path(p)) == p


@given(st.integers(1, 5).flatmap(fundamental_paths))
def test_fundamental_coordinates_are_small(p):
    assert set(p.weight.coords) <= {-1, 0, 1}


@given(ranked_weight(bound=1))
def test_is_fundamental_agrees_with_subset_enumeration(v):
    levels = [j for j in range(1, v.n + 1) if v.coords in {subset_to_omega(v.n, S) for S in orbit(v.n, j)}]
    assert is_fundamental(v) == (levels[0] if levels else None)
