import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loophopf.errors import InvalidInputError
from loophopf.quivers import (
    GroupTable,
    build_hopf_quiver,
    conjugacy_classes,
    cyclic_group,
    symmetric_group,
    thin_split_count,
    thin_split_product_loop,
    thin_splits,
    trivial_group,
)
from loophopf.scalars import lucas_binom


def test_group_validation():
    with pytest.raises(InvalidInputError):
        GroupTable(((0, 1), (0, 1)))  # 0 is not a two-sided identity
    with pytest.raises(InvalidInputError):
        GroupTable(((0, 1), (1, 1)))
    with pytest.raises(InvalidInputError):
        GroupTable(())
    assert symmetric_group(3).order == 6


def test_conjugacy_classes():
    assert conjugacy_classes(trivial_group()) == [(0,)]
    assert conjugacy_classes(cyclic_group(2)) == [(0,), (1,)]
    assert sorted(len(c) for c in conjugacy_classes(symmetric_group(3))) == [1, 2, 3]
    assert sorted(len(c) for c in conjugacy_classes(symmetric_group(4))) == [1, 3, 6, 6, 8]


def test_loop_is_the_trivial_hopf_quiver():
    Q = build_hopf_quiver(trivial_group(), {0: 1})
    assert Q.vertices == (0,) and Q.arrows == ((0, 0, 1),)
    assert Q.render() == "0 -> 0 (x1)"


def test_cyclic_example():
    Q = build_hopf_quiver(cyclic_group(2), {1: 1})
    assert Q.render() == "0 -> 1 (x1)\n1 -> 0 (x1)"
    assert build_hopf_quiver(cyclic_group(3), {}).arrows == ()
    assert build_hopf_quiver(cyclic_group(3), {1: 0}).arrows == ()


def test_ramification_validation():
    G = symmetric_group(3)
    reps = [c[0] for c in conjugacy_classes(G)]
    non_rep = next(x for x in range(6) if x not in reps)
    with pytest.raises(InvalidInputError):
        build_hopf_quiver(G, {non_rep: 1})
    with pytest.raises(InvalidInputError):
        build_hopf_quiver(G, {reps[1]: -1})


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_arrow_count_formula(mults):
    G = symmetric_group(3)
    classes = conjugacy_classes(G)
    r = {c[0]: k for c, k in zip(classes, mults)}
    Q = build_hopf_quiver(G, r)
    assert Q.arrow_count() == G.order * sum(k * len(c) for c, k in zip(classes, mults))
    assert list(Q.arrows) == sorted(Q.arrows)
    assert all(k >= 1 for _, _, k in Q.arrows)


def test_thin_splits():
    assert list(thin_splits(2, 1)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert list(thin_splits(0, 3)) == [(0, 0, 0)]
    assert thin_split_count(0, 5) == 1
    assert thin_split_count(2, 1) == 3
    assert thin_split_count(3, 3) == 20
    for m in range(9):
        for n in range(9 - m):
            seqs = list(thin_splits(m, n))
            assert seqs == sorted(seqs) and len(set(seqs)) == len(seqs)
            assert all(sum(s) == m and len(s) == m + n for s in seqs)
            assert len(seqs) == math.comb(m + n, m)


def test_thin_split_product_examples():
    assert thin_split_product_loop(4, 0, 3) == 1
    assert thin_split_product_loop(1, 1, 2) == 0
    assert thin_split_product_loop(2, 1, 3) == 0
    assert thin_split_product_loop(3, 2, 7) == lucas_binom(5, 3, 7) == 3
