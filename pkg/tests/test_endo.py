import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loophopf import linalg
from loophopf.endo import (
    LambdaSeq,
    compose,
    evaluate,
    extend,
    identity,
    invert,
    is_automorphism,
    is_coalgebra_map,
    matrix,
    matrix_codes,
    restrict,
)
from loophopf.errors import InvalidInputError, NotInvertibleError
from loophopf.loop_coalgebra import LoopElement
from loophopf.scalars import field

F5 = field(5)


def compositions(n, r):
    """Ordered tuples of r positive integers summing to n."""
    if r == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - r + 2):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def brute_force_image(f, n):
    """f(α_n) summed directly over compositions n_1 + ... + n_r = n."""
    fld = f.field
    out = {}
    for r in range(n + 1):
        total = fld.zero
        for comp in compositions(n, r):
            term = fld.one
            for part in comp:
                term = term * f[part]
            total = total + term
        if total:
            out[r] = total
    return out


def seqs(fld=F5, max_len=6):
    return st.lists(st.integers(0, fld.q - 1), max_size=max_len).map(
        lambda cs: LambdaSeq(fld, tuple(fld.element(c) for c in cs)))


def test_example_images():
    f = LambdaSeq.of(F5, [1, 1])
    assert str(evaluate(f, 2, 4)) == "1*a1 + 1*a2"
    g = LambdaSeq.of(F5, [2, 3, 4])
    # f(α_3) = λ_3 α_1 + 2 λ_1 λ_2 α_2 + λ_1^3 α_3
    assert evaluate(g, 3) == LoopElement(F5, 4, {1: 4, 2: 2 * 2 * 3, 3: 8})
    assert evaluate(g, 0) == LoopElement(F5, 1, {0: 1})


@settings(max_examples=80, deadline=None)
@given(seqs())
def test_images_match_composition_sums(f):
    N = 8
    M = matrix(f, N)
    for n in range(N):
        expected = brute_force_image(f, n)
        assert {r: M[r][n] for r in range(N) if M[r][n]} == expected


@settings(max_examples=60, deadline=None)
@given(seqs())
def test_lambda_maps_are_coalgebra_maps(f):
    assert is_coalgebra_map(matrix(f, 9), 9)


def test_non_coalgebra_maps_detected():
    N = 4
    M = [[1 if r == c else 0 for c in range(N)] for r in range(N)]
    M[2][1] = 1  # α_1 -> α_1 + α_2 is not primitive-preserving
    assert not is_coalgebra_map(M, N, F5)
    M = [[1 if r == c else 0 for c in range(N)] for r in range(N)]
    M[0][2] = 1  # breaks ε
    assert not is_coalgebra_map(M, N, F5)
    M = [[0] * N for _ in range(N)]
    with pytest.raises(InvalidInputError):
        is_coalgebra_map(M, N, F5)


@settings(max_examples=60, deadline=None)
@given(seqs(), seqs())
def test_compose_is_matrix_product(f, g):
    N = 8
    lhs = matrix_codes(compose(f, g, N), N)
    rhs = linalg.matmul(F5, matrix_codes(f, N), matrix_codes(g, N))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(seqs(max_len=3), seqs(max_len=3))
def test_exact_compose_agrees_with_truncations(f, g):
    h = compose(f, g)
    for N in (2, 5, 8):
        assert restrict(h, N) == compose(f, g, N)


@settings(max_examples=60, deadline=None)
@given(seqs())
def test_invert(f):
    N = 8
    if not f[1]:
        with pytest.raises(NotInvertibleError):
            invert(f, N)
        return
    g = invert(f, N)
    assert compose(g, f, N) == identity(F5)
    assert compose(f, g, N) == identity(F5)


def test_invert_examples():
    assert str(invert(LambdaSeq.of(F5, [1]), 4)) == "1"
    assert str(invert(LambdaSeq.of(F5, [2]), 4)) == "3"
    # (t + t^2)^{-1} = t - t^2 + 2t^3 - ... ; mod 5: 1,4,2
    assert str(invert(LambdaSeq.of(F5, [1, 1]), 4)) == "1,4,2"
    with pytest.raises(NotInvertibleError):
        invert(LambdaSeq.of(F5, [0, 1]), 4)


def test_automorphism_iff_first_entry_nonzero():
    rng = random.Random(7)
    for _ in range(50):
        f = LambdaSeq.of(F5, [rng.randrange(5) for _ in range(5)])
        rank = linalg.rank(F5, matrix_codes(f, 7))
        assert is_automorphism(f) == (rank == 7)


def test_sequence_equality_ignores_trailing_zeros():
    assert LambdaSeq.of(F5, [1, 0, 0]) == LambdaSeq.of(F5, [1])
    assert hash(LambdaSeq.of(F5, [1, 0])) == hash(identity(F5))
    assert str(LambdaSeq.of(F5, [])) == "0"
    assert LambdaSeq.of(F5, [3])[4] == F5.zero
    with pytest.raises(IndexError):
        LambdaSeq.of(F5, [3])[0]


def test_extension_literals():
    F9 = field(3, 2)
    f = LambdaSeq.of(F9, ["g", "2g+1"])
    assert str(f) == "g,2g+1"
    assert is_coalgebra_map(matrix(f, 6), 6)
    assert compose(invert(f, 6), f, 6) == identity(F9)


def test_restrict_and_extend():
    f = LambdaSeq.of(F5, [1, 2, 3])
    assert restrict(f, 3) == LambdaSeq.of(F5, [1, 2])
    e = extend(restrict(f, 3), 3, 6)
    assert e == LambdaSeq.of(F5, [1, 2]) and len(e.lambdas) == 5
    with pytest.raises(InvalidInputError):
        extend(f, 4, 4)
