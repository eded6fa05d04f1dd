import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loophopf.errors import IncompatibleFieldError, InvalidInputError
from loophopf.loop_coalgebra import (
    LoopElement,
    TensorElement,
    basis,
    comult,
    component,
    counit,
    is_primitive,
    reconstruct,
    truncate,
    verschiebung,
)
from loophopf.scalars import field

F5 = field(5)
N = 9


def elements(fld=F5, bound=N):
    return st.dictionaries(st.integers(0, bound - 1), st.integers(0, fld.q - 1), max_size=bound).map(
        lambda d: LoopElement(fld, bound, {m: fld.element(c) for m, c in d.items()}))


def test_comult_of_basis():
    d = comult(basis(F5, N, 2))
    assert d == TensorElement(F5, N, {(0, 2): 1, (1, 1): 1, (2, 0): 1})
    assert str(d) == "1*a0(x)a2 + 1*a1(x)a1 + 1*a2(x)a0"


def test_counit_and_group_like():
    one = basis(F5, N, 0)
    assert comult(one) == TensorElement.pure(one, one)
    assert counit(one) == F5.one
    assert counit(basis(F5, N, 3)) == F5.zero


def test_primitives_are_multiples_of_a1():
    assert is_primitive(basis(F5, N, 1))
    assert is_primitive(3 * basis(F5, N, 1))
    assert not is_primitive(basis(F5, N, 2))
    assert not is_primitive(basis(F5, N, 0))


@settings(max_examples=60, deadline=None)
@given(elements())
def test_coassociativity(x):
    # (Δ⊗id)Δ = (id⊗Δ)Δ, compared as maps to triples of indices
    left, right = {}, {}
    for (i, j), c in comult(x).coeffs.items():
        for a in range(i + 1):
            left[a, i - a, j] = F5.add(left.get((a, i - a, j), 0), c)
        for b in range(j + 1):
            right[i, b, j - b] = F5.add(right.get((i, b, j - b), 0), c)
    assert {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}


@settings(max_examples=60, deadline=None)
@given(elements())
def test_counit_law(x):
    # (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x)
    d = comult(x)
    assert LoopElement._raw(F5, N, {j: c for (i, j), c in d.coeffs.items() if i == 0}) == x
    assert LoopElement._raw(F5, N, {i: c for (i, j), c in d.coeffs.items() if j == 0}) == x


@settings(max_examples=60, deadline=None)
@given(elements())
def test_components_reconstruct(x):
    comps = [component(x, i) for i in range(N)]
    assert reconstruct(comps) == x
    total = TensorElement(F5, N)
    for i, c in enumerate(comps):
        total = total + TensorElement.pure(basis(F5, N, i), c)
    assert total == comult(x)


@settings(max_examples=60, deadline=None)
@given(elements(), elements())
def test_linear_structure(x, y):
    assert x + y == y + x
    assert (x - y) + y == x
    assert comult(x + y) == comult(x) + comult(y)
    assert comult(2 * x) == TensorElement._raw(F5, N, {k: F5.mul(2, v) for k, v in comult(x).coeffs.items()})


def test_verschiebung():
    F2 = field(2)
    assert verschiebung(basis(F2, 8, 6)) == basis(F2, 8, 3)
    assert verschiebung(basis(F2, 8, 6), 2) == LoopElement.zero(F2, 8)
    assert verschiebung(basis(F2, 8, 4), 2) == basis(F2, 8, 1)
    assert verschiebung(basis(F5, N, 3)) == LoopElement.zero(F5, N)
    assert verschiebung(basis(F5, N, 7), 0) == basis(F5, N, 7)


@settings(max_examples=60, deadline=None)
@given(elements(field(3), 9))
def test_verschiebung_is_a_coalgebra_map(x):
    # V is dual to Frobenius on k[t]/(t^N), so (V⊗V)Δ = ΔV
    F3 = field(3)
    lhs = TensorElement(F3, 9)
    for (i, j), c in comult(x).coeffs.items():
        if i % 3 == 0 and j % 3 == 0:
            lhs = lhs + TensorElement._raw(F3, 9, {(i // 3, j // 3): c})
    assert lhs == comult(verschiebung(x))


def test_rendering():
    x = LoopElement(F5, N, {0: 1, 3: 2})
    assert str(x) == "1*a0 + 2*a3"
    assert str(LoopElement.zero(F5, N)) == "0"
    F4 = field(2, 2)
    assert str(LoopElement(F4, 3, {1: F4.parse("g+1")})) == "(g+1)*a1"


def test_bounds_and_fields_checked():
    with pytest.raises(InvalidInputError):
        basis(F5, 3, 3)
    with pytest.raises(InvalidInputError):
        LoopElement(F5, 3, {5: 1})
    with pytest.raises(IncompatibleFieldError):
        basis(F5, 3, 1) + basis(field(3), 3, 1)
    with pytest.raises(IncompatibleFieldError):
        basis(F5, 3, 1) + basis(F5, 4, 1)
    assert truncate(LoopElement(F5, N, {1: 1, 5: 2}), 4) == basis(F5, 4, 1)
