from itertools import product

import pytest

from hgops.algebra import cochain_basis, hochschild_coboundary, multiplication_cochain
from hgops.brace import (ArityOverflow, HochschildBraces, MaurerCartanViolated, MCStructure,
                         check_pre_jacobi, cup_words, distributivity_residual, hochschild_mc,
                         homotopy_leibniz_residual, jacobi_residual, lie_bracket)
from hgops.graded import scale, sub
from hgops.algebra import nonassociative_example


def test_empty_brace_is_identity(dual):
    B = HochschildBraces(dual)
    for k in cochain_basis(dual, 2):
        assert B.brace(k, ()) == {k: 1}


def test_single_insertion(dual):
    B = HochschildBraces(dual)
    f = (("x", "x"), "1")
    g = (("1",), "x")
    # g fills either input of f
    assert B.brace(f, (g,)) == {(("1", "x"), "1"): 1, (("x", "1"), "1"): 1}
    # a 2-cochain inserted into the second slot picks up (arity - 1) * 1
    h = (("1", "1"), "x")
    assert B.brace(f, (h,)) == {(("1", "1", "x"), "1"): 1, (("x", "1", "1"), "1"): -1}


def test_too_many_arguments_vanish(dual):
    B = HochschildBraces(dual)
    k = (("x",), "x")
    assert B.brace(k, (k, k)) == {}


def test_arity_bound(dual):
    B = HochschildBraces(dual, arity_bound=2)
    with pytest.raises(ArityOverflow):
        B.brace((("x", "x"), "x"), ((("x", "x"), "x"),))


def test_multiplication_is_maurer_cartan(dual, qq):
    for A in (dual, qq):
        m = multiplication_cochain(A)
        B = HochschildBraces(A)
        assert B.brace_elem(m, [m]) == {}
        assert lie_bracket(B, m, m) == scale(B.brace_elem(m, [m]), 2)


def test_nonassociative_multiplication_is_not():
    with pytest.raises(MaurerCartanViolated):
        hochschild_mc(nonassociative_example())


def test_delta_is_the_hochschild_coboundary(dual, qq):
    for A in (dual, qq):
        S = hochschild_mc(A)
        for k in cochain_basis(A, 2):
            assert S.delta({k: 1}) == hochschild_coboundary(A, {k: 1})


def test_pre_jacobi_sample(dual):
    B = HochschildBraces(dual)
    basis = cochain_basis(dual, 2)
    for x in basis[::3]:
        for xs in product(basis[::5], repeat=1):
            for ys in product(basis[::4], repeat=2):
                lhs = check_pre_jacobi(B, {x: 1}, [{k: 1} for k in xs], [{k: 1} for k in ys])
                assert lhs == {}


def test_jacobi_identity(qq):
    B = HochschildBraces(qq)
    basis = cochain_basis(qq, 2)[::2]
    for x, y, z in product(basis, repeat=3):
        assert jacobi_residual(B, {x: 1}, {y: 1}, {z: 1}) == {}


def test_homotopy_g_axioms_sample(dual):
    S = hochschild_mc(dual)
    basis = cochain_basis(dual, 2)
    for x1, x2 in product(basis[::2], repeat=2):
        for ys in ([], [{basis[3]: 1}], [{basis[5]: 1}, {basis[9]: 1}]):
            assert distributivity_residual(S, {x1: 1}, {x2: 1}, ys) == {}
    for x in basis:
        for xs in ([{basis[4]: 1}], [{basis[2]: 1}, {basis[7]: 1}]):
            assert homotopy_leibniz_residual(S, {x: 1}, xs) == {}


def test_cup_words_unit_and_length_one(dual):
    B = HochschildBraces(dual)
    x = (("x",), "x")
    y = (("1",), "1")
    assert cup_words(B, (), (x, y)) == {(x, y): 1}
    assert cup_words(B, (x,), ()) == {(x,): 1}
    # (x) cup (y) = (y, x) + (x, y) up to sign + (x{y})
    got = cup_words(B, (x,), (y,))
    assert got[(x, y)] == 1 and abs(got[(y, x)]) == 1
