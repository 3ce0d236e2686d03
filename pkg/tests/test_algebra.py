from fractions import Fraction

import pytest

from hgops.algebra import (FdAlgebra, ValidationError, cochain_basis, cup_product, element_cochain,
                           evaluate_on, exact, hochschild_coboundary, is_normalized,
                           multiplication_cochain, nonassociative_example)
from hgops.graded import addto


def test_builtin_algebras_validate(field, dual, qq):
    for A in (field, dual, qq):
        assert A.validate(require_associative=True) is A


def test_unit_labels(dual, qq):
    assert dual.unit_label() == "1"
    assert qq.unit_label() is None


def test_dual_numbers_square_to_zero(dual):
    assert dual.multiply({"x": 1}, {"x": 1}) == {}
    assert dual.multiply({"1": 2, "x": 1}, {"1": 1, "x": 3}) == {"1": 2, "x": 7}


def test_nonassociative_example_is_caught():
    A = nonassociative_example()
    assert ("x", "x", "x") in A.associator_violations()
    with pytest.raises(ValidationError):
        A.validate(require_associative=True)


def test_bad_inputs_are_rejected():
    with pytest.raises(ValidationError):
        FdAlgebra(["a", "a"], {}, {"a": 1})
    with pytest.raises(ValidationError):
        FdAlgebra(["a"], {("a", "b"): {"a": 1}}, {"a": 1})
    with pytest.raises(ValidationError):
        FdAlgebra(["a"], {}, {"a": 1}).validate()


def test_exact_scalars():
    assert exact(Fraction(4, 2)) == 2 and type(exact(Fraction(4, 2))) is int
    assert exact("1/3") == Fraction(1, 3)


def test_cochain_basis_size(dual):
    # 2 + 2*2 + 4*2
    assert len(cochain_basis(dual, 2)) == 14


def test_multiplication_cochain_evaluates_to_product(dual):
    m = multiplication_cochain(dual)
    assert evaluate_on(dual, m, [{"1": 1, "x": 1}, {"1": 1, "x": 1}]) == {"1": 1, "x": 2}


def test_coboundary_squares_to_zero(dual, qq):
    for A in (dual, qq):
        for k in cochain_basis(A, 1):
            assert hochschild_coboundary(A, hochschild_coboundary(A, {k: 1})) == {}


def test_coboundary_of_an_element_is_its_commutator(qq):
    d = hochschild_coboundary(qq, element_cochain(qq, {"e1": 1}))
    assert evaluate_on(qq, d, [{"e1": 1}]) == {}
    assert evaluate_on(qq, d, [{"e2": 1}]) == {}


def test_coboundary_is_a_derivation_of_cup(dual):
    for p in cochain_basis(dual, 1):
        for q in cochain_basis(dual, 1):
            phi, psi = {p: 1}, {q: 1}
            lhs = hochschild_coboundary(dual, cup_product(dual, phi, psi))
            rhs = cup_product(dual, hochschild_coboundary(dual, phi), psi)
            sign = (-1) ** len(p[0])
            addto(rhs, cup_product(dual, phi, hochschild_coboundary(dual, psi)), sign)
            assert lhs == rhs


def test_normalized_cochains(dual, qq):
    assert is_normalized(dual, {(("x",), "x"): 1})
    assert not is_normalized(dual, {(("1", "x"), "x"): 1})
    with pytest.raises(ValidationError):
        is_normalized(qq, {})
