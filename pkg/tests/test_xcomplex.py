import pytest

from hgops.barcx import algebra_letters
from hgops.xcomplex import BarX, apply_lin, connection_residuals, perturb, sdr_residuals


@pytest.fixture(scope="module")
def X(dual):
    return BarX(algebra_letters(dual))


def test_theta_on_short_first_slots(X):
    assert X.theta(((), ("x", "1"))) == {("x", ("1",)): -1}
    # letters of BA are odd
    assert X.theta((("x",), ("1",))) == {("x", ("1",)): -1}
    assert X.theta((("x", "x"), ("1",))) == {}


def test_iota_examples(X):
    assert X.iota(("x", ())) == {((), ("x",)): -1}
    assert X.iota(("x", ("1",))) == {((), ("x", "1")): -1, ((), ("1", "x")): 1, (("1",), ("x",)): -1}


def test_iota_is_a_section_into_cycles(X):
    F = X.F
    for t, k in X.x_basis(3):
        if t == 1:
            assert X.theta_lin(X.iota(k)) == {k: 1}
            assert F.apply(F.b, X.iota(k)) == {}


def test_nabla_needs_a_single_letter_last(X):
    assert X.nabla(((), (), ("x", "x"))) == {}
    assert X.nabla((("x",), ("1",), ("x",))) == {((), ("1", "x", "x")): -1, (("1",), ("x", "x")): 1}


def test_x_differentials_square_to_zero(X):
    sq = lambda d, x: apply_lin(d, apply_lin(d, x))
    for k in X.x_basis(3):
        assert sq(X.x_d, {k: 1}) == {}
    even, odd = X.x2_basis(3)
    for x in even + odd:
        assert sq(X.x2_d, x) == {}


def test_retracts(X):
    small = [{k: 1} for k in X.x_basis(3)]
    even, odd = X.x2_basis(3)
    data = [
        (X.natural_I, X.r_prime, X.h, X.x_b, X.x2_b),
        (X.natural_I, X.r, X.h, X.x_d1, X.x2_d1),
        (X.natural_I, X.R, X.H, X.x_d, X.x2_d),
    ]
    for i, r, h, ds, db in data:
        res = sdr_residuals(i, r, h, ds, db, small, even + odd)
        assert all(not bad for bad in res.values()), res


def test_connection_identities(X):
    even, odd = X.x2_basis(3)
    res = connection_residuals(X, even, odd)
    assert res == {"w1": [], "w2": []}


def test_perturbation_series_gives_the_closed_forms(X):
    R, H, I = perturb(X.r, X.h, X.natural_I, X.x2_d2)
    even, odd = X.x2_basis(3)
    for x in even + odd:
        assert apply_lin(R, x) == apply_lin(X.R, x)
        assert apply_lin(H, x) == apply_lin(X.H, x)
    assert I == X.natural_I
