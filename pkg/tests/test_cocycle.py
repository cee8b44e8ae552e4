import itertools
from fractions import Fraction

import pytest

from ucelab.center import CenterClass
from ucelab.cocycle import (
    E,
    F,
    DerivationBasisElement,
    ExtendedElement,
    cross_closed_form,
    cross_coefficients,
    g_n,
    psi,
    psi_basis,
    uce_bracket,
    vector_bracket,
)
from ucelab.errors import UnsupportedCurve, ZeroIndex
from ucelab.exact import A, ONE, ZERO, ParamPoly
from ucelab.legendre import antiderivative_tail, legendre
from ucelab.superelliptic import AlgebraElement, quadratic, quartic

QUAD = quadratic()
QUART = quartic()
HALF = Fraction(1, 2)


def w(omega0=ZERO, omega1=ZERO, omega2=ZERO):
    return CenterClass.from_coords([ParamPoly.coerce(c) for c in (omega0, omega1, omega2)])


TABLE = [
    (1, -1, w(omega1=ONE, omega2=-A)),
    (1, -2, w(omega1=-A, omega2=ONE)),
    (1, 0, w(omega2=(1 - A * A).scale(HALF))),
    (1, -3, w(omega1=(1 - A * A).scale(HALF))),
    (1, 1, w(omega2=(A - A ** 3).scale(HALF))),
    (2, -2, w(omega1=8 + 6 * A * A, omega2=-14 * A)),
    (2, -1, w(omega1=-6 * A, omega2=4 + 2 * A * A)),
    (2, 0, w(omega2=A - A ** 3)),
]


@pytest.mark.parametrize("r,s,expected", TABLE)
def test_table_generic_engine(r, s, expected):
    assert psi_basis(QUAD, E(r), F(s)) == expected


@pytest.mark.parametrize("r,s,expected", TABLE)
def test_table_closed_form(r, s, expected):
    assert cross_closed_form(QUAD, r, s) == expected


def test_psi_on_elements():
    x, u = AlgebraElement.monomial(1), AlgebraElement.monomial(0, 1)
    assert psi(QUAD, x, u) == w(omega2=(1 - A * A).scale(HALF))


def test_even_even_oracle():
    # ∂(x) = u and ∂²(x^-1) = x^-1 - 3a x^-2 + 2x^-3, so ∂(x)∂²(x^-1) has [x^-1 u]-coefficient 1
    assert psi_basis(QUAD, E(1), E(-1)) == w(omega0=ONE)


@pytest.mark.parametrize("r", range(-5, 6))
@pytest.mark.parametrize("s", range(-6, 7))
def test_closed_form_agrees_with_engine(r, s):
    if r == 0:
        with pytest.raises(ZeroIndex):
            cross_closed_form(QUAD, r, s)
        return
    assert cross_closed_form(QUAD, r, s) == psi_basis(QUAD, E(r), F(s))


def test_closed_form_restrictions():
    with pytest.raises(UnsupportedCurve):
        cross_closed_form(QUART, 1, 0)


def test_cross_coefficients():
    def tup(c):
        return (c.c1, c.c0, c.cm1, c.cm2, c.cm3)

    assert tup(cross_coefficients(0)) == (ONE, -2 * A, ONE, ZERO, ZERO)
    assert tup(cross_coefficients(1)) == (ParamPoly([4]), -11 * A, 4 + 6 * A * A, -3 * A, ZERO)
    assert tup(cross_coefficients(2)) == (ParamPoly([9]), -28 * A, 11 + 20 * A * A, -14 * A, ParamPoly([2]))


class TestGn:
    def test_examples(self):
        assert g_n(1) == (1 - A * A).scale(HALF)
        assert g_n(2) == (A - A ** 3).scale(HALF)
        assert g_n(3) == -((5 * A * A - 1) * (A * A - 1)).scale(Fraction(1, 8))

    @pytest.mark.parametrize("n", range(1, 101, 9))
    def test_matches_tail(self, n):
        g = g_n(n)
        assert g == antiderivative_tail(n)
        assert g(1) == 0

    def test_derivative(self):
        assert g_n(2).derivative() == -legendre(2)


BASIS = [DerivationBasisElement(k, i) for k in "EF" for i in range(-3, 4)]


@pytest.mark.parametrize("curve", [QUAD, QUART], ids=["quadratic", "quartic"])
def test_antisymmetry_and_sector_typing(curve):
    for X, Y in itertools.product(BASIS, repeat=2):
        v = psi_basis(curve, X, Y)
        assert v == -psi_basis(curve, Y, X)
        if X.kind == Y.kind:
            assert not v.window, (X, Y)
        else:
            assert v.omega0 == ZERO, (X, Y)


def ext(X):
    return ExtendedElement.of(QUAD, X.element())


@pytest.mark.parametrize("triple", list(itertools.combinations(BASIS[::2], 3)))
def test_jacobi(triple):
    X, Y, Z = (ext(t) for t in triple)
    total = None
    for P, Q, R in ((X, Y, Z), (Y, Z, X), (Z, X, Y)):
        term = uce_bracket(QUAD, uce_bracket(QUAD, P, Q), R)
        total = term if total is None else total + term
    assert total.is_zero()


class TestBracket:
    def test_e1_em1(self):
        b = uce_bracket(QUAD, ext(E(1)), ext(E(-1)))
        assert b.vector_part == AlgebraElement.monomial(-1, 1, -2)
        assert b.central_part == psi_basis(QUAD, E(1), E(-1))

    def test_e0_is_central_free(self):
        for Y in BASIS:
            b = uce_bracket(QUAD, ext(E(0)), ext(Y))
            assert b.central_part.is_zero()
            assert b.vector_part == vector_bracket(QUAD, E(0).element(), Y.element())

    def test_alternating(self):
        for X in BASIS:
            assert uce_bracket(QUAD, ext(X), ext(X)).is_zero()

    def test_central_parts_drop_out(self):
        X = ExtendedElement(E(2).element(), w(omega0=ONE, omega1=A))
        assert uce_bracket(QUAD, X, ext(F(1))) == uce_bracket(QUAD, ext(E(2)), ext(F(1)))


def test_basis_element_validation():
    with pytest.raises(ValueError):
        DerivationBasisElement("G", 1)
    assert str(E(2)) == "e_2" and str(F(-1)) == "f_-1"
