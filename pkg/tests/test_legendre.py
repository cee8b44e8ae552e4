import importlib
import math
import threading
from fractions import Fraction

import pytest

from ucelab.errors import DivisibilityViolation
from ucelab.exact import A, ONE, ParamPoly, ppoly_eval
from ucelab.legendre import (
    antiderivative_tail,
    formal_integral_to_one,
    legendre,
    legendre_ode_residual,
    legendre_poly,
)

# the package re-exports the function under the same name as the module
legendre_module = importlib.import_module("ucelab.legendre")


def rodrigues(n):
    p = (A * A - 1) ** n
    for _ in range(n):
        p = p.derivative()
    return p.scale(Fraction(1, 2 ** n * math.factorial(n)))


def test_small_cases():
    assert legendre(0) == ONE and legendre(1) == A
    assert legendre(2) == (3 * A * A - 1).scale(Fraction(1, 2))
    assert legendre(3) == (5 * A ** 3 - 3 * A).scale(Fraction(1, 2))
    assert legendre_poly(3).n == 3 and legendre_poly(3).poly == legendre(3)


@pytest.mark.parametrize("n", [0, 1, 5, 17, 40])
def test_matches_rodrigues(n):
    assert legendre(n) == rodrigues(n)


def test_values_and_parity():
    for n in range(60):
        p = legendre(n)
        assert ppoly_eval(p, 1) == 1
        assert ppoly_eval(p, -1) == (-1) ** n
        assert p.reflect() == p.scale((-1) ** n)
        assert p.degree == n


def test_negative_index():
    with pytest.raises(ValueError):
        legendre(-1)


def test_concurrent_growth_is_consistent():
    legendre_module._cache[2:] = []
    out = {}

    def work(i):
        out[i] = legendre(120 - i)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, p in out.items():
        assert p.degree == 120 - i and ppoly_eval(p, 1) == 1
    assert out[0] == rodrigues(120)


class TestAntiderivative:
    def test_examples(self):
        assert antiderivative_tail(1) == (1 - A * A).scale(Fraction(1, 2))
        assert antiderivative_tail(2) == (A - A ** 3).scale(Fraction(1, 2))
        assert antiderivative_tail(3) == -((5 * A * A - 1) * (A * A - 1)).scale(Fraction(1, 8))

    def test_formal_integral_examples(self):
        assert formal_integral_to_one(legendre(1)) == (1 - A * A).scale(Fraction(1, 2))
        assert formal_integral_to_one(legendre(2)) == antiderivative_tail(2)
        assert formal_integral_to_one(ONE) == 1 - A

    @pytest.mark.parametrize("n", range(1, 101))
    def test_tail_equals_integral(self, n):
        g = antiderivative_tail(n)
        assert g == formal_integral_to_one(legendre(n))
        assert g.derivative() == -legendre(n)
        assert ppoly_eval(g, 1) == 0 and ppoly_eval(g, -1) == 0

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            antiderivative_tail(0)

    def test_divisibility_guard(self, monkeypatch):
        broken = {0: ONE, 1: A, 2: ParamPoly([1, 0, 1])}
        monkeypatch.setattr(legendre_module, "legendre", lambda n: broken[n])
        with pytest.raises(DivisibilityViolation):
            legendre_module.antiderivative_tail(1)


@pytest.mark.parametrize("n", [0, 2, 25, 80])
def test_ode_residual_vanishes(n):
    assert legendre_ode_residual(n).is_zero()
