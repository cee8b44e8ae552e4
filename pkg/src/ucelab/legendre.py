"""Exact Legendre polynomials and the classical identities around them."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisibilityViolation
from .exact import A, ONE, ParamPoly

__all__ = [
    "LegendrePoly",
    "legendre_poly",
    "legendre",
    "antiderivative_tail",
    "formal_integral_to_one",
    "legendre_ode_residual",
]

_cache: list[ParamPoly] = [ONE, A]
_lock = threading.Lock()


@dataclass(frozen=True)
class LegendrePoly:
    n: int
    poly: ParamPoly


def legendre(n: int) -> ParamPoly:
    """``P_n(a)`` from ``(k+1) P_(k+1) = (2k+1) a P_k - k P_(k-1)``."""
    if n < 0:
        raise ValueError("Legendre index must be non-negative")
    if n < len(_cache):
        return _cache[n]
    with _lock:
        while len(_cache) <= n:
            k = len(_cache) - 1
            nxt = (_cache[k].shift(1).scale(2 * k + 1) - _cache[k - 1].scale(k)).scale(Fraction(1, k + 1))
            _cache.append(nxt)
    return _cache[n]


def legendre_poly(n: int) -> LegendrePoly:
    return LegendrePoly(n, legendre(n))


def antiderivative_tail(n: int) -> ParamPoly:
    """``(P_(n-1) - P_(n+1)) / (2n+1)``, which equals ``∫_a^1 P_n``."""
    if n < 1:
        raise ValueError("antiderivative_tail needs n >= 1")
    diff = legendre(n - 1) - legendre(n + 1)
    # P_k(1) = 1 for every k, so (a - 1) must divide the numerator
    _, rem = diff.divmod(ParamPoly((-1, 1)))
    if rem:
        raise DivisibilityViolation(f"P_{n-1} - P_{n+1} does not vanish at a = 1")
    return diff.scale(Fraction(1, 2 * n + 1))


def formal_integral_to_one(p: ParamPoly) -> ParamPoly:
    """``∫_a^1 p(t) dt = Q(1) - Q(a)`` with ``Q`` the zero-constant antiderivative."""
    q = p.antiderivative()
    return ParamPoly.const(q(1)) - q


def legendre_ode_residual(n: int) -> ParamPoly:
    """``(1-a^2) P_n'' - 2a P_n' + n(n+1) P_n``; identically zero."""
    p = legendre(n)
    d1 = p.derivative()
    d2 = d1.derivative()
    one_minus_a2 = ParamPoly((1, 0, -1))
    return one_minus_a2 * d2 - d1.shift(1).scale(2) + p.scale(n * (n + 1))
