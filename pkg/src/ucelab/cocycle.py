"""The central cocycle ``ψ(f∂, g∂) = [∂(f) ∂²(g)]`` and the extended bracket.

``psi`` goes through the generic engine (derivation, product, reduction).
``cross_closed_form`` evaluates the five-coefficient formula for
``ψ(e_r, f_s)`` on the quadratic curve from monomial classes alone; the two
paths are kept independent so that agreement means something.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .center import CenterClass, monomial_class, reduce
from .errors import UnsupportedCurve, ZeroIndex
from .exact import A, ParamPoly
from .legendre import legendre
from .superelliptic import AlgebraElement, Curve, apply_partial, apply_partial2, elem_mul, quadratic

__all__ = [
    "DerivationBasisElement",
    "E",
    "F",
    "ExtendedElement",
    "CrossCoefficients",
    "psi",
    "psi_basis",
    "vector_bracket",
    "uce_bracket",
    "cross_coefficients",
    "cross_closed_form",
    "g_n",
]


@dataclass(frozen=True)
class DerivationBasisElement:
    """``E(r) = x^r ∂`` or ``F(s) = x^s u ∂``."""

    kind: Literal["E", "F"]
    index: int

    def __post_init__(self):
        if self.kind not in ("E", "F"):
            raise ValueError(f"unknown basis kind {self.kind!r}")

    def element(self) -> AlgebraElement:
        return AlgebraElement.monomial(self.index, 0 if self.kind == "E" else 1)

    def __str__(self) -> str:
        return f"{'e' if self.kind == 'E' else 'f'}_{self.index}"


def E(r: int) -> DerivationBasisElement:
    return DerivationBasisElement("E", r)


def F(s: int) -> DerivationBasisElement:
    return DerivationBasisElement("F", s)


@dataclass(frozen=True)
class ExtendedElement:
    vector_part: AlgebraElement
    central_part: CenterClass

    @classmethod
    def of(cls, curve: Curve, f: AlgebraElement) -> "ExtendedElement":
        return cls(f, CenterClass.zero(curve.degree))

    def __add__(self, other: "ExtendedElement") -> "ExtendedElement":
        return ExtendedElement(self.vector_part + other.vector_part, self.central_part + other.central_part)

    def is_zero(self) -> bool:
        return self.vector_part.is_zero() and self.central_part.is_zero()


def psi(curve: Curve, f: AlgebraElement, g: AlgebraElement) -> CenterClass:
    return reduce(curve, elem_mul(curve, apply_partial(curve, f), apply_partial2(curve, g)))


def psi_basis(curve: Curve, X: DerivationBasisElement, Y: DerivationBasisElement) -> CenterClass:
    return psi(curve, X.element(), Y.element())


def vector_bracket(curve: Curve, f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """``f ∂(g) - g ∂(f)``, the coefficient of ``∂`` in ``[f∂, g∂]``."""
    return elem_mul(curve, f, apply_partial(curve, g)) - elem_mul(curve, g, apply_partial(curve, f))


def uce_bracket(curve: Curve, X: ExtendedElement, Y: ExtendedElement) -> ExtendedElement:
    # central parts of X and Y drop out
    f, g = X.vector_part, Y.vector_part
    return ExtendedElement(vector_bracket(curve, f, g), psi(curve, f, g))


@dataclass(frozen=True)
class CrossCoefficients:
    s: int
    c1: ParamPoly
    c0: ParamPoly
    cm1: ParamPoly
    cm2: ParamPoly
    cm3: ParamPoly

    def by_shift(self) -> dict[int, ParamPoly]:
        return {1: self.c1, 0: self.c0, -1: self.cm1, -2: self.cm2, -3: self.cm3}


def cross_coefficients(s: int) -> CrossCoefficients:
    return CrossCoefficients(
        s,
        c1=ParamPoly.const((s + 1) ** 2),
        c0=A.scale(-(4 * s * s + 5 * s + 2)),
        cm1=ParamPoly((2 * s * s + s + 1, 0, 2 * s * (2 * s + 1))),
        cm2=A.scale(-s * (4 * s - 1)),
        cm3=ParamPoly.const(s * (s - 1)),
    )


def cross_closed_form(curve: Curve, r: int, s: int) -> CenterClass:
    """``r * sum_k C_k(s, a) [x^(r+s+k)]`` on ``x^2 - 2ax + 1``."""
    if r == 0:
        raise ZeroIndex("the closed form needs r != 0")
    if curve != quadratic():
        raise UnsupportedCurve("the five-coefficient formula holds on x^2 - 2ax + 1 only")
    n = r + s
    total = CenterClass.zero(curve.degree)
    for k, c in cross_coefficients(s).by_shift().items():
        if c:
            total = total + monomial_class(curve, n + k, 0).scale(c)
    return total.scale(r)


def g_n(n: int) -> ParamPoly:
    """``sum_k C_k(n-1, a) P_(n+k)(a)``."""
    if n < 1:
        raise ValueError("g_n needs n >= 1")
    total = ParamPoly()
    for k, c in cross_coefficients(n - 1).by_shift().items():
        if not c:
            continue
        total = total + c * legendre(n + k)
    return total
