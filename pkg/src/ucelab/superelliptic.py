"""The superelliptic algebra ``A = Q[a][x, 1/x, u] / (u^2 - P(x))`` and its
distinguished derivation ``∂ = u d/dx``.

Elements are pairs ``(even, odd)`` of Laurent polynomials standing for
``even(x) + odd(x)*u``; ``u^2`` never survives construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NotMonic, OddDegree, RepeatedRoots, RootAtZero
from .exact import A, ONE, ZERO, LaurentPoly, ParamPoly

__all__ = [
    "Curve",
    "AlgebraElement",
    "curve_new",
    "quadratic",
    "quartic",
    "palindromic_family",
    "elem_mul",
    "apply_partial",
    "apply_partial2",
    "resultant",
]


def _bareiss_det(matrix: list[list[ParamPoly]]) -> ParamPoly:
    """Fraction-free determinant over Q[a]."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: Sequence[ParamPoly], q: Sequence[ParamPoly]) -> ParamPoly:
    """Sylvester resultant of two polynomials in x given by ascending
    coefficient lists over Q[a]."""
    dp, dq = len(p) - 1, len(q) - 1
    size = dp + dq
    if size == 0:
        return ONE
    rows = []
    for i in range(dq):
        row = [ZERO] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = c
        rows.append(row)
    for i in range(dp):
        row = [ZERO] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows)


@dataclass(frozen=True)
class Curve:
    """A monic ``P(x)`` with ``P(0) != 0`` and simple roots.

    ``p_coeffs[i]`` is the coefficient of ``x**i``.
    """

    p_coeffs: tuple[ParamPoly, ...]
    palindromic: bool = field(compare=False)
    name: str = field(default="", compare=False)

    @property
    def degree(self) -> int:
        return len(self.p_coeffs) - 1

    @property
    def P(self) -> LaurentPoly:
        return LaurentPoly(dict(enumerate(self.p_coeffs)))

    @property
    def half_dP(self) -> LaurentPoly:
        """``P'(x)/2``, equal to ``u*u'``."""
        return LaurentPoly({i - 1: c.scale(Fraction(i, 2)) for i, c in enumerate(self.p_coeffs) if i})

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.p_coeffs[i]
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)


def curve_new(p_coeffs: Sequence, name: str = "") -> Curve:
    """Validate and build a curve from ascending coefficients ``p_0 .. p_n``."""
    coeffs = tuple(ParamPoly.coerce(c) for c in p_coeffs)
    if not coeffs or len(coeffs) < 2:
        raise NotMonic("P must have degree at least 1")
    if coeffs[-1] != ONE:
        raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
    if not coeffs[0]:
        raise RootAtZero("P(0) = 0; curves with a root at x = 0 are not supported")
    deriv = tuple(c.scale(i) for i, c in enumerate(coeffs))[1:]
    if not resultant(coeffs, deriv):
        raise RepeatedRoots("gcd(P, P') is nontrivial over Q(a)")
    n = len(coeffs) - 1
    pal = all(coeffs[i] == coeffs[n - i] for i in range(n + 1))
    return Curve(coeffs, pal, name)


def quadratic() -> Curve:
    """``x^2 - 2ax + 1``."""
    return curve_new([ONE, A.scale(-2), ONE], name="quadratic")


def quartic() -> Curve:
    """``x^4 - 2ax^2 + 1``."""
    return curve_new([ONE, ZERO, A.scale(-2), ZERO, ONE], name="quartic")


def palindromic_family(degree: int) -> Curve:
    """``x^(2r) - 2a x^r + 1`` for ``degree = 2r``."""
    if degree % 2:
        raise OddDegree(f"degree {degree} is odd")
    if degree < 2:
        raise ValueError("palindromic family needs degree >= 2")
    r = degree // 2
    coeffs = [ZERO] * (degree + 1)
    coeffs[0] = ONE
    coeffs[r] = A.scale(-2)
    coeffs[degree] = ONE
    names = {2: "quadratic", 4: "quartic"}
    return curve_new(coeffs, name=names.get(degree, f"palindromic-{degree}"))


_EMPTY = LaurentPoly()


@dataclass(frozen=True)
class AlgebraElement:
    even: LaurentPoly = _EMPTY
    odd: LaurentPoly = _EMPTY

    @classmethod
    def monomial(cls, k: int, sector: int = 0, coeff=1) -> "AlgebraElement":
        term = LaurentPoly.monomial(k, coeff)
        if sector == 0:
            return cls(term, _EMPTY)
        if sector == 1:
            return cls(_EMPTY, term)
        raise ValueError("sector must be 0 or 1")

    @classmethod
    def scalar(cls, c=1) -> "AlgebraElement":
        return cls.monomial(0, 0, c)

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self.even, -self.odd)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.even.scale(c), self.odd.scale(c))

    def __str__(self) -> str:
        parts = []
        if self.even:
            parts.append(self.even.to_str())
        if self.odd:
            parts.append(f"({self.odd.to_str()})*u")
        return " + ".join(parts) if parts else "0"


def elem_mul(curve: Curve, f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """Product with ``u^2`` replaced by ``P(x)``."""
    even = f.even * g.even
    if f.odd and g.odd:
        even = even + f.odd * g.odd * curve.P
    odd = f.even * g.odd + f.odd * g.even
    return AlgebraElement(even, odd)


def apply_partial(curve: Curve, f: AlgebraElement) -> AlgebraElement:
    """``∂(f0 + f1 u) = (f1' P + f1 P'/2) + f0' u``."""
    even = _EMPTY
    if f.odd:
        even = f.odd.ddx() * curve.P + f.odd * curve.half_dP
    return AlgebraElement(even, f.even.ddx())


def apply_partial2(curve: Curve, f: AlgebraElement) -> AlgebraElement:
    return apply_partial(curve, apply_partial(curve, f))
