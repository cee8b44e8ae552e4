"""Normal forms in the center ``A/∂A`` for ``m = 2``.

Basis: ``ω0 = [x^-1 u]`` together with the window classes ``[x^e]`` for
``e in {-1, 0, ..., n-2}``; window exponent ``e`` is labelled ``ω(e+2)``,
so ``ω1 = [x^-1]``, ``ω2 = [1]``, ``ω3 = [x]``, ...

The relations come from ``∂(x^r u) = 0``::

    R_r :  sum_i (r + i/2) p_i [x^(r+i-1)] = 0

Exponents above the window are rewritten with the top pivot
``(r + n/2) p_n`` (``r >= 0``), exponents below it with the bottom pivot
``r p_0`` (``r <= -1``).  Neither pivot can vanish in its regime.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import UnsupportedCurve
from .exact import ZERO, ParamPoly
from .superelliptic import AlgebraElement, Curve

__all__ = [
    "CenterClass",
    "dimension",
    "window",
    "relation_coeffs",
    "reduce",
    "monomial_class",
    "quartic_even_pair",
    "basis_labels",
]


def dimension(curve: Curve) -> int:
    """``1 + n(m-1)`` with ``m = 2``."""
    return 1 + curve.degree


def window(curve: Curve) -> range:
    return range(-1, curve.degree - 1)


def basis_labels(n: int) -> list[str]:
    return [f"omega{i}" for i in range(n + 1)]


@dataclass(frozen=True)
class CenterClass:
    """Coordinates of a class in ``A/∂A`` for a degree-``n`` curve."""

    n: int
    omega0: ParamPoly
    window_coeffs: tuple[ParamPoly, ...]

    @classmethod
    def zero(cls, n: int) -> "CenterClass":
        return cls(n, ZERO, (ZERO,) * n)

    @classmethod
    def from_window(cls, n: int, omega0=ZERO, win: Mapping[int, ParamPoly] | None = None) -> "CenterClass":
        coeffs = [ZERO] * n
        for e, v in (win or {}).items():
            if not -1 <= e <= n - 2:
                raise ValueError(f"exponent {e} is outside the window for degree {n}")
            coeffs[e + 1] = ParamPoly.coerce(v)
        return cls(n, ParamPoly.coerce(omega0), tuple(coeffs))

    @classmethod
    def from_coords(cls, coords) -> "CenterClass":
        coords = [ParamPoly.coerce(c) for c in coords]
        return cls(len(coords) - 1, coords[0], tuple(coords[1:]))

    @property
    def window(self) -> dict[int, ParamPoly]:
        """Nonzero window coefficients keyed by exponent."""
        return {i - 1: v for i, v in enumerate(self.window_coeffs) if v}

    def omega(self, i: int) -> ParamPoly:
        if i == 0:
            return self.omega0
        return self.window_coeffs[i - 1]

    def coords(self) -> list[ParamPoly]:
        return [self.omega0, *self.window_coeffs]

    def is_zero(self) -> bool:
        return not self.omega0 and not any(self.window_coeffs)

    def _check(self, other: "CenterClass") -> None:
        if self.n != other.n:
            raise ValueError("center classes of different curves")

    def __add__(self, other: "CenterClass") -> "CenterClass":
        self._check(other)
        return CenterClass(
            self.n,
            self.omega0 + other.omega0,
            tuple(x + y for x, y in zip(self.window_coeffs, other.window_coeffs)),
        )

    def __sub__(self, other: "CenterClass") -> "CenterClass":
        return self + (-other)

    def __neg__(self) -> "CenterClass":
        return CenterClass(self.n, -self.omega0, tuple(-x for x in self.window_coeffs))

    def scale(self, c) -> "CenterClass":
        c = ParamPoly.coerce(c)
        return CenterClass(self.n, self.omega0 * c, tuple(x * c for x in self.window_coeffs))

    def __str__(self) -> str:
        parts = [f"({v})*ω{i}" for i, v in enumerate(self.coords()) if v]
        return " + ".join(parts) if parts else "0"


def relation_coeffs(curve: Curve, r: int) -> list[tuple[int, ParamPoly]]:
    """Support of ``R_r``: pairs ``(exponent, coefficient)``, ascending."""
    out = []
    for i, p in enumerate(curve.p_coeffs):
        c = p.scale(Fraction(2 * r + i, 2))
        if c:
            out.append((r + i - 1, c))
    return out


class _MonomialTable:
    """Memoized window coordinates of ``[x^e]`` for one curve."""

    def __init__(self, curve: Curve):
        self.curve = curve
        n = curve.degree
        self.n = n
        self.up: list[list[ParamPoly]] = []
        self.down: list[list[ParamPoly]] = []
        self.p0 = curve.p_coeffs[0]

    def _unit(self, e: int) -> list[ParamPoly]:
        v = [ZERO] * self.n
        v[e + 1] = ParamPoly.const(1)
        return v

    def coords(self, e: int) -> list[ParamPoly]:
        n = self.n
        if -1 <= e <= n - 2:
            return self._unit(e)
        if e >= n - 1:
            while len(self.up) <= e - (n - 1):
                self._extend_up()
            return self.up[e - (n - 1)]
        while len(self.down) <= -2 - e:
            self._extend_down()
        return self.down[-2 - e]

    def _combine(self, terms) -> list[ParamPoly]:
        acc = [ZERO] * self.n
        for e, c in terms:
            src = self.coords(e)
            for k, v in enumerate(src):
                if v:
                    acc[k] = acc[k] + v * c
        return acc

    def _extend_up(self) -> None:
        n = self.n
        e = n - 1 + len(self.up)
        r = e - n + 1
        rel = relation_coeffs(self.curve, r)
        top_e, pivot = rel[-1]
        assert top_e == e
        pivot = pivot.constant_value()
        scale = Fraction(-1) / pivot
        self.up.append(self._combine((x, c.scale(scale)) for x, c in rel[:-1]))

    def _extend_down(self) -> None:
        e = -2 - len(self.down)
        r = e + 1
        if not self.p0.is_constant():
            raise UnsupportedCurve("negative-exponent reduction needs a constant P(0)")
        rel = relation_coeffs(self.curve, r)
        bottom_e, pivot = rel[0]
        assert bottom_e == e
        scale = Fraction(-1) / pivot.constant_value()
        self.down.append(self._combine((x, c.scale(scale)) for x, c in rel[1:]))


@lru_cache(maxsize=32)
def _table(curve: Curve) -> _MonomialTable:
    return _MonomialTable(curve)


def monomial_class(curve: Curve, k: int, sector: int = 0) -> CenterClass:
    """Normal form of ``x^k u^sector``."""
    n = curve.degree
    if sector == 1:
        if k == -1:
            return CenterClass(n, ParamPoly.const(1), (ZERO,) * n)
        return CenterClass.zero(n)
    if sector != 0:
        raise ValueError("sector must be 0 or 1")
    return CenterClass(n, ZERO, tuple(_table(curve).coords(k)))


def reduce(curve: Curve, f: AlgebraElement) -> CenterClass:
    """Project ``f`` onto the canonical basis of ``A/∂A``.

    Odd part: ``[x^k u] = 0`` for ``k != -1`` because
    ``∂(x^(k+1)) = (k+1) x^k u``; only ``x^-1 u`` survives, as ``ω0``.
    Even part: every exponent outside the window is rewritten by the
    relation whose extreme term it is, until only window exponents remain.
    """
    n = curve.degree
    table = _table(curve)
    acc = [ZERO] * n
    for e, c in f.even.items():
        for k, v in enumerate(table.coords(e)):
            if v:
                acc[k] = acc[k] + v * c
    return CenterClass(n, f.odd[-1], tuple(acc))


def quartic_even_pair(j: int) -> tuple[ParamPoly, ParamPoly]:
    """``(alpha_j, beta_j)`` with ``[x^(2j)] = alpha_j ω2 + beta_j ω4`` on
    ``x^4 - 2ax^2 + 1``, iterated from
    ``(2j+1) X_(j+1) = 4aj X_j - (2j-1) X_(j-1)``."""
    if j < 0:
        raise ValueError("j must be non-negative")
    one, zero = ParamPoly.const(1), ZERO
    prev, cur = (one, zero), (zero, one)
    if j == 0:
        return prev
    a4 = ParamPoly((0, 4))
    for i in range(1, j):
        mid = a4.scale(i)
        nxt = tuple(
            (mid * c - p.scale(2 * i - 1)).scale(Fraction(1, 2 * i + 1)) for c, p in zip(cur, prev)
        )
        prev, cur = cur, nxt
    return cur
