"""Truncated formal power series in ``z`` with ``ParamPoly`` coefficients.

A series of order ``N`` knows its coefficients of ``z^0 .. z^N`` exactly and
nothing beyond.  Operations that lose information shrink the order:
``series_ddz`` returns order ``N-1``; ``substitute_z_squared`` returns order
``2N``; ``shift(k)`` returns order ``N+k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadConstantTerm, OrderMismatch
from .exact import ONE, ZERO, ParamPoly

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_ddz",
    "inv_sqrt",
    "ode_residual",
    "substitute_z_squared",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 64


def _mul_trunc(x: Sequence[ParamPoly], y: Sequence[ParamPoly], length: int) -> list[ParamPoly]:
    out = [ZERO] * length
    for i, u in enumerate(x[:length]):
        if not u:
            continue
        for j in range(min(len(y), length - i)):
            v = y[j]
            if v:
                out[i + j] = out[i + j] + u * v
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[ParamPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        """Pad or cut ``coeffs`` to the requested order."""
        c = [ParamPoly.coerce(v) for v in list(coeffs)[: order + 1]]
        c += [ZERO] * (order + 1 - len(c))
        return cls(order, tuple(c))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([ONE], order)

    def __getitem__(self, k: int) -> ParamPoly:
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _same_order(self, other)
        return TruncatedSeries(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _same_order(self, other)
        return TruncatedSeries(self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def scale(self, c) -> "TruncatedSeries":
        c = ParamPoly.coerce(c)
        return TruncatedSeries(self.order, tuple(x * c for x in self.coeffs))

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``z^k``."""
        return TruncatedSeries(self.order + k, (ZERO,) * k + self.coeffs)


def _same_order(s: TruncatedSeries, t: TruncatedSeries) -> None:
    if s.order != t.order:
        raise OrderMismatch(f"orders differ: {s.order} vs {t.order}")


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _same_order(s, t)
    return TruncatedSeries(s.order, tuple(_mul_trunc(s.coeffs, t.coeffs, s.order + 1)))


def series_ddz(s: TruncatedSeries) -> TruncatedSeries:
    if s.order == 0:
        raise OrderMismatch("derivative of an order-0 series carries no information")
    return TruncatedSeries(s.order - 1, tuple(c.scale(k) for k, c in enumerate(s.coeffs) if k))


def inv_sqrt(s: TruncatedSeries) -> TruncatedSeries:
    """``s^(-1/2)`` by the Newton step ``y <- y (3 - s y^2) / 2``."""
    if s.coeffs[0] != ONE:
        raise BadConstantTerm(f"constant term is {s.coeffs[0]}, expected 1")
    target = s.order + 1
    y = [ONE]
    prec = 1
    half = Fraction(1, 2)
    while prec < target:
        prec = min(2 * prec, target)
        y2 = _mul_trunc(y, y, prec)
        sy2 = _mul_trunc(s.coeffs, y2, prec)
        corr = [(-c).scale(half) for c in sy2]
        corr[0] = corr[0] + Fraction(3, 2)
        y = _mul_trunc(y, corr, prec)
    return TruncatedSeries(s.order, tuple(y))


def ode_residual(p: TruncatedSeries, q: TruncatedSeries, F: TruncatedSeries) -> TruncatedSeries:
    """``p F' + q F`` through the order of ``F'``."""
    dF = series_ddz(F)
    n = dF.order
    if p.order < n or q.order < n:
        raise OrderMismatch(f"coefficient series must reach order {n}")
    return series_mul(p.truncate(n), dF) + series_mul(q.truncate(n), F.truncate(n))


def substitute_z_squared(s: TruncatedSeries, max_order: int | None = None) -> TruncatedSeries:
    out = [ZERO] * (2 * s.order + 1)
    for k, c in enumerate(s.coeffs):
        out[2 * k] = c
    result = TruncatedSeries(2 * s.order, tuple(out))
    if max_order is not None and max_order < result.order:
        result = result.truncate(max_order)
    return result
