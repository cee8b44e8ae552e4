"""Sector polynomial families of the current-algebra extension.

For ``P(x) = 1 - 2c x^r + x^(2r)`` the sector-1 family is

    P1(j, k; m, r) = sum_{i=0}^{floor(j/r)} (-1)^i binom(m+k+j-ir-1, k) c^i

(the binomial's top minus bottom is ``k``, so it is a degree-``k``
polynomial in ``m`` and makes sense for rational ``m``).  Sector ``l``
is defined through the rescaling ``P^(l,j)_k(c; m, r) = P1(j, k; m/l, r)``;
sector 0 is the Kronecker delta ``δ_{k,-j}``.

The three-term recurrence in ``k`` that these families are said to obey
names coefficients ``a_i`` "of P(x)" without fixing their indexing, so the
recurrence is exposed as a residual over a set of named readings
(:data:`HYPOTHESES`) and :func:`resolve_recurrence` reports which, if any,
vanishes identically on a sweep.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import SectorOutOfRange, UnknownHypothesis
from .exact import ONE, ZERO, ParamPoly

__all__ = [
    "SnfIndex",
    "SnfPoly",
    "rational_binomial",
    "snf_sector1",
    "snf_general",
    "snf_sector0",
    "Hypothesis",
    "HYPOTHESES",
    "snf_recurrence_residual",
    "resolve_recurrence",
    "RECURRENCE_SWEEP",
    "center_dimension",
    "INDEX_MAPS",
    "fit_constant_coefficients",
]


@dataclass(frozen=True)
class SnfIndex:
    l: int
    j: int
    k: int
    m_param: Fraction
    r: int


@dataclass(frozen=True)
class SnfPoly:
    index: SnfIndex
    poly: ParamPoly

    def __str__(self) -> str:
        return self.poly.to_str("c")


def center_dimension(m: int, r: int) -> int:
    """Dimension ``r(m-1) + 1`` of the Kähler center (metadata only)."""
    return r * (m - 1) + 1


def rational_binomial(top, k: int) -> Fraction:
    """``top (top-1) ... (top-k+1) / k!`` for rational ``top``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    top = Fraction(top)
    num = Fraction(1)
    for t in range(k):
        num *= top - t
    return num / math.factorial(k)


def _sector1_poly(j: int, k: int, m: Fraction, r: int) -> ParamPoly:
    if k < 0:
        return ZERO
    coeffs = []
    for i in range(j // r + 1):
        b = rational_binomial(m + k + j - i * r - 1, k)
        coeffs.append(-b if i % 2 else b)
    return ParamPoly(coeffs)


def snf_sector1(j: int, k: int, m_param, r: int) -> SnfPoly:
    if j < 1 or k < 0 or r < 2:
        raise ValueError("sector-1 family needs j >= 1, k >= 0, r >= 2")
    m = Fraction(m_param)
    if m <= 0:
        raise ValueError("m must be positive")
    return SnfPoly(SnfIndex(1, j, k, m, r), _sector1_poly(j, k, m, r))


def snf_general(l: int, j: int, k: int, m: int, r: int) -> SnfPoly:
    if not 1 <= l <= m - 1:
        raise SectorOutOfRange(f"sector {l} outside 1..{m - 1}")
    inner = snf_sector1(j, k, Fraction(m, l), r)
    return SnfPoly(SnfIndex(l, j, k, Fraction(m), r), inner.poly)


def snf_sector0(j: int, k: int) -> SnfPoly:
    return SnfPoly(SnfIndex(0, j, k, Fraction(0), 0), ONE if k == -j else ZERO)


# --- recurrence readings -----------------------------------------------------

def _curve_coeffs(r: int) -> list[ParamPoly]:
    """Ascending coefficients of ``1 - 2c x^r + x^(2r)``."""
    out = [ZERO] * (2 * r + 1)
    out[0] = ONE
    out[r] = ParamPoly((0, -2))
    out[2 * r] = ONE
    return out


@dataclass(frozen=True)
class Hypothesis:
    name: str
    description: str
    coeff: Callable[[int, int], ParamPoly]  # (i, r) -> a_i
    index: Callable[[int, int, int], int]  # (k, i, j) -> k'


def _dense(i: int, r: int) -> ParamPoly:
    c = _curve_coeffs(r)
    return c[i] if i < len(c) else ZERO


def _stride(i: int, r: int) -> ParamPoly:
    c = _curve_coeffs(r)
    return c[i * r] if i * r < len(c) else ZERO


def _nonzero(i: int, r: int) -> ParamPoly:
    c = [v for v in _curve_coeffs(r) if v]
    return c[i] if i < len(c) else ZERO


def _reversed_dense(i: int, r: int) -> ParamPoly:
    c = _curve_coeffs(r)[::-1]
    return c[i] if i < len(c) else ZERO


_COEFF_MAPS = {
    "dense": (_dense, "a_i = coefficient of x^i"),
    "stride": (_stride, "a_i = coefficient of x^(ir)"),
    "nonzero": (_nonzero, "a_i = i-th nonzero coefficient (1, -2c, 1)"),
    "reversed": (_reversed_dense, "a_i = coefficient of x^(2r-i)"),
}

_INDEX_MAPS = {
    "printed": (lambda k, i, j: k - 1 - i + j, "P_(k-1-i+j)"),
    "unshifted": (lambda k, i, j: k - 1 - i, "P_(k-1-i)"),
    "stride-shift": (lambda k, i, j: k - 1 - i * j, "P_(k-1-ij)"),
}


INDEX_MAPS = {name: fn for name, (fn, _) in _INDEX_MAPS.items()}


def _build_hypotheses() -> dict[str, Hypothesis]:
    out = {}
    for cn, (cf, cd) in _COEFF_MAPS.items():
        for iname, (ifn, idesc) in _INDEX_MAPS.items():
            name = f"{cn}/{iname}"
            out[name] = Hypothesis(name, f"{cd}; right side uses {idesc}", cf, ifn)
    return out


HYPOTHESES: dict[str, Hypothesis] = _build_hypotheses()

# l in {1, 2}, m in {2, 3, 4} with l <= m - 1, r in {2, 3}, 1 <= j <= r, 0 <= k <= 20
RECURRENCE_SWEEP = [
    (l, j, k, m, r)
    for l in (1, 2)
    for m in (2, 3, 4)
    if l <= m - 1
    for r in (2, 3)
    for j in range(1, r + 1)
    for k in range(0, 21)
]


def _family(l: int, j: int, k: int, m: int, r: int) -> ParamPoly:
    if l == 0:
        return snf_sector0(j, k).poly
    if k < 0:
        return ZERO
    return snf_general(l, j, k, m, r).poly


def snf_recurrence_residual(l: int, j: int, k: int, m: int, r: int, hypothesis: str) -> ParamPoly:
    """Left minus right side of

        ((m+1)k + lm) P_k = sum_{i=0}^{r-1} ((m+1)(k-1-i) + lm) a_i P_{k'(k,i,j)}

    under the named reading of ``a_i`` and ``k'``."""
    try:
        hyp = HYPOTHESES[hypothesis]
    except KeyError:
        raise UnknownHypothesis(hypothesis) from None
    lhs = _family(l, j, k, m, r).scale((m + 1) * k + l * m)
    rhs = ZERO
    for i in range(r):
        a_i = hyp.coeff(i, r)
        if not a_i:
            continue
        w = (m + 1) * (k - 1 - i) + l * m
        rhs = rhs + a_i * _family(l, j, hyp.index(k, i, j), m, r).scale(w)
    return lhs - rhs


@dataclass
class HypothesisResult:
    name: str
    description: str
    checked: int
    failures: int
    first_failure: tuple | None
    first_residual: ParamPoly | None

    @property
    def vanishes(self) -> bool:
        return self.failures == 0


def resolve_recurrence(sweep=None) -> list[HypothesisResult]:
    """Evaluate every reading of the recurrence over ``sweep``."""
    sweep = RECURRENCE_SWEEP if sweep is None else sweep
    results = []
    for name, hyp in HYPOTHESES.items():
        failures = 0
        first = None
        first_res = None
        for idx in sweep:
            res = snf_recurrence_residual(*idx, name)
            if res:
                failures += 1
                if first is None:
                    first, first_res = idx, res
        results.append(HypothesisResult(name, hyp.description, len(sweep), failures, first, first_res))
    return results


def fit_constant_coefficients(l: int, j: int, m: int, r: int, index: str, kmax: int = 20) -> tuple | None:
    """Look for rational constants ``a_0 .. a_(r-1)`` that make the recurrence
    hold for ``0 <= k <= kmax`` under the named index map.

    Each power of ``c`` gives one linear equation per ``k``.  Returns one
    solution, or ``None`` if the system is inconsistent.
    """
    shift = INDEX_MAPS[index]
    rows: list[list[Fraction]] = []
    for k in range(kmax + 1):
        lhs = _family(l, j, k, m, r).scale((m + 1) * k + l * m)
        cols = [_family(l, j, shift(k, i, j), m, r).scale((m + 1) * (k - 1 - i) + l * m) for i in range(r)]
        depth = max([lhs.degree] + [c.degree for c in cols]) + 1
        for e in range(depth):
            rows.append([c[e] for c in cols] + [lhs[e]])
    return _solve(rows, r)


def _solve(rows: list[list[Fraction]], n: int) -> tuple | None:
    m = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    if any(row[n] != 0 for row in m[rank:]):
        return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = m[i][n]
    return tuple(sol)
