"""Symmetry diagnostics for palindromic curves.

The report does not assert anything about general degree; it records what
the relations and reductions look like so higher-degree cases can be
inspected.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .center import CenterClass, dimension, monomial_class, relation_coeffs, window
from .errors import NotPalindromic, OddDegree
from .exact import ParamPoly, ppoly_eval
from .legendre import legendre
from .superelliptic import Curve

__all__ = ["is_palindromic", "SymmetryReport", "symmetry_report", "observed_dimension"]

# generic rational sample point for the rank computation
_SAMPLE_A = Fraction(3, 7)


def is_palindromic(p_coeffs: Sequence) -> bool:
    """``p_i == p_(n-i)`` for every ``i``."""
    c = [ParamPoly.coerce(v) for v in p_coeffs]
    return all(c[i] == c[-1 - i] for i in range(len(c)))


@dataclass
class SymmetryReport:
    degree: int
    curve: str
    relation_tables: dict[str, list[dict]]
    parity_separated: bool
    coefficient_symmetry: bool
    mirror_law: bool
    mirror_center: int
    legendre_chains: list[dict]
    multi_component_generators: list[str]
    dimension_formula: int
    dimension_observed: int
    summary: str
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "curve": self.curve,
            "relation_tables": self.relation_tables,
            "verdicts": {
                "parity_separated": self.parity_separated,
                "coefficient_symmetry": self.coefficient_symmetry,
                "mirror_law": self.mirror_law,
                "legendre_chains": self.legendre_chains,
                "multi_component_generators": self.multi_component_generators,
            },
            "mirror_center": self.mirror_center,
            "dimension": {"formula": self.dimension_formula, "observed": self.dimension_observed},
            "summary": self.summary,
            "notes": self.notes,
        }


def _rank(rows: list[list[Fraction]]) -> int:
    m = [r[:] for r in rows if any(r)]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def observed_dimension(curve: Curve, span: int | None = None) -> int:
    """Rank of the reduced classes of ``x^e`` and ``x^e u`` for ``|e| <= span``,
    evaluated at a generic rational parameter value."""
    n = curve.degree
    span = 3 * n if span is None else span
    rows = []
    for e in range(-span, span + 1):
        for sector in (0, 1):
            cls = monomial_class(curve, e, sector)
            rows.append([ppoly_eval(c, _SAMPLE_A) for c in cls.coords()])
    return _rank(rows)


def _coefficient_symmetry(curve: Curve, rs: range) -> bool:
    # palindromic relations satisfy coef_{n-i}(-r - n/2) = -coef_i(r)
    n = curve.degree
    for r in rs:
        mirror = -r - n // 2
        here = dict(relation_coeffs(curve, r))
        there = dict(relation_coeffs(curve, mirror))
        for i in range(n + 1):
            a = here.get(r + i - 1, ParamPoly())
            b = there.get(mirror + (n - i) - 1, ParamPoly())
            if a != -b:
                return False
    return True


def _mirror_law(curve: Curve, center: int, es: range) -> bool:
    """``[x^(center-e)]`` equals the image of ``[x^e]`` under ``[x^w] -> [x^(center-w)]``."""
    n = curve.degree
    images = {w: monomial_class(curve, center - w, 0) for w in window(curve)}
    for e in es:
        lhs = monomial_class(curve, center - e, 0)
        rhs = CenterClass.zero(n)
        for w, c in monomial_class(curve, e, 0).window.items():
            rhs = rhs + images[w].scale(c)
        if lhs != rhs:
            return False
    return True


def _legendre_chains(curve: Curve, depth: int) -> list[dict]:
    """Window generators ``ω`` with ``[x^(w ± d k)] = P_k(a) ω`` for ``k <= depth``."""
    n = curve.degree
    found = []
    for w in window(curve):
        label = f"omega{w + 2}"
        for direction in (1, -1):
            for stride in range(1, n + 1):
                ok = True
                for k in range(depth + 1):
                    cls = monomial_class(curve, w + direction * stride * k, 0)
                    if cls.window != {w: legendre(k)}:
                        ok = False
                        break
                if ok:
                    found.append({"generator": label, "direction": "positive" if direction > 0 else "negative",
                                  "stride": stride})
                    break
    return found


def symmetry_report(curve: Curve, rmax: int | None = None, depth: int = 12) -> SymmetryReport:
    n = curve.degree
    if n % 2:
        raise OddDegree(f"degree {n} is odd")
    if not curve.palindromic:
        raise NotPalindromic(str(curve))
    rmax = 2 * n if rmax is None else rmax
    rs = range(-rmax, rmax + 1)

    odd_vanish = all(not curve.p_coeffs[i] for i in range(1, n + 1, 2))
    rows_by_sector: dict[str, list[dict]] = {}
    parity_ok = True
    for r in rs:
        rel = relation_coeffs(curve, r)
        parities = {e % 2 for e, _ in rel}
        if len(parities) > 1:
            parity_ok = False
        key = ("even" if parities == {0} else "odd") if len(parities) == 1 else "mixed"
        rows_by_sector.setdefault(key, []).append(
            {"r": r, "terms": [{"exponent": e, "coeff": c.to_str()} for e, c in rel]}
        )
    parity_separated = odd_vanish and parity_ok

    center = n // 2 - 2
    sym = _coefficient_symmetry(curve, rs)
    mirror = _mirror_law(curve, center, range(-2 * n, 2 * n + 1))
    chains = _legendre_chains(curve, depth)
    covered = {c["generator"] for c in chains}
    multi = [f"omega{w + 2}" for w in window(curve) if f"omega{w + 2}" not in covered]
    observed = observed_dimension(curve)

    if not multi:
        summary = "every window generator carries a Legendre chain; scalar three-term recurrence"
    elif chains:
        summary = (f"Legendre chains on {', '.join(sorted(covered))}; "
                   f"multi-component recurrence on {', '.join(multi)}")
    else:
        summary = "no Legendre chain found; multi-component recurrence on every window generator"
    if sym:
        summary += "; relation coefficients symmetric under r -> -r - n/2"

    notes = []
    if n > 4:
        notes.append("exploratory: no proved statement is checked at this degree")
    return SymmetryReport(
        degree=n,
        curve=str(curve),
        relation_tables=rows_by_sector,
        parity_separated=parity_separated,
        coefficient_symmetry=sym,
        mirror_law=mirror,
        mirror_center=center,
        legendre_chains=chains,
        multi_component_generators=multi,
        dimension_formula=dimension(curve),
        dimension_observed=observed,
        summary=summary,
        notes=notes,
    )
