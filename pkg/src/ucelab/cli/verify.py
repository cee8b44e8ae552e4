"""Named verification suites.  Each suite stops at the first failing identity
and reports it with its operands."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..center import CenterClass, dimension, monomial_class, quartic_even_pair
from ..cocycle import E, F, ExtendedElement, cross_closed_form, g_n, psi_basis, uce_bracket
from ..current import (
    INDEX_MAPS,
    RECURRENCE_SWEEP,
    fit_constant_coefficients,
    rational_binomial,
    resolve_recurrence,
    snf_general,
    snf_sector1,
)
from ..exact import ParamPoly, ppoly_eval
from ..legendre import antiderivative_tail, formal_integral_to_one, legendre, legendre_ode_residual
from ..series import DEFAULT_ORDER, TruncatedSeries, inv_sqrt, ode_residual, substitute_z_squared
from ..superelliptic import AlgebraElement, apply_partial, quadratic, quartic

SUITES = ("legendre", "antiderivative", "genfun", "quartic", "cocycle-axioms", "snf")


class VerificationFailure(AssertionError):
    pass


@dataclass
class SuiteResult:
    name: str
    checks: int
    failure: str | None = None
    info: list[str] | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


class _Checker:
    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.info: list[str] = []

    def equal(self, label: str, got, expected) -> None:
        self.count += 1
        if got != expected:
            raise VerificationFailure(f"{label}\n  got:      {got}\n  expected: {expected}")

    def true(self, label: str, cond: bool, detail: str = "") -> None:
        self.count += 1
        if not cond:
            raise VerificationFailure(f"{label}" + (f"\n  {detail}" if detail else ""))


def _omega(n: int, e: int, c) -> CenterClass:
    return CenterClass.from_window(n, win={e: c})


def suite_legendre(ck: _Checker, max_n: int | None, order: int) -> None:
    N = 200 if max_n is None else max_n
    q = quadratic()
    for k in range(N + 1):
        p = legendre(k)
        ck.equal(f"P_{k}(1) = 1", p(1), 1)
        ck.equal(f"P_{k}(-1) = (-1)^{k}", p(-1), (-1) ** k)
        ck.equal(f"P_{k}(-a) = (-1)^{k} P_{k}(a)", p.reflect(), p.scale((-1) ** k))
        ck.equal(f"degree P_{k}", p.degree, k)
        ck.equal(f"[x^{k}] = P_{k}(a) ω2", monomial_class(q, k), _omega(2, 0, p))
        if k >= 1:
            ck.equal(f"[x^-{k}] = P_{k - 1}(a) ω1", monomial_class(q, -k), _omega(2, -1, legendre(k - 1)))
    for n in range(1, min(N, 100) + 1):
        d = legendre
        ck.equal(f"P'_{n+1} - P'_{n-1} = (2n+1) P_n, n={n}",
                 d(n + 1).derivative() - d(n - 1).derivative(), d(n).scale(2 * n + 1))
        ck.equal(f"a P'_n - P'_(n-1) = n P_n, n={n}",
                 d(n).derivative().shift(1) - d(n - 1).derivative(), d(n).scale(n))
        ck.equal(f"(a^2-1) P'_n = n a P_n - n P_(n-1), n={n}",
                 ParamPoly((-1, 0, 1)) * d(n).derivative(), d(n).shift(1).scale(n) - d(n - 1).scale(n))
    for n in range(0, min(N, 100) + 1):
        ck.equal(f"Sturm-Liouville residual n={n}", legendre_ode_residual(n), ParamPoly())


def suite_antiderivative(ck: _Checker, max_n: int | None, order: int) -> None:
    N = 100 if max_n is None else max_n
    q = quadratic()
    for n in range(1, N + 1):
        tail = antiderivative_tail(n)
        ck.equal(f"tail_{n} = ∫_a^1 P_{n}", tail, formal_integral_to_one(legendre(n)))
        ck.equal(f"ψ(e_1, f_{n - 1}) = tail_{n} ω2", psi_basis(q, E(1), F(n - 1)), _omega(2, 0, tail))
        g = g_n(n)
        ck.equal(f"g_{n} = tail_{n}", g, tail)
        ck.equal(f"g_{n}(1) = 0", g(1), 0)
        ck.equal(f"tail_{n}(1) = 0", tail(1), 0)
        ck.equal(f"tail_{n}(-1) = 0", tail(-1), 0)
        if n % 2 == 0:
            ck.equal(f"tail_{n}(0) = 0", tail(0), 0)
        else:
            k = (n - 1) // 2
            expected = Fraction((-1) ** k * math.comb(2 * k, k), 2 * (k + 1) * 4 ** k)
            ck.equal(f"tail_{n}(0)", tail(0), expected)
    ck.equal("g_2' = -P_2", g_n(2).derivative(), -legendre(2))
    for n, v in ((1, Fraction(1, 2)), (3, Fraction(-1, 8)), (5, Fraction(1, 16))):
        ck.equal(f"boundary value at a=0, n={n}", ppoly_eval(antiderivative_tail(n), 0), v)
    for r in range(1, 6):
        for s in range(-6, 7):
            ck.equal(f"closed form ψ(e_{r}, f_{s})", cross_closed_form(q, r, s), psi_basis(q, E(r), F(s)))


def suite_genfun(ck: _Checker, max_n: int | None, order: int) -> None:
    N = order
    q = quadratic()
    s = TruncatedSeries.from_coeffs([1, ParamPoly((0, -2)), 1], N + 1)
    G = inv_sqrt(s)
    for k in range(N + 1):
        ck.equal(f"[z^{k}] (1-2az+z^2)^(-1/2) = P_{k}", G[k], legendre(k))
        ck.equal(f"[z^{k}] F = [x^{k}] / ω2", G[k], monomial_class(q, k).omega(2))
    from_rec = TruncatedSeries.from_coeffs([legendre(k) for k in range(N + 2)], N + 1)
    ck.equal("series from recurrence = series from Newton", from_rec, G)
    ck.true("(1-2az+z^2) G^2 = 1", (s * G * G) == TruncatedSeries.one(N + 1))
    p = TruncatedSeries.from_coeffs([1, ParamPoly((0, -2)), 1], N)
    qq = TruncatedSeries.from_coeffs([ParamPoly((0, -1)), 1], N)
    res = ode_residual(p, qq, G)
    ck.true(f"quadratic ODE residual vanishes through order {res.order}", res.is_zero(), str(res.coeffs))
    # quartic odd generating function z G(z^2), known through z^(2N+3)
    Fq = substitute_z_squared(G).shift(1).truncate(N + 1)
    for k in range(N // 2 + 1):
        ck.equal(f"[z^{2 * k + 1}] z(1-2az^2+z^4)^(-1/2) = P_{k}", Fq[2 * k + 1], legendre(k))
    direct = inv_sqrt(TruncatedSeries.from_coeffs([1, 0, ParamPoly((0, -2)), 0, 1], N)).shift(1)
    ck.equal("z·inv_sqrt(1-2az^2+z^4) = z·G(z^2)", direct, Fq)
    p4 = TruncatedSeries.from_coeffs([0, 1, 0, ParamPoly((0, -2)), 0, 1], N)
    q4 = TruncatedSeries.from_coeffs([-1, 0, 0, 0, 1], N)
    res4 = ode_residual(p4, q4, Fq)
    ck.true(f"quartic ODE residual vanishes through order {res4.order}", res4.is_zero(), str(res4.coeffs))


def suite_quartic(ck: _Checker, max_n: int | None, order: int) -> None:
    N = 100 if max_n is None else max_n
    c = quartic()
    ck.equal("dim A/∂A (quartic)", dimension(c), 5)
    for r in range(-20, 21):
        got = apply_partial(c, AlgebraElement.monomial(r, 1))
        a = ParamPoly((0, 1))
        expected = AlgebraElement.monomial(r + 3, 0, r + 2) + AlgebraElement.monomial(r + 1, 0, a.scale(-2 * (r + 1))) \
            + AlgebraElement.monomial(r - 1, 0, r)
        ck.equal(f"∂(x^{r} u) on the quartic", got, expected)
    for k in range(N + 1):
        ck.equal(f"[x^{2 * k + 1}] = P_{k} ω3", monomial_class(c, 2 * k + 1), _omega(4, 1, legendre(k)))
    a = ParamPoly((0, 1))
    firsts = [
        (ParamPoly.const(1), ParamPoly()),
        (ParamPoly(), ParamPoly.const(1)),
        (ParamPoly.const(Fraction(-1, 3)), a.scale(Fraction(4, 3))),
        (a.scale(Fraction(-8, 15)), ParamPoly((Fraction(-9, 15), 0, Fraction(32, 15)))),
    ]
    for j, pair in enumerate(firsts):
        ck.equal(f"(alpha_{j}, beta_{j})", quartic_even_pair(j), pair)
    for j in range(N + 1):
        al, be = quartic_even_pair(j)
        ck.equal(f"[x^{2 * j}] = alpha_{j} ω2 + beta_{j} ω4", monomial_class(c, 2 * j),
                 CenterClass.from_window(4, win={0: al, 2: be}))


def _basis(bound: int):
    return [E(i) for i in range(-bound, bound + 1)] + [F(i) for i in range(-bound, bound + 1)]


def suite_cocycle_axioms(ck: _Checker, max_n: int | None, order: int) -> None:
    bound = 4 if max_n is None else max_n
    basis = _basis(bound)
    for curve in (quadratic(), quartic()):
        table = {(X, Y): psi_basis(curve, X, Y) for X in basis for Y in basis}
        for X, Y in itertools.product(basis, basis):
            v = table[X, Y]
            ck.true(f"ψ({X},{Y}) + ψ({Y},{X}) = 0 on {curve.name}", (v + table[Y, X]).is_zero(),
                    f"ψ({X},{Y}) = {v}; ψ({Y},{X}) = {table[Y, X]}")
            if X.kind == Y.kind:
                ck.true(f"ψ({X},{Y}) is a multiple of ω0 on {curve.name}", not any(v.window_coeffs), str(v))
            else:
                ck.true(f"ψ({X},{Y}) has no ω0 part on {curve.name}", not v.omega0, str(v))
        ext = {X: ExtendedElement.of(curve, X.element()) for X in basis}
        br = {}

        def bracket(X, Y):
            if (X, Y) not in br:
                br[X, Y] = uce_bracket(curve, ext[X], ext[Y])
            return br[X, Y]

        # the cyclic sum is invariant under rotation and changes sign under a
        # transposition once antisymmetry holds, so multisets suffice
        for X, Y, Z in itertools.combinations_with_replacement(basis, 3):
            xy, yz, zx = bracket(X, Y), bracket(Y, Z), bracket(Z, X)
            jac = uce_bracket(curve, xy, ext[Z]) + uce_bracket(curve, yz, ext[X]) + uce_bracket(curve, zx, ext[Y])
            ck.true(f"Jacobi vector part ({X},{Y},{Z}) on {curve.name}", jac.vector_part.is_zero(),
                    str(jac.vector_part))
            ck.true(f"2-cocycle identity ({X},{Y},{Z}) on {curve.name}", jac.central_part.is_zero(),
                    str(jac.central_part))


def suite_snf(ck: _Checker, max_n: int | None, order: int) -> None:
    K = 20 if max_n is None else max_n
    for l, j, k, m, r in RECURRENCE_SWEEP:
        if k > K:
            continue
        p = snf_general(l, j, k, m, r)
        ck.true(f"deg_c P^({l},{j})_{k}(c;{m},{r}) <= {j // r}", p.poly.degree <= j // r, str(p))
    for m in (2, 3, 4):
        for r in (2, 3):
            for j in range(1, r + 1):
                for k in range(K + 1):
                    for i in range(j // r + 1):
                        top = m + k + j - i * r - 1
                        if top >= 0:
                            ck.equal(f"binom({top},{k}) integer specialization",
                                     rational_binomial(top, k), math.comb(top, k))
    for l, j, k, m, r in RECURRENCE_SWEEP:
        if k > K or m % l:
            continue
        mm = m // l
        classical = ParamPoly([(-1) ** i * math.comb(mm + k + j - i * r - 1, k) for i in range(j // r + 1)])
        ck.equal(f"rescaling P^({l},{j})_{k}(c;{m},{r}) = P^(1,{j})_{k}(c;{mm},{r})",
                 snf_general(l, j, k, m, r).poly, classical)
        ck.equal(f"rescaling via sector 1 at m/l={mm}", snf_general(l, j, k, m, r).poly,
                 snf_sector1(j, k, mm, r).poly)
    sweep = [idx for idx in RECURRENCE_SWEEP if idx[2] <= K]
    results = resolve_recurrence(sweep)
    for res in results:
        status = "zero" if res.vanishes else f"nonzero at {res.failures}/{res.checked}"
        ck.info.append(f"hypothesis {res.name}: {status} ({res.description})")
    shapes = sorted({(l, j, m, r) for l, j, _, m, r in sweep})
    for index in INDEX_MAPS:
        fits = [shape for shape in shapes if fit_constant_coefficients(*shape, index, kmax=K) is not None]
        ck.info.append(f"index map {index}: free constant a_i fit {len(fits)}/{len(shapes)} (l,j,m,r) shapes")
    winners = [res.name for res in results if res.vanishes]
    detail = "; ".join(
        f"{res.name}: first nonzero residual at (l,j,k,m,r)={res.first_failure}: {res.first_residual.to_str('c')}"
        for res in results if not res.vanishes
    )
    ck.true(f"exactly one recurrence reading vanishes on the sweep (found {len(winners)}: {winners})",
            len(winners) == 1, detail)


_SUITE_FUNCS: dict[str, Callable] = {
    "legendre": suite_legendre,
    "antiderivative": suite_antiderivative,
    "genfun": suite_genfun,
    "quartic": suite_quartic,
    "cocycle-axioms": suite_cocycle_axioms,
    "snf": suite_snf,
}


def run_suite(name: str, max_n: int | None = None, order: int = DEFAULT_ORDER) -> SuiteResult:
    ck = _Checker(name)
    try:
        _SUITE_FUNCS[name](ck, max_n, order)
    except VerificationFailure as exc:
        return SuiteResult(name, ck.count, str(exc), ck.info)
    return SuiteResult(name, ck.count, None, ck.info)
