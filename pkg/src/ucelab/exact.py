"""Exact arithmetic substrate: parameter polynomials and Laurent polynomials.

Scalars are :class:`fractions.Fraction`.  A :class:`ParamPoly` is a dense
univariate polynomial over the rationals in a single symbolic parameter
(``a`` on the derivation side, ``c`` on the current side).  A
:class:`LaurentPoly` is a sparse map from integer exponents of ``x`` to
``ParamPoly`` coefficients.

All values are immutable.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _scaled_ints(c: tuple) -> tuple[list[int], int]:
    den = math.lcm(*(v.denominator for v in c))
    return [v.numerator * (den // v.denominator) for v in c], den


def format_fraction(q: Fraction) -> str:
    """Render ``q`` as ``"num/den"`` (or ``"num"`` when integral)."""
    q = _frac(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class ParamPoly:
    """Dense polynomial in one parameter with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``a**i``.  Trailing zeros are
    stripped on construction, so the zero polynomial has no coefficients
    and ``degree == -1``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "ParamPoly":
        # caller guarantees Fractions with nonzero leading entry
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _trim(cls, coeffs: list) -> "ParamPoly":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls._raw(tuple(coeffs))

    @classmethod
    def const(cls, value: Scalar) -> "ParamPoly":
        return cls((value,))

    @classmethod
    def param(cls) -> "ParamPoly":
        """The parameter itself, ``a``."""
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "ParamPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def coerce(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def constant_value(self) -> Fraction:
        if len(self._c) > 1:
            raise ValueError(f"not a constant: {self}")
        return self._c[0] if self._c else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ParamPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __neg__(self) -> "ParamPoly":
        return ParamPoly._raw(tuple(-v for v in self._c))

    def __add__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = ParamPoly.const(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return ParamPoly._trim(out)

    __radd__ = __add__

    def __sub__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = ParamPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "ParamPoly":
        return (-self) + other

    def scale(self, q: Scalar) -> "ParamPoly":
        q = _frac(q)
        if q == 0:
            return ParamPoly._raw(())
        return ParamPoly._raw(tuple(v * q for v in self._c))

    def __mul__(self, other) -> "ParamPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ParamPoly._raw(())
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        # convolve integer numerators over a common denominator
        ia, da = _scaled_ints(a)
        ib, db = _scaled_ints(b)
        acc = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(ia):
            if u:
                for j, v in enumerate(ib):
                    acc[i + j] += u * v
        den = da * db
        return ParamPoly._trim([Fraction(v, den) for v in acc])

    __rmul__ = __mul__

    def __truediv__(self, q) -> "ParamPoly":
        if isinstance(q, ParamPoly):
            return self.divexact(q)
        return self.scale(1 / _frac(q))

    def __pow__(self, e: int) -> "ParamPoly":
        if e < 0:
            raise ValueError("negative power of a parameter polynomial")
        result = ParamPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "ParamPoly":
        """Multiply by ``a**k`` (k >= 0)."""
        if not self._c or k == 0:
            return self
        return ParamPoly._raw((Fraction(0),) * k + self._c)

    def divmod(self, other: "ParamPoly") -> tuple["ParamPoly", "ParamPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._c)
        d = other.degree
        lead = other._c[-1]
        if len(rem) - 1 < d:
            return ParamPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            q = rem[i] / lead
            if q:
                quot[i - d] = q
                for j, v in enumerate(other._c):
                    rem[i - d + j] -= q * v
        return ParamPoly._trim(quot), ParamPoly._trim(rem[:d])

    def divexact(self, other: "ParamPoly") -> "ParamPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def __call__(self, t: Scalar) -> Fraction:
        return ppoly_eval(self, t)

    def derivative(self) -> "ParamPoly":
        return ParamPoly._trim([i * v for i, v in enumerate(self._c)][1:])

    def antiderivative(self) -> "ParamPoly":
        """Termwise antiderivative with zero constant term."""
        if not self._c:
            return self
        return ParamPoly._raw((Fraction(0),) + tuple(v / (i + 1) for i, v in enumerate(self._c)))

    def reflect(self) -> "ParamPoly":
        """``p(-a)``."""
        return ParamPoly._raw(tuple(-v if i % 2 else v for i, v in enumerate(self._c)))

    def to_str(self, var: str = "a") -> str:
        """Ascending-degree rendering, e.g. ``"a/2 - a^3/2"``."""
        parts = []
        for i, v in enumerate(self._c):
            if v == 0:
                continue
            sign = "-" if v < 0 else "+"
            mag = -v if v < 0 else v
            if i == 0:
                body = format_fraction(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if mag.numerator == 1:
                    body = mono
                else:
                    body = f"{mag.numerator}*{mono}"
                if mag.denominator != 1:
                    body += f"/{mag.denominator}"
            parts.append((sign, body))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"ParamPoly({self.to_str()!r})"


ZERO = ParamPoly()
ONE = ParamPoly.const(1)
A = ParamPoly.param()


def ppoly_eval(p: ParamPoly, t: Scalar) -> Fraction:
    """Horner evaluation of ``p`` at the rational ``t``."""
    t = _frac(t)
    acc = Fraction(0)
    for v in reversed(p.coeffs):
        acc = acc * t + v
    return acc


class LaurentPoly:
    """Finitely supported map ``exponent -> ParamPoly`` for powers of ``x``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        t = {}
        if terms:
            for e, v in terms.items():
                v = ParamPoly.coerce(v)
                if v:
                    t[int(e)] = v
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._t = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, e: int, coeff=1) -> "LaurentPoly":
        return cls({e: coeff})

    @classmethod
    def from_dense(cls, coeffs: Iterable, start: int = 0) -> "LaurentPoly":
        return cls({start + i: v for i, v in enumerate(coeffs)})

    def items(self) -> Iterator[tuple[int, ParamPoly]]:
        return iter(sorted(self._t.items()))

    def support(self) -> list[int]:
        return sorted(self._t)

    def __getitem__(self, e: int) -> ParamPoly:
        return self._t.get(e, ZERO)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -v for e, v in self._t.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._t)
        for e, v in other._t.items():
            s = out.get(e)
            s = v if s is None else s + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LaurentPoly":
        c = ParamPoly.coerce(c)
        if not c:
            return LaurentPoly._raw({})
        out = {}
        for e, v in self._t.items():
            w = v * c
            if w:
                out[e] = w
        return LaurentPoly._raw(out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._t.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return laurent_mul(self, other)
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def ddx(self) -> "LaurentPoly":
        return laurent_ddx(self)

    def to_str(self, var: str = "a") -> str:
        if not self._t:
            return "0"
        parts = []
        for e, v in sorted(self._t.items(), reverse=True):
            mono = "1" if e == 0 else ("x" if e == 1 else f"x^{e}")
            parts.append(f"({v.to_str(var)})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_str()!r})"


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact convolution product."""
    out: dict[int, ParamPoly] = {}
    for e1, v1 in p._t.items():
        for e2, v2 in q._t.items():
            e = e1 + e2
            w = v1 * v2
            s = out.get(e)
            out[e] = w if s is None else s + w
    return LaurentPoly._raw({e: v for e, v in out.items() if v})


def laurent_ddx(p: LaurentPoly) -> LaurentPoly:
    """``d/dx`` termwise: ``x**k -> k*x**(k-1)``."""
    return LaurentPoly._raw({e - 1: v.scale(e) for e, v in p._t.items() if e != 0})
