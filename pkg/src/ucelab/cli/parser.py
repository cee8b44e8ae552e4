"""Recursive-descent parser for algebra expressions.

Grammar (whitespace insensitive)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := rational | 'a' ('^' int)? | atom ('^' signed_int)?
    atom     := 'x' | 'u' | '(' expr ')'
    rational := int ('/' int)?

Division is only by nonzero rational constants.  ``u`` exponents must be
non-negative; ``u^2`` is reduced through the curve when elaborated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..errors import NegativeUExponent, ParseError
from ..exact import LaurentPoly, ParamPoly
from ..superelliptic import AlgebraElement, Curve, elem_mul

__all__ = [
    "Num",
    "Sym",
    "Pow",
    "BinOp",
    "Neg",
    "ExprAst",
    "parse_expr",
    "pretty",
    "elaborate",
    "elaborate_param",
    "parse_param",
]


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sym:
    name: str  # 'a', 'x' or 'u'
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*', '/'
    left: "ExprAst"
    right: "ExprAst"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"
    pos: int = field(default=0, compare=False)


ExprAst = Union[Num, Sym, Pow, BinOp, Neg]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, self.i if pos is None else pos, self.text)

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            raise self.error("expected an integer")
        return int(self.text[start:self.i])

    def signed_integer(self) -> int:
        neg = self.take("-")
        if not neg:
            self.take("+")
        v = self.integer()
        return -v if neg else v

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> ExprAst:
        self.skip()
        start = self.i
        if self.take("-"):
            node: ExprAst = Neg(self.term(), start)
        else:
            node = self.term()
        while True:
            ch = self.peek()
            if ch in ("+", "-"):
                pos = self.i
                self.i += 1
                node = BinOp(ch, node, self.term(), pos)
            else:
                return node

    def term(self) -> ExprAst:
        node = self.factor()
        while True:
            ch = self.peek()
            if ch in ("*", "/"):
                pos = self.i
                self.i += 1
                node = BinOp(ch, node, self.factor(), pos)
            else:
                return node

    def factor(self) -> ExprAst:
        ch = self.peek()
        start = self.i
        if ch.isdigit():
            num = self.integer()
            save = self.i
            if self.take("/") and self.peek().isdigit():
                den_pos = self.i
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", den_pos)
                return Num(Fraction(num, den), start)
            self.i = save
            return Num(Fraction(num), start)
        if ch == "a":
            self.i += 1
            node: ExprAst = Sym("a", start)
            if self.take("^"):
                e = self.integer()
                node = Pow(node, e, start)
            return node
        node = self.atom()
        if self.take("^"):
            node = Pow(node, self.signed_integer(), start)
        return node

    def atom(self) -> ExprAst:
        ch = self.peek()
        start = self.i
        if ch in ("x", "u"):
            self.i += 1
            return Sym(ch, start)
        if ch == "(":
            self.i += 1
            node = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return node
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {ch!r}")


def parse_expr(text: str) -> ExprAst:
    return _Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def pretty(node: ExprAst) -> str:
    """Canonical text that parses back to an equal tree."""
    return _pretty(node, 0)


def _pretty(node: ExprAst, ctx: int) -> str:
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Pow):
        base = node.base
        inner = base.name if isinstance(base, Sym) else f"({_pretty(base, 0)})"
        return f"{inner}^{node.exponent}"
    if isinstance(node, Neg):
        s = "-" + _pretty(node.operand, 2)
        return f"({s})" if ctx > 0 else s
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = _pretty(node.left, p if p == 1 else 2)
        right = _pretty(node.right, p + 1 if p == 1 else 3)
        if node.op == "/" and left[-1].isdigit():
            left = f"({left})"
        s = f"{left} {node.op} {right}" if p == 1 else f"{left}{node.op}{right}"
        return f"({s})" if ctx > p or (ctx == p and ctx == 3) else s
    raise TypeError(f"not an expression node: {node!r}")


def _constant(el: AlgebraElement) -> ParamPoly | None:
    if el.odd or any(e != 0 for e in el.even.support()):
        return None
    return el.even[0]


def elaborate(node: ExprAst, curve: Curve) -> AlgebraElement:
    """Evaluate ``node`` to an element of the algebra of ``curve``."""
    if isinstance(node, Num):
        return AlgebraElement.scalar(node.value)
    if isinstance(node, Sym):
        if node.name == "a":
            return AlgebraElement.scalar(ParamPoly.param())
        if node.name == "x":
            return AlgebraElement.monomial(1)
        return AlgebraElement.monomial(0, 1)
    if isinstance(node, Neg):
        return -elaborate(node.operand, curve)
    if isinstance(node, BinOp):
        left = elaborate(node.left, curve)
        right = elaborate(node.right, curve)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return elem_mul(curve, left, right)
        c = _constant(right)
        if c is None or not c.is_constant() or not c:
            raise ParseError("division by a non-constant", node.pos)
        return left.scale(ParamPoly.const(1 / c.constant_value()))
    if isinstance(node, Pow):
        if node.exponent < 0:
            return _negative_power(node, curve)
        base = elaborate(node.base, curve)
        result = AlgebraElement.scalar(1)
        for _ in range(node.exponent):
            result = elem_mul(curve, result, base)
        return result
    raise TypeError(f"not an expression node: {node!r}")


def _negative_power(node: Pow, curve: Curve) -> AlgebraElement:
    base = elaborate(node.base, curve)
    if base.odd:
        raise NegativeUExponent(f"negative power of an element involving u at offset {node.pos}")
    terms = list(base.even.items())
    if len(terms) != 1 or not terms[0][1].is_constant():
        raise ParseError("negative power of a non-monomial", node.pos)
    e, c = terms[0]
    inv = 1 / c.constant_value()
    k = -node.exponent
    return AlgebraElement(LaurentPoly.monomial(-e * k, ParamPoly.const(inv ** k)))


def elaborate_param(node: ExprAst) -> ParamPoly:
    """Evaluate an expression in ``a`` and rationals only."""
    if isinstance(node, Num):
        return ParamPoly.const(node.value)
    if isinstance(node, Sym):
        if node.name != "a":
            raise ParseError(f"unexpected symbol {node.name!r} in a parameter expression", node.pos)
        return ParamPoly.param()
    if isinstance(node, Neg):
        return -elaborate_param(node.operand)
    if isinstance(node, Pow):
        if node.exponent < 0:
            raise ParseError("negative power in a parameter expression", node.pos)
        return elaborate_param(node.base) ** node.exponent
    if isinstance(node, BinOp):
        left, right = elaborate_param(node.left), elaborate_param(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if not right.is_constant() or not right:
            raise ParseError("division by a non-constant", node.pos)
        return left.scale(1 / right.constant_value())
    raise TypeError(f"not an expression node: {node!r}")


def parse_param(text: str, var: str = "a") -> ParamPoly:
    """Parse a parameter polynomial such as ``"a/2 - a^3/2"``."""
    if var != "a":
        text = text.replace(var, "a")
    return elaborate_param(parse_expr(text)) if text.strip() else ParamPoly()

