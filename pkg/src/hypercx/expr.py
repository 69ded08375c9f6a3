"""A small expression language over an algebra.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' integer] | '-' factor
    atom   := number | ident | ident '(' expr ')' | '(' expr ')'

Numbers are decimals (``1.25``) or rationals written without blanks
(``3/4``); ``3 / 4`` with blanks is a division, and so is ``3/4^2``
(a rational literal is never the base of a power).  Identifiers are the
coordinates ``x0 .. x{n-1}``, the whole point ``v``, the algebra's unit
labels (``i``, ``j``, ``k``, ``j1``, ``j2`` ... where registered) and the
functions ``exp cos sin cosh sinh C S``.

Division ``a / b`` is ``a * b^-1``; order matters in the coquaternions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .algebra import AlgebraDescriptor, Element, inverse, left_matrix
from .errors import DomainError, ExprSyntaxError, NearSingular, UnknownSymbol

FUNCTIONS = ("exp", "cos", "sin", "cosh", "sinh", "C", "S")
WHOLE_VARIABLE = "v"
# algebras carrying a central unit i with i^2 = -1 and a unit j with j^2 = i
C_S_ALGEBRAS = ("complex", "double_complex")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Unit:
    label: str


@dataclass(frozen=True)
class Coord:
    index: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Apply:
    func: str
    arg: "Expr"


Expr = Union[Num, Unit, Coord, Var, Neg, BinOp, Pow, Apply]


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+(?!\s*[\d.^]))|(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    tokens.append(_Tok("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra: AlgebraDescriptor):
        self.tokens = tokenize(text)
        self.i = 0
        self.algebra = algebra

    @property
    def tok(self) -> _Tok:
        return self.tokens[self.i]

    def take(self) -> _Tok:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> None:
        if self.tok.text != text:
            raise ExprSyntaxError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        self.i += 1

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.take().text
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.take().text
            e = BinOp(op, e, self.factor())
        return e

    def factor(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.take()
            return Neg(self.factor())
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            sign = 1
            if self.tok.kind == "op" and self.tok.text == "-":
                self.take()
                sign = -1
            if self.tok.kind != "num" or not self.tok.text.isdigit():
                raise ExprSyntaxError("exponent must be an integer", self.tok.pos)
            return Pow(base, sign * int(self.take().text))
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.take()
            return Num(Fraction(t.text))
        if t.kind == "rat":
            self.take()
            p, q = t.text.split("/")
            if int(q) == 0:
                raise ExprSyntaxError("zero denominator", t.pos)
            return Num(Fraction(int(p), int(q)))
        if t.kind == "ident":
            self.take()
            if self.tok.kind == "op" and self.tok.text == "(":
                if t.text not in FUNCTIONS:
                    raise UnknownSymbol(f"unknown function {t.text!r}")
                if t.text in ("C", "S") and self.algebra.name not in C_S_ALGEBRAS:
                    raise UnknownSymbol(f"{t.text} is only available on {', '.join(C_S_ALGEBRAS)}")
                self.take()
                arg = self.expr()
                self.expect(")")
                return Apply(t.text, arg)
            return self.symbol(t)
        if t.kind == "op" and t.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        raise ExprSyntaxError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def symbol(self, t: _Tok) -> Expr:
        name = t.text
        if name == WHOLE_VARIABLE:
            return Var()
        m = re.fullmatch(r"x(\d+)", name)
        if m and int(m.group(1)) < self.algebra.dim:
            return Coord(int(m.group(1)))
        if self.algebra.symbol_index(name) is not None:
            return Unit(name)
        raise UnknownSymbol(f"{name!r} is not defined on {self.algebra.name}")


def parse(text: str, algebra: AlgebraDescriptor) -> Expr:
    return _Parser(text, algebra).parse()


# ---------------------------------------------------------------------------
# printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def pretty(e: Expr) -> str:
    """Canonical text; ``parse(pretty(e)) == e``."""
    return _pp(e)


def _num_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _is_atom(e: Expr) -> bool:
    return isinstance(e, (Num, Unit, Coord, Var, Apply))


def _pp(e: Expr) -> str:
    if isinstance(e, Num):
        return _num_text(e.value)
    if isinstance(e, Unit):
        return e.label
    if isinstance(e, Coord):
        return f"x{e.index}"
    if isinstance(e, Var):
        return WHOLE_VARIABLE
    if isinstance(e, Apply):
        return f"{e.func}({_pp(e.arg)})"
    if isinstance(e, Pow):
        bare = _is_atom(e.base) and not (isinstance(e.base, Num) and e.base.value.denominator != 1)
        base = _pp(e.base) if bare else f"({_pp(e.base)})"
        return f"{base}^{e.exponent}"
    if isinstance(e, Neg):
        inner = _pp(e.operand)
        if isinstance(e.operand, BinOp):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        left = _pp(e.left)
        if isinstance(e.left, BinOp) and _PREC[e.left.op] < p:
            left = f"({left})"
        right = _pp(e.right)
        if isinstance(e.right, BinOp) and _PREC[e.right.op] <= p:
            right = f"({right})"
        return f"{left} {e.op} {right}"
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# evaluation


def _scalar_element(point: Element, value) -> Element:
    alg = point.algebra
    mode = point.mode
    zero = Fraction(0) if mode == "rational" else 0.0
    coeffs = [zero] * alg.dim
    coeffs[alg.unit_index] = value
    return Element(alg, tuple(coeffs), mode)


def _constant(point: Element, value: Fraction) -> Element:
    mode = point.mode
    v = value if mode == "rational" else float(value)
    return _scalar_element(point, v)


def smallest_singular_value(b: Element) -> float:
    return float(np.linalg.svd(np.array(left_matrix(b), dtype=float), compute_uv=False)[-1])


def evaluate(e: Expr, point: Element, guard: float | None = None) -> Element:
    """Evaluate ``e`` at ``point``; jet points give jet results.

    ``guard`` rejects divisions whose divisor has smallest singular value of
    its multiplication matrix below the guard (raises ``NearSingular``).
    """
    return _Evaluator(point, guard).visit(e)


class _Evaluator:
    def __init__(self, point: Element, guard: float | None):
        self.point = point
        self.guard = guard
        self.mode = point.mode
        self.const_mode = "rational" if point.mode == "rational" else "float"

    def visit(self, e: Expr) -> Element:
        point = self.point
        if isinstance(e, Num):
            return _constant(point, e.value)
        if isinstance(e, Unit):
            return point.algebra.basis(point.algebra.symbol_index(e.label), self.const_mode)
        if isinstance(e, Coord):
            return _scalar_element(point, point.coeffs[e.index])
        if isinstance(e, Var):
            return point
        if isinstance(e, Neg):
            return -self.visit(e.operand)
        if isinstance(e, BinOp):
            a = self.visit(e.left)
            b = self.visit(e.right)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            return a * self.invert(b)
        if isinstance(e, Pow):
            base = self.visit(e.base)
            if e.exponent < 0:
                base = self.invert(base)
            result = None
            for _ in range(abs(e.exponent)):
                result = base if result is None else result * base
            return result if result is not None else _constant(point, Fraction(1))
        if isinstance(e, Apply):
            from . import special

            arg = self.visit(e.arg)
            if self.mode == "rational":
                raise DomainError(f"{e.func} is transcendental; evaluate in float mode")
            if e.func in ("C", "S") and arg.algebra.name not in C_S_ALGEBRAS:
                raise DomainError(f"{e.func} needs a double-complex family algebra")
            return special.apply_function(e.func, arg)
        raise TypeError(f"not an expression node: {e!r}")

    def invert(self, b: Element) -> Element:
        if self.guard is not None and smallest_singular_value(b) < self.guard:
            raise NearSingular(f"divisor within {self.guard} of the singular set")
        return inverse(b)


def compile_expr(text: str, algebra: AlgebraDescriptor) -> Callable[[Element], Element]:
    tree = parse(text, algebra)
    return lambda point: evaluate(tree, point)
