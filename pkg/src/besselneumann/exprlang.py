"""A small expression language for scalar functions of one variable ``s``.

Grammar (precedence low to high)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | primary ('^' uint)?
    primary := number | identifier | identifier '(' expr ')' | '(' expr ')'

``s`` is the variable; ``exp``, ``sin``, ``cos``, ``log``, ``sqrt`` are the
known functions; any other identifier is a free parameter bound at
evaluation time.  Unary minus binds tighter than ``*`` but looser than
``^``.  The same AST evaluates both as a Taylor jet at the origin and
pointwise.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import BesselNeumannError, DomainError, ParseError
from .jets import (TaylorJet, constant_jet, jet_add, jet_elementary, jet_mul,
                   jet_pow, jet_scale, jet_sub, variable_jet)

__all__ = ["ExprAst", "parse", "to_text", "eval_jet", "eval_point",
           "free_parameters", "KNOWN_FUNCTIONS"]

KNOWN_FUNCTIONS = ("exp", "sin", "cos", "log", "sqrt")


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*', '/'
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    argument: "ExprAst"


ExprAst = Union[Const, Param, Var, BinOp, Neg, Pow, Call]

_TOKEN_RE = re.compile(r"""
    (?P<number>\d+\.\d*|\.\d+|\d+)(?P<expo>[eE][+-]?\d+)?
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
  | (?P<ws>\s+)
""", re.VERBOSE)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            if m.group("ws") is None:
                if m.group("number") is not None:
                    kind = "number"
                elif m.group("ident") is not None:
                    kind = "ident"
                else:
                    kind = "op"
                self.tokens.append((kind, m.group(0), pos))
            pos = m.end()
        self.tokens.append(("eof", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        self.next()

    def parse(self) -> ExprAst:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.next()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.next()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> ExprAst:
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return Neg(self.factor())
        node = self.primary()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, pos = self.peek()
            if kind != "number" or not re.fullmatch(r"\d+", val):
                raise ParseError("exponent must be a nonnegative integer", pos)
            self.next()
            node = Pow(node, int(val))
        return node

    def primary(self) -> ExprAst:
        kind, val, pos = self.next()
        if kind == "number":
            return Const(float(val))
        if kind == "ident":
            nkind, nval, _ = self.peek()
            if nkind == "op" and nval == "(":
                if val not in KNOWN_FUNCTIONS:
                    raise ParseError(f"unknown function {val!r}", pos)
                self.next()
                arg = self.expr()
                self.expect_op(")")
                return Call(val, arg)
            if val in KNOWN_FUNCTIONS:
                raise ParseError(f"function name {val!r} used without arguments", pos)
            if val == "s":
                return Var()
            return Param(val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"expected a number, identifier or '('", pos)


def parse(text: str) -> ExprAst:
    """Parse expression text into an AST; raises :class:`ParseError` with
    the offending character position on malformed input."""
    return _Parser(text).parse()


def to_text(ast: ExprAst) -> str:
    """Pretty-print an AST to text that parses back to an equivalent AST."""
    if isinstance(ast, Const):
        return repr(ast.value)
    if isinstance(ast, Param):
        return ast.name
    if isinstance(ast, Var):
        return "s"
    if isinstance(ast, Neg):
        return f"(-{to_text(ast.operand)})"
    if isinstance(ast, Pow):
        return f"({to_text(ast.base)})^{ast.exponent}"
    if isinstance(ast, Call):
        return f"{ast.func}({to_text(ast.argument)})"
    return f"({to_text(ast.left)} {ast.op} {to_text(ast.right)})"


def free_parameters(ast: ExprAst) -> set[str]:
    if isinstance(ast, Param):
        return {ast.name}
    if isinstance(ast, BinOp):
        return free_parameters(ast.left) | free_parameters(ast.right)
    if isinstance(ast, Neg):
        return free_parameters(ast.operand)
    if isinstance(ast, Pow):
        return free_parameters(ast.base)
    if isinstance(ast, Call):
        return free_parameters(ast.argument)
    return set()


def _lookup(params: Mapping[str, float], name: str) -> float:
    try:
        return float(params[name])
    except KeyError:
        raise BesselNeumannError(f"unbound parameter {name!r}") from None


def eval_jet(ast: ExprAst, order: int, params: Mapping[str, float] | None = None) -> TaylorJet:
    """Taylor jet of the expression at the origin, to the given order."""
    if order < 1:
        raise BesselNeumannError(f"jet order must be >= 1, got {order}")
    params = params or {}

    def rec(node: ExprAst) -> TaylorJet:
        if isinstance(node, Const):
            return constant_jet(node.value, order)
        if isinstance(node, Param):
            return constant_jet(_lookup(params, node.name), order)
        if isinstance(node, Var):
            return variable_jet(order)
        if isinstance(node, Neg):
            return jet_scale(rec(node.operand), -1.0)
        if isinstance(node, Pow):
            return jet_pow(rec(node.base), node.exponent)
        if isinstance(node, Call):
            return jet_elementary(node.func, rec(node.argument))
        a, b = rec(node.left), rec(node.right)
        if node.op == "+":
            return jet_add(a, b)
        if node.op == "-":
            return jet_sub(a, b)
        if node.op == "*":
            return jet_mul(a, b)
        return jet_mul(a, jet_elementary("recip", b))

    return rec(ast)


_POINT_FUNCS = {"exp": math.exp, "sin": math.sin, "cos": math.cos}


def eval_point(ast: ExprAst, s: float, params: Mapping[str, float] | None = None) -> float:
    """Plain pointwise evaluation; independent of the jet machinery."""
    params = params or {}

    def rec(node: ExprAst) -> float:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Param):
            return _lookup(params, node.name)
        if isinstance(node, Var):
            return float(s)
        if isinstance(node, Neg):
            return -rec(node.operand)
        if isinstance(node, Pow):
            return rec(node.base) ** node.exponent
        if isinstance(node, Call):
            x = rec(node.argument)
            if node.func == "log":
                if x <= 0:
                    raise DomainError(f"log of nonpositive value {x}")
                return math.log(x)
            if node.func == "sqrt":
                if x < 0:
                    raise DomainError(f"sqrt of negative value {x}")
                return math.sqrt(x)
            return _POINT_FUNCS[node.func](x)
        a, b = rec(node.left), rec(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0:
            raise DomainError("division by zero")
        return a / b

    return rec(ast)
