"""Expression language for entering certificates and term ratios.

Grammar (whitespace ignored, byte offsets reported on errors):

    expr    :=  term (('+' | '-') term)*
    term    :=  factor (('*' | '/') factor)*
    factor  :=  '-' factor | power
    power   :=  atom ('^' INT)*
    atom    :=  INT | NAME | '(' expr ')'

    INT     :=  [0-9]+
    NAME    :=  [A-Za-z_][A-Za-z0-9_]*

Precedence is therefore ^ above unary minus above * / above + -, all
left-associative; exponents must be non-negative integer literals (they are
stored as plain ints on the Pow node).  ``render`` emits a string that
parses back to a structurally equal tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import RatFunc

__all__ = [
    "Add", "Div", "Expr", "ExprSyntaxError", "IntLit", "Mul", "Neg", "Pow",
    "Sub", "Var", "eval_expr", "parse_expr", "render", "to_ratfunc",
]


class ExprSyntaxError(ValueError):
    """Parse failure; ``offset`` is the byte position of the first error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.reason = message


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[IntLit, Var, Neg, Add, Sub, Mul, Div, Pow]


# ---------------------------------------------------------------------------
# Tokenizer / parser
# ---------------------------------------------------------------------------

_OPS = set("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    size = len(text)
    while i < size:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < size and text[i].isdigit():
                i += 1
            tokens.append(("INT", int(text[start:i]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < size and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("NAME", text[start:i], start))
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unknown character {ch!r}", i)
    tokens.append(("END", None, size))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: str):
        kind, _, offset = self.peek()
        found = "end of input" if kind == "END" else f"{kind!r}"
        raise ExprSyntaxError(f"expected {expected}, found {found}", offset)

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self) -> Expr:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.factor())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        while self.peek()[0] == "^":
            self.advance()
            kind, value, _ = self.peek()
            if kind != "INT":
                self.fail("a non-negative integer exponent")
            self.advance()
            node = Pow(node, value)
        return node

    def atom(self) -> Expr:
        kind, value, _ = self.peek()
        if kind == "INT":
            self.advance()
            return IntLit(value)
        if kind == "NAME":
            self.advance()
            return Var(value)
        if kind == "(":
            self.advance()
            node = self.expr()
            if self.peek()[0] != ")":
                self.fail("')'")
            self.advance()
            return node
        self.fail("an integer, a variable or '('")


def parse_expr(text: str) -> Expr:
    """Parse the full string as one expression."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    if parser.peek()[0] != "END":
        parser.fail("end of input")
    return node


# ---------------------------------------------------------------------------
# Rendering (inverse of parse_expr up to structural equality)
# ---------------------------------------------------------------------------

_LEVEL_SUM, _LEVEL_PROD, _LEVEL_NEG, _LEVEL_POW, _LEVEL_ATOM = range(5)


def _render(e: Expr, context: int) -> str:
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        text, level = "-" + _render(e.operand, _LEVEL_NEG), _LEVEL_NEG
    elif isinstance(e, (Add, Sub)):
        op = "+" if isinstance(e, Add) else "-"
        text = _render(e.left, _LEVEL_SUM) + op + _render(e.right, _LEVEL_SUM + 1)
        level = _LEVEL_SUM
    elif isinstance(e, (Mul, Div)):
        op = "*" if isinstance(e, Mul) else "/"
        text = _render(e.left, _LEVEL_PROD) + op + _render(e.right, _LEVEL_PROD + 1)
        level = _LEVEL_PROD
    elif isinstance(e, Pow):
        text, level = _render(e.base, _LEVEL_ATOM) + f"^{e.exponent}", _LEVEL_POW
    else:
        raise TypeError(f"not an Expr node: {e!r}")
    if level < context:
        return f"({text})"
    return text


def render(e: Expr) -> str:
    return _render(e, _LEVEL_SUM)


# ---------------------------------------------------------------------------
# Conversion to canonical rational functions
# ---------------------------------------------------------------------------

def to_ratfunc(e: Expr) -> RatFunc:
    """Canonical rational function of an expression over the fixed variables."""
    if isinstance(e, IntLit):
        return RatFunc.const(e.value)
    if isinstance(e, Var):
        return RatFunc.var(e.name)
    if isinstance(e, Neg):
        return -to_ratfunc(e.operand)
    if isinstance(e, Add):
        return to_ratfunc(e.left) + to_ratfunc(e.right)
    if isinstance(e, Sub):
        return to_ratfunc(e.left) - to_ratfunc(e.right)
    if isinstance(e, Mul):
        return to_ratfunc(e.left) * to_ratfunc(e.right)
    if isinstance(e, Div):
        return to_ratfunc(e.left) / to_ratfunc(e.right)
    if isinstance(e, Pow):
        return to_ratfunc(e.base) ** e.exponent
    raise TypeError(f"not an Expr node: {e!r}")


def eval_expr(e: Expr, assign: dict[str, Fraction]) -> Fraction:
    """Evaluate through the canonical form (pole errors propagate)."""
    return to_ratfunc(e).evaluate(assign)
