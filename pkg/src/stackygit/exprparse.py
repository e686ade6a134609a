"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := ('-')* factor ('*' factor)*
    factor := atom ('^' nonneg-integer)?
    atom   := identifier | integer | 'zeta' '(' integer ')' | '(' expr ')'

The identifiers ``i``, ``sqrt2``, ``sqrt5`` and ``sqrtm3`` are reserved
constants (zeta_4, zeta_8 + zeta_8^7, 1 + 2 zeta_5 + 2 zeta_5^4,
1 + 2 zeta_3); every other identifier is a variable, resolved at lowering
time against a caller-supplied variable list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import cyclotomic
from .cyclotomic import as_cyclotomic, zeta
from .errors import ParseError, UnknownIdentifierError
from .polynomials import BinaryForm, MultiPoly


class Node:
    __slots__ = ()


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class Zeta(Node):
    order: int


@dataclass(frozen=True)
class Const(Node):
    name: str  # one of the sugar constants


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


SUGAR = {
    "i": cyclotomic.imag_unit,
    "sqrt2": cyclotomic.sqrt2,
    "sqrt5": cyclotomic.sqrt5,
    "sqrtm3": cyclotomic.sqrt_minus3,
}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        number, ident, op = m.groups()
        if number is not None:
            tokens.append(("num", int(number), m.start(1)))
        elif ident is not None:
            tokens.append(("ident", ident, m.start(2)))
        else:
            tokens.append((op, op, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.term())
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("num")
            node = Pow(node, tok[1])
        return node

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "num":
            return Num(value)
        if kind == "ident":
            if value == "zeta":
                self.expect("(")
                m = self.expect("num")[1]
                self.expect(")")
                return Zeta(m)
            if value in SUGAR:
                return Const(value)
            return Var(value)
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_poly(text: str) -> Node:
    """Parse an expression into an AST; raises ParseError with a position."""
    if not text.strip():
        raise ParseError("empty expression", 0)
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    end = parser.peek()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[1]!r}", end[2])
    return node


# -- printing -----------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Neg: 2, Mul: 3, Pow: 4}


def _prec(node):
    return _PREC.get(type(node), 5)


def print_expr(node: Node) -> str:
    """Render an AST so that parse_poly(print_expr(t)) == t."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Zeta):
        return f"zeta({node.order})"
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Add):
        right = print_expr(node.right)
        if _prec(node.right) <= 1:
            right = f"({right})"
        return f"{print_expr(node.left)} + {right}"
    if isinstance(node, Sub):
        right = print_expr(node.right)
        if _prec(node.right) <= 1:
            right = f"({right})"
        return f"{print_expr(node.left)} - {right}"
    if isinstance(node, Neg):
        arg = print_expr(node.arg)
        # '-' binds looser than '*': parenthesize products and sums
        if _prec(node.arg) <= 3 and not isinstance(node.arg, Neg):
            return f"-({arg})" if _prec(node.arg) <= 1 else f"-{arg}"
        if isinstance(node.arg, Neg):
            return f"-({arg})"
        return f"-{arg}"
    if isinstance(node, Mul):
        left = print_expr(node.left)
        if _prec(node.left) < 3:
            left = f"({left})"
        right = print_expr(node.right)
        if _prec(node.right) <= 3:
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(node, Pow):
        base = print_expr(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    raise TypeError(f"not an AST node: {node!r}")


# -- lowering -----------------------------------------------------------------

def collect_variables(node: Node):
    """Variable names appearing in the AST, in first-occurrence order."""
    out = []

    def walk(n):
        if isinstance(n, Var):
            if n.name not in out:
                out.append(n.name)
        elif isinstance(n, (Add, Sub, Mul)):
            walk(n.left)
            walk(n.right)
        elif isinstance(n, Neg):
            walk(n.arg)
        elif isinstance(n, Pow):
            walk(n.base)

    walk(node)
    return tuple(out)


def lower_to_multipoly(node: Node, variables) -> MultiPoly:
    """Evaluate the AST in the polynomial ring on ``variables``.

    Unknown identifiers (variables outside the list) raise
    UnknownIdentifierError.
    """
    variables = tuple(variables)

    def walk(n):
        if isinstance(n, Num):
            return MultiPoly.constant(variables, n.value)
        if isinstance(n, Zeta):
            return MultiPoly.constant(variables, zeta(n.order))
        if isinstance(n, Const):
            return MultiPoly.constant(variables, SUGAR[n.name]())
        if isinstance(n, Var):
            if n.name not in variables:
                raise UnknownIdentifierError(
                    f"unknown identifier {n.name!r} (variables: {', '.join(variables) or 'none'})")
            return MultiPoly.variable(variables, n.name)
        if isinstance(n, Add):
            return walk(n.left) + walk(n.right)
        if isinstance(n, Sub):
            return walk(n.left) - walk(n.right)
        if isinstance(n, Mul):
            return walk(n.left) * walk(n.right)
        if isinstance(n, Neg):
            return -walk(n.arg)
        if isinstance(n, Pow):
            return walk(n.base) ** n.exponent
        raise TypeError(f"not an AST node: {n!r}")

    return walk(node)


def form(text: str) -> BinaryForm:
    """Parse a binary form in the variables x, y.

    The result is homogeneous with the formal degree read off the terms;
    inhomogeneous input raises UnknownIdentifierError or ValueError.
    """
    node = parse_poly(text)
    names = collect_variables(node)
    if not set(names) <= {"x", "y"}:
        raise UnknownIdentifierError(
            f"a binary form uses only x and y, found {names}")
    poly = lower_to_multipoly(node, ("x", "y"))
    if poly.is_zero():
        return BinaryForm([0])
    degree = None
    for (ex, ey) in poly.terms:
        d = ex + ey
        if degree is None:
            degree = d
        elif d != degree:
            raise ValueError(f"{text!r} is not homogeneous")
    coeffs = [0] * (degree + 1)
    for (ex, ey), c in poly.terms.items():
        coeffs[ey] = c
    return BinaryForm(coeffs)
