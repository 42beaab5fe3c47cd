"""Recursive-descent parser for rational expressions in ``z`` over Q(i).

Grammar (``^`` binds tightest and is right associative, unary minus sits
between ``^`` and ``* /``)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" unary)?
    atom     := NUMBER | "i" | "z" | "(" expr ")"

Exponents must evaluate to integer constants; negative ones become
division.  Juxtaposition is not multiplication, so ``2i`` is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, ParseError
from .exact import GaussianRational, RationalFunction

# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Num:
    text: str  # digits with an optional decimal point, kept verbatim
    pos: int = 0

    def __eq__(self, o):
        return isinstance(o, Num) and self.text == o.text

    def __hash__(self):
        return hash(("num", self.text))


@dataclass(frozen=True)
class Imag:
    pos: int = 0

    def __eq__(self, o):
        return isinstance(o, Imag)

    def __hash__(self):
        return hash("i")


@dataclass(frozen=True)
class Var:
    pos: int = 0

    def __eq__(self, o):
        return isinstance(o, Var)

    def __hash__(self):
        return hash("z")


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = 0

    def __eq__(self, o):
        return isinstance(o, Neg) and self.operand == o.operand

    def __hash__(self):
        return hash(("neg", self.operand))


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0

    def __eq__(self, o):
        return isinstance(o, BinOp) and (self.op, self.left, self.right) == (o.op, o.left, o.right)

    def __hash__(self):
        return hash((self.op, self.left, self.right))


# ---------------------------------------------------------------- tokens

_OPS = set("+-*/^()")


def tokenize(text: str):
    toks = []
    k, n = 0, len(text)
    while k < n:
        ch = text[k]
        if ch.isspace():
            k += 1
        elif ch.isdigit() or (ch == "." and k + 1 < n and text[k + 1].isdigit()):
            start = k
            while k < n and text[k].isdigit():
                k += 1
            if k < n and text[k] == ".":
                k += 1
                while k < n and text[k].isdigit():
                    k += 1
            if k < n and (text[k].isalpha() or text[k] == "."):
                raise ParseError(
                    f"unexpected {text[k]!r} after number; write multiplication explicitly", k
                )
            toks.append(("num", text[start:k], start))
        elif ch in ("i", "z"):
            if k + 1 < n and (text[k + 1].isalnum() or text[k + 1] == "."):
                raise ParseError(f"unexpected {text[k + 1]!r} after {ch!r}", k + 1)
            toks.append((ch, ch, k))
            k += 1
        elif ch in _OPS:
            toks.append((ch, ch, k))
            k += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", k)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.k += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()
            node = BinOp(op[0], node, self.term(), op[2])
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            node = BinOp(op[0], node, self.unary(), op[2])
        return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            return Neg(self.unary(), tok[2])
        if tok[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            op = self.take()
            return BinOp("^", base, self.unary(), op[2])
        return base

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "num":
            self.take()
            return Num(tok[1], tok[2])
        if kind == "i":
            self.take()
            return Imag(tok[2])
        if kind == "z":
            self.take()
            return Var(tok[2])
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if kind == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", tok[2])


def parse_ast(text: str):
    return _Parser(text).parse()


# ---------------------------------------------------------------- printing

_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2}


def _level(node) -> int:
    if isinstance(node, BinOp):
        return 4 if node.op == "^" else _LEVEL[node.op]
    if isinstance(node, Neg):
        return 3
    return 5


def to_text(node, min_level: int = 0) -> str:
    """Print with the fewest parentheses that reparse to the same tree."""
    if isinstance(node, Num):
        s = node.text
    elif isinstance(node, Imag):
        s = "i"
    elif isinstance(node, Var):
        s = "z"
    elif isinstance(node, Neg):
        s = "-" + to_text(node.operand, 3)
    elif node.op == "^":
        s = to_text(node.left, 5) + "^" + to_text(node.right, 3)
    else:
        lv = _LEVEL[node.op]
        sep = f" {node.op} " if lv == 1 else node.op
        s = to_text(node.left, lv) + sep + to_text(node.right, lv + 1)
    if _level(node) < min_level:
        s = "(" + s + ")"
    return s


# ---------------------------------------------------------------- lowering


def _int_exponent(r: RationalFunction, pos: int) -> int:
    if not r.is_constant():
        raise ParseError("exponent must be a constant", pos)
    c = r.constant_value()
    if not c.im == 0 or c.re.denominator != 1:
        raise ParseError(f"exponent must be an integer, got {c}", pos)
    return int(c.re)


def lower(node) -> RationalFunction:
    """Evaluate an AST to its canonical rational function."""
    if isinstance(node, Num):
        return RationalFunction.const(GaussianRational(Fraction(node.text)))
    if isinstance(node, Imag):
        return RationalFunction.const(GaussianRational(0, 1))
    if isinstance(node, Var):
        return RationalFunction.z()
    if isinstance(node, Neg):
        return -lower(node.operand)
    a = lower(node.left)
    if node.op == "^":
        n = _int_exponent(lower(node.right), node.pos)
        if n < 0 and a.is_zero():
            raise DivisionByZero(f"zero raised to negative power (at position {node.pos})")
        return a**n
    b = lower(node.right)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if b.is_zero():
        raise DivisionByZero(f"division by the zero function (at position {node.pos})")
    return a / b


def parse_expression(text: str) -> RationalFunction:
    return lower(parse_ast(text))


def parse_scalar(text: str) -> GaussianRational:
    r = parse_expression(text)
    if not r.is_constant():
        raise ParseError("expected a constant", 0)
    return r.constant_value()


__all__ = [
    "Num",
    "Imag",
    "Var",
    "Neg",
    "BinOp",
    "tokenize",
    "parse_ast",
    "to_text",
    "lower",
    "parse_expression",
    "parse_scalar",
]
