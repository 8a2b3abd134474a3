"""Expression syntax for elements of a tensor power.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT ('/' INT)?                  scalar
            | NAME '_' INT                    positional class a_i
            | '[' slot (',' slot)* ']'        elementary tensor
            | slot (SEP slot)+                elementary tensor, printed form
            | '(' expr ')'
            | '-' factor
    slot   := '1' | NAME ('^' INT)? (NAME ('^' INT)?)*
    SEP    := '(x)' | '⊗'

A lone slot with no separator is accepted only when the arity is 1. Names
inside one slot are separated by whitespace, so ``a b`` is the product of a
and b while ``ab`` is a single generator named ``ab``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Union

from ..algebra import Algebra, Element, FactorMonomial, TensorWord
from ..errors import GradedTensorError, IdealError
from ..products import embed, mul
from ..scalars import QQ, Field, parse_field


class ParseError(GradedTensorError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class ContextSpec:
    """Arity, field and declared generators, e.g. ``n=4;field=f2;gens=a:1,b:2``."""

    arity: int
    field: Field = QQ
    generators: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be at least 1, got {self.arity}")

    @classmethod
    def parse(cls, text: str) -> ContextSpec:
        arity = None
        fld = QQ
        gens: dict[str, int] = {}
        for part in filter(None, (p.strip() for p in text.split(";"))):
            key, sep, value = part.partition("=")
            if not sep:
                raise ValueError(f"context entry {part!r} is not key=value")
            key = key.strip().lower()
            value = value.strip()
            if key in ("n", "arity"):
                try:
                    arity = int(value)
                except ValueError:
                    raise ValueError(f"arity must be an integer, got {value!r}") from None
            elif key == "field":
                fld = parse_field(value)
            elif key in ("gens", "generators"):
                for decl in filter(None, (d.strip() for d in value.split(","))):
                    name, colon, deg = decl.partition(":")
                    name = name.strip()
                    if not colon:
                        raise ValueError(f"generator declaration {decl!r} is not name:degree")
                    if name in gens:
                        raise ValueError(f"generator {name!r} declared twice")
                    try:
                        gens[name] = int(deg)
                    except ValueError:
                        raise ValueError(f"degree of {name!r} must be an integer, got {deg!r}") from None
            else:
                raise ValueError(f"unknown context key {key!r}")
        if arity is None:
            raise ValueError("context must give the arity n")
        return cls(arity, fld, gens)

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.generators, self.field)

    def __str__(self):
        gens = ",".join(f"{k}:{v}" for k, v in self.generators.items())
        return f"n={self.arity};field={self.field};gens={gens}"


# AST nodes

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Positional:
    name: str
    index: int


@dataclass(frozen=True)
class TensorLiteral:
    slots: tuple  # per slot: tuple of (name, exponent)


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Paren:
    inner: "Node"


Node = Union[Num, Positional, TensorLiteral, BinOp, Neg, Paren]


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<sep>\(x\)|⊗)|(?P<int>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*/^_(),\[\]])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'sep', 'op', 'eof'
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: ContextSpec):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ctx = ctx

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def is_op(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect_op(self, text: str) -> Token:
        if not self.is_op(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        return int(self.advance().text)

    def parse(self) -> Node:
        if self.tok.kind == "eof":
            self.error("empty expression")
        node = self.expr()
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.is_op("*"):
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        tok = self.tok
        if tok.kind == "int":
            if tok.text == "1" and self.peek().kind == "sep":
                return self.chain()
            value = Fraction(int(self.advance().text))
            if self.is_op("/"):
                slash = self.advance()
                den = self.expect_int()
                if den == 0:
                    self.error("division by zero", slash)
                value /= den
            return Num(value)
        if tok.kind == "name":
            if self.peek().kind == "op" and self.peek().text == "_":
                return self.positional()
            return self.chain()
        if self.is_op("["):
            return self.bracket()
        if self.is_op("("):
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return Paren(inner)
        if self.is_op("-"):
            self.advance()
            return Neg(self.factor())
        if tok.kind == "eof":
            self.error("unexpected end of input")
        self.error(f"unexpected {tok.text!r}")

    def positional(self) -> Node:
        name_tok = self.advance()
        self.check_name(name_tok)
        self.expect_op("_")
        idx_tok = self.tok
        idx = self.expect_int()
        if not 1 <= idx <= self.ctx.arity:
            self.error(f"subscript {idx} out of range 1..{self.ctx.arity}", idx_tok)
        return Positional(name_tok.text, idx)

    def slot(self) -> tuple:
        if self.tok.kind == "int":
            if self.tok.text != "1":
                self.error(f"a tensor slot is 1 or a monomial, found {self.tok.text!r}")
            self.advance()
            return ()
        if self.tok.kind != "name":
            self.error(f"expected a tensor slot, found {self.tok.text or 'end of input'!r}")
        factors = []
        while self.tok.kind == "name":
            name_tok = self.advance()
            self.check_name(name_tok)
            exp = 1
            if self.is_op("^"):
                self.advance()
                exp_tok = self.tok
                exp = self.expect_int()
                if exp < 1:
                    self.error("exponents must be positive", exp_tok)
            factors.append((name_tok.text, exp))
        return tuple(factors)

    def chain(self) -> Node:
        start = self.tok
        slots = [self.slot()]
        while self.tok.kind == "sep":
            self.advance()
            slots.append(self.slot())
        if len(slots) == 1 and self.ctx.arity != 1:
            self.error(
                f"bare monomial needs a subscript or {self.ctx.arity} tensor slots", start
            )
        return self.literal(slots, start)

    def bracket(self) -> Node:
        start = self.expect_op("[")
        slots = [self.slot()]
        while self.is_op(","):
            self.advance()
            slots.append(self.slot())
        self.expect_op("]")
        return self.literal(slots, start)

    def literal(self, slots, start: Token) -> Node:
        if len(slots) != self.ctx.arity:
            self.error(f"tensor literal has {len(slots)} slots, expected {self.ctx.arity}", start)
        return TensorLiteral(tuple(slots))

    def check_name(self, tok: Token):
        if tok.text not in self.ctx.generators:
            self.error(f"undeclared generator {tok.text!r}", tok)


def parse(text: str, ctx: ContextSpec) -> Node:
    return _Parser(text, ctx).parse()


def evaluate(node: Node, ctx: ContextSpec) -> Element:
    alg = ctx.algebra
    n, fld = ctx.arity, ctx.field

    def ev(node) -> Element:
        if isinstance(node, Num):
            return Element.unit(n, fld) * fld(node.value)
        if isinstance(node, Positional):
            return embed(alg.gen(node.name), node.index, n, fld)
        if isinstance(node, TensorLiteral):
            slots = [[name for name, e in slot for _ in range(e)] for slot in node.slots]
            return alg.word_element(*slots)
        if isinstance(node, Paren):
            return ev(node.inner)
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, BinOp):
            left, right = ev(node.left), ev(node.right)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            return mul(left, right)
        raise TypeError(f"not an expression node: {node!r}")

    return ev(node)


def parse_element(text: str, ctx: ContextSpec) -> Element:
    return evaluate(parse(text, ctx), ctx)


def parse_word(text: str, ctx: ContextSpec) -> TensorWord:
    """Parse a single monomial tensor (tensor literal or positional class) as a formal word.

    No signs are taken and odd squares are kept, so ``[a^2,1]`` names the
    same ideal generator in every characteristic.
    """
    node = parse(text, ctx)
    while isinstance(node, Paren):
        node = node.inner
    alg = ctx.algebra
    if isinstance(node, Positional):
        slots = [()] * ctx.arity
        slots[node.index - 1] = ((node.name, 1),)
    elif isinstance(node, TensorLiteral):
        slots = node.slots
    else:
        raise IdealError(f"ideal generators must be monomial tensors, got {text!r}")
    monos = []
    for slot in slots:
        exps: dict[str, int] = {}
        for name, e in slot:
            exps[name] = exps.get(name, 0) + e
        monos.append(FactorMonomial(tuple((alg.gen(k), exps[k]) for k in sorted(exps))))
    return TensorWord(tuple(monos))
