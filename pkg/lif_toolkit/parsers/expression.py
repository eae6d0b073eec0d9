"""
parsers/expression.py
Lexer, AST and recursive-descent parser for the series expression language.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'? atom ('^' uint)?
    atom   := rational | 'x' | name | name '(' expr ')' | '(' expr ')'

A rational "p/q" is one literal only when written without spaces; "1 / 2"
is a division. Exponents are non-negative integer literals.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from lif_toolkit.algebra.rational import format_rational
from lif_toolkit.errors import ExpressionSyntaxError, PreconditionViolated, UnknownFunction

Span = Tuple[int, int]

BUILTINS = ("exp", "log1p", "inverse", "xoverf")

_TOKEN_RE = re.compile(
    r'(?P<ws>\s+)'
    r'|(?P<number>\d+(?:/\d+)?)'
    r'|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
    r'|(?P<op>[-+*/^()])'
)


@dataclass(frozen=True)
class Token:
    kind: str      # "number" | "name" | "op" | "end"
    text: str
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(source):
        if not source[pos].isascii():
            raise ExpressionSyntaxError(f"unexpected character {source[pos]!r}", len(source[:pos].encode()))
        m = _TOKEN_RE.match(source, pos)
        if not m:
            raise ExpressionSyntaxError(f"unexpected character {source[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


# ── AST ───────────────────────────────────────────────────────────────────────
# Spans are ignored by equality so a reparsed tree compares equal to the original.

@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class Literal(Node):
    value: Fraction
    span: Span = field(default=(0, 0), compare=False)

    def __post_init__(self):
        if self.value < 0:
            raise PreconditionViolated(f"literals are non-negative, write -{format_rational(-self.value)} as Neg")


@dataclass(frozen=True)
class Var(Node):
    name: str = "x"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinaryOp(Node):
    left: Node
    right: Node
    span: Span = field(default=(0, 0), compare=False)

    symbol = "?"


@dataclass(frozen=True)
class Add(BinaryOp):
    symbol = "+"


@dataclass(frozen=True)
class Sub(BinaryOp):
    symbol = "-"


@dataclass(frozen=True)
class Mul(BinaryOp):
    symbol = "*"


@dataclass(frozen=True)
class Div(BinaryOp):
    symbol = "/"


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int
    span: Span = field(default=(0, 0), compare=False)

    def __post_init__(self):
        if self.exponent < 0:
            raise PreconditionViolated(f"exponents are non-negative, got {self.exponent}")


@dataclass(frozen=True)
class Call(Node):
    name: str
    arg: Node
    span: Span = field(default=(0, 0), compare=False)


ExprAst = Node

_ADDITIVE = {"+": Add, "-": Sub}
_MULTIPLICATIVE = {"*": Mul, "/": Div}
_ATOM_START = ("number", "x", "name", "(")


# ── Parser ────────────────────────────────────────────────────────────────────

class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _fail(self, expected) -> ExpressionSyntaxError:
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ExpressionSyntaxError(f"unexpected {found}", tok.start, tuple(expected))

    def _is_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def _expect_op(self, op: str) -> Token:
        if not self._is_op(op):
            raise self._fail([op])
        return self._advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise self._fail(["+", "-", "*", "/", "end of input"])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self._is_op("+", "-"):
            op = self._advance()
            right = self.term()
            node = _ADDITIVE[op.text](node, right, span=(node.span[0], right.span[1]))
        return node

    def term(self) -> Node:
        node = self.factor()
        while self._is_op("*", "/"):
            op = self._advance()
            right = self.factor()
            node = _MULTIPLICATIVE[op.text](node, right, span=(node.span[0], right.span[1]))
        return node

    def factor(self) -> Node:
        minus: Optional[Token] = self._advance() if self._is_op("-") else None
        node = self.atom()
        if self._is_op("^"):
            self._advance()
            tok = self.tok
            if tok.kind != "number" or "/" in tok.text:
                raise self._fail(["non-negative integer exponent"])
            self._advance()
            node = Pow(node, int(tok.text), span=(node.span[0], tok.end))
        if minus is not None:
            node = Neg(node, span=(minus.start, node.span[1]))
        return node

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == "number":
            self._advance()
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ExpressionSyntaxError("zero denominator in literal", tok.start, ("non-zero denominator",))
            return Literal(Fraction(int(num), int(den) if den else 1), span=(tok.start, tok.end))
        if tok.kind == "name":
            self._advance()
            if self._is_op("("):
                if tok.text not in BUILTINS:
                    raise UnknownFunction(
                        f"{tok.text!r} is not a builtin (have {', '.join(BUILTINS)})",
                        span=(tok.start, tok.end),
                    )
                self._advance()
                arg = self.expr()
                close = self._expect_op(")")
                return Call(tok.text, arg, span=(tok.start, close.end))
            if tok.text in BUILTINS:
                raise self._fail(["("])
            return Var(tok.text, span=(tok.start, tok.end))
        if self._is_op("("):
            self._advance()
            node = self.expr()
            self._expect_op(")")
            return node
        raise self._fail(_ATOM_START)


def parse(source: str) -> Node:
    return _Parser(source).parse()


# ── Pretty printing ───────────────────────────────────────────────────────────

_PRECEDENCE = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Pow: 4}


def _prec(node: Node) -> int:
    return _PRECEDENCE.get(type(node), 5)


def _wrap(node: Node, parenthesize: bool) -> str:
    text = to_source(node)
    return f"({text})" if parenthesize else text


def to_source(node: Node) -> str:
    """Render an AST as source text that parses back to an equal AST."""
    if isinstance(node, Literal):
        return format_rational(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.name}({to_source(node.arg)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _prec(node.operand) < _PRECEDENCE[Pow])
    if isinstance(node, Pow):
        base = node.base
        atomic = _prec(base) == 5 and not (isinstance(base, Literal) and base.value.denominator != 1)
        return f"{_wrap(base, not atomic)}^{node.exponent}"
    if isinstance(node, BinaryOp):
        prec = _prec(node)
        left = _wrap(node.left, _prec(node.left) < prec)
        right = _wrap(node.right, _prec(node.right) <= prec)
        return f"{left} {node.symbol} {right}"
    raise TypeError(f"not an expression node: {node!r}")
