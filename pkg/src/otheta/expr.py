"""Text syntax for elements.

``S(u ; v)`` is s_u s_v^*, where u and v are space-separated letters
``e<i>`` / ``f<j>`` (either side may be empty).  Elements are sums and
products of generators, rational numbers ``p/q``, decimals, the imaginary
unit ``i`` and the identity ``I``; products of generators are evaluated in
O_theta.  Example: ``1/2 * S(e1 f2 ; f1) + S(; e2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GenPair, identity, mul, simplify
from .graph import Letter, ThetaSpec, Word, normalize
from .scalars import QI, format_rational

__all__ = ["ParseError", "parse_element", "format_element", "format_word", "format_scalar"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.column = col


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<letter>[ef]\d+)
  | (?P<gen>S(?=\s*\())
  | (?P<imag>i)
  | (?P<ident>I)
  | (?P<op>[-+*/();])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = mt.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind if kind != "op" else mt.group(), mt.group(), pos))
        pos = mt.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, theta: ThetaSpec):
        self.text = text
        self.theta = theta
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> _Tok:
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise ParseError(f"expected {want}, got {got}", self.text, tok.pos)
        self.i += 1
        return tok

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.peek().pos)

    # grammar ----------------------------------------------------------------

    def expr(self):
        if self.peek().kind == "+":
            self.take()
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    _STARTS = ("num", "imag", "ident", "gen", "(")

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.take()
                value = _mul(value, self.factor())
            elif kind in self._STARTS:
                value = _mul(value, self.factor())
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            return -self.factor()
        if tok.kind == "num":
            self.take()
            q = Fraction(tok.text)
            if self.peek().kind == "/":
                self.take()
                den = self.take("num")
                d = Fraction(den.text)
                if d == 0:
                    raise ParseError("division by zero", self.text, den.pos)
                q = q / d
            return QI(q)
        if tok.kind == "imag":
            self.take()
            return QI(0, 1)
        if tok.kind == "ident":
            self.take()
            return identity(self.theta)
        if tok.kind == "gen":
            return self.generator()
        if tok.kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        got = "end of input" if tok.kind == "eof" else repr(tok.text)
        self.error(f"expected a number, i, I, S(...) or '(', got {got}")

    def generator(self):
        self.take("gen")
        self.take("(")
        u = self.letters()
        self.take(";")
        v = self.letters()
        self.take(")")
        return Element._trusted(self.theta, {GenPair(u, v): QI(1)}, True)

    def letters(self) -> Word:
        out = []
        while self.peek().kind == "letter":
            tok = self.take()
            letter = Letter(tok.text[0], int(tok.text[1:]))
            bound = self.theta.m if letter.color == "e" else self.theta.n
            if not 1 <= letter.index <= bound:
                raise ParseError(f"letter {tok.text} out of range (1..{bound})", self.text, tok.pos)
            out.append(letter)
        return normalize(out, self.theta)


def _mul(x, y):
    if isinstance(x, Element) and isinstance(y, Element):
        return mul(x, y)
    if isinstance(x, Element):
        return x.scale(y)
    if isinstance(y, Element):
        return y.scale(x)
    return x * y


def parse_element(text: str, theta: ThetaSpec) -> Element:
    p = _Parser(text, theta)
    if p.peek().kind == "eof":
        p.error("empty expression")
    value = p.expr()
    p.take("eof")
    if isinstance(value, QI):
        return identity(theta).scale(value)
    return value


# formatting ---------------------------------------------------------------

def format_word(w: Word) -> str:
    return " ".join([f"e{i}" for i in w.blues] + [f"f{j}" for j in w.reds])


def _float_str(x: float) -> str:
    return repr(float(x))


def format_scalar(c) -> str:
    if isinstance(c, QI):
        return str(c)
    c = complex(c)
    if c.imag == 0:
        return _float_str(c.real)
    if c.real == 0:
        return f"{_float_str(c.imag)}*i"
    sign = "-" if c.imag < 0 else "+"
    return f"({_float_str(c.real)} {sign} {_float_str(abs(c.imag))}*i)"


def _split_sign(c):
    """Return (negative, magnitude-string or None for unit)."""
    if isinstance(c, QI):
        if not c.im:
            neg = c.re < 0
            mag = abs(c.re)
            return neg, None if mag == 1 else format_rational(mag)
        if not c.re:
            neg = c.im < 0
            mag = abs(c.im)
            return neg, "i" if mag == 1 else f"{format_rational(mag)}*i"
        return False, str(c)
    c = complex(c)
    if c.imag == 0:
        neg = c.real < 0
        mag = abs(c.real)
        return neg, None if mag == 1 else _float_str(mag)
    return False, format_scalar(c)


def format_element(X: Element, simplify: bool = True) -> str:
    """Render in the grammar accepted by :func:`parse_element`."""
    if simplify:
        X = _simplify(X)
    if X.is_zero():
        return "0"
    parts = []
    for n, ((u, v), c) in enumerate(X.terms.items()):
        neg, mag = _split_sign(c)
        gen = f"S({format_word(u)};{format_word(v)})"
        body = gen if mag is None else f"{mag} * {gen}"
        if n == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts)


_simplify = simplify
