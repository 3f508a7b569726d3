"""Text syntax for states.

    state    := ["-"] term (("+" | "-") term)*  |  "0"
    term     := [rational "*"] operand
    operand  := prefix* base
    prefix   := "L(" int ")"  |  "o(" state ")"
    base     := atom* "|0>"  |  "(" state ")"
    atom     := "h" index "(-" level ")"
    rational := int ["/" posint]

A whole expression may also be wrapped as "deg(...)".  Whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .fock import BosonAlgebra, Monomial, State
from .modes import virasoro, zero_mode


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Ket:
    factors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Scaled:
    coeff: Fraction
    body: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple["Node", ...]


@dataclass(frozen=True)
class Virasoro:
    n: int
    body: "Node"


@dataclass(frozen=True)
class ZeroMode:
    vector: "Node"
    body: "Node"


@dataclass(frozen=True)
class Degree:
    body: "Node"


@dataclass(frozen=True)
class Zero:
    pass


Node = Union[Ket, Scaled, Sum, Virasoro, ZeroMode, Degree, Zero]


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<vac>\|0>)
  | (?P<atom>h(?P<idx>\d+)\(\s*(?P<lvl>[+-]?\s*\d+)\s*\))
  | (?P<lop>L\(\s*(?P<ln>[+-]?\s*\d+)\s*\))
  | (?P<oopen>o\()
  | (?P<degopen>deg\()
  | (?P<int>\d+)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int
    groups: dict


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos] in "hL":
                example = "h1(-2)" if text[pos] == "h" else "L(-1)"
                raise ParseError(f"malformed {text[pos]} atom, expected something like {example}", pos, text)
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = next(k for k in ("ws", "vac", "atom", "lop", "oopen", "degopen", "int", "op") if m.group(k) is not None)
        if kind != "ws":
            toks.append(_Tok(kind, m.group(0), pos, m.groupdict()))
        pos = m.end()
    toks.append(_Tok("end", "", len(text), {}))
    return toks


class _Parser:
    def __init__(self, text: str, rank: Optional[int]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.rank = rank

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: Optional[_Tok] = None):
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[_Tok]:
        t = self.tok
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def expect(self, kind: str, text: Optional[str] = None) -> _Tok:
        t = self.accept(kind, text)
        if t is None:
            want = text or kind
            got = self.tok.text or "end of input"
            raise self.error(f"expected {want!r}, got {got!r}")
        return t

    # grammar ------------------------------------------------------------------

    def top(self) -> Node:
        if self.accept("degopen"):
            node: Node = Degree(self.state())
            self.expect("op", ")")
        else:
            node = self.state()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def state(self) -> Node:
        terms = []
        negate = bool(self.accept("op", "-"))
        t = self.term()
        terms.append(Scaled(Fraction(-1), t) if negate else t)
        while True:
            if self.accept("op", "+"):
                terms.append(self.term())
            elif self.accept("op", "-"):
                terms.append(Scaled(Fraction(-1), self.term()))
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def rational(self) -> Fraction:
        num_tok = self.expect("int")
        num = int(num_tok.text)
        if self.accept("op", "/"):
            den_tok = self.tok
            if den_tok.kind != "int":
                raise self.error("malformed rational: expected a denominator")
            self.i += 1
            den = int(den_tok.text)
            if den == 0:
                raise self.error("malformed rational: zero denominator", den_tok)
            return Fraction(num, den)
        return Fraction(num)

    def term(self) -> Node:
        if self.tok.kind == "int":
            start = self.tok
            coeff = self.rational()
            if self.accept("op", "*"):
                return Scaled(coeff, self.operand())
            if coeff == 0 and start.text == "0":
                return Zero()
            raise self.error("malformed term: a coefficient must be followed by '*'")
        return self.operand()

    def operand(self) -> Node:
        t = self.accept("lop")
        if t:
            return Virasoro(int(t.groups["ln"].replace(" ", "")), self.operand())
        if self.accept("oopen"):
            vec = self.state()
            self.expect("op", ")")
            return ZeroMode(vec, self.operand())
        if self.accept("op", "("):
            inner = self.state()
            self.expect("op", ")")
            return inner
        factors = []
        while self.tok.kind == "atom":
            t = self.tok
            idx = int(t.groups["idx"])
            lvl = -int(t.groups["lvl"].replace(" ", ""))
            if idx < 1:
                raise self.error("boson index must be at least 1", t)
            if self.rank is not None and idx > self.rank:
                raise self.error(f"boson index {idx} exceeds rank {self.rank}", t)
            if lvl <= 0:
                raise self.error(f"creation level must be at least 1, got h{idx}({-lvl})", t)
            factors.append((idx, lvl))
            self.i += 1
        if not self.accept("vac"):
            raise self.error("expected a creation atom or '|0>'")
        return Ket(tuple(factors))


def parse_expression(text: str, algebra: Optional[BosonAlgebra] = None) -> Node:
    return _Parser(text, algebra.rank if algebra is not None else None).top()


def evaluate(node: Node, algebra: BosonAlgebra) -> State:
    if isinstance(node, Zero):
        return State()
    if isinstance(node, Ket):
        return State({Monomial.of(node.factors): Fraction(1)})
    if isinstance(node, Scaled):
        return node.coeff * evaluate(node.body, algebra)
    if isinstance(node, Sum):
        out = State()
        for t in node.terms:
            out = out + evaluate(t, algebra)
        return out
    if isinstance(node, Virasoro):
        return virasoro(algebra, node.n, evaluate(node.body, algebra))
    if isinstance(node, ZeroMode):
        return zero_mode(algebra, evaluate(node.vector, algebra), evaluate(node.body, algebra))
    if isinstance(node, Degree):
        return evaluate(node.body, algebra)
    raise TypeError(f"unknown node {node!r}")


def parse_state(text: str, algebra: BosonAlgebra) -> State:
    """Parse and evaluate to a canonical State; a deg(...) wrapper is stripped."""
    return evaluate(parse_expression(text, algebra), algebra)


# ---------------------------------------------------------------------------
# printing


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial) -> str:
    return "".join(f"h{i}(-{n})" for i, n in m) + "|0>"


def format_state(state: State) -> str:
    """Canonical rendering; parse_state inverts it exactly."""
    items = state.sorted_items()
    if not items:
        return "0"
    parts = []
    for k, (m, c) in enumerate(items):
        body = format_monomial(m)
        if k == 0:
            parts.append(body if c == 1 else f"{_coeff_text(c)}*{body}")
        else:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            parts.append(f"{sign} " + (body if a == 1 else f"{_coeff_text(a)}*{body}"))
    return " ".join(parts)
