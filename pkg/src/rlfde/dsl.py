"""A small text format for linear RL equations.

Examples::

    D^{7/3} u + 3*D^{4/3} u + 4*D^{1/3} u = t^3
    D^{1/2} u + u = 0
    D^{3/2} u - 0.5*D^{1/2} u = 2*t^{1/2} + 1
    D^{1/2} u = @file:forcing.csv

Grammar::

    equation := lhs "=" rhs
    lhs      := [sign] term { sign term }
    term     := [coeff ["*"]] ("D" | "I") "^" rational "u" | [coeff ["*"]] "u"
    rhs      := "@file:" path | [sign] rterm { sign rterm }
    rterm    := coeff ["*" "t" ["^" rational]] | [coeff ["*"]] "t" ["^" rational]
    rational := ["{"] ["-"] integer ["/" integer] ["}"]
    coeff    := decimal | integer "/" integer

``I^q u`` is only accepted on the left for ``q = 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from rlfde.analysis import EquationSpec, normalize
from rlfde.orders import PowerSum, format_order

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<file>@file:)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/^{}=])
    """,
    re.VERBOSE,
)


class EquationSyntaxError(ValueError):
    """Malformed equation text, with a 1-based line and column."""

    def __init__(self, message: str, text: str, offset: int) -> None:
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.message = message
        super().__init__(f"line {self.line}, column {self.column}: {message}")


@dataclass
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise EquationSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = match.lastgroup
        if kind == "file":
            path = text[match.end() :].strip()
            if not path:
                raise EquationSyntaxError("missing path after '@file:'", text, pos)
            tokens.append(_Token("file", path, pos))
            pos = len(text)
            continue
        if kind != "space":
            tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message: str, token: _Token | None = None):
        token = self.current if token is None else token
        found = repr(token.text) if token.kind != "end" else "end of input"
        return EquationSyntaxError(f"{message}, found {found}", self.text, token.offset)

    def accept(self, text: str) -> bool:
        if self.current.text == text and self.current.kind in ("op", "name"):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            raise self.error(f"expected {text!r}")

    def sign(self) -> float | None:
        if self.accept("+"):
            return 1.0
        if self.accept("-"):
            return -1.0
        return None

    def number(self) -> float:
        token = self.current
        if token.kind != "number":
            raise self.error("expected a number")
        self.pos += 1
        value = float(token.text)
        if self.current.text == "/" and self.tokens[self.pos + 1].kind == "number":
            self.pos += 1
            denominator = self.tokens[self.pos]
            self.pos += 1
            if float(denominator.text) == 0:
                raise EquationSyntaxError("division by zero", self.text, denominator.offset)
            value /= float(denominator.text)
        return value

    def integer(self) -> int:
        token = self.current
        if token.kind != "number" or not token.text.isdigit():
            raise self.error("expected an integer")
        self.pos += 1
        return int(token.text)

    def rational(self) -> Fraction:
        braced = self.accept("{")
        negative = self.accept("-")
        value = Fraction(self.integer())
        if self.accept("/"):
            token = self.current
            denominator = self.integer()
            if denominator == 0:
                raise EquationSyntaxError("zero denominator", self.text, token.offset)
            value /= denominator
        if braced:
            self.expect("}")
        return -value if negative else value

    def coefficient(self) -> float:
        if self.current.kind == "number":
            value = self.number()
            self.accept("*")
            return value
        return 1.0

    def lhs_term(self, sign: float) -> tuple[Fraction, float]:
        start = self.current
        c = sign * self.coefficient()
        token = self.current
        if self.accept("u"):
            return Fraction(0), c
        if token.text not in ("D", "I"):
            raise self.error("expected 'D^q u', 'I^0 u' or 'u'")
        self.pos += 1
        self.expect("^")
        order_token = self.current
        order = self.rational()
        self.expect("u")
        if token.text == "I":
            if order != 0:
                raise EquationSyntaxError(
                    "integral terms I^q u with q > 0 are not allowed on the left",
                    self.text,
                    start.offset,
                )
        elif order < 0:
            raise EquationSyntaxError(
                f"negative order {format_order(order)} on the left",
                self.text,
                order_token.offset,
            )
        return order, c

    def rhs_term(self, sign: float) -> tuple[float, Fraction]:
        if self.current.kind == "number":
            c = sign * self.number()
            if not self.accept("*"):
                if self.current.text != "t":
                    return c, Fraction(0)
        else:
            c = sign
        self.expect("t")
        if not self.accept("^"):
            return c, Fraction(1)
        start = self.current
        exponent = self.rational()
        if exponent <= -1:
            raise self.error("powers of t must have exponent > -1", start)
        return c, exponent

    def parse(self) -> tuple[dict[Fraction, float], PowerSum | Path]:
        if self.current.kind == "end":
            raise self.error("empty equation")

        terms: dict[Fraction, float] = {}
        sign = self.sign() or 1.0
        while True:
            order, c = self.lhs_term(sign)
            terms[order] = terms.get(order, 0.0) + c
            sign = self.sign()
            if sign is None:
                break
        self.expect("=")

        if self.current.kind == "file":
            path = Path(self.current.text)
            self.pos += 1
            rhs: PowerSum | Path = path
        else:
            powers = []
            sign = self.sign() or 1.0
            while True:
                powers.append(self.rhs_term(sign))
                sign = self.sign()
                if sign is None:
                    break
            rhs = PowerSum(tuple(powers))

        if self.current.kind != "end":
            raise self.error("unexpected trailing input")
        return terms, rhs


def parse_equation(text: str, normalized: bool = True, base_dir: Path | None = None) -> EquationSpec:
    """Parse equation text into an :class:`~rlfde.analysis.EquationSpec`.

    Terms with equal orders are merged. With *normalized* the equation is
    divided by the coefficient of the highest order. ``@file:`` right-hand
    sides are read as ``t,w`` CSV files, relative to *base_dir* if given.
    """
    parser = _Parser(text)
    terms, rhs = parser.parse()

    orders = tuple(sorted(terms))
    coefficients = tuple(terms[q] for q in orders)
    if coefficients[-1] == 0.0:
        raise EquationSyntaxError(
            f"coefficient of the highest order D^{format_order(orders[-1])} is zero",
            text,
            0,
        )

    if isinstance(rhs, Path):
        from rlfde.io import read_sampled_rhs

        path = rhs if base_dir is None or rhs.is_absolute() else base_dir / rhs
        rhs = read_sampled_rhs(path)

    spec = EquationSpec(orders, coefficients, rhs)
    return normalize(spec) if normalized else spec


def _format_coefficient(c: float, body: str) -> str:
    if c == 1.0 and body:
        return body
    if c == -1.0 and body:
        return "-" + body
    return f"{c!r}*{body}" if body else repr(c)


def format_equation(spec: EquationSpec) -> str:
    """Text form of *spec* that :func:`parse_equation` reads back unchanged."""
    lhs = []
    for q, c in reversed(list(zip(spec.orders, spec.coefficients))):
        body = "u" if q == 0 else f"D^{{{format_order(q)}}} u"
        lhs.append(_format_coefficient(c, body))

    if isinstance(spec.rhs, PowerSum):
        rhs = []
        for c, e in reversed(spec.rhs.terms):
            body = "" if e == 0 else ("t" if e == 1 else f"t^{{{format_order(e)}}}")
            rhs.append(_format_coefficient(c, body))
        rhs_text = " + ".join(rhs) if rhs else "0"
    else:
        if spec.rhs.source is None:
            raise ValueError("sampled right-hand side has no source file to refer to")
        rhs_text = f"@file:{spec.rhs.source}"

    return " + ".join(lhs).replace("+ -", "- ") + " = " + rhs_text.replace("+ -", "- ")
