"""Equation text parser and the validated equation IR.

Two families are accepted::

    y = <polynomial in x>            e.g.  y=3*x^2+4
    y = a1*x1 + ... + at*xt [+ c]    e.g.  y=x1+2*x2+1

All integers are decimal and non-negative; whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    EquationSyntaxError,
    FixedPointDomain,
    NotIncreasing,
    UnsupportedForm,
)

__all__ = [
    "EquationKind",
    "ParsedEquation",
    "Equation",
    "parse_equation",
    "validate",
    "parse",
    "render",
    "affine",
    "polynomial",
    "linear",
]


class EquationKind(str, Enum):
    BINARY = "binary-function"
    LINEAR = "general-linear"


@dataclass(frozen=True)
class ParsedEquation:
    """Structured but not yet validated equation.

    For ``BINARY`` the ``coeffs`` are the polynomial coefficients of f,
    constant term first, trailing zeros stripped.  For ``LINEAR`` they are
    a_1..a_t and ``constant`` holds c.
    """

    kind: EquationKind
    coeffs: tuple[int, ...]
    constant: int = 0

    @property
    def is_binary(self) -> bool:
        return self.kind is EquationKind.BINARY

    @property
    def arity(self) -> int:
        return 1 if self.is_binary else len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.is_binary else 1

    def apply(self, inputs) -> int:
        """Evaluate the right-hand side without any domain checks."""
        if self.is_binary:
            (x,) = inputs
            acc = 0
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        return sum(a * x for a, x in zip(self.coeffs, inputs)) + self.constant

    def affine_params(self):
        """``(a, b)`` if this is y = a*x + b, else ``None``."""
        if self.is_binary and self.degree == 1:
            return self.coeffs[1], self.coeffs[0]
        return None

    def power_params(self):
        """``(a, b, c)`` if this is y = a*x^c + b with c >= 2, else ``None``."""
        if not self.is_binary or self.degree < 2:
            return None
        if any(self.coeffs[1:-1]):
            return None
        return self.coeffs[-1], self.coeffs[0], self.degree

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Equation(ParsedEquation):
    """A validated equation.

    ``domain_floor`` is the smallest admissible x for binary-function
    equations: 1 when f(1) >= 2, and 2 when f(1) = 1 (then f(2) >= 3).
    General-linear equations always have floor 1.
    """

    domain_floor: int = 1


# -- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[=+*^()\-/]))")


@dataclass
class _Tok:
    type: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            j = pos
            while text[j].isspace():
                j += 1
            raise EquationSyntaxError(f"unexpected character {text[j]!r}", j)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


_VAR_RE = re.compile(r"x(\d*)\Z")


class _Parser:
    """Recursive descent over the token list; one method per grammar rule."""

    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, type_, text=None, what=None) -> _Tok:
        t = self.tok
        if t.type != type_ or (text is not None and t.text != text):
            raise EquationSyntaxError(
                f"unexpected {t.text!r}" if t.type != "eof" else "unexpected end of input",
                t.pos,
                what or repr(text or type_),
            )
        return self.take()

    def equation(self):
        lhs = self.expect("name", what="'y'")
        if lhs.text != "y":
            raise UnsupportedForm(f"dependent variable must be 'y', got {lhs.text!r}")
        self.expect("op", "=", what="'='")
        terms = self.rhs()
        self.expect("eof", what="'+' or end of input")
        return terms

    def rhs(self):
        terms = [self.term()]
        while self.tok.type == "op" and self.tok.text == "+":
            self.take()
            terms.append(self.term())
        return terms

    def term(self):
        t = self.tok
        if t.type == "op" and t.text == "-":
            raise UnsupportedForm(f"negative coefficients are not supported (position {t.pos})")
        if t.type == "int":
            coef = int(self.take().text)
            if self.tok.type == "op" and self.tok.text == "*":
                self.take()
                var, power = self.var_power()
                return coef, var, power
            self._reject_trailing()
            return coef, None, 0
        if t.type == "name":
            var, power = self.var_power()
            return 1, var, power
        raise EquationSyntaxError(
            "unexpected end of input" if t.type == "eof" else f"unexpected {t.text!r}",
            t.pos,
            "integer or variable",
        )

    def var_power(self):
        t = self.expect("name", what="variable")
        m = _VAR_RE.match(t.text)
        if m is None:
            raise UnsupportedForm(f"unknown variable {t.text!r} at position {t.pos}")
        var = t.text
        power = 1
        if self.tok.type == "op" and self.tok.text == "^":
            self.take()
            power = int(self.expect("int", what="integer exponent").text)
        self._reject_trailing()
        return var, power

    def _reject_trailing(self):
        t = self.tok
        if t.type == "op" and t.text == "*":
            raise UnsupportedForm(
                f"products of variables or constants are not supported (position {t.pos})"
            )
        if t.type == "op" and t.text in "-/":
            raise UnsupportedForm(f"operator {t.text!r} is not supported (position {t.pos})")


def parse_equation(text: str) -> ParsedEquation:
    """Parse ``text`` into a :class:`ParsedEquation`.

    Raises :class:`EquationSyntaxError` for grammar violations and
    :class:`UnsupportedForm` for well-formed input outside the two families.
    """
    if not isinstance(text, str) or not text.strip():
        raise EquationSyntaxError("empty equation", 0, "'y'")
    if not text.isascii():
        raise EquationSyntaxError("non-ASCII input", next(i for i, ch in enumerate(text) if not ch.isascii()))
    terms = _Parser(text).equation()

    variables = {var for _, var, _ in terms if var is not None}
    indexed = {v for v in variables if v != "x"}
    if "x" in variables and indexed:
        raise UnsupportedForm("cannot mix 'x' with indexed variables x1..xt")

    constant = sum(coef for coef, var, _ in terms if var is None)

    if not indexed:
        # binary function; a constant-only rhs is kept and rejected by validate()
        degree = max((p for _, var, p in terms if var is not None), default=0)
        poly = [0] * (degree + 1)
        poly[0] = constant
        for coef, var, power in terms:
            if var is not None:
                poly[power] += coef
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        return ParsedEquation(EquationKind.BINARY, tuple(poly))

    coeffs = {}
    for coef, var, power in terms:
        if var is None:
            continue
        if power != 1:
            raise UnsupportedForm(f"nonlinear term {var}^{power} in a general-linear equation")
        idx = int(var[1:])
        if idx in coeffs:
            raise UnsupportedForm(f"variable {var} appears more than once")
        coeffs[idx] = coef
    t = len(coeffs)
    if sorted(coeffs) != list(range(1, t + 1)):
        raise UnsupportedForm(f"indexed variables must be exactly x1..x{t}, got {sorted(variables)}")
    a = tuple(coeffs[i] for i in range(1, t + 1))
    if min(a) < 1:
        raise UnsupportedForm("general-linear coefficients must all be >= 1")
    return ParsedEquation(EquationKind.LINEAR, a, constant)


def validate(parsed: ParsedEquation) -> Equation:
    """Check monotonicity/integrality and attach the domain floor."""
    if not parsed.is_binary:
        return Equation(parsed.kind, parsed.coeffs, parsed.constant, domain_floor=1)

    poly = parsed.coeffs
    if any(c < 0 for c in poly):
        raise UnsupportedForm("negative coefficients are not supported")
    if not any(poly[1:]):
        raise NotIncreasing(f"f is constant: {render(parsed)}")
    f1 = parsed.apply((1,))
    if f1 >= 2:
        floor = 1
    else:
        # f(1) = 1 means f is a single monomial x^d
        if parsed.apply((2,)) < 3:
            raise FixedPointDomain(f"{render(parsed)} fixes every point; no valid domain")
        floor = 2
    return Equation(parsed.kind, poly, 0, domain_floor=floor)


def parse(text: str) -> Equation:
    """``validate(parse_equation(text))``."""
    return validate(parse_equation(text))


def render(eq: ParsedEquation) -> str:
    """Canonical text; ``parse(render(eq)) == eq`` for validated equations."""
    parts = []
    if eq.is_binary:
        for power in range(len(eq.coeffs) - 1, 0, -1):
            c = eq.coeffs[power]
            if c == 0:
                continue
            mono = "x" if power == 1 else f"x^{power}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        if eq.coeffs[0] or not parts:
            parts.append(str(eq.coeffs[0]))
    else:
        for i, a in enumerate(eq.coeffs, start=1):
            parts.append(f"x{i}" if a == 1 else f"{a}*x{i}")
        if eq.constant:
            parts.append(str(eq.constant))
    return "y=" + "+".join(parts)


def affine(a: int, b: int) -> Equation:
    """Validated y = a*x + b."""
    return validate(ParsedEquation(EquationKind.BINARY, _strip((b, a))))


def polynomial(*coeffs: int) -> Equation:
    """Validated binary-function polynomial, constant term first."""
    return validate(ParsedEquation(EquationKind.BINARY, _strip(coeffs)))


def linear(a_vec, c: int = 0) -> Equation:
    """Validated y = sum(a_i * x_i) + c."""
    a_vec = tuple(int(a) for a in a_vec)
    if not a_vec or min(a_vec) < 1 or c < 0:
        raise UnsupportedForm("general-linear needs t >= 1, all a_i >= 1 and c >= 0")
    return validate(ParsedEquation(EquationKind.LINEAR, a_vec, int(c)))


def _strip(coeffs) -> tuple[int, ...]:
    poly = list(int(c) for c in coeffs)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)
