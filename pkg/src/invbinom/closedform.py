"""Closed-form expression language.

Grammar (whitespace-insensitive)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | power
    power    := primary ('^' exponent)*
    exponent := INT | '-' INT | '(' ['-'] INT ')'
    primary  := INT ['/' INT]                 # rational literal a/b
              | FUNC '(' expr ')'
              | FUNC '^' exponent '(' expr ')'  # ln^2(x) == ln(x)^2
              | CONST
              | '(' expr ')'

    FUNC  := sqrt | ln | atan | atanh | acot | sqr
    CONST := pi | i | alpha | beta | delta | lambda | omega | A | B

``a/b`` becomes a single rational literal only where that cannot change the
value: not directly after ``/`` and not directly before ``^``.  Expressions
are closed; any other identifier is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from mpmath import mp, mpc, mpf

from . import hpcore
from .errors import DomainError, ParseError, UnknownConstantError, UnknownIdentifierError
from .hpcore import BigComplex

UNARY_OPS = ("neg", "sqrt", "ln", "atan", "atanh", "acot", "sqr")
BINARY_OPS = ("add", "sub", "mul", "div", "pow_int")
FUNCTIONS = ("sqrt", "ln", "atan", "atanh", "acot", "sqr")
PRIMITIVE_CONSTANTS = ("pi", "i")


@dataclass(frozen=True)
class IntLit:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError("IntLit holds a non-negative int")


@dataclass(frozen=True)
class RatLit:
    num: int
    den: int

    def __post_init__(self):
        if self.num < 0 or self.den <= 0:
            raise ValueError("RatLit needs num >= 0 and den > 0")


@dataclass(frozen=True)
class NamedConst:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Expr"

    def __post_init__(self):
        if self.op not in UNARY_OPS:
            raise ValueError(f"unknown unary op {self.op!r}")


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown binary op {self.op!r}")
        if self.op == "pow_int" and not isinstance(self.right, PowExp):
            raise ValueError("pow_int exponent must be an integer literal")


@dataclass(frozen=True)
class PowExp:
    """Signed integer literal, only valid as the exponent of ``pow_int``."""

    value: int


Expr = Union[IntLit, RatLit, NamedConst, Unary, Binary]


@dataclass(frozen=True)
class ConstantDef:
    name: str
    body: Expr


# -- lexer / parser -------------------------------------------------------------

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z]+)|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        start = m.start()
        if m.group(1) is not None:
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ID", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", position=start)
            tokens.append((ch, ch, start))
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, constants):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.constants = constants

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "END" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", position=tok[2])
        self.i += 1
        return tok

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"unexpected {tok[1]!r}", position=tok[2])
        return e

    def expr(self):
        e = self.term()
        while self.peek()[0] in "+-":
            op = "add" if self.take()[0] == "+" else "sub"
            e = Binary(op, e, self.term())
        return e

    def term(self):
        e = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = "mul" if self.take()[0] == "*" else "div"
            e = Binary(op, e, self.unary())
        return e

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return Unary("neg", self.unary())
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        e = self.primary()
        while self.peek()[0] == "^":
            self.take()
            e = Binary("pow_int", e, PowExp(self.exponent()))
        return e

    def exponent(self):
        tok = self.peek()
        if tok[0] == "(":
            self.take()
            v = self.exponent()
            self.take(")")
            return v
        if tok[0] == "-":
            self.take()
            return -self.take("INT")[1]
        if tok[0] != "INT":
            raise ParseError("exponent must be an integer literal", position=tok[2])
        return self.take()[1]

    def primary(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "INT":
            prev = self.toks[self.i - 1][0] if self.i > 0 else None
            self.take()
            if (prev != "/" and self.peek()[0] == "/" and self.peek(1)[0] == "INT"
                    and self.peek(2)[0] != "^"):
                self.take()
                return RatLit(tok[1], self.take()[1])
            return IntLit(tok[1])
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "ID":
            name = tok[1]
            if name in FUNCTIONS:
                self.take()
                power = None
                if self.peek()[0] == "^":
                    self.take()
                    power = self.exponent()
                self.take("(")
                arg = self.expr()
                self.take(")")
                e = Unary(name, arg)
                return e if power is None else Binary("pow_int", e, PowExp(power))
            if name in PRIMITIVE_CONSTANTS or name in self.constants:
                self.take()
                return NamedConst(name)
            raise UnknownIdentifierError(f"unknown identifier {name!r}", position=tok[2])
        what = "end of input" if kind == "END" else repr(tok[1])
        raise ParseError(f"unexpected {what}", position=tok[2])


def parse_expr(text: str) -> Expr:
    """Parse closed-form text into an expression tree."""
    return _Parser(text, _CONSTANT_BODIES).parse()


# -- serializer -------------------------------------------------------------------

_LEVEL = {"add": 1, "sub": 1, "mul": 2, "div": 2, "neg": 3, "pow_int": 4}


def _level(e):
    if isinstance(e, Binary):
        return _LEVEL[e.op]
    if isinstance(e, Unary) and e.op == "neg":
        return 3
    if isinstance(e, RatLit):
        return 2
    return 5


def _wrap(e, min_level):
    s = to_text(e)
    return s if _level(e) >= min_level else f"({s})"


def to_text(e: Expr) -> str:
    """Serialize so that ``parse_expr(to_text(e)) == e``."""
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, RatLit):
        return f"{e.num}/{e.den}"
    if isinstance(e, NamedConst):
        return e.name
    if isinstance(e, Unary):
        if e.op == "neg":
            return "-" + _wrap(e.arg, 3)
        return f"{e.op}({to_text(e.arg)})"
    if isinstance(e, Binary):
        if e.op == "pow_int":
            k = e.right.value
            return f"{_wrap(e.left, 5)}^{k if k >= 0 else f'({k})'}"
        sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[e.op]
        lvl = _LEVEL[e.op]
        left = _wrap(e.left, lvl)
        right = _wrap(e.right, lvl + 1)
        # "...3/4" with a bare integer on each side would re-lex as a rational
        if e.op == "div" and left[-1].isdigit() and right[0].isdigit():
            left = f"({left})"
        return f"{left}{sym}{right}"
    raise TypeError(f"not an expression node: {e!r}")


# -- named constants ------------------------------------------------------------------

_CONSTANT_SOURCES = (
    ("alpha", "(1+sqrt(5))/2"),
    ("beta", "(1-sqrt(5))/2"),
    ("delta", "sqrt(2)+1"),
    ("lambda", "sqrt(sqrt(2)-1)"),
    ("omega", "sqrt(sqrt(5)-2)"),
    ("A", "sqrt((sqrt(70+2*sqrt(5))-8)/(1+sqrt(5)))"),
    # B^2 is negative; kept as i times a positive real root
    ("B", "i*sqrt((sqrt(70-2*sqrt(5))-8)/(sqrt(5)-1))"),
)

_CONSTANT_BODIES: dict[str, Expr] = {}
for _name, _src in _CONSTANT_SOURCES:
    _CONSTANT_BODIES[_name] = _Parser(_src, dict(_CONSTANT_BODIES)).parse()

CONSTANTS = tuple(ConstantDef(n, _CONSTANT_BODIES[n]) for n, _ in _CONSTANT_SOURCES)
CONSTANT_NAMES = PRIMITIVE_CONSTANTS + tuple(n for n, _ in _CONSTANT_SOURCES)


def constant_body(name: str) -> Expr:
    try:
        return _CONSTANT_BODIES[name]
    except KeyError:
        raise UnknownConstantError(f"no defining expression for constant {name!r}") from None


# -- evaluation -----------------------------------------------------------------------

_EVAL_GUARD = 16


@lru_cache(maxsize=256)
def _const_raw(name, prec):
    with mp.workprec(prec):
        if name == "pi":
            return +mp.pi
        if name == "i":
            return mpc(0, 1)
        return _eval(_CONSTANT_BODIES[name], prec)


def _eval(e, prec):
    # runs inside mp.workprec(prec)
    if isinstance(e, IntLit):
        return mpf(e.value)
    if isinstance(e, RatLit):
        return mpf(e.num) / e.den
    if isinstance(e, NamedConst):
        return _const_raw(e.name, prec)
    if isinstance(e, Unary):
        v = _eval(e.arg, prec)
        if e.op == "neg":
            return -v
        try:
            return hpcore.unary(e.op, v)
        except DomainError as exc:
            raise type(exc)(str(exc), expr=to_text(e)) from None
    if isinstance(e, Binary):
        a = _eval(e.left, prec)
        if e.op == "pow_int":
            k = e.right.value
            if k < 0 and a == 0:
                raise DomainError("zero raised to a negative power", expr=to_text(e))
            return a ** k
        b = _eval(e.right, prec)
        if e.op == "add":
            v = a + b
        elif e.op == "sub":
            v = a - b
        elif e.op == "mul":
            v = a * b
        else:
            if b == 0:
                raise DomainError("division by zero", expr=to_text(e))
            v = a / b
        return v
    raise TypeError(f"not an expression node: {e!r}")


def eval_raw(e: Expr, prec: int):
    """Evaluate to a bare mpf (real) or mpc at ``prec`` bits."""
    with mp.workprec(prec + _EVAL_GUARD):
        v = _eval(e, prec + _EVAL_GUARD)
    with mp.workprec(prec):
        return +v


def eval_expr(e: Expr, prec: int) -> BigComplex:
    """Evaluate ``e`` at principal branches.  Purely real trees give im == 0."""
    if isinstance(e, str):
        e = parse_expr(e)
    return BigComplex.from_mpc(eval_raw(e, prec), prec)


def named_constant(name: str, prec: int) -> BigComplex:
    if name not in CONSTANT_NAMES:
        raise UnknownConstantError(f"unknown constant {name!r}; known: {', '.join(CONSTANT_NAMES)}")
    with mp.workprec(prec + _EVAL_GUARD):
        v = _const_raw(name, prec + _EVAL_GUARD)
    return BigComplex.from_mpc(v, prec)


# -- exact helpers --------------------------------------------------------------------


def _fraction_sqrt(q: Fraction):
    if q < 0:
        return None
    from math import isqrt

    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_rational(e: Expr):
    """The exact rational value of ``e``, or None when it is not provably rational."""
    if isinstance(e, IntLit):
        return Fraction(e.value)
    if isinstance(e, RatLit):
        return Fraction(e.num, e.den)
    if isinstance(e, Unary):
        a = exact_rational(e.arg)
        if a is None:
            return None
        if e.op == "neg":
            return -a
        if e.op == "sqr":
            return a * a
        if e.op == "sqrt":
            return _fraction_sqrt(a)
        return None
    if isinstance(e, Binary):
        a = exact_rational(e.left)
        if a is None:
            return None
        if e.op == "pow_int":
            if a == 0 and e.right.value < 0:
                return None
            return a ** e.right.value
        b = exact_rational(e.right)
        if b is None:
            return None
        if e.op == "add":
            return a + b
        if e.op == "sub":
            return a - b
        if e.op == "mul":
            return a * b
        return a / b if b != 0 else None
    return None


def exact_square(e: Expr):
    """The exact rational value of ``e**2``, or None.

    Handles square roots of rationals and the imaginary unit, which covers
    points such as ``1/sqrt(3)`` and ``4*i``.
    """
    q = exact_rational(e)
    if q is not None:
        return q * q
    if isinstance(e, NamedConst) and e.name == "i":
        return Fraction(-1)
    if isinstance(e, Unary):
        if e.op == "neg":
            return exact_square(e.arg)
        if e.op == "sqrt":
            return exact_rational(e.arg)
        if e.op == "sqr":
            s = exact_square(e.arg)
            return None if s is None else s * s
        return None
    if isinstance(e, Binary):
        if e.op == "pow_int":
            s = exact_square(e.left)
            if s is None or (s == 0 and e.right.value < 0):
                return None
            return s ** e.right.value
        if e.op in ("mul", "div"):
            a, b = exact_square(e.left), exact_square(e.right)
            if a is None or b is None:
                return None
            if e.op == "mul":
                return a * b
            return a / b if b != 0 else None
    return None
