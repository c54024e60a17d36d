"""Precision-tagged multiprecision reals and complexes.

Everything numeric in the package bottoms out here.  Values wrap mpmath
numbers together with the binary precision they were computed at; all
operations run inside ``mp.workprec`` at the minimum precision of their
inputs, so the global mpmath context is only borrowed, never left changed.

mpmath keeps its working precision in a process-global context, so a single
process must not evaluate at two precisions concurrently.  Parallel work in
this package is done with processes (see :func:`invbinom.verifier.verify_all`).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from .errors import BranchCutError, DomainError, ParseError

GUARD_BITS = 64
MIN_PREC = 64
# extra bits used internally by elementary functions before rounding back
_FN_GUARD = 10

REAL_TAGS = ("sqrt", "ln", "atan", "atanh", "acot", "exp", "sqr")
COMPLEX_TAGS = ("sqrt", "ln", "atan", "atanh", "sqr", "mul", "add")

_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def working_precision(digits: int) -> int:
    """Bits needed to carry ``digits`` decimal digits plus the guard bits."""
    return math.ceil(digits * math.log2(10)) + GUARD_BITS


def _check_prec(prec):
    if not isinstance(prec, int) or prec < MIN_PREC:
        raise ValueError(f"precision must be an integer >= {MIN_PREC} bits, got {prec!r}")


def _to_mpf(x, prec):
    with mp.workprec(prec):
        if isinstance(x, Fraction):
            return mpf(x.numerator) / x.denominator
        return mpf(x)


@dataclass(frozen=True)
class BigReal:
    value: mpf
    prec: int

    def __post_init__(self):
        _check_prec(self.prec)
        if not isinstance(self.value, mpf):
            object.__setattr__(self, "value", _to_mpf(self.value, self.prec))

    @classmethod
    def exact(cls, x, prec: int) -> "BigReal":
        """Round an int, Fraction or mpf to ``prec`` bits."""
        return cls(_to_mpf(x, prec), prec)

    def _coerce(self, other):
        if isinstance(other, BigReal):
            return other
        if isinstance(other, (int, Fraction, mpf)):
            return BigReal.exact(other, self.prec)
        return NotImplemented

    def _binop(self, other, op, swap=False):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = min(self.prec, other.prec)
        a, b = (other.value, self.value) if swap else (self.value, other.value)
        with mp.workprec(p):
            if op == "/" and b == 0:
                raise DomainError("division by zero")
            v = {"+": a + b, "-": a - b, "*": a * b}[op] if op != "/" else a / b
        return BigReal(v, p)

    def __add__(self, o):
        return self._binop(o, "+")

    def __radd__(self, o):
        return self._binop(o, "+", swap=True)

    def __sub__(self, o):
        return self._binop(o, "-")

    def __rsub__(self, o):
        return self._binop(o, "-", swap=True)

    def __mul__(self, o):
        return self._binop(o, "*")

    def __rmul__(self, o):
        return self._binop(o, "*", swap=True)

    def __truediv__(self, o):
        return self._binop(o, "/")

    def __rtruediv__(self, o):
        return self._binop(o, "/", swap=True)

    def __neg__(self):
        return BigReal(-self.value, self.prec)

    def __abs__(self):
        return BigReal(abs(self.value), self.prec)

    def __lt__(self, o):
        o = self._coerce(o)
        return self.value < o.value

    def __le__(self, o):
        o = self._coerce(o)
        return self.value <= o.value

    def __gt__(self, o):
        o = self._coerce(o)
        return self.value > o.value

    def __ge__(self, o):
        o = self._coerce(o)
        return self.value >= o.value

    def __float__(self):
        return float(self.value)

    def with_prec(self, prec: int) -> "BigReal":
        return BigReal.exact(self.value, prec)

    def to_decimal(self, digits: int) -> str:
        with mp.workprec(self.prec):
            return mpmath.nstr(self.value, digits, min_fixed=-4, max_fixed=digits + 1)

    def __str__(self):
        return self.to_decimal(max(1, int(self.prec * math.log10(2)) - 2))


@dataclass(frozen=True)
class BigComplex:
    re: BigReal
    im: BigReal

    def __post_init__(self):
        if self.re.prec != self.im.prec:
            raise ValueError("real and imaginary parts must carry the same precision")

    @property
    def prec(self) -> int:
        return self.re.prec

    @classmethod
    def from_mpc(cls, z, prec: int) -> "BigComplex":
        with mp.workprec(prec):
            if isinstance(z, mpc):
                return cls(BigReal(+z.real, prec), BigReal(+z.imag, prec))
            return cls(BigReal(+mpf(z), prec), BigReal(mpf(0), prec))

    @classmethod
    def from_real(cls, x: BigReal) -> "BigComplex":
        return cls(x, BigReal(mpf(0), x.prec))

    def to_mpc(self):
        with mp.workprec(self.prec):
            return mpc(self.re.value, self.im.value)

    def is_real(self) -> bool:
        return self.im.value == 0

    def _binop(self, other, op):
        if isinstance(other, BigReal):
            other = BigComplex.from_real(other)
        elif isinstance(other, (int, Fraction)):
            other = BigComplex.from_real(BigReal.exact(other, self.prec))
        if not isinstance(other, BigComplex):
            return NotImplemented
        return complex_fn(op, self, other)

    def __add__(self, o):
        return self._binop(o, "add")

    def __mul__(self, o):
        return self._binop(o, "mul")

    def __sub__(self, o):
        if isinstance(o, (int, Fraction)):
            o = BigComplex.from_real(BigReal.exact(o, self.prec))
        elif isinstance(o, BigReal):
            o = BigComplex.from_real(o)
        return self + (-o)

    def __truediv__(self, o):
        if isinstance(o, BigReal):
            o = BigComplex.from_real(o)
        p = min(self.prec, o.prec)
        with mp.workprec(p):
            den = o.to_mpc()
            if den == 0:
                raise DomainError("division by zero")
            return BigComplex.from_mpc(self.to_mpc() / den, p)

    def __neg__(self):
        return BigComplex(-self.re, -self.im)

    def __abs__(self):
        with mp.workprec(self.prec):
            return BigReal(abs(self.to_mpc()), self.prec)


# -- raw kernels ------------------------------------------------------------
# These act on bare mpf/mpc inside the caller's working precision.  The
# expression evaluator and the series engine use them directly.


def real_unary(tag, x, *, strict_real=True):
    """Apply ``tag`` to a real mpf.

    With ``strict_real`` a real-domain violation raises :class:`DomainError`;
    otherwise an argument lying on the principal branch cut raises
    :class:`BranchCutError` (it would leave the reals there).
    """
    cut = DomainError if strict_real else BranchCutError
    if tag == "sqrt":
        if x < 0:
            raise cut(f"sqrt of negative argument ({mpmath.nstr(x, 8)})")
        return mp.sqrt(x)
    if tag == "ln":
        if x == 0:
            raise DomainError("ln of zero argument")
        if x < 0:
            raise cut(f"ln of negative argument ({mpmath.nstr(x, 8)})")
        return mp.log(x)
    if tag == "atan":
        return mp.atan(x)
    if tag == "atanh":
        if abs(x) == 1:
            raise DomainError(f"atanh pole at {'positive' if x > 0 else 'negative'} argument 1")
        if abs(x) > 1:
            sign = "positive" if x > 0 else "negative"
            raise cut(f"atanh of {sign} argument with |x| > 1 ({mpmath.nstr(x, 8)})")
        return mp.atanh(x)
    if tag == "acot":
        if x == 0:
            raise DomainError("acot of zero argument")
        return mp.atan(1 / x)
    if tag == "exp":
        return mp.exp(x)
    if tag == "sqr":
        return x * x
    raise ValueError(f"unknown real function tag {tag!r}")


def complex_unary(tag, z):
    """Principal-branch complex kernel; ``z`` is an mpc."""
    re_, im_ = z.real, z.imag
    if tag == "sqrt":
        if im_ == 0 and re_ < 0:
            raise BranchCutError("sqrt argument on the negative real axis")
        return mp.sqrt(z)
    if tag == "ln":
        if z == 0:
            raise DomainError("ln of zero argument")
        if im_ == 0 and re_ < 0:
            raise BranchCutError("ln argument on the negative real axis")
        return mp.log(z)
    if tag == "atan":
        if re_ == 0 and abs(im_) >= 1:
            if abs(im_) == 1:
                raise DomainError("atan pole at +-i")
            raise BranchCutError("atan argument on the imaginary axis beyond +-i")
        return mp.atan(z)
    if tag == "atanh":
        if im_ == 0 and abs(re_) >= 1:
            if abs(re_) == 1:
                raise DomainError("atanh pole at +-1")
            raise BranchCutError("atanh argument on the real axis beyond +-1")
        return mp.atanh(z)
    if tag == "acot":
        if z == 0:
            raise DomainError("acot of zero argument")
        return complex_unary("atan", 1 / z)
    if tag == "exp":
        return mp.exp(z)
    if tag == "sqr":
        return z * z
    raise ValueError(f"unknown complex function tag {tag!r}")


def _real_domain_ok(tag, x):
    if tag == "sqrt":
        return x >= 0
    if tag == "ln":
        return x > 0
    if tag == "atanh":
        return abs(x) < 1
    if tag == "acot":
        return x != 0
    return True


def unary(tag, v):
    """Dispatch on mpf vs mpc, staying real whenever the real path applies."""
    if isinstance(v, mpc):
        if v.imag == 0 and _real_domain_ok(tag, v.real):
            return real_unary(tag, v.real)
        return complex_unary(tag, v)
    return real_unary(tag, v, strict_real=False)


# -- public contract ----------------------------------------------------------


def real_from_decimal(text: str, prec: int) -> BigReal:
    """Parse a signed decimal literal, correctly rounded to ``prec`` bits."""
    _check_prec(prec)
    s = text.strip()
    if not _DECIMAL_RE.match(s):
        raise ParseError(f"malformed decimal literal {text!r}", position=0)
    return BigReal.exact(Fraction(s), prec)


def real_fn(tag: str, a: BigReal) -> BigReal:
    if tag not in REAL_TAGS:
        raise ValueError(f"unknown real function tag {tag!r}")
    with mp.workprec(a.prec + _FN_GUARD):
        v = real_unary(tag, a.value, strict_real=True)
    return BigReal.exact(v, a.prec)


def complex_fn(tag: str, a: BigComplex, b: BigComplex | None = None) -> BigComplex:
    if tag not in COMPLEX_TAGS:
        raise ValueError(f"unknown complex function tag {tag!r}")
    if tag in ("mul", "add"):
        if b is None:
            raise TypeError(f"complex_fn({tag!r}) needs two operands")
        p = min(a.prec, b.prec)
        with mp.workprec(p):
            za, zb = a.to_mpc(), b.to_mpc()
            if a.is_real() and b.is_real():
                v = za.real * zb.real if tag == "mul" else za.real + zb.real
            else:
                v = za * zb if tag == "mul" else za + zb
        return BigComplex.from_mpc(v, p)
    with mp.workprec(a.prec + _FN_GUARD):
        v = unary(tag, a.to_mpc())
    return BigComplex.from_mpc(v, a.prec)


def complex_asin(a: BigComplex) -> BigComplex:
    """Principal arcsin built from the atan and sqrt kernels."""
    with mp.workprec(a.prec + _FN_GUARD):
        z = a.to_mpc()
        root = complex_unary("sqrt", 1 - z * z)
        if root == 0:
            raise DomainError("asin at +-1 is outside the atan/sqrt form")
        v = complex_unary("atan", z / root)
    return BigComplex.from_mpc(v, a.prec)


def agreement_bits(a, b) -> float:
    """Number of leading bits on which two values agree (relative)."""
    a = a.to_mpc() if isinstance(a, BigComplex) else getattr(a, "value", a)
    b = b.to_mpc() if isinstance(b, BigComplex) else getattr(b, "value", b)
    with mp.workprec(max(mp.prec, 4096)):
        diff = abs(a - b)
        scale = max(abs(a), abs(b))
        if diff == 0:
            return math.inf
        if scale == 0:
            return -math.inf
        return float(-mpmath.log(diff / scale, 2))


def double_evaluation(fn, prec: int) -> float:
    """Run ``fn(prec)`` and ``fn(2*prec)`` and return their agreement in bits."""
    return agreement_bits(fn(prec), fn(2 * prec))
