"""Series families, parametrizations and the error-bounded summation engine.

Every family is a power series in ``x**2`` whose coefficients are exact
rationals.  Written out, with ``e`` the family's power offset::

    sum_{n >= start} scale * sign * c_n * x**(2n + e)

    B4N             c_n = (-1)^(n-1) / (n^w C(4n, 2n))                        e = 0
    B4N2            c_n = (-1)^n / ((2n+1)^w C(4n+2, 2n+1))                   e = 1
    LUCAS_W         c_n = (-1)^n L_(2n+s) / ((2n+1)^w C(4n+2, 2n+1))          e = 0
    FIB_W           c_n = (-1)^n F_(2n+s) / ((2n+1)^w C(4n+2, 2n+1))          e = 0
    CAT_O2_A        c_n = (-1)^(n+1) (4n+1)/(4n+3) O2_(2n) Cat_(2n)           e = 0
    CAT_O2_B        c_n = (-1)^(n+1) (4n+3)/(4n+5) O2_(2n+1) Cat_(2n+1)       e = 0
    ARCSIN2_ORACLE  c_n = 4^n / (n^2 C(2n, n))                                e = 0
    ARCSIN3_ORACLE  c_n = (2n+1)/(2n+3) Cat_n O2_n / 4^n                      e = 3

The engine picks one of three methods per series:

* ``direct``: plain summation with a geometric tail bound.
* ``alternating_remainder``: plain summation of an alternating series,
  bounded by the first omitted term once magnitudes decrease.
* ``accelerated``: Cohen-Rodriguez Villegas-Zagier for alternating terms,
  Levin's u-transform otherwise.  The tail bound is then an estimate taken
  from two orders of the transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import comb

from mpmath import mp, mpc, mpf

from . import exactseq
from .closedform import (
    Expr,
    IntLit,
    RatLit,
    Unary,
    eval_raw,
    exact_rational,
    exact_square,
    parse_expr,
    to_text,
)
from .errors import (
    BudgetExceededError,
    ConfigurationError,
    ConvergenceError,
    OracleInapplicableError,
    PoleError,
    PreconditionError,
)
from .hpcore import BigComplex, BigReal, working_precision

DEFAULT_MAX_TERMS = 10**6
RATIO_CAP = Fraction(97, 100)
# above this asymptotic ratio the geometric route is not attempted
DIRECT_RATIO = 0.94
# largest term count the plain alternating route may plan for
ALTERNATING_DIRECT_BUDGET = 20000
_RATIO_WINDOW_START = 16


class Family(str, Enum):
    B4N = "B4N"
    B4N2 = "B4N2"
    LUCAS_W = "LUCAS_W"
    FIB_W = "FIB_W"
    CAT_O2_A = "CAT_O2_A"
    CAT_O2_B = "CAT_O2_B"
    ARCSIN2_ORACLE = "ARCSIN2_ORACLE"
    ARCSIN3_ORACLE = "ARCSIN3_ORACLE"


class Convergence(str, Enum):
    ABSOLUTE = "absolute"
    CONDITIONAL = "conditional"
    BOUNDARY_LIMIT = "boundary_limit"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class _FamilyInfo:
    weights: tuple
    start: int
    power_offset: int
    # asymptotic |t_(n+1)/t_n| = ratio_factor * |x^2|; None marks alpha^2/16
    ratio_factor: Fraction | None
    # does the coefficient sequence itself alternate in sign?
    alternating: bool


_INFO = {
    Family.B4N: _FamilyInfo((0, 1, 2), 1, 0, Fraction(1, 16), True),
    Family.B4N2: _FamilyInfo((0, 1, 2), 0, 1, Fraction(1, 16), True),
    Family.LUCAS_W: _FamilyInfo((0, 1, 2), 0, 0, None, True),
    Family.FIB_W: _FamilyInfo((0, 1, 2), 0, 0, None, True),
    Family.CAT_O2_A: _FamilyInfo((0,), 0, 0, Fraction(16), True),
    Family.CAT_O2_B: _FamilyInfo((0,), 0, 0, Fraction(16), True),
    Family.ARCSIN2_ORACLE: _FamilyInfo((2,), 1, 0, Fraction(1), False),
    Family.ARCSIN3_ORACLE: _FamilyInfo((0,), 0, 3, Fraction(1), False),
}


def _as_expr(v):
    if isinstance(v, str):
        return parse_expr(v)
    if isinstance(v, (int, Fraction)):
        q = Fraction(v)
        lit = IntLit(abs(q.numerator)) if q.denominator == 1 else RatLit(abs(q.numerator), q.denominator)
        return lit if q >= 0 else Unary("neg", lit)
    return v


@dataclass(frozen=True)
class SeriesSpec:
    """One concrete series: family, weight, shift, sign, start, point, scale.

    ``sign`` is ``"plus"`` or ``"minus"`` and flips the family's native sign
    convention; ``scale`` multiplies the whole sum, so that a sum such as
    ``sum (-9)^n / ((2n+1)^w C(4n+2,2n+1))`` is the B4N2 series at x = 3
    scaled by 1/3.
    """

    family: Family
    weight: int = 0
    shift: int = 0
    sign: str = "plus"
    start: int | None = None
    point: Expr = IntLit(1)
    scale: Expr = IntLit(1)

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "point", _as_expr(self.point))
        object.__setattr__(self, "scale", _as_expr(self.scale))
        info = _INFO[fam]
        if self.start is None:
            object.__setattr__(self, "start", info.start)
        if self.weight not in info.weights:
            raise ValueError(f"{fam.value} does not take weight {self.weight}")
        if self.sign not in ("plus", "minus"):
            raise ValueError(f"sign must be 'plus' or 'minus', got {self.sign!r}")
        lowest = 0 if (fam is Family.B4N and self.weight == 0) else info.start
        if self.start not in (0, 1) or self.start < lowest:
            raise ValueError(f"{fam.value} with weight {self.weight} cannot start at n = {self.start}")
        if self.shift and fam not in (Family.LUCAS_W, Family.FIB_W):
            raise ValueError("shift only applies to LUCAS_W and FIB_W")


def sign_flag(family, sign_exponent: int) -> str:
    """Map a written sign ``(-1)^(n + sign_exponent)`` onto the ``sign`` flag.

    Each family has a native sign (``(-1)^(n-1)`` for B4N, ``(-1)^n`` for the
    C(4n+2, 2n+1) families, ``(-1)^(n+1)`` for the Catalan pair and none for
    the oracles).
    """
    native = {
        Family.B4N: -1,
        Family.B4N2: 0,
        Family.LUCAS_W: 0,
        Family.FIB_W: 0,
        Family.CAT_O2_A: 1,
        Family.CAT_O2_B: 1,
    }.get(Family(family))
    if native is None:
        raise ValueError(f"{Family(family).value} carries no alternating sign")
    return "plus" if (sign_exponent - native) % 2 == 0 else "minus"


@dataclass(frozen=True)
class SumResult:
    value: BigComplex
    tail_bound: BigReal
    terms_used: int
    method: str
    convergence_class: Convergence
    notes: tuple = field(default=())


# -- parametrizations ---------------------------------------------------------------


def _unwrap(z):
    if isinstance(z, BigComplex):
        return z.to_mpc(), z.prec
    if isinstance(z, BigReal):
        return z.value, z.prec
    raise TypeError("expected BigComplex or BigReal")


def _wrap(v, prec):
    return BigComplex.from_mpc(v, prec)


def _real_if_possible(v):
    if isinstance(v, mpc) and v.imag == 0:
        return v.real
    return v


def y_of_x(x) -> BigComplex:
    """(sqrt(x^2 + 16) - 4) / x on the principal branch; 0 at x = 0."""
    v, p = _unwrap(x)
    with mp.workprec(p + 16):
        v = _real_if_possible(v)
        if v == 0:
            return _wrap(mpf(0), p)
        r = (mp.sqrt(v * v + 16) - 4) / v
    return _wrap(r, p)


def x_of_y(y) -> BigComplex:
    """8y / (1 - y^2)."""
    v, p = _unwrap(y)
    with mp.workprec(p + 16):
        v = _real_if_possible(v)
        den = 1 - v * v
        if den == 0:
            raise PoleError("x(y) has a pole at y = +-1")
        r = 8 * v / den
    return _wrap(r, p)


def z_of_x(x) -> BigComplex:
    """(sqrt(1 + 16 x^2) - 1) / (4x); 0 at x = 0."""
    v, p = _unwrap(x)
    # cancellation in sqrt(1 + 16x^2) - 1 costs about -2 log2|x| bits
    with mp.workprec(p + 16):
        v = _real_if_possible(v)
        if v == 0:
            return _wrap(mpf(0), p)
        extra = max(0, int(-2 * mp.log(abs(v), 2))) + 16
    with mp.workprec(p + extra):
        r = (mp.sqrt(1 + 16 * v * v) - 1) / (4 * v)
    return _wrap(r, p)


# -- exact coefficients --------------------------------------------------------------


def coefficient(spec: SeriesSpec, n: int) -> Fraction:
    """Exact c_n, native sign included, from the exact sequence kernels."""
    fam, w = spec.family, spec.weight
    if fam is Family.B4N:
        if n == 0:
            return Fraction(-1)
        return Fraction((-1) ** (n - 1), n**w * exactseq.binom4n2n(n))
    if fam is Family.B4N2:
        return Fraction((-1) ** n, (2 * n + 1) ** w * exactseq.binom4n2_2n1(n))
    if fam in (Family.LUCAS_W, Family.FIB_W):
        seq = exactseq.lucas if fam is Family.LUCAS_W else exactseq.fibonacci
        return Fraction((-1) ** n * seq(2 * n + spec.shift),
                        (2 * n + 1) ** w * exactseq.binom4n2_2n1(n))
    if fam is Family.CAT_O2_A:
        return ((-1) ** (n + 1) * Fraction(4 * n + 1, 4 * n + 3)
                * exactseq.odd_harmonic2(2 * n) * exactseq.catalan(2 * n))
    if fam is Family.CAT_O2_B:
        return ((-1) ** (n + 1) * Fraction(4 * n + 3, 4 * n + 5)
                * exactseq.odd_harmonic2(2 * n + 1) * exactseq.catalan(2 * n + 1))
    if fam is Family.ARCSIN2_ORACLE:
        return Fraction(4**n, n * n * comb(2 * n, n))
    if fam is Family.ARCSIN3_ORACLE:
        return (Fraction(2 * n + 1, 2 * n + 3) * exactseq.catalan(n)
                * exactseq.odd_harmonic2(n) / 4**n)
    raise ValueError(fam)


def _sign(spec):
    return 1 if spec.sign == "plus" else -1


def term(spec: SeriesSpec, n: int, prec: int) -> BigComplex:
    """The n-th summand at ``prec`` bits, computed directly (no recurrence)."""
    if n < spec.start:
        raise PreconditionError(f"term index {n} precedes start index {spec.start}")
    c = coefficient(spec, n)
    e = _INFO[spec.family].power_offset
    with mp.workprec(prec + 32):
        x = eval_raw(spec.point, prec + 32)
        scale = eval_raw(spec.scale, prec + 32)
        v = _sign(spec) * scale * (mpf(c.numerator) / c.denominator) * x ** (2 * n + e)
    return _wrap(_real_if_possible(v), prec)


def partial_sum_exact(spec: SeriesSpec, N: int) -> Fraction:
    """Exact rational sum of the first ``N`` terms (brute-force oracle)."""
    x2 = exact_square(spec.point)
    e = _INFO[spec.family].power_offset
    scale = exact_rational(spec.scale)
    if x2 is None or scale is None:
        raise OracleInapplicableError("point^2 and scale must be exact rationals")
    xe = Fraction(1)
    if e:
        x = exact_rational(spec.point)
        if x is None:
            raise OracleInapplicableError(
                f"{spec.family.value} needs a rational point (odd power x^{e})")
        xe = x**e
    total = Fraction(0)
    for n in range(spec.start, spec.start + N):
        total += coefficient(spec, n) * x2**n
    return _sign(spec) * scale * xe * total


# -- convergence classification ------------------------------------------------------


def _ratio_vs_one(spec):
    """(comparison of rho = asymptotic ratio with 1, rho as float, x^2 exact or None)."""
    info = _INFO[spec.family]
    x2 = exact_square(spec.point)
    if x2 is not None and info.ratio_factor is not None:
        rho = abs(x2) * info.ratio_factor
        return (rho > 1) - (rho < 1), float(rho), x2
    with mp.workprec(256):
        z = eval_raw(spec.point, 256)
        if info.ratio_factor is None:
            factor = (3 + mp.sqrt(5)) / 32
        else:
            factor = mpf(info.ratio_factor.numerator) / info.ratio_factor.denominator
        rho = abs(z * z) * factor
        if abs(rho - 1) < mpf(2) ** -200:
            return 0, 1.0, x2
        return (1 if rho > 1 else -1), float(rho), x2


def _terms_alternate(spec, x2_value):
    """Do the summands alternate in sign?  ``x2_value`` is x^2 as mpf/mpc."""
    if isinstance(x2_value, mpc):
        if x2_value.imag != 0:
            return False
        x2_value = x2_value.real
    if x2_value == 0:
        return False
    native = _INFO[spec.family].alternating
    return native if x2_value > 0 else not native


def _x2_value(spec, prec=256):
    with mp.workprec(prec):
        z = eval_raw(spec.point, prec)
        return _real_if_possible(z * z)


def classify_convergence(spec: SeriesSpec) -> Convergence:
    cmp, _, _ = _ratio_vs_one(spec)
    if cmp < 0:
        return Convergence.ABSOLUTE
    if cmp > 0:
        return Convergence.DIVERGENT
    fam = spec.family
    if fam in (Family.CAT_O2_A, Family.CAT_O2_B, Family.ARCSIN2_ORACLE, Family.ARCSIN3_ORACLE):
        # magnitudes ~ n^(-3/2) on the boundary circle
        return Convergence.ABSOLUTE
    # C(4n,2n)-type families: magnitudes ~ n^(1/2 - w) on the boundary circle
    if spec.weight == 2:
        return Convergence.ABSOLUTE
    alternating = _terms_alternate(spec, _x2_value(spec))
    if not alternating:
        return Convergence.DIVERGENT
    return Convergence.CONDITIONAL if spec.weight == 1 else Convergence.BOUNDARY_LIMIT


# -- term streams ----------------------------------------------------------------------


def _term_stream(spec, x, pre):
    """Yield (n, t_n) for n >= native start using consecutive-term ratios.

    ``pre`` already holds scale * sign (* x^e); runs in the caller's precision.
    """
    fam, w = spec.family, spec.weight
    x2 = x * x
    if fam is Family.B4N:
        if spec.start == 0:
            yield 0, -pre
        n = 1
        t = pre * x2 / 6
        while True:
            yield n, (t / n**w if w else t)
            t = -t * x2 * (2 * n + 1) * (2 * n + 2) / (4 * (4 * n + 1) * (4 * n + 3))
            n += 1
    elif fam is Family.B4N2:
        n = 0
        t = pre / 2
        while True:
            yield n, (t / (2 * n + 1) ** w if w else t)
            t = -t * x2 * (2 * n + 2) * (2 * n + 3) / (4 * (4 * n + 3) * (4 * n + 5))
            n += 1
    elif fam in (Family.LUCAS_W, Family.FIB_W):
        seq = exactseq.lucas if fam is Family.LUCAS_W else exactseq.fibonacci
        u0, u1 = seq(spec.shift), seq(spec.shift + 1)
        n = 0
        t = pre / 2
        while True:
            v = t * u0
            yield n, (v / (2 * n + 1) ** w if w else v)
            u0, u1 = u0 + u1, u0 + 2 * u1
            t = -t * x2 * (2 * n + 2) * (2 * n + 3) / (4 * (4 * n + 3) * (4 * n + 5))
            n += 1
    elif fam is Family.CAT_O2_A:
        n = 0
        g = -pre
        o2 = mpf(1)
        while True:
            yield n, g * o2 * (4 * n + 1) / (4 * n + 3)
            g = -g * x2 * 4 * (4 * n + 1) * (4 * n + 3) / ((2 * n + 2) * (2 * n + 3))
            o2 += mpf(1) / (4 * n + 3) ** 2 + mpf(1) / (4 * n + 5) ** 2
            n += 1
    elif fam is Family.CAT_O2_B:
        n = 0
        g = -pre
        o2 = mpf(10) / 9
        while True:
            yield n, g * o2 * (4 * n + 3) / (4 * n + 5)
            g = -g * x2 * 4 * (4 * n + 3) * (4 * n + 5) / ((2 * n + 3) * (2 * n + 4))
            o2 += mpf(1) / (4 * n + 5) ** 2 + mpf(1) / (4 * n + 7) ** 2
            n += 1
    elif fam is Family.ARCSIN2_ORACLE:
        n = 1
        t = pre * 2 * x2
        while True:
            yield n, t / (n * n)
            t = t * x2 * 2 * (n + 1) / (2 * n + 1)
            n += 1
    elif fam is Family.ARCSIN3_ORACLE:
        n = 0
        g = pre
        o2 = mpf(1)
        while True:
            yield n, g * o2 * (2 * n + 1) / (2 * n + 3)
            g = g * x2 * (2 * n + 1) / (2 * (n + 2))
            o2 += mpf(1) / (2 * n + 3) ** 2
            n += 1
    else:
        raise ValueError(fam)


def _stream_from_start(spec, x, pre):
    for n, t in _term_stream(spec, x, pre):
        if n >= spec.start:
            yield _real_if_possible(t)


def term_stream(spec: SeriesSpec, prec: int):
    """Iterator over the summands (bare mpf/mpc) of ``spec`` at ``prec`` bits.

    Consume it under ``mp.workprec(prec)``.
    """
    with mp.workprec(prec):
        x = _real_if_possible(eval_raw(spec.point, prec))
        pre = _sign(spec) * eval_raw(spec.scale, prec)
        e = _INFO[spec.family].power_offset
        if e:
            pre = pre * x**e
        pre = _real_if_possible(pre)
    return _stream_from_start(spec, x, pre)


# -- summation methods -----------------------------------------------------------------


class _Reroute(Exception):
    pass


def _eps(digits):
    return mpf(10) ** (-(digits + 5))


def _sum_direct(stream, eps, max_terms, prec):
    s = mpf(0)
    q = mpf(0)
    cap = mpf(RATIO_CAP.numerator) / RATIO_CAP.denominator
    prev = None
    used = 0
    for idx, t in enumerate(stream):
        a = abs(t)
        if prev:
            ratio = a / prev
            if idx >= _RATIO_WINDOW_START:
                q = max(q, ratio)
        if idx >= _RATIO_WINDOW_START and a != 0:
            if q > cap:
                raise _Reroute(f"ratio {mp.nstr(q, 5)} above cap after {idx} terms")
            bound = a / (1 - q)
            if bound < eps:
                return s, bound, used, (f"geometric tail with ratio cap {mp.nstr(q, 6)}",)
        s += t
        used += 1
        if used >= max_terms:
            raise BudgetExceededError(f"direct summation exceeded {max_terms} terms")
        prev = a
    raise AssertionError("term streams are infinite")


def _sum_alternating(stream, eps, max_terms):
    s = mpf(0)
    prev = None
    crossover = None
    used = 0
    for idx, t in enumerate(stream):
        if isinstance(t, mpc):
            raise _Reroute("complex terms")
        a = abs(t)
        if prev is not None:
            if (t > 0) == (prev > 0) or t == 0:
                raise _Reroute(f"sign pattern breaks at index {idx}")
            if a >= abs(prev):
                crossover = None
            elif crossover is None:
                crossover = idx - 1
        if crossover is not None and a < eps:
            note = f"magnitudes decrease monotonically from index {crossover}"
            return s, a, used, (note,)
        s += t
        used += 1
        if used >= max_terms:
            raise BudgetExceededError(f"alternating summation exceeded {max_terms} terms")
        prev = t
    raise AssertionError("term streams are infinite")


def _crvz(a, n):
    """Cohen-Rodriguez Villegas-Zagier estimate of sum (-1)^k a_k from n terms."""
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    half = mpf(1) / 2
    for k in range(n):
        c = b - c
        s += c * a[k]
        b = b * (k + n) * (k - n) / ((k + half) * (k + 1))
    return s / d


_CRVZ_GAP = 6


def _take(it, cache, n):
    while len(cache) < n:
        cache.append(next(it))
    return cache


def accelerate_alternating(term_source, digits: int, *, max_terms: int = DEFAULT_MAX_TERMS,
                           prec: int | None = None) -> SumResult:
    """Sum an alternating series to ``digits`` digits with the CRVZ transform.

    ``term_source`` is an iterable of signed terms (or a callable ``n -> t_n``).
    The error estimate is the change between ``n`` and ``n + 6`` terms of the
    transform, which converges like 5.83^-n for moment-type sequences.
    """
    p = prec or working_precision(digits)
    if callable(term_source):
        f = term_source
        term_source = (f(k) for k in _count())
    it = iter(term_source)
    cache = []
    notes = []
    with mp.workprec(p + 32):
        eps = _eps(digits)
        _take(it, cache, 8)
        ts = [_real_if_possible(_as_mp(t)) for t in cache[:8]]
        if any(isinstance(t, mpc) for t in ts) or any(t == 0 for t in ts):
            raise PreconditionError("terms must be real and non-zero to alternate")
        if any((ts[k] > 0) == (ts[k + 1] > 0) for k in range(7)):
            raise PreconditionError("terms do not alternate in sign")
        s0 = 1 if ts[0] > 0 else -1
        n = math.ceil(1.31 * (digits + 5)) + 2
        while True:
            m = n + _CRVZ_GAP
            if m > max_terms:
                raise BudgetExceededError(f"acceleration needs more than {max_terms} terms")
            _take(it, cache, m)
            a = [abs(_as_mp(t)) for t in cache[:m]]
            signs_ok = all((_as_mp(cache[k]) > 0) != (_as_mp(cache[k + 1]) > 0) for k in range(m - 1))
            if not signs_ok:
                raise PreconditionError("terms do not alternate in sign")
            lo = _crvz(a, n)
            hi = _crvz(a, m)
            err = abs(hi - lo)
            if err < eps:
                break
            n = math.ceil(n * 1.3)
        if any(a[k + 1] > a[k] for k in range(m - 1)):
            notes.append("term magnitudes not monotone over the sampled range; "
                         "accuracy rests on the order-comparison estimate")
        value = s0 * hi
    with mp.workprec(p):
        return SumResult(_wrap(+value, p), BigReal(+err, p), m, "accelerated",
                         Convergence.ABSOLUTE, tuple(notes + ["CRVZ alternating transform"]))


def _count():
    k = 0
    while True:
        yield k
        k += 1


def _as_mp(t):
    if isinstance(t, BigComplex):
        return _real_if_possible(t.to_mpc())
    if isinstance(t, BigReal):
        return t.value
    return t


def _levin_u(terms, k, beta=1):
    """Levin u-transform of order k using partial sums S_0..S_k."""
    partial = []
    s = 0
    for t in terms[: k + 1]:
        s += t
        partial.append(s)
    num = 0
    den = 0
    ref = mpf(beta + k)
    for j in range(k + 1):
        w = (-1) ** j * comb(k, j) * (mpf(beta + j) / ref) ** (k - 1)
        omega = (beta + j) * terms[j]
        num += w * partial[j] / omega
        den += w / omega
    return num / den


def accelerate_monotone(term_source, digits: int, *, max_terms: int = DEFAULT_MAX_TERMS,
                        prec: int | None = None) -> SumResult:
    """Levin u-transform for slowly convergent same-sign series.

    The transform cancels heavily, so it runs at a little over twice the
    target precision.  Error estimate: change between orders k - 10 and k.
    """
    p = prec or working_precision(digits)
    it = iter(term_source)
    cache = []
    inner = 2 * p + 64
    with mp.workprec(inner):
        eps = _eps(digits)
        k = math.ceil((digits + 5) / 0.85) + 5
        while True:
            if k + 1 > max_terms or k > 2000:
                raise BudgetExceededError("Levin transform did not settle")
            _take(it, cache, k + 1)
            terms = [_as_mp(t) for t in cache]
            if any(t == 0 for t in terms[: k + 1]):
                raise PreconditionError("Levin transform needs non-zero terms")
            hi = _levin_u(terms, k)
            lo = _levin_u(terms, k - 10)
            err = abs(hi - lo)
            if err < eps:
                break
            k += 15
    with mp.workprec(p):
        return SumResult(_wrap(_real_if_possible(+hi), p), BigReal(+err, p), k + 1, "accelerated",
                         Convergence.ABSOLUTE, ("Levin u-transform",))


METHODS = ("direct", "alternating_remainder", "accelerated")


def sum_series(spec: SeriesSpec, target_digits: int, *, max_terms: int = DEFAULT_MAX_TERMS,
               prec: int | None = None, method: str | None = None) -> SumResult:
    """Sum ``spec`` so that the truncation error is below 10^-(target_digits+5).

    The route is chosen from the term ratio and sign pattern.  Passing
    ``method`` forces one route; a forced route whose preconditions fail
    raises PreconditionError instead of falling back.
    """
    if method is not None and method not in METHODS:
        raise ConfigurationError(f"unknown summation method {method!r}; expected one of {METHODS}")
    cls = classify_convergence(spec)
    if cls is Convergence.DIVERGENT:
        raise ConvergenceError(f"{spec.family.value} diverges at point {spec.point}")
    if cls is Convergence.BOUNDARY_LIMIT:
        raise ConvergenceError(
            f"{spec.family.value} weight {spec.weight} has growing terms at this point; "
            "use the boundary-limit scheme")
    p = prec or working_precision(target_digits)
    _, rho, _ = _ratio_vs_one(spec)

    def result(value, bound, used, method, notes=()):
        with mp.workprec(p):
            return SumResult(_wrap(_real_if_possible(+value), p), BigReal(+abs(bound), p),
                             used, method, cls, tuple(notes))

    with mp.workprec(p):
        eps = _eps(target_digits)
        x2 = _x2_value(spec, p)
        if x2 == 0:
            first = next(term_stream(spec, p))
            e = _INFO[spec.family].power_offset
            v = first if (spec.start == 0 and e == 0) else mpf(0)
            return result(v, 0, 1, "direct", ("x = 0: only the constant term survives",))
        alternating = _terms_alternate(spec, x2)
        notes = []
        if method == "direct" or (method is None and rho <= DIRECT_RATIO):
            try:
                s, bound, used, n = _sum_direct(term_stream(spec, p), eps, max_terms, p)
                return result(s, bound, used, "direct", n)
            except _Reroute as why:
                if method:
                    raise PreconditionError(f"direct summation not applicable: {why}") from None
                notes.append(f"direct route abandoned: {why}")
        if method == "alternating_remainder" or (method is None and alternating and rho < 1):
            needed = (target_digits + 5) * math.log(10) / -math.log(rho) if rho < 1 else math.inf
            if method or needed <= min(ALTERNATING_DIRECT_BUDGET, max_terms):
                try:
                    s, bound, used, n = _sum_alternating(term_stream(spec, p), eps, max_terms)
                    return result(s, bound, used, "alternating_remainder", notes + list(n))
                except _Reroute as why:
                    if method:
                        raise PreconditionError(
                            f"alternating remainder bound not applicable: {why}") from None
                    notes.append(f"alternating route abandoned: {why}")
    if alternating:
        r = accelerate_alternating(term_stream(spec, p + 32), target_digits, max_terms=max_terms, prec=p)
    else:
        r = accelerate_monotone(term_stream(spec, 2 * p + 64), target_digits, max_terms=max_terms, prec=p)
    return replace(r, convergence_class=cls, notes=tuple(notes) + r.notes)


def sum_fib_lucas_split(spec: SeriesSpec, target_digits: int, *,
                        max_terms: int = DEFAULT_MAX_TERMS) -> BigComplex:
    """Second route for LUCAS_W / FIB_W: Binet split into two C(4n+2,2n+1) sums.

    With T(u) = sum (-1)^n u^(2n+1) / ((2n+1)^w C(4n+2,2n+1)),
    sum (-1)^n L_(2n+s) x^(2n) / (...) = a^(s-1) T(a x)/x + b^(s-1) T(b x)/x
    for a, b = alpha, beta; the F version takes the difference over sqrt(5).
    """
    if spec.family not in (Family.LUCAS_W, Family.FIB_W):
        raise PreconditionError("the Binet split applies to LUCAS_W and FIB_W only")
    p = working_precision(target_digits)
    parts = []
    for root in ("alpha", "beta"):
        arg = parse_expr(f"{root}*({to_text(spec.point)})")
        half = SeriesSpec(Family.B4N2, spec.weight, point=arg)
        parts.append(sum_series(half, target_digits + 2, max_terms=max_terms, prec=p + 16).value)
    with mp.workprec(p + 16):
        x = eval_raw(spec.point, p + 16)
        scale = _sign(spec) * eval_raw(spec.scale, p + 16)
        a = (1 + mp.sqrt(5)) / 2
        b = (1 - mp.sqrt(5)) / 2
        s = spec.shift - 1
        ta, tb = parts[0].to_mpc(), parts[1].to_mpc()
        if spec.family is Family.LUCAS_W:
            v = (a**s * ta + b**s * tb) / x
        else:
            v = (a**s * ta - b**s * tb) / (x * mp.sqrt(5))
        v = _real_if_possible(scale * v)
    return _wrap(v, p)
