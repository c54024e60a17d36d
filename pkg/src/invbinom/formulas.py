"""Closed-form right-hand sides as expression text.

Each builder returns a string in the expression grammar, with the argument
substituted as parenthesised text.  The catalog stores concrete instances
produced here, and the boundary-limit verifier rebuilds them at interior
points.
"""

from __future__ import annotations

from fractions import Fraction

from .closedform import exact_rational, parse_expr, to_text
from .exactseq import fibonacci, lucas

__all__ = [
    "y_text",
    "z_text",
    "point_text",
    "b4n_form",
    "b4n_y_form",
    "b4n2_form",
    "b4n_trig_form",
    "b4n2_trig_form",
    "fib_prop_form",
    "fib_lucas_form",
    "cat_o2_form",
    "arcsin2_form",
    "arcsin3_form",
    "family_form",
]


def _p(text):
    return f"({text})"


def point_text(q) -> str:
    """Expression text for a rational or integer point."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator) if q >= 0 else f"(-{-q.numerator})"
    s = f"{abs(q.numerator)}/{q.denominator}"
    return s if q > 0 else f"(-{s})"


def y_text(x: str) -> str:
    """y(x) = (sqrt(x^2 + 16) - 4)/x."""
    X = _p(x)
    return f"(sqrt({X}^2+16)-4)/{X}"


def z_text(x: str) -> str:
    """z(x) = (sqrt(1 + 16x^2) - 1)/(4x)."""
    X = _p(x)
    return f"(sqrt(1+16*{X}^2)-1)/(4*{X})"


# Sums over n >= 1 of (-1)^(n-1) x^(2n) / (n^w C(4n,2n)), in terms of Y = y(x).
_B4N = {
    2: "8*(atanh(U)^2-atan(U)^2)",
    1: "4*U*(Y^2-1)/(Y^2+1)*(atan(U)/(Y+1)+atanh(U)/(Y-1))",
    0: ("4*Y^2/(Y^2+1)^2"
        "+((Y-1)^3/(Y^2+1)^2-8*(Y-1)*Y^2/(Y^2+1)^3)*U*atan(U)"
        "+((Y+1)^3/(Y^2+1)^2-8*(Y+1)*Y^2/(Y^2+1)^3)*U*atanh(U)"),
}

# Sums over n >= 0 of (-1)^n x^(2n+1) / ((2n+1)^w C(4n+2,2n+1)).
_B4N2 = {
    2: "4*atanh(U)*atan(U)",
    1: "2*U*(1-Y^2)/(1+Y^2)*(atanh(U)/(1+Y)+atan(U)/(1-Y))",
    0: ("2*Y*(1-Y^2)/(1+Y^2)^2"
        "+(1+Y)*(1-Y)^2*(Y^2+4*Y+1)/(1+Y^2)^3*U*atan(U)"
        "+(1-Y)*(1+Y)^2*(Y^2-4*Y+1)/(1+Y^2)^3*U*atanh(U)"),
}

# The same sums rewritten for x = 8y/(1-y^2), normalized by 8^(2n-1) (w = 2, 1)
# and 8^(2n) (w = 0).
_B4N_Y = {
    2: "atanh(U)^2-atan(U)^2",
    1: "U*(1-Y^2)/(2*(1+Y^2))*(atanh(U)/(1-Y)-atan(U)/(1+Y))",
    0: ("(1-Y)*(1+4*Y+Y^2)*(1-Y^2)/(1+Y^2)^3*U*atanh(U)"
        "-(1+Y)*(1-4*Y+Y^2)*(1-Y^2)/(1+Y^2)^3*U*atan(U)+4*Y^2/(1+Y^2)^2"),
}

# x = 4 tan(theta): SN, CS = sin, cos of theta; SN2, CS2 of 2 theta; U = sqrt(tan(theta/2)).
_B4N_TRIG = {
    2: "8*atanh(U)^2-8*atan(U)^2",
    1: "2*U*((SN+CS+1)*atanh(U)+(SN-CS-1)*atan(U))",
    0: ("(SN2+CS2+SN+CS)*CS*U*atanh(U)/2"
        "+(SN2-CS2+SN-CS)*CS*U*atan(U)/2+SN^2"),
}

# Scaled by 1/4: sums of (-16)^n tan^(2n+1)(theta) / ((2n+1)^w C(4n+2,2n+1)).
_B4N2_TRIG = {
    2: "atanh(U)*atan(U)",
    1: "U/4*((1-SN+CS)*atanh(U)+(1+SN+CS)*atan(U))",
    0: ("SN2/8-CS/8*(SN2-CS2+SN-CS)*U*atanh(U)"
        "+CS/8*(SN2+CS2+SN+CS)*U*atan(U)"),
}


def _fill(template: str, **subs) -> str:
    # single-letter and short uppercase placeholders; longest first
    out = template
    for key in sorted(subs, key=len, reverse=True):
        out = out.replace(key, _p(subs[key]))
    return out


def b4n_form(weight: int, y: str) -> str:
    return _fill(_B4N[weight], U=f"sqrt({_p(y)})", Y=y)


def b4n2_form(weight: int, y: str) -> str:
    return _fill(_B4N2[weight], U=f"sqrt({_p(y)})", Y=y)


def b4n_y_form(weight: int, y: str) -> str:
    return _fill(_B4N_Y[weight], U=f"sqrt({_p(y)})", Y=y)


def _trig(template, sn, cs, sn2, cs2, tan_half):
    return _fill(template, SN2=sn2, CS2=cs2, SN=sn, CS=cs, U=f"sqrt({_p(tan_half)})")


def b4n_trig_form(weight, sn, cs, sn2, cs2, tan_half) -> str:
    return _trig(_B4N_TRIG[weight], sn, cs, sn2, cs2, tan_half)


def b4n2_trig_form(weight, sn, cs, sn2, cs2, tan_half) -> str:
    return _trig(_B4N2_TRIG[weight], sn, cs, sn2, cs2, tan_half)


def fib_prop_form(weight: int, r: int) -> str:
    """Golden-ratio closed forms at x = 8/(sqrt(5) F_r) (r even) or 8/L_r (r odd)."""
    F, L = fibonacci(r), lucas(r)
    a = f"alpha^{r}"
    q = f"sqrt({a})"
    ln = f"ln(({q}+1)/({q}-1))"
    k = f"acot({q})"
    if weight == 2:
        return f"2*{ln}^2-8*{k}^2"
    if r % 2 == 0:
        if weight == 1:
            return f"2/({q}*{L})*(({a}+1)*{ln}-2*({a}-1)*{k})"
        return (f"4/{L}^2+5*{q}*{F}^2/(2*{L}^3)"
                f"*(({L}+4)/({a}+1)*{ln}-2*({L}-4)/({a}-1)*{k})")
    if weight == 1:
        return f"2*{q}*{L}/(sqrt(5)*{F})*({ln}/({a}-1)-2/({a}+1)*{k})"
    return (f"4/(5*{F}^2)+sqrt(5)*{L}/(50*{q}*{F}^3)"
            f"*(({a}-1)*(sqrt(5)*{F}+4)*{ln}-2*({a}+1)*(sqrt(5)*{F}-4)*{k})")


_TH_PARTS = {
    2: "atan(Z)*atanh(Z)",
    1: "Z*(1-Z^4)/(1+Z^4)*(atanh(Z)/(1+Z^2)+atan(Z)/(1-Z^2))",
    0: ("2*Z^2*(1-Z^4)/(1+Z^4)^2"
        "+Z*(1+Z^2)*(1-Z^2)^2*(Z^4+4*Z^2+1)/(1+Z^4)^3*atan(Z)"
        "+Z*(1-Z^2)*(1+Z^2)^2*(Z^4-4*Z^2+1)/(1+Z^4)^3*atanh(Z)"),
}
_TH_FACTOR = {2: "4", 1: "2", 0: "1"}


def _power(base: str, k: int) -> str:
    if k == 0:
        return "1"
    if k == 1:
        return base
    return f"{base}^{k}" if k > 0 else f"{base}^(-{-k})"


def fib_lucas_form(kind: str, weight: int, shift: int) -> str:
    """Sum of (-1)^n X_(2n+s) / ((2n+1)^w C(4n+2,2n+1)) for X = L or F, via A and B.

    For ``kind == "F"`` with weight 0 the result is sqrt(5) times the sum.
    """
    pa = _fill(_TH_PARTS[weight], Z="A")
    pb = _fill(_TH_PARTS[weight], Z="B")
    ca = _power("alpha", shift - 1)
    cb = _power("beta", shift - 1)
    op = "+" if kind == "L" else "-"
    body = f"{ca}*{_p(pa)}{op}{cb}*{_p(pb)}"
    if weight == 0:
        return body
    pre = _TH_FACTOR[weight] if kind == "L" else f"{_TH_FACTOR[weight]}/sqrt(5)"
    return f"{pre}*({body})"


def cat_o2_form(which: str, x: str) -> str:
    """Closed forms for the Catalan/odd-harmonic sums at point x (0 < |x| <= 1/4)."""
    X = _p(x)
    u = f"sqrt({_p(z_text(x))})"
    a, h = f"atan({u})", f"atanh({u})"
    if which == "A":
        return f"({a}+{h})/(24*sqrt(2*{X}^3))*({a}^2-4*{a}*{h}+{h}^2)"
    return f"({a}-{h})/(24*sqrt(2*{X}^5))*({a}^2+4*{a}*{h}+{h}^2)"


def arcsin2_form(x: str) -> str:
    """2 arcsin(x)^2 written with atan: arcsin x = atan(x / sqrt(1 - x^2))."""
    X = _p(x)
    return f"2*atan({X}/sqrt(1-{X}^2))^2"


def arcsin3_form(x: str) -> str:
    X = _p(x)
    return f"atan({X}/sqrt(1-{X}^2))^3/3"


def family_form(spec) -> str:
    """General closed form for an arbitrary SeriesSpec, scale and sign included.

    Used to re-evaluate a right-hand side at points other than the
    catalogued one.  LUCAS_W and FIB_W are supported at x = 1 only.
    """
    from .series import Family  # local: series imports closedform only

    x = to_text(spec.point)
    fam, w = spec.family, spec.weight
    if fam is Family.B4N:
        core = b4n_form(w, y_text(x))
        if spec.start == 0:
            core = f"{core}-1"
    elif fam is Family.B4N2:
        core = b4n2_form(w, y_text(x))
    elif fam in (Family.LUCAS_W, Family.FIB_W):
        # y(beta) is a negative real, on the sqrt cut: only x = 1 has a form,
        # written with the constants A and B
        if exact_rational(spec.point) != 1:
            raise ValueError("Fibonacci/Lucas closed forms are catalogued at x = 1 only")
        kind = "L" if fam is Family.LUCAS_W else "F"
        core = fib_lucas_form(kind, w, spec.shift)
        if kind == "F" and w == 0:
            core = f"({core})/sqrt(5)"
    elif fam is Family.CAT_O2_A:
        core = cat_o2_form("A", x)
    elif fam is Family.CAT_O2_B:
        core = cat_o2_form("B", x)
    elif fam is Family.ARCSIN2_ORACLE:
        core = arcsin2_form(x)
    else:
        core = arcsin3_form(x)
    sign = "" if spec.sign == "plus" else "-"
    text = f"{sign}{_p(to_text(spec.scale))}*({core})"
    return to_text(parse_expr(text))

