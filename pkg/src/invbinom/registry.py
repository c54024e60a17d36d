"""The identity catalog: built-in entries plus a line-oriented file format.

File format (UTF-8, one record per line, ``#`` starts a comment line)::

    @format 1
    id | ref | family,weight,shift,sign,start[,scale] | point | offset | rhs | class | digits | tags

Fields are separated by ``|``; a literal ``|`` or ``\\`` inside a field is
written ``\\|`` or ``\\\\``.  ``point``, ``scale`` and ``rhs`` use the
expression grammar of :mod:`invbinom.closedform`; ``offset`` is an exact
rational added to the summed series; ``tags`` is comma-separated.
"""

from __future__ import annotations

import difflib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import formulas as fm
from .closedform import Expr, eval_raw, parse_expr, to_text
from .errors import DomainError, DuplicateIdError, ParseError, UnknownIdError
from .series import Convergence, Family, SeriesSpec, classify_convergence

FORMAT_VERSION = 1
DEFAULT_DIGITS = {
    Convergence.ABSOLUTE: 50,
    Convergence.CONDITIONAL: 30,
    Convergence.BOUNDARY_LIMIT: 20,
    Convergence.DIVERGENT: 20,
}
_ANCHOR_RE = re.compile(r'"[^"]+"')


@dataclass(frozen=True)
class Identity:
    id: str
    ref: str
    lhs: SeriesSpec
    lhs_offset: Fraction
    rhs: Expr
    convergence_class: Convergence
    default_digits: int
    tags: tuple = ()

    @property
    def anchor(self) -> str:
        m = _ANCHOR_RE.search(self.ref)
        return m.group(0)[1:-1] if m else ""


@dataclass(frozen=True)
class Catalog:
    entries: tuple
    format_version: int = FORMAT_VERSION
    # (line number, id, reason) for records dropped at load time
    rejected: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        seen = set()
        for e in self.entries:
            if e.id in seen:
                raise DuplicateIdError(e.id)
            seen.add(e.id)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def ids(self):
        return [e.id for e in self.entries]


def make_identity(id, ref, lhs, rhs, *, offset=0, tags=(), digits=None) -> Identity:
    """Build an entry, classifying the series and picking default digits."""
    rhs = parse_expr(rhs) if isinstance(rhs, str) else rhs
    cls = classify_convergence(lhs)
    return Identity(id, ref, lhs, Fraction(offset), rhs, cls,
                    digits if digits is not None else DEFAULT_DIGITS[cls], tuple(tags))


def get_identity(catalog: Catalog, identity_id: str) -> Identity:
    for e in catalog.entries:
        if e.id == identity_id:
            return e
    near = difflib.get_close_matches(identity_id, catalog.ids(), n=5, cutoff=0.5)
    raise UnknownIdError(identity_id, near)


# -- built-in catalog -----------------------------------------------------------------

_B4N, _B4N2 = Family.B4N, Family.B4N2

_C4N_AT_ONE = (
    "16/17+2*sqrt(34)/289*(2*(sqrt(17)-2)/sqrt(sqrt(17)-1)*atan(sqrt(2)/sqrt(sqrt(17)-1))"
    "+(sqrt(17)+2)/sqrt(sqrt(17)+1)*ln((sqrt(sqrt(17)+1)-sqrt(2))/(sqrt(sqrt(17)+1)+sqrt(2))))"
)

# x = 3 and x = 1/sqrt(3) worked values, weights 2, 1, 0
_S_X3 = {
    2: "-2*pi^2/9+2*ln(2+sqrt(3))^2",
    1: "-2*sqrt(3)*pi/15+(4*sqrt(3)/5)*ln(2+sqrt(3))",
    0: "9/25+4*sqrt(3)*pi/375+22*sqrt(3)/125*ln(2+sqrt(3))",
}
_S_X1R3 = {
    2: "-pi^2/18+ln(3)^2/2",
    1: "-sqrt(3)/21*pi+2/7*ln(3)",
    0: "1/49-10*sqrt(3)/1029*pi+27/343*ln(3)",
}
_T_X3 = {
    2: "(pi/9)*ln(2+sqrt(3))",
    1: "2*pi/(15*sqrt(3))+ln(2+sqrt(3))/(5*sqrt(3))",
    0: "4/25+22*pi/(375*sqrt(3))-4/(125*sqrt(3))*ln(2+sqrt(3))",
}
_T_X1R3 = {
    2: "pi/(4*sqrt(3))*ln(3)",
    1: "pi/(7*sqrt(3))+3/14*ln(3)",
    0: "12/49+9*sqrt(3)*pi/343+30*ln(3)/343",
}

# theta = pi/4 (x = 4): silver-ratio logarithm and lambda = sqrt(sqrt(2)-1)
_LOG_SILVER = "ln(sqrt(2)+1+sqrt(2*(sqrt(2)+1)))"
_S_PI4 = {
    2: f"2*{_LOG_SILVER}^2-8*atan(sqrt(sqrt(2)-1))^2",
    1: f"sqrt(sqrt(2)+1)*{_LOG_SILVER}-2*sqrt(sqrt(2)-1)*atan(sqrt(sqrt(2)-1))",
    0: f"1/2+sqrt(2*(sqrt(2)+1))/8*{_LOG_SILVER}+sqrt(2*(sqrt(2)-1))/4*atan(sqrt(sqrt(2)-1))",
}
_T_PI4 = {
    2: f"1/2*{_LOG_SILVER}*atan(sqrt(sqrt(2)-1))",
    1: "sqrt(sqrt(2)-1)/4*atanh(sqrt(sqrt(2)-1))+sqrt(sqrt(2)+1)/4*atan(sqrt(sqrt(2)-1))",
    0: ("1/8-sqrt(2*(sqrt(2)-1))/16*atanh(sqrt(sqrt(2)-1))"
        "+sqrt(2*(sqrt(2)+1))/16*atan(sqrt(sqrt(2)-1))"),
}
_S_PI6 = {
    2: "2*ln(sqrt(2)+sqrt(3))^2-8*atan((sqrt(6)-sqrt(2))/2)^2",
    1: "sqrt(6)/2*ln(sqrt(2)+sqrt(3))-sqrt(2)*atan((sqrt(6)-sqrt(2))/2)",
    0: "1/4+sqrt(6)/8*ln(sqrt(2)+sqrt(3))",
}
_T_PI6 = {
    2: "sqrt(3)*atanh(sqrt(2-sqrt(3)))*atan(sqrt(2-sqrt(3)))",
    1: "sqrt(6)/8*(atanh(sqrt(2-sqrt(3)))+sqrt(3)*atan(sqrt(2-sqrt(3))))",
    0: "3/16*(1+sqrt(2)*atan(sqrt(2-sqrt(3))))",
}

# theta = pi/5: sin, cos, sin 2theta, cos 2theta, tan(theta/2)
_PI5 = (
    "sqrt(10-2*sqrt(5))/4",
    "(1+sqrt(5))/4",
    "sqrt(10+2*sqrt(5))/4",
    "(sqrt(5)-1)/4",
    "sqrt(25-10*sqrt(5))/5",
)

_LF_SHIFT_W2 = {
    ("L", 0): "4*(beta*atan(A)*atanh(A)+alpha*atan(B)*atanh(B))",
    ("F", 0): "4/sqrt(5)*(beta*atan(A)*atanh(A)-alpha*atan(B)*atanh(B))",
    ("L", 1): "4*(atan(A)*atanh(A)+atan(B)*atanh(B))",
    ("F", 1): "4/sqrt(5)*(atan(A)*atanh(A)-atan(B)*atanh(B))",
    ("L", 2): "4*(alpha*atan(A)*atanh(A)+beta*atan(B)*atanh(B))",
    ("F", 2): "4/sqrt(5)*(alpha*atan(A)*atanh(A)-beta*atan(B)*atanh(B))",
}
_LF_SHIFT_ANCHOR = {0: "_{2n}", 1: "_{2n+1}", 2: "_{2n+2}"}

_CAT_EXAMPLES = {
    ("A", 4): ("lambda", "sqrt(2)/6", "+", "-4", '\\frac{\\sqrt{2}}{6}'),
    ("B", 4): ("lambda", "2*sqrt(2)/3", "-", "+4", '\\frac{2\\sqrt{2}}{3}'),
    ("A", 8): ("omega", "2/3", "+", "-4", '= \\frac{2}{3}'),
    ("B", 8): ("omega", "16/3", "-", "+4", '= \\frac{16}{3}'),
}


def _ref(label, anchor):
    return f'{label}: "{anchor}"'


def _entries():
    out = []

    def add(id, label, anchor, lhs, rhs, **kw):
        out.append(make_identity(id, _ref(label, anchor), lhs, rhs, **kw))

    add("sprugnoli-constant", "alternating sum of 1/C(4n,2n) from n = 0", "\\approx .84660943",
        SeriesSpec(_B4N, 0, sign="minus", point="1"), _C4N_AT_ONE, offset=1,
        tags=("worked-value", "c4n"))
    add("sprugnoli-n0", "alternating sum of 1/C(4n,2n), n = 0 term summed", "\\approx .84660943",
        SeriesSpec(_B4N, 0, sign="minus", start=0, point="1"), _C4N_AT_ONE,
        tags=("worked-value", "c4n"))

    for w in (2, 1, 0):
        add(f"s{w}-x3", f"C(4n,2n) weight {w} worked value at x = 3", "y(3)=1/3",
            SeriesSpec(_B4N, w, point="3"), _S_X3[w], tags=("worked-value", "c4n"))
    for w in (2, 1, 0):
        add(f"s{w}-x1r3", f"C(4n,2n) weight {w} worked value at x = 1/sqrt(3)",
            "y({1}/{\\sqrt3})=(2-\\sqrt3)^2",
            SeriesSpec(_B4N, w, point="1/sqrt(3)"), _S_X1R3[w], tags=("worked-value", "c4n"))
    for w in (2, 1, 0):
        add(f"s{w}-x2-general", f"C(4n,2n) weight {w} closed form in y(x) at x = 2",
            "y = y(x) = \\frac{{\\sqrt {x^2  + 16} - 4}}{x}",
            SeriesSpec(_B4N, w, point="2"), fm.b4n_form(w, fm.y_text("2")),
            tags=("general", "c4n"))

    s16 = SeriesSpec(_B4N, 2, sign="minus", point="4*i")
    add("complex-16n", "16^n/(n^2 C(4n,2n)) via the complex point x = 4i",
        "\\pi^2 -4 \\ln^2 \\big(\\sqrt{2}-1\\big)", s16, "pi^2-4*ln(sqrt(2)-1)^2",
        tags=("complex-argument", "c4n"))
    add("complex-16n-atan", "16^n/(n^2 C(4n,2n)), arctangent form at sqrt(i)",
        "8\\left(\\arctan^2\\sqrt{ i} + \\arctan^2\\sqrt{-i}\\right)", s16,
        "8*(atan(sqrt(i))^2+atan(sqrt(-i))^2)", tags=("complex-argument", "c4n"))
    add("complex-16n-ln", "16^n/(n^2 C(4n,2n)), logarithm form",
        "\\ln^2 \\Big(\\frac{i}{\\sqrt{2}-1}\\Big)", s16,
        "-2*(ln(i/(sqrt(2)-1))^2+ln(i/(1-sqrt(2)))^2)", tags=("complex-argument", "c4n"))
    y1 = "(4-sqrt(16-2^2))/2*i"
    add("complex-4n-y1", "non-alternating 4^n/(n^2 C(4n,2n)) through Y1(2)",
        "Y_1(x)=\\frac{4-\\sqrt{16-x^2}}{x}\\cdot i",
        SeriesSpec(_B4N, 2, sign="minus", point="2*i"),
        f"8*(atan(sqrt({y1}))^2-ln((1+sqrt({y1}))/(1-sqrt({y1})))^2/4)",
        tags=("complex-argument", "c4n"))

    for w, scale in ((2, "1/8"), (1, "1/8"), (0, "1")):
        add(f"yform-w{w}-y1-3", f"C(4n,2n) weight {w} in the variable y, at y = 1/3",
            "x(y) = \\frac{8y}{1 - y^2}",
            SeriesSpec(_B4N, w, point="8*(1/3)/(1-(1/3)^2)", scale=scale),
            fm.b4n_y_form(w, "1/3"), tags=("y-form", "c4n"))

    x5 = "4*sqrt(5-2*sqrt(5))"
    for w in (2, 1, 0):
        add(f"trig-s{w}-pi-5", f"C(4n,2n) weight {w}, x = 4 tan(theta) at theta = pi/5",
            "\\tan ^{2n} \\theta", SeriesSpec(_B4N, w, point=x5), fm.b4n_trig_form(w, *_PI5),
            tags=("trig", "c4n"))
    for w in (2, 1, 0):
        add(f"trig-t{w}-pi-5", f"C(4n+2,2n+1) weight {w}, x = 4 tan(theta) at theta = pi/5",
            "\\tan ^{2n + 1} \\theta", SeriesSpec(_B4N2, w, point=x5, scale="1/4"),
            fm.b4n2_trig_form(w, *_PI5), tags=("trig", "c4n2"))

    for w in (2, 1, 0):
        add(f"pi4-s{w}", f"C(4n,2n) weight {w} at theta = pi/4 (x = 4)",
            "\\sqrt {2(\\sqrt 2  + 1)}", SeriesSpec(_B4N, w, point="4"), _S_PI4[w],
            tags=("trig", "c4n", "boundary"))
    add("silver-ratio-s2", "C(4n,2n) weight 2 at x = 4 with the silver ratio",
        "\\arccot^2 \\sqrt{\\delta}", SeriesSpec(_B4N, 2, point="4"),
        "2*ln(delta+sqrt(2*delta))^2-8*acot(sqrt(delta))^2", tags=("trig", "c4n", "boundary"))
    for w in (2, 1, 0):
        add(f"pi6-s{w}", f"C(4n,2n) weight {w} at theta = pi/6 (x = 4/sqrt(3))",
            "\\left( {\\frac{{16}}{3}} \\right)^n", SeriesSpec(_B4N, w, point="4/sqrt(3)"),
            _S_PI6[w], tags=("trig", "c4n"))

    for r in (2, 4):
        for w in (2, 1, 0):
            add(f"fib-even-r{r}-w{w}", f"golden-ratio form, even r = {r}, weight {w}",
                "\\left( \\frac{64}{5F_r^2} \\right)^n",
                SeriesSpec(_B4N, w, point=f"8/(sqrt(5)*{fm.fibonacci(r)})"),
                fm.fib_prop_form(w, r), tags=("fibonacci", "c4n"))
    for r in (3, 5):
        for w in (2, 1, 0):
            add(f"fib-odd-r{r}-w{w}", f"golden-ratio form, odd r = {r}, weight {w}",
                "\\Big(\\frac{64}{L_r^2}\\Big)^n",
                SeriesSpec(_B4N, w, point=f"8/{fm.lucas(r)}"),
                fm.fib_prop_form(w, r), tags=("fibonacci", "c4n"))

    for x in ("1", "2"):
        for w in (2, 1, 0):
            add(f"t{w}-x{x}-general", f"C(4n+2,2n+1) weight {w} closed form in y(x) at x = {x}",
                "4 \\arctanh \\sqrt y \\,\\arctan \\sqrt y",
                SeriesSpec(_B4N2, w, point=x), fm.b4n2_form(w, fm.y_text(x)),
                tags=("general", "c4n2"))
    for w in (2, 1, 0):
        add(f"thm2-x3-w{w}", f"(-9)^n series over C(4n+2,2n+1), weight {w}", "(- 9)^{n}",
            SeriesSpec(_B4N2, w, point="3", scale="1/3"), _T_X3[w],
            tags=("worked-value", "c4n2"))
    for w in (2, 1, 0):
        add(f"thm2-x1r3-w{w}", f"(-1/3)^n series over C(4n+2,2n+1), weight {w}",
            "(-\\frac 13)^{n}",
            SeriesSpec(_B4N2, w, point="1/sqrt(3)", scale="sqrt(3)"), _T_X1R3[w],
            tags=("worked-value", "c4n2"))

    for w in (2, 1, 0):
        add(f"pi4-t{w}", f"(-16)^n series over C(4n+2,2n+1), weight {w}",
            "\\arctan\\sqrt {\\sqrt 2  - 1}", SeriesSpec(_B4N2, w, point="4", scale="1/4"),
            _T_PI4[w], tags=("trig", "c4n2", "boundary"))
    for w in (2, 1, 0):
        add(f"pi6-t{w}", f"(-16/3)^n series over C(4n+2,2n+1), weight {w}",
            "\\arctan\\sqrt{2-\\sqrt3}",
            SeriesSpec(_B4N2, w, point="4/sqrt(3)", scale="sqrt(3)/4"), _T_PI6[w],
            tags=("trig", "c4n2"))

    for s in (0, 1, 2):
        for kind, fam in (("L", Family.LUCAS_W), ("F", Family.FIB_W)):
            add(f"thm12-{kind}-s{s}", f"{kind}_(2n+{s}) over (2n+1)^2 C(4n+2,2n+1)",
                f"{kind}{_LF_SHIFT_ANCHOR[s]}",
                SeriesSpec(fam, 2, shift=s, sign="minus" if s == 0 else "plus", point="1"),
                _LF_SHIFT_W2[(kind, s)], tags=("lucas" if kind == "L" else "fibonacci", "c4n2"))
    for w in (1, 0):
        for s in (0, 1, 2):
            for kind, fam in (("L", Family.LUCAS_W), ("F", Family.FIB_W)):
                scale = "sqrt(5)" if (kind == "F" and w == 0) else "1"
                add(f"thm12-{kind}-w{w}-s{s}",
                    f"{kind}_(2n+{s}) over (2n+1)^{w} C(4n+2,2n+1)",
                    f"( - 1)^n {kind}_{{2n+s}}",
                    SeriesSpec(fam, w, shift=s, point="1", scale=scale),
                    fm.fib_lucas_form(kind, w, s),
                    tags=("lucas" if kind == "L" else "fibonacci", "c4n2"))

    for which, fam, frac in (("a", Family.CAT_O2_A, "\\frac{4n+1}{4n+3}"),
                             ("b", Family.CAT_O2_B, "\\frac{4n+3}{4n+5}")):
        for den in (10, 5):
            add(f"cat-o2-{which}-x-1-{den}",
                f"Catalan/odd-harmonic series {which.upper()} at x = 1/{den}",
                f"{frac} O_{{2n}}^{{(2)}} C_{{2n}} x^{{2n}}",
                SeriesSpec(fam, 0, point=f"1/{den}"), fm.cat_o2_form(which.upper(), f"1/{den}"),
                tags=("catalan", "general"))
    for (which, den), (const, pre, op, mid, anchor) in _CAT_EXAMPLES.items():
        fam = Family.CAT_O2_A if which == "A" else Family.CAT_O2_B
        a, h = f"atan({const})", f"atanh({const})"
        rhs = f"{pre}*({a}{op}{h})*({a}^2{mid}*{a}*{h}+{h}^2)"
        add(f"cat-o2-{which.lower()}-x-1-{den}",
            f"Catalan/odd-harmonic series {which} at x = 1/{den} ({const})", anchor,
            SeriesSpec(fam, 0, point=f"1/{den}"), rhs, tags=("catalan", "worked-value"))

    add("arcsin2-x-1-2", "squared arcsine series at x = 1/2", "2\\arcsin^2 x",
        SeriesSpec(Family.ARCSIN2_ORACLE, 2, point="1/2"), "pi^2/18", tags=("oracle",))
    add("arcsin2-x-1-3", "squared arcsine series at x = 1/3", "2\\arcsin^2 x",
        SeriesSpec(Family.ARCSIN2_ORACLE, 2, point="1/3"), "2*atan(1/(2*sqrt(2)))^2",
        tags=("oracle",))
    add("arcsin3-x-1-2", "cubed arcsine series at x = 1/2", "\\frac{1}{3}\\arcsin^3 x",
        SeriesSpec(Family.ARCSIN3_ORACLE, 0, point="1/2"), "pi^3/648", tags=("oracle",))
    add("arcsin3-x-1-3", "cubed arcsine series at x = 1/3", "\\frac{1}{3}\\arcsin^3 x",
        SeriesSpec(Family.ARCSIN3_ORACLE, 0, point="1/3"), "atan(1/(2*sqrt(2)))^3/3",
        tags=("oracle",))
    return out


_BUILTIN = None


def builtin_catalog() -> Catalog:
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = Catalog(tuple(_entries()))
    return _BUILTIN


# -- file format ----------------------------------------------------------------------


def _escape(text: str) -> str:
    if "\n" in text or "\r" in text:
        raise ValueError("catalog fields cannot contain line breaks")
    return text.replace("\\", "\\\\").replace("|", "\\|")


def _split(line: str) -> list[str]:
    fields, buf, it = [], [], iter(line)
    for ch in it:
        if ch == "\\":
            nxt = next(it, None)
            if nxt not in ("\\", "|"):
                raise ValueError(f"bad escape \\{nxt or ''}")
            buf.append(nxt)
        elif ch == "|":
            fields.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    fields.append("".join(buf).strip())
    return fields


def _format_lhs(spec: SeriesSpec) -> str:
    parts = [spec.family.value, str(spec.weight), str(spec.shift), spec.sign, str(spec.start)]
    scale = to_text(spec.scale)
    if scale != "1":
        parts.append(scale)
    return ",".join(parts)


def format_record(e: Identity) -> str:
    fields = [
        e.id,
        e.ref,
        _format_lhs(e.lhs),
        to_text(e.lhs.point),
        str(e.lhs_offset),
        to_text(e.rhs),
        e.convergence_class.value,
        str(e.default_digits),
        ",".join(e.tags),
    ]
    return " | ".join(_escape(f) for f in fields)


def dumps(catalog: Catalog) -> str:
    lines = [
        "# identity catalog",
        "# id | ref | family,weight,shift,sign,start[,scale] | point | offset | rhs | class | digits | tags",
        f"@format {catalog.format_version}",
    ]
    lines.extend(format_record(e) for e in catalog.entries)
    return "\n".join(lines) + "\n"


def save_catalog(catalog: Catalog, path) -> None:
    Path(path).write_text(dumps(catalog), encoding="utf-8")


def _parse_record(fields, lineno):
    if len(fields) != 9:
        raise ParseError(f"expected 9 fields, found {len(fields)}", line=lineno)
    id_, ref, lhs, point, offset, rhs, cls, digits, tags = fields
    if not id_ or any(c.isspace() for c in id_):
        raise ParseError(f"bad identity id {id_!r}", line=lineno)
    parts = [p.strip() for p in lhs.split(",")]
    if len(parts) not in (5, 6):
        raise ParseError("lhs needs family,weight,shift,sign,start[,scale]", line=lineno)
    try:
        spec = SeriesSpec(
            Family(parts[0]), int(parts[1]), shift=int(parts[2]), sign=parts[3],
            start=int(parts[4]), point=parse_expr(point),
            scale=parse_expr(parts[5]) if len(parts) == 6 else "1",
        )
        ident = Identity(
            id_, ref, spec, Fraction(offset), parse_expr(rhs), _convergence(cls),
            int(digits), tuple(t for t in tags.split(",") if t),
        )
    except ParseError as exc:
        raise ParseError(f"{exc.message}", position=exc.position, line=lineno) from None
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno) from None
    return ident


def _convergence(text):
    try:
        return Convergence(text)
    except ValueError:
        raise ValueError(f"unknown convergence class {text!r}") from None


def _smoke_test(e: Identity):
    """Reason the entry is unusable, or None."""
    try:
        eval_raw(e.rhs, 96)
    except DomainError as exc:
        return f"rhs does not evaluate: {exc}"
    actual = classify_convergence(e.lhs)
    if actual is not e.convergence_class:
        return f"stored class {e.convergence_class.value} but series is {actual.value}"
    if e.default_digits < 6:
        return "default digits below 6"
    return None


def loads(text: str) -> Catalog:
    entries, rejected, seen = [], [], set()
    version = FORMAT_VERSION
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@format"):
            try:
                version = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError("malformed @format line", line=lineno) from None
            if version != FORMAT_VERSION:
                raise ParseError(f"unsupported catalog format {version}", line=lineno)
            continue
        try:
            fields = _split(line)
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
        ident = _parse_record(fields, lineno)
        if ident.id in seen:
            raise DuplicateIdError(ident.id, line=lineno)
        seen.add(ident.id)
        reason = _smoke_test(ident)
        if reason:
            rejected.append((lineno, ident.id, reason))
            continue
        entries.append(ident)
    return Catalog(tuple(entries), version, tuple(rejected))


def load_catalog(path) -> Catalog:
    return loads(Path(path).read_text(encoding="utf-8"))
