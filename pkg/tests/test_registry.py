from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invbinom.closedform import parse_expr, to_text
from invbinom.errors import DuplicateIdError, ParseError, UnknownIdError
from invbinom.exactseq import fibonacci, lucas
from invbinom.registry import (
    Catalog,
    dumps,
    format_record,
    get_identity,
    load_catalog,
    loads,
    make_identity,
    save_catalog,
)
from invbinom.series import Convergence, Family, SeriesSpec, classify_convergence

HEADER = "@format 1\n"


def test_catalog_size_and_unique_ids(catalog):
    assert len(catalog) >= 45
    assert len(set(catalog.ids())) == len(catalog)


def test_every_entry_is_anchored(catalog):
    for e in catalog:
        assert e.ref and e.anchor, e.id


def test_stored_class_matches_classifier(catalog):
    for e in catalog:
        assert classify_convergence(e.lhs) is e.convergence_class, e.id


def test_coverage(catalog):
    families = {e.lhs.family for e in catalog}
    assert families == set(Family)
    classes = {e.convergence_class for e in catalog}
    assert {Convergence.ABSOLUTE, Convergence.CONDITIONAL, Convergence.BOUNDARY_LIMIT} <= classes
    for w in (0, 1, 2):
        assert any(e.lhs.family is Family.B4N and e.lhs.weight == w for e in catalog)
        assert any(e.lhs.family is Family.B4N2 and e.lhs.weight == w for e in catalog)


def test_required_entries(catalog):
    e = get_identity(catalog, "sprugnoli-constant")
    assert e.lhs == SeriesSpec(Family.B4N, 0, sign="minus")
    assert e.lhs_offset == 1
    e = get_identity(catalog, "thm2-x3-w2")
    assert e.rhs == parse_expr("pi/9*ln(2+sqrt(3))")
    assert e.lhs.scale == parse_expr("1/3")
    e = get_identity(catalog, "thm12-L-s1")
    assert (e.lhs.family, e.lhs.shift) == (Family.LUCAS_W, 1)
    e = get_identity(catalog, "pi4-s0")
    assert e.convergence_class is Convergence.BOUNDARY_LIMIT
    assert e.default_digits == 20


@pytest.mark.parametrize("r", [2, 4])
def test_even_fibonacci_points(catalog, r):
    from invbinom.closedform import exact_square

    e = get_identity(catalog, f"fib-even-r{r}-w2")
    assert exact_square(e.lhs.point) == Fraction(64, 5 * fibonacci(r) ** 2)


@pytest.mark.parametrize("r", [3, 5])
def test_odd_fibonacci_points(catalog, r):
    from invbinom.closedform import exact_rational

    e = get_identity(catalog, f"fib-odd-r{r}-w1")
    assert exact_rational(e.lhs.point) == Fraction(8, lucas(r))


def test_unknown_id_suggests(catalog):
    with pytest.raises(UnknownIdError) as info:
        get_identity(catalog, "sprugnoli-constnt")
    assert "sprugnoli-constant" in info.value.suggestions
    assert "sprugnoli-constant" in str(info.value)


def test_save_load_round_trip(catalog, tmp_path):
    path = tmp_path / "catalog.txt"
    save_catalog(catalog, path)
    again = load_catalog(path)
    assert again == catalog
    assert not again.rejected
    assert dumps(again) == path.read_text()


def test_escaped_fields_round_trip():
    e = make_identity("pipes", r'a | b \ c: "x"', SeriesSpec(Family.B4N, 2), "ln(2)",
                      tags=("t1", "t2"))
    line = format_record(e)
    back = loads(HEADER + line).entries[0]
    assert back == e
    assert back.ref == r'a | b \ c: "x"'


@given(st.text(alphabet=st.characters(blacklist_categories=("Cc", "Cs")), max_size=40))
def test_arbitrary_ref_round_trip(ref):
    ref = ref.strip()
    e = make_identity("x", ref, SeriesSpec(Family.B4N2, 1, point="1/3"), "1")
    assert loads(HEADER + format_record(e)).entries[0].ref == ref


def test_duplicate_id(catalog):
    line = format_record(get_identity(catalog, "s2-x3"))
    with pytest.raises(DuplicateIdError) as info:
        loads(HEADER + line + "\n" + line + "\n")
    assert info.value.identity_id == "s2-x3"
    assert info.value.line == 3
    with pytest.raises(DuplicateIdError):
        Catalog((get_identity(catalog, "s2-x3"),) * 2)


def test_bad_rhs_rejected_rest_loaded(catalog):
    good = [format_record(get_identity(catalog, i)) for i in ("s2-x3", "s1-x3")]
    bad = format_record(get_identity(catalog, "s0-x3")).replace("| 9/25+", "| atanh(2)+9/25+")
    loaded = loads(HEADER + "\n".join([good[0], bad, good[1]]) + "\n")
    assert loaded.ids() == ["s2-x3", "s1-x3"]
    ((line, ident, reason),) = loaded.rejected
    assert (line, ident) == (3, "s0-x3")
    assert "atanh" in reason


def test_wrong_class_rejected(catalog):
    line = format_record(get_identity(catalog, "s2-x3")).replace("| absolute |", "| conditional |")
    assert loads(HEADER + line).rejected


@pytest.mark.parametrize("mutate, lineno", [
    (lambda line: line.replace(" | 50 | ", " | fifty | "), 4),
    (lambda line: line.replace("B4N,2", "B4N,7"), 4),
    (lambda line: line.rsplit(" | ", 1)[0], 4),
    (lambda line: line.replace("| 3 |", "| 3+ |"), 4),
    (lambda line: line.replace("| absolute |", "| fast |"), 4),
])
def test_malformed_record_reports_line(catalog, mutate, lineno):
    line = mutate(format_record(get_identity(catalog, "s2-x3")))
    with pytest.raises(ParseError) as info:
        loads("# comment\n\n" + HEADER + line + "\n")
    assert info.value.line == lineno


def test_unsupported_format_version():
    with pytest.raises(ParseError):
        loads("@format 2\n")


def test_rhs_text_is_canonical(catalog):
    for e in catalog:
        assert to_text(parse_expr(to_text(e.rhs))) == to_text(e.rhs)
