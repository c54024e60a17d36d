import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from invbinom.closedform import (
    CONSTANT_NAMES,
    FUNCTIONS,
    Binary,
    IntLit,
    NamedConst,
    PowExp,
    RatLit,
    Unary,
    constant_body,
    eval_expr,
    eval_raw,
    exact_rational,
    exact_square,
    named_constant,
    parse_expr,
    to_text,
)
from invbinom.errors import (
    BranchCutError,
    DomainError,
    ParseError,
    UnknownConstantError,
    UnknownIdentifierError,
)
from invbinom.hpcore import agreement_bits
from invbinom.series import y_of_x

leaves = st.one_of(
    st.integers(min_value=0, max_value=10**6).map(IntLit),
    st.builds(RatLit, st.integers(min_value=0, max_value=999), st.integers(min_value=1, max_value=999)),
    st.sampled_from(CONSTANT_NAMES).map(NamedConst),
)


def _extend(children):
    return st.one_of(
        st.builds(Unary, st.sampled_from(("neg",) + FUNCTIONS), children),
        st.builds(Binary, st.sampled_from(("add", "sub", "mul", "div")), children, children),
        st.builds(lambda b, k: Binary("pow_int", b, PowExp(k)), children,
                  st.integers(min_value=-5, max_value=9)),
    )


expressions = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=400, deadline=None)
@given(expressions)
def test_round_trip(e):
    assert parse_expr(to_text(e)) == e


@settings(max_examples=200, deadline=None)
@given(expressions)
def test_serialization_is_canonical(e):
    text = to_text(e)
    assert to_text(parse_expr(text)) == text


def test_round_trip_catalog_rhs(catalog):
    for entry in catalog:
        assert parse_expr(to_text(entry.rhs)) == entry.rhs, entry.id


def test_rational_literal_and_grouping():
    assert parse_expr("3/4") == RatLit(3, 4)
    assert parse_expr("1/3/4") == Binary("div", RatLit(1, 3), IntLit(4))
    assert parse_expr("2/3^2") == Binary("div", IntLit(2), Binary("pow_int", IntLit(3), PowExp(2)))
    assert parse_expr("ln^2(3)") == parse_expr("ln(3)^2")
    assert parse_expr("x^(-2)".replace("x", "pi")) == Binary("pow_int", NamedConst("pi"), PowExp(-2))


@pytest.mark.parametrize("text, position", [
    ("1+", 2),
    ("(1", 2),
    ("sqrt 2", 5),
    ("2^x", 2),
    ("1 $ 2", 2),
    ("sqrt()", 5),
])
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.position == position


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError) as info:
        parse_expr("atan(1/x)")
    assert info.value.position == 7
    with pytest.raises(UnknownIdentifierError):
        parse_expr("foo(2)")


def test_constant_is_its_definition():
    assert constant_body("alpha") == parse_expr("(1+sqrt(5))/2")
    with pytest.raises(UnknownConstantError):
        constant_body("gamma")
    with pytest.raises(UnknownConstantError):
        named_constant("gamma", 128)


def test_eval_real_combination():
    v = eval_expr("pi^2 - 4*ln(sqrt(2)-1)^2", 256)
    assert v.im.value == 0
    with mp.workprec(300):
        ref = mp.pi**2 - 4 * mp.log(mp.sqrt(2) - 1) ** 2
    assert agreement_bits(v.re, ref) > 240


def test_named_constants():
    p = 256
    with mp.workprec(p + 64):
        a = (1 + mp.sqrt(5)) / 2
        b = (1 - mp.sqrt(5)) / 2
        assert agreement_bits(named_constant("alpha", p).re, a) > p - 8
        assert agreement_bits(eval_expr("alpha*beta", p).re, mpf(-1)) > p - 8
        assert agreement_bits(named_constant("delta", p).re, 1 + mp.sqrt(2)) > p - 8
        assert agreement_bits(named_constant("lambda", p).re, mp.sqrt(mp.sqrt(2) - 1)) > p - 8
        assert agreement_bits(named_constant("omega", p).re, mp.sqrt(mp.sqrt(5) - 2)) > p - 8
        A = named_constant("A", p)
        B = named_constant("B", p)
        assert A.im.value == 0 and B.re.value == 0
    assert agreement_bits((A * A).to_mpc(), y_of_x(named_constant("alpha", p)).to_mpc()) > p - 16
    assert agreement_bits((B * B).to_mpc(), y_of_x(named_constant("beta", p)).to_mpc()) > p - 16


def test_domain_errors_carry_expression():
    with pytest.raises(BranchCutError) as info:
        eval_expr("1+atanh(2)", 128)
    assert info.value.expr == "atanh(2)"
    with pytest.raises(DomainError):
        eval_expr("1/(2-2)", 128)
    with pytest.raises(DomainError):
        eval_expr("0^(-1)", 128)


def test_acot_is_atan_of_reciprocal():
    p = 256
    for x in ("7", "1/3", "sqrt(2)+1", "alpha^3"):
        a = eval_raw(parse_expr(f"acot({x})"), p)
        b = eval_raw(parse_expr(f"atan(1/({x}))"), p)
        with mp.workprec(p):
            assert abs(a - b) <= 4 * mpf(2) ** (mp.floor(mp.log(abs(b), 2)) - p + 1)


def test_double_evaluation_of_catalog_rhs(catalog):
    p = 192
    for entry in catalog:
        lo = eval_raw(entry.rhs, p)
        hi = eval_raw(entry.rhs, 2 * p)
        assert agreement_bits(lo, hi) >= p - 16, entry.id


def test_exact_helpers():
    assert exact_rational(parse_expr("(3/4)^2-1/2")) == pytest.approx(1 / 16)
    assert exact_rational(parse_expr("sqrt(9/4)")) == 1.5
    assert exact_rational(parse_expr("sqrt(2)")) is None
    assert exact_square(parse_expr("1/sqrt(3)")) == pytest.approx(1 / 3)
    assert exact_square(parse_expr("4*i")) == -16
    assert exact_square(parse_expr("alpha")) is None
