"""Acceptance criteria, one test each.

Each test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected into the pytest terminal summary.  Run this file directly to get
only the criterion lines.
"""

import functools
import time
from dataclasses import replace

from mpmath import mp, mpf

from conftest import ACCEPTANCE_LINES
from invbinom.closedform import Binary, RatLit, eval_raw, named_constant, parse_expr
from invbinom.hpcore import BigReal, agreement_bits
from invbinom.registry import builtin_catalog, get_identity
from invbinom.series import Family, SeriesSpec, partial_sum_exact, sum_series, term_stream, y_of_x, z_of_x
from invbinom.verifier import verify, verify_all, verify_boundary_limit

BITS_PER_DIGIT = 3.3219


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                line = f"[FAIL] criterion {number:2d}: {title}: {type(exc).__name__}: {exc}"
                ACCEPTANCE_LINES.append(line)
                print(line)
                raise
            line = f"[PASS] criterion {number:2d}: {title}" + (f" ({detail})" if detail else "")
            ACCEPTANCE_LINES.append(line)
            print(line)
        return run
    return wrap


def digits(a, b):
    return agreement_bits(a, b) / BITS_PER_DIGIT


@criterion(1, "alternating 1/C(4n,2n) sum: 8 published digits, closed form to 50 digits, < 1 s")
def test_sprugnoli_constant():
    cat = builtin_catalog()
    t0 = time.perf_counter()
    s = sum_series(SeriesSpec(Family.B4N, 0, start=0, sign="minus"), 50)
    r = verify(get_identity(cat, "sprugnoli-constant"), 50)
    elapsed = time.perf_counter() - t0
    assert s.value.re.to_decimal(8) == "0.84660943"
    assert r.passed and r.abs_diff.value < mpf(10) ** -50
    assert elapsed < 1.0
    return f"{elapsed:.3f} s"


@criterion(2, "full built-in catalog passes at default digits in < 5 minutes")
def test_full_catalog():
    cat = builtin_catalog()
    t0 = time.perf_counter()
    results = verify_all(cat)
    elapsed = time.perf_counter() - t0
    failed = [r.id for r in results if not r.passed]
    assert not failed, failed
    assert elapsed < 300
    return f"{len(results)} entries, {elapsed:.2f} s"


WORKED = [f"s{w}-x3" for w in (2, 1, 0)] + [f"s{w}-x1r3" for w in (2, 1, 0)] \
    + [f"thm2-x3-w{w}" for w in (2, 1, 0)] + [f"thm2-x1r3-w{w}" for w in (2, 1, 0)]


@criterion(3, "worked values at x = 3 and x = 1/sqrt(3), both families, weights 2, 1, 0, to 50 digits")
def test_worked_values():
    cat = builtin_catalog()
    failed = [i for i in WORKED if not verify(get_identity(cat, i), 50).passed]
    assert not failed, failed
    return f"{len(WORKED)} identities"


@criterion(4, "complex-argument instance (x = 4i) to 50 digits with imaginary residue < 1e-50")
def test_complex_instance():
    r = verify(get_identity(builtin_catalog(), "complex-16n"), 50)
    assert r.passed
    tol = mpf(10) ** -50
    assert abs(r.lhs_value.im.value) < tol and abs(r.rhs_value.im.value) < tol
    with mp.workdps(60):
        want = mp.pi**2 - 4 * mp.log(mp.sqrt(2) - 1) ** 2
        assert abs(r.rhs_value.re.value - want) < tol


ORACLE_SPECS = [
    SeriesSpec(Family.B4N, 2, point=1),
    SeriesSpec(Family.B4N, 0, point=3),
    SeriesSpec(Family.B4N2, 1, point=3),
    SeriesSpec(Family.LUCAS_W, 2, shift=1),
    SeriesSpec(Family.CAT_O2_A, 0, point="1/8"),
    SeriesSpec(Family.ARCSIN3_ORACLE, 0, point="1/2"),
]


@criterion(5, "20-term high-precision partial sums match the exact-rational oracle to >= 70 digits")
def test_oracle_equivalence():
    worst = None
    for spec in ORACLE_SPECS:
        exact = partial_sum_exact(spec, 20)
        it = term_stream(spec, 256)
        with mp.workprec(256):
            s = sum(next(it) for _ in range(20))
        with mp.workprec(512):
            d = digits(s, mpf(exact.numerator) / exact.denominator)
        assert d >= 70, (spec, d)
        worst = d if worst is None else min(worst, d)
    return f"{len(ORACLE_SPECS)} specs, worst {worst:.1f} digits"


@criterion(6, "derivative ladders S1 = (x/2) S2' and T1 = x T2' to >= 25 digits at x = 1, 2, 3")
def test_derivative_ladders():
    worst = None
    with mp.workdps(60):
        h = mpf(10) ** -15
        for x in (1, 2, 3):
            for fam, factor in ((Family.B4N, mpf(x) / 2), (Family.B4N2, mpf(x))):
                low = sum_series(SeriesSpec(fam, 1, point=x), 60).value.to_mpc()
                up = sum_series(SeriesSpec(fam, 2, point=f"{x}+1/10^15"), 60).value.to_mpc()
                dn = sum_series(SeriesSpec(fam, 2, point=f"{x}-1/10^15"), 60).value.to_mpc()
                d = digits(low, factor * (up - dn) / (2 * h))
                assert d >= 25, (fam, x, d)
                worst = d if worst is None else min(worst, d)
    return f"worst {worst:.1f} digits"


@criterion(7, "A^2 = y(alpha), B^2 = y(beta) and the six Lucas/Fibonacci shift examples to 40 digits")
def test_lucas_fibonacci_structure():
    p = 256
    for c, root in (("A", "alpha"), ("B", "beta")):
        sq = named_constant(c, p) * named_constant(c, p)
        assert digits(sq.to_mpc(), y_of_x(named_constant(root, p)).to_mpc()) >= 40
    cat = builtin_catalog()
    tol = mpf(10) ** -40
    for kind in "LF":
        for s in (0, 1, 2):
            r = verify(get_identity(cat, f"thm12-{kind}-s{s}"), 40)
            assert r.passed, r.id
            assert abs(r.lhs_value.im.value) < tol and abs(r.rhs_value.im.value) < tol


@criterion(8, "the four lambda/omega Catalan identities and z(1/4), z(1/8) to 40 digits")
def test_catalan_examples():
    cat = builtin_catalog()
    ids = [f"cat-o2-{ab}-x-1-{q}" for ab in "ab" for q in (4, 8)]
    failed = [i for i in ids if not verify(get_identity(cat, i), 40).passed]
    assert not failed, failed
    with mp.workprec(256):
        assert digits(z_of_x(BigReal.exact(mpf(1) / 4, 256)).to_mpc(), mp.sqrt(2) - 1) >= 40
        assert digits(z_of_x(BigReal.exact(mpf(1) / 8, 256)).to_mpc(), mp.sqrt(5) - 2) >= 40


@criterion(9, "perturbing one right-hand side by 1e-20 fails that entry, and only it, at D = 30")
def test_negative_controls():
    cat = builtin_catalog()
    clean = verify_all(cat, 30)
    assert all(r.passed for r in clean), [r.id for r in clean if not r.passed]
    missed = []
    for entry in cat:
        bumped = replace(entry, rhs=Binary("add", entry.rhs, RatLit(1, 10**20)))
        if verify(bumped, 30).passed:
            missed.append(entry.id)
    assert not missed, missed
    return f"{len(cat)} perturbations caught"


@criterion(10, "edge-of-disc weight-0 entry at theta = pi/4 passes at D = 20 over k = 4..10")
def test_boundary_scheme():
    e = get_identity(builtin_catalog(), "pi4-s0")
    r = verify_boundary_limit(e, 20, (4, 10))
    assert r.passed, r.notes
    trend = next(n for n in r.notes if n.startswith("distance to the edge value"))
    values = [mpf(v) for v in trend.split(": ", 1)[1].split(", ")]
    assert all(b < a for a, b in zip(values, values[1:])), values
    return trend


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    failures = 0
    for t in sorted(tests, key=lambda f: f.__wrapped__.__code__.co_firstlineno):
        try:
            t()
        except BaseException:
            failures += 1
    sys.exit(1 if failures else 0)
