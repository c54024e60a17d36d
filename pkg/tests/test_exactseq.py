from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from invbinom.errors import SequenceIndexError
from invbinom.exactseq import (
    SeqKind,
    binom4n2_2n1,
    binom4n2_2n1_ratio,
    binom4n2n,
    binom4n2n_ratio,
    catalan,
    fibonacci,
    lucas,
    odd_harmonic2,
    seq_value,
)

small = st.integers(min_value=0, max_value=200)


def test_tables():
    assert [fibonacci(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [lucas(n) for n in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [binom4n2n(n) for n in range(4)] == [1, 6, 70, 924]
    assert [binom4n2_2n1(n) for n in range(3)] == [2, 20, 252]


def test_negative_index_reflection():
    assert [fibonacci(-n) for n in range(1, 6)] == [1, -1, 2, -3, 5]
    assert [lucas(-n) for n in range(1, 6)] == [-1, 3, -4, 7, -11]


@pytest.mark.parametrize("fn", [binom4n2n, binom4n2_2n1, catalan, odd_harmonic2])
def test_negative_index_rejected(fn):
    with pytest.raises(SequenceIndexError):
        fn(-1)


def test_seq_value_dispatch():
    assert seq_value("lucas", 10) == 123
    assert seq_value(SeqKind.BINOM4N2N, 2) == 70
    with pytest.raises(ValueError):
        seq_value("tribonacci", 3)


@given(small)
def test_ratio_kernels(n):
    assert binom4n2n(n) * binom4n2n_ratio(n) == binom4n2n(n + 1)
    assert binom4n2_2n1(n) * binom4n2_2n1_ratio(n) == binom4n2_2n1(n + 1)


@given(small)
def test_central_binomial_via_catalan(n):
    assert binom4n2n(n) == (2 * n + 1) * catalan(2 * n)
    assert binom4n2_2n1(n) == comb(4 * n + 2, 2 * n + 1)


@given(st.integers(min_value=-200, max_value=200))
def test_lucas_fibonacci_norm(n):
    assert lucas(n) ** 2 - 5 * fibonacci(n) ** 2 == 4 * (-1) ** (n % 2)
    assert fibonacci(n + 2) == fibonacci(n + 1) + fibonacci(n)
    assert lucas(n) == fibonacci(n - 1) + fibonacci(n + 1)


@given(small)
def test_binet(n):
    with mp.workprec(200 + 2 * n):
        a = (1 + mp.sqrt(5)) / 2
        b = (1 - mp.sqrt(5)) / 2
        assert mp.nint((a**n - b**n) / mp.sqrt(5)) == fibonacci(n)
        assert mp.nint(a**n + b**n) == lucas(n)


@given(st.integers(min_value=0, max_value=60))
def test_odd_harmonic2_direct_sum(k):
    assert odd_harmonic2(k) == sum(Fraction(1, (2 * j + 1) ** 2) for j in range(k + 1))
