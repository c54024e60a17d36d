"""Exact integer and rational sequence kernels.

Values are plain Python ints and :class:`fractions.Fraction`; both are exact
and unbounded, which is all the series engine and the brute-force oracle
need.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import SequenceIndexError


class SeqKind(str, Enum):
    BINOM4N2N = "binom4n2n"
    BINOM4N2_2N1 = "binom4n2_2n1"
    CATALAN = "catalan"
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"


def _require_nonneg(kind, n):
    if n < 0:
        raise SequenceIndexError(f"{kind} requires a non-negative index, got {n}")


@lru_cache(maxsize=4096)
def _fib_lucas(n: int) -> tuple[int, int]:
    """(F_n, L_n) for n >= 0 by the forward recurrence."""
    f0, f1 = 0, 1
    for _ in range(n):
        f0, f1 = f1, f0 + f1
    # L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
    return f0, 2 * f1 - f0


def fibonacci(n: int) -> int:
    if n < 0:
        m = -n
        return (-1) ** (m - 1) * _fib_lucas(m)[0]
    return _fib_lucas(n)[0]


def lucas(n: int) -> int:
    if n < 0:
        m = -n
        return (-1) ** m * _fib_lucas(m)[1]
    return _fib_lucas(n)[1]


def binom4n2n(n: int) -> int:
    _require_nonneg("binom4n2n", n)
    return comb(4 * n, 2 * n)


def binom4n2_2n1(n: int) -> int:
    _require_nonneg("binom4n2_2n1", n)
    return comb(4 * n + 2, 2 * n + 1)


def catalan(k: int) -> int:
    _require_nonneg("catalan", k)
    return comb(2 * k, k) // (k + 1)


_KERNELS = {
    SeqKind.BINOM4N2N: binom4n2n,
    SeqKind.BINOM4N2_2N1: binom4n2_2n1,
    SeqKind.CATALAN: catalan,
    SeqKind.FIBONACCI: fibonacci,
    SeqKind.LUCAS: lucas,
}


def seq_value(kind, n: int) -> int:
    """Exact value of sequence ``kind`` at index ``n``."""
    try:
        kernel = _KERNELS[SeqKind(kind)]
    except ValueError:
        raise ValueError(f"unknown sequence kind {kind!r}") from None
    return kernel(n)


_ODD_H2 = [Fraction(1)]
_ODD_H2_LOCK = threading.Lock()


def odd_harmonic2(k: int) -> Fraction:
    """Second-order odd harmonic number sum_{j=0..k} 1/(2j+1)^2."""
    _require_nonneg("odd_harmonic2", k)
    with _ODD_H2_LOCK:
        while len(_ODD_H2) <= k:
            j = len(_ODD_H2)
            _ODD_H2.append(_ODD_H2[-1] + Fraction(1, (2 * j + 1) ** 2))
        return _ODD_H2[k]


# Consecutive-ratio kernels.  The summation engine steps terms with these so
# that the hot loop only touches small integers.


def binom4n2n_ratio(n: int) -> Fraction:
    """C(4n+4, 2n+2) / C(4n, 2n)."""
    return Fraction((4 * n + 1) * (4 * n + 2) * (4 * n + 3) * (4 * n + 4),
                    ((2 * n + 1) * (2 * n + 2)) ** 2)


def binom4n2_2n1_ratio(n: int) -> Fraction:
    """C(4n+6, 2n+3) / C(4n+2, 2n+1)."""
    return Fraction((4 * n + 3) * (4 * n + 4) * (4 * n + 5) * (4 * n + 6),
                    ((2 * n + 2) * (2 * n + 3)) ** 2)
