"""
Summing an inverse-binomial series
==================================

Walk through one series from its exact first terms to a certified
50-digit value, then compare it with its closed form.
"""

from fractions import Fraction

from mpmath import mp

from invbinom import Family, SeriesSpec, eval_expr, parse_expr, partial_sum_exact, sum_series
from invbinom.formulas import family_form

# The alternating sum of x^(2n) / (n^2 C(4n,2n)) at x = 3.
spec = SeriesSpec(Family.B4N, weight=2, point=3)

# Exact rationals first: the first few partial sums, no rounding anywhere.
for N in range(1, 5):
    print(N, partial_sum_exact(spec, N))

# The engine picks a summation route from the term ratio, here 9/16.
result = sum_series(spec, 50)
print(result.method, result.terms_used, "terms, tail below", result.tail_bound.to_decimal(3))
print("sum       ", result.value.re.to_decimal(50))

# The closed form is ordinary expression text; evaluate it at the same precision.
rhs = eval_expr(parse_expr("2*ln(2+sqrt(3))^2 - 2*pi^2/9"), result.value.prec)
print("closed    ", rhs.re.to_decimal(50))

# family_form rebuilds the general closed form for any point, as text.
print(family_form(SeriesSpec(Family.B4N, 2, point=Fraction(5, 2))))

with mp.workprec(result.value.prec):
    print("difference", mp.nstr(abs(result.value.to_mpc() - rhs.to_mpc()), 3))
