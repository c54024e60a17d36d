"""
Series at complex points
========================

At x = 4i every term is real and positive, the ratio tends to 1, and the
sum is a finite real number whose closed form passes through complex
intermediates.
"""

from mpmath import mp

from invbinom import BigComplex, Family, SeriesSpec, sum_series, y_of_x
from invbinom.closedform import eval_expr

# y(x) = (sqrt(x^2+16) - 4)/x sends 4i to i: the arctangent arguments become complex.
with mp.workprec(200):
    print("y(4i) =", mp.nstr(y_of_x(BigComplex.from_mpc(mp.mpc(0, 4), 200)).to_mpc(), 20))

# sum 16^n / (n^2 C(4n,2n)) is the B4N weight-2 series at x = 4i with the sign flipped.
spec = SeriesSpec(Family.B4N, 2, sign="minus", point="4*i")
r = sum_series(spec, 50)
print(r.method, r.terms_used, "terms")
print("sum    ", r.value.re.to_decimal(50), "imag", r.value.im.to_decimal(3))

rhs = eval_expr("pi^2 - 4*ln(sqrt(2)-1)^2", r.value.prec)
print("closed ", rhs.re.to_decimal(50))

# The same value written with the general closed form, evaluated through complex atan/atanh.
general = eval_expr("-8*(atanh(sqrt(i))^2 - atan(sqrt(i))^2)", r.value.prec)
print("complex", general.re.to_decimal(50), "imag", general.im.to_decimal(3))
