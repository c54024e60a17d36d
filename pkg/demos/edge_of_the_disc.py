"""
Approaching the edge of the disc
================================

At x = 4 the weight-0 series has terms that grow like sqrt(n), so it has no
sum in the ordinary sense.  Its closed form is still finite there.  The
verifier checks the identity at interior points x_k = 4 (1 - 2^-k) and
watches the values close in on the edge value.
"""

from invbinom import builtin_catalog, get_identity, verify_boundary_limit
from invbinom.series import classify_convergence

entry = get_identity(builtin_catalog(), "pi4-s0")
print(entry.id, "is", classify_convergence(entry.lhs).value)

result = verify_boundary_limit(entry, 20, schedule=(4, 10))
print(result.status, result.terms_used, "terms over all points")
for note in result.notes:
    print(" ", note)
