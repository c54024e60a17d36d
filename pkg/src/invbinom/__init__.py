"""High-precision certification of alternating series over inverse central binomials.

The package sums series such as ``sum (-1)^(n-1) x^(2n) / (n^2 C(4n, 2n))``
to a requested number of decimal digits with an explicit truncation bound,
evaluates closed forms built from sqrt, ln, atan and atanh, and compares the
two for every entry of a built-in identity catalog.

Modules
-------
hpcore      precision-tagged real/complex values and elementary functions
exactseq    exact binomial, Catalan, Fibonacci, Lucas and odd-harmonic kernels
closedform  expression grammar, parser, serializer and evaluator
series      series families, parametrizations y(x), x(y), z(x), summation
formulas    closed-form builders used by the catalog
registry    the identity catalog and its file format
verifier    identity certification, including the boundary-limit scheme
cli         command-line front end
"""

from .closedform import eval_expr, named_constant, parse_expr, to_text
from .errors import (
    BranchCutError,
    BudgetExceededError,
    ConvergenceError,
    DomainError,
    InvBinomError,
    ParseError,
    UnknownIdError,
)
from .hpcore import BigComplex, BigReal, working_precision
from .registry import (
    Catalog,
    Identity,
    builtin_catalog,
    get_identity,
    load_catalog,
    make_identity,
    save_catalog,
)
from .series import (
    Convergence,
    Family,
    SeriesSpec,
    SumResult,
    classify_convergence,
    partial_sum_exact,
    sum_fib_lucas_split,
    sum_series,
    term,
    x_of_y,
    y_of_x,
    z_of_x,
)
from .verifier import VerificationResult, verify, verify_all, verify_boundary_limit

__version__ = "0.1.0"

__all__ = [
    "BigComplex",
    "BigReal",
    "BranchCutError",
    "BudgetExceededError",
    "Catalog",
    "Convergence",
    "ConvergenceError",
    "DomainError",
    "Family",
    "Identity",
    "InvBinomError",
    "ParseError",
    "SeriesSpec",
    "SumResult",
    "UnknownIdError",
    "VerificationResult",
    "builtin_catalog",
    "classify_convergence",
    "eval_expr",
    "get_identity",
    "load_catalog",
    "make_identity",
    "named_constant",
    "parse_expr",
    "partial_sum_exact",
    "save_catalog",
    "sum_fib_lucas_split",
    "sum_series",
    "term",
    "to_text",
    "verify",
    "verify_all",
    "verify_boundary_limit",
    "working_precision",
    "x_of_y",
    "y_of_x",
    "z_of_x",
]
