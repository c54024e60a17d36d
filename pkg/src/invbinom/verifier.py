"""Certify catalog identities: summed left-hand side against evaluated right-hand side.

An entry passes at ``D`` digits when ``|lhs - rhs| < 10^-D`` and, for
real-valued identities, both imaginary parts are below ``10^-D`` as well.
Series at the edge of their convergence disc with growing terms are checked
along interior points approaching the edge (:func:`verify_boundary_limit`).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from mpmath import mp, mpc, mpf

from .closedform import Binary, RatLit, eval_raw, parse_expr
from .errors import (
    BudgetExceededError,
    ConfigurationError,
    ConvergenceError,
    DomainError,
    PreconditionError,
)
from .formulas import family_form
from .hpcore import BigComplex, BigReal, working_precision
from .series import DEFAULT_MAX_TERMS, Convergence, sum_series

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
DEFAULT_SCHEDULE = (4, 12)
MIN_SCHEDULE_POINTS = 4
# extrapolating the boundary sequence is a consistency check on the
# catalogued limit value; its accuracy is limited by the step sizes
EXTRAPOLATION_TOLERANCE = mpf(10) ** -15


@dataclass(frozen=True)
class VerificationResult:
    id: str
    status: str
    digits_requested: int
    abs_diff: BigReal | None
    lhs_value: BigComplex | None
    rhs_value: BigComplex | None
    terms_used: int
    method: str
    elapsed: float
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _real_valued(identity) -> bool:
    return "complex-value" not in identity.tags


def _offset(identity):
    q = identity.lhs_offset
    return mpf(q.numerator) / q.denominator


def _complex(v):
    return v if isinstance(v, mpc) else mpc(v)


def _skip(identity, digits, started, reason, method="none"):
    return VerificationResult(identity.id, SKIPPED, digits, None, None, None, 0, method,
                              time.perf_counter() - started, (reason,))


def _compare(identity, lhs, rhs, digits, notes):
    """(abs_diff, status) for two mp values under the pass rule."""
    tol = mpf(10) ** -digits
    lhs, rhs = _complex(lhs), _complex(rhs)
    if _real_valued(identity):
        diff = abs(lhs.real - rhs.real)
        ok = diff < tol
        for side, v in (("lhs", lhs), ("rhs", rhs)):
            if v.imag != 0:
                if abs(v.imag) < tol:
                    notes.append(f"{side} imaginary residue {mp.nstr(abs(v.imag), 3)} discarded")
                else:
                    notes.append(f"{side} imaginary part {mp.nstr(v.imag, 6)} exceeds tolerance")
                    ok = False
    else:
        diff = abs(lhs - rhs)
        ok = diff < tol
    return diff, (PASS if ok else FAIL)


def verify(identity, digits: int | None = None, *, max_terms: int = DEFAULT_MAX_TERMS,
           schedule=DEFAULT_SCHEDULE) -> VerificationResult:
    started = time.perf_counter()
    D = identity.default_digits if digits is None else digits
    if D < 6:
        raise ConfigurationError(f"digits must be at least 6, got {D}")
    if identity.convergence_class is Convergence.DIVERGENT:
        return _skip(identity, D, started, "series diverges at its point")
    if identity.convergence_class is Convergence.BOUNDARY_LIMIT:
        return verify_boundary_limit(identity, D, schedule, max_terms=max_terms)
    p = working_precision(D)
    try:
        s = sum_series(identity.lhs, D, max_terms=max_terms, prec=p)
    except BudgetExceededError as exc:
        return _skip(identity, D, started, f"summation budget exceeded: {exc}")
    except ConvergenceError as exc:
        return _skip(identity, D, started, f"not summable here: {exc}")
    notes = list(s.notes)
    notes.append(f"tail bound {s.tail_bound.to_decimal(3)}")
    with mp.workprec(p):
        lhs = s.value.to_mpc() + _offset(identity)
        try:
            rhs = eval_raw(identity.rhs, p)
        except DomainError as exc:
            return VerificationResult(identity.id, FAIL, D, None, BigComplex.from_mpc(lhs, p), None,
                                      s.terms_used, s.method, time.perf_counter() - started,
                                      tuple(notes + [f"rhs does not evaluate: {exc}"]))
        diff, status = _compare(identity, lhs, rhs, D, notes)
        return VerificationResult(identity.id, status, D, BigReal(+diff, p),
                                  BigComplex.from_mpc(lhs, p), BigComplex.from_mpc(rhs, p),
                                  s.terms_used, s.method, time.perf_counter() - started,
                                  tuple(notes))


def _neville(hs, vs):
    """Polynomial extrapolation of (h, v) samples to h = 0."""
    p = list(vs)
    n = len(p)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (hs[i + m] * p[i] - hs[i] * p[i + 1]) / (hs[i + m] - hs[i])
    return p[0]


def verify_boundary_limit(identity, digits: int, schedule=DEFAULT_SCHEDULE, *,
                          max_terms: int = DEFAULT_MAX_TERMS) -> VerificationResult:
    """Verify an edge-of-disc identity along x_k = x0 (1 - 2^-k), k in ``schedule``.

    At each x_k the summed series must match the general closed form
    re-evaluated at x_k to ``digits`` digits.  The catalogued right-hand side
    at x0 must equal that closed form at x0, and the distances
    |LHS(x_k) - RHS| must shrink with k from ``k_min + 2`` on.
    """
    started = time.perf_counter()
    if identity.convergence_class is not Convergence.BOUNDARY_LIMIT:
        raise PreconditionError(
            f"{identity.id} is {identity.convergence_class.value}, not boundary_limit")
    k_min, k_max = schedule
    if k_max - k_min + 1 < MIN_SCHEDULE_POINTS:
        raise ConfigurationError(
            f"boundary schedule needs at least {MIN_SCHEDULE_POINTS} points, got k = {k_min}..{k_max}")
    D = digits
    p = working_precision(D)
    tol = mpf(10) ** -D
    notes = []
    terms = 0
    status = PASS
    with mp.workprec(p):
        off = _offset(identity)
        rhs = _complex(eval_raw(identity.rhs, p))
        limit_form = _complex(eval_raw(parse_expr(family_form(identity.lhs)), p))
        transfer = abs(off + limit_form - rhs)
        if transfer >= tol:
            status = FAIL
            notes.append(f"catalogued value differs from the closed form at the edge by "
                         f"{mp.nstr(transfer, 3)}")
        worst = transfer
        hs, vals, trend = [], [], []
        for k in range(k_min, k_max + 1):
            point = Binary("mul", identity.lhs.point, RatLit(2**k - 1, 2**k))
            spec_k = replace(identity.lhs, point=point)
            try:
                s = sum_series(spec_k, D, max_terms=max_terms, prec=p)
            except (BudgetExceededError, ConvergenceError) as exc:
                return _skip(identity, D, started, f"k = {k}: {exc}", "boundary_limit")
            terms += s.terms_used
            lhs_k = s.value.to_mpc()
            form_k = _complex(eval_raw(parse_expr(family_form(spec_k)), p))
            d = abs(lhs_k - form_k)
            worst = max(worst, d)
            if d >= tol:
                status = FAIL
                notes.append(f"k = {k}: series and closed form differ by {mp.nstr(d, 3)}")
            hs.append(mpf(2) ** -k)
            vals.append(off + lhs_k)
            trend.append(abs(off + lhs_k - rhs))
        tail = trend[2:]
        if any(b > a for a, b in zip(tail, tail[1:])):
            status = FAIL
            notes.append("distance to the edge value is not non-increasing: "
                         + ", ".join(mp.nstr(t, 3) for t in trend))
        else:
            notes.append("distance to the edge value by k: "
                         + ", ".join(mp.nstr(t, 3) for t in trend))
        limit = _neville(hs, vals)
        gap = abs(limit - rhs)
        notes.append(f"extrapolated edge value differs from the catalogued one by {mp.nstr(gap, 3)}")
        if gap >= EXTRAPOLATION_TOLERANCE:
            status = FAIL
        return VerificationResult(identity.id, status, D, BigReal(+worst, p),
                                  BigComplex.from_mpc(limit, p), BigComplex.from_mpc(rhs, p),
                                  terms, "boundary_limit", time.perf_counter() - started,
                                  tuple(notes))


def _task(args):
    identity, digits, max_terms = args
    return verify(identity, digits, max_terms=max_terms)


def default_jobs() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def verify_all(catalog, digits: int | None = None, *, jobs: int | None = None,
               max_terms: int = DEFAULT_MAX_TERMS) -> list[VerificationResult]:
    """Verify every entry; results come back in catalog order.

    Work fans out over processes: mpmath's precision context is process-wide.
    """
    entries = list(catalog)
    jobs = default_jobs() if jobs is None else jobs
    if jobs < 1:
        raise ConfigurationError("jobs must be at least 1")
    tasks = [(e, digits, max_terms) for e in entries]
    if jobs == 1 or len(tasks) < 2:
        return [_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(_task, tasks))


def result_record(r: VerificationResult) -> dict:
    """Plain-dict view with numbers as decimal strings at the requested digits."""
    digits = r.digits_requested + 5

    def num(v):
        if v is None:
            return None
        if isinstance(v, BigReal):
            return v.to_decimal(digits)
        return {"re": v.re.to_decimal(digits), "im": v.im.to_decimal(digits)}

    return {
        "id": r.id,
        "status": r.status,
        "digits_requested": r.digits_requested,
        "abs_diff": None if r.abs_diff is None else r.abs_diff.to_decimal(6),
        "lhs_value": num(r.lhs_value),
        "rhs_value": num(r.rhs_value),
        "terms_used": r.terms_used,
        "method": r.method,
        "elapsed": f"{r.elapsed:.6f}",
        "notes": list(r.notes),
    }
