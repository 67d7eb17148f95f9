"""Digamma-remainder series: phi0, phi1, their sums over nx, the log-twisted
sum, and the Herglotz-Zagier function F.

All infinite sums are split at a cutoff N into a directly-summed head and a
Bernoulli-asymptotic tail resolved through Hurwitz-zeta / log-weighted tail
primitives, so the cost is O(N) with a certified tail error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, DomainError, PoleError
from .specfun import (
    DEFAULT_BUDGET,
    EvalResult,
    PrecisionBudget,
    _EPS,
    _digamma_vec,
    _psi1_coeffs,
    _psi1_vec,
    _psi_coeffs,
    hurwitz_zeta,
    log_tail_sum,
)

__all__ = [
    "SeriesPlan",
    "phi0",
    "phi1",
    "sum_phi0",
    "sum_phi1",
    "sum_phi0_logn",
    "phi_log",
    "sum_phi0_lognx",
    "herglotz_F",
]

_PHI0_SWITCH = 12.0
_PHI1_SWITCH = 20.0
_TAIL_M = 6
_ENVELOPE_C = 1.0 / 6.0  # |phi0(y)| <= C / y^2 for y >= 12


@dataclass(frozen=True)
class SeriesPlan:
    """Truncation plan for a phi-type sum: direct head plus Bernoulli tail."""

    cutoff_N: int
    tail_order_M: int
    tail_error: float


def _build_plan(x: float, tol: float, budget: PrecisionBudget) -> SeriesPlan:
    if x <= 0.0:
        raise PoleError("series sum: requires x > 0")
    N = max(
        int(math.ceil(_PHI0_SWITCH / x)),
        int(math.ceil(math.sqrt(_ENVELOPE_C / tol) / x)),
        1,
    )
    if N > budget.max_series_terms:
        raise BudgetExceeded(
            f"series sum: cutoff N={N} exceeds max_series_terms={budget.max_series_terms}"
        )
    # first omitted tail-correction term, order M+1
    coef, nxt = _psi_coeffs()
    zt = hurwitz_zeta(2.0 * (_TAIL_M + 1), float(N + 1)).value
    tail_err = abs(coef[_TAIL_M]) * x ** (-2.0 * (_TAIL_M + 1)) * zt
    if tail_err > tol / 2.0:
        raise BudgetExceeded(
            f"series sum: tail error {tail_err:.2e} above tol/2 at plan time"
        )
    return SeriesPlan(cutoff_N=N, tail_order_M=_TAIL_M, tail_error=float(tail_err))


# ---------------------------------------------------------------------------
# pointwise phi0 / phi1
# ---------------------------------------------------------------------------

def _phi0_via_asymptotic(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # phi0(y) = -sum_m B_{2m}/(2m) y^{-2m}; cancellation-free for y >= 12
    coef, nxt = _psi_coeffs()
    y = np.asarray(y, dtype=float)
    u = 1.0 / (y * y)
    acc = np.zeros_like(y)
    up = u.copy()
    for b in coef:
        acc -= b * up
        up *= u
    err = nxt * np.abs(up) + _EPS * np.abs(acc)
    return acc, err


def _phi0_via_digamma(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    y = np.asarray(y, dtype=float)
    val, err = _digamma_vec(y)
    out = val.real + 0.5 / y - np.log(y)
    err = err + _EPS * (np.abs(val.real) + 0.5 / y + np.abs(np.log(y)))
    return out, err


def _phi0_vec(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    y = np.asarray(y, dtype=float)
    vals = np.empty_like(y)
    errs = np.empty_like(y)
    hi = y >= _PHI0_SWITCH
    if hi.any():
        vals[hi], errs[hi] = _phi0_via_asymptotic(y[hi])
    lo = ~hi
    if lo.any():
        vals[lo], errs[lo] = _phi0_via_digamma(y[lo])
    return vals, errs


def _phi1_via_asymptotic(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # phi1(y) = sum_m y^{-2m} (c1_m log y + c0_m): the log^2 terms of the
    # psi1 asymptotic cancel symbolically against the definition.
    c1, c0, c1n, c0n = _psi1_coeffs()
    y = np.asarray(y, dtype=float)
    ly = np.log(y)
    u = 1.0 / (y * y)
    acc = np.zeros_like(y)
    up = u.copy()
    for m in range(len(c1)):
        acc += (c1[m] * ly + c0[m]) * up
        up *= u
    err = np.abs((c1n * ly + c0n) * up) + _EPS * np.abs(acc)
    return acc, err


def _phi1_via_psi1(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    y = np.asarray(y, dtype=float)
    val, err = _psi1_vec(y)
    ly = np.log(y)
    out = val + ly / (2.0 * y) - 0.5 * ly * ly
    err = err + _EPS * (np.abs(val) + np.abs(ly / (2.0 * y)) + 0.5 * ly * ly)
    return out, err


def _phi1_vec(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    y = np.asarray(y, dtype=float)
    vals = np.empty_like(y)
    errs = np.empty_like(y)
    hi = y >= _PHI1_SWITCH
    if hi.any():
        vals[hi], errs[hi] = _phi1_via_asymptotic(y[hi])
    lo = ~hi
    if lo.any():
        vals[lo], errs[lo] = _phi1_via_psi1(y[lo])
    return vals, errs


def phi0(x: float) -> EvalResult:
    """phi0(x) = psi(x) + 1/(2x) - log(x) for x > 0."""
    if x <= 0.0:
        raise PoleError("phi0: requires x > 0")
    vals, errs = _phi0_vec(np.array([x]))
    return EvalResult(float(vals[0]), float(errs[0]))


def phi1(x: float) -> EvalResult:
    """phi1(x) = psi1(x) + log(x)/(2x) - log^2(x)/2 for x > 0."""
    if x <= 0.0:
        raise PoleError("phi1: requires x > 0")
    vals, errs = _phi1_vec(np.array([x]))
    return EvalResult(float(vals[0]), float(errs[0]))


# ---------------------------------------------------------------------------
# sums over nx
# ---------------------------------------------------------------------------

def _check_tol(tol: float) -> None:
    if not tol >= 1e-11:
        raise DomainError("series sum: tol must be >= 1e-11")


def _phi0_sum_pair(
    x: float,
    tol: float,
    budget: PrecisionBudget,
    cutoff_override: int | None = None,
) -> tuple[EvalResult, EvalResult]:
    """S0(x) = sum phi0(nx) and T(x) = sum phi0(nx) log n from one head pass."""
    plan = _build_plan(x, tol, budget)
    N = plan.cutoff_N if cutoff_override is None else cutoff_override
    n = np.arange(1, N + 1, dtype=float)
    vals, errs = _phi0_vec(n * x)
    logs = np.log(n)

    s0_head = float(np.sum(vals))
    t_head = float(np.sum(vals * logs))
    s0_err = float(np.sum(errs)) + _EPS * float(np.sum(np.abs(vals)))
    t_err = float(np.sum(errs * logs)) + _EPS * float(np.sum(np.abs(vals) * logs))

    coef, _ = _psi_coeffs()
    s0_tail = 0.0
    t_tail = 0.0
    tail_err = plan.tail_error
    for m in range(1, plan.tail_order_M + 1):
        xm = x ** (-2.0 * m)
        hz = hurwitz_zeta(2.0 * m, float(N + 1))
        lt = log_tail_sum(2 * m, N)
        s0_tail -= coef[m - 1] * xm * hz.value
        t_tail -= coef[m - 1] * xm * lt.value
        tail_err += abs(coef[m - 1]) * xm * (hz.error_estimate + lt.error_estimate)

    s0 = EvalResult(s0_head + s0_tail, s0_err + tail_err)
    tt = EvalResult(t_head + t_tail, t_err + tail_err * (math.log(N + 1.0) + 1.0))
    return s0, tt


def sum_phi0(
    x: float, tol: float = 1e-11, budget: PrecisionBudget | None = None
) -> EvalResult:
    """S0(x) = sum_{n>=1} phi0(nx)."""
    _check_tol(tol)
    s0, _ = _phi0_sum_pair(x, tol, budget or DEFAULT_BUDGET)
    return s0


def sum_phi0_logn(
    x: float, tol: float = 1e-11, budget: PrecisionBudget | None = None
) -> EvalResult:
    """T(x) = sum_{n>=1} phi0(nx) log n  (the n=1 summand contributes nothing)."""
    _check_tol(tol)
    _, tt = _phi0_sum_pair(x, tol, budget or DEFAULT_BUDGET)
    return tt


def sum_phi1(
    x: float,
    tol: float = 1e-11,
    budget: PrecisionBudget | None = None,
    cutoff_override: int | None = None,
) -> EvalResult:
    """S1(x) = sum_{n>=1} phi1(nx)."""
    _check_tol(tol)
    b = budget or DEFAULT_BUDGET
    plan = _build_plan(x, tol, b)
    N = plan.cutoff_N if cutoff_override is None else cutoff_override
    n = np.arange(1, N + 1, dtype=float)
    vals, errs = _phi1_vec(n * x)
    head = float(np.sum(vals))
    head_err = float(np.sum(errs)) + _EPS * float(np.sum(np.abs(vals)))

    # tail: phi1(nx) ~ sum_m (nx)^{-2m} (c1_m log(nx) + c0_m), log(nx) = log n + log x
    c1, c0, _, _ = _psi1_coeffs()
    lx = math.log(x)
    tail = 0.0
    tail_err = plan.tail_error * (abs(lx) + math.log(N + 1.0) + 2.0)
    for m in range(1, plan.tail_order_M + 1):
        xm = x ** (-2.0 * m)
        hz = hurwitz_zeta(2.0 * m, float(N + 1))
        lt = log_tail_sum(2 * m, N)
        tail += xm * ((c1[m - 1] * lx + c0[m - 1]) * hz.value + c1[m - 1] * lt.value)
        tail_err += xm * (
            (abs(c1[m - 1] * lx) + abs(c0[m - 1])) * hz.error_estimate
            + abs(c1[m - 1]) * lt.error_estimate
        )
    return EvalResult(head + tail, head_err + tail_err)


def phi_log(
    x: float, tol: float = 1e-11, budget: PrecisionBudget | None = None
) -> EvalResult:
    """phi_log(x) = sum phi0(nx) log(n sqrt(x)) = T(x) + (log x / 2) S0(x)."""
    _check_tol(tol)
    s0, tt = _phi0_sum_pair(x, tol, budget or DEFAULT_BUDGET)
    half_lx = 0.5 * math.log(x)
    val = tt.value + half_lx * s0.value
    err = tt.error_estimate + abs(half_lx) * s0.error_estimate + _EPS * abs(val)
    return EvalResult(val, err)


def sum_phi0_lognx(
    x: float, tol: float = 1e-11, budget: PrecisionBudget | None = None
) -> EvalResult:
    """sum_{n>=1} log(nx) phi0(nx) = T(x) + log(x) S0(x)."""
    _check_tol(tol)
    s0, tt = _phi0_sum_pair(x, tol, budget or DEFAULT_BUDGET)
    lx = math.log(x)
    val = tt.value + lx * s0.value
    err = tt.error_estimate + abs(lx) * s0.error_estimate + _EPS * abs(val)
    return EvalResult(val, err)


def herglotz_F(
    x: float, tol: float = 1e-10, budget: PrecisionBudget | None = None
) -> EvalResult:
    """Herglotz-Zagier F(x) = sum_{n>=1} (psi(nx) - log(nx)) / n."""
    if x <= 0.0:
        raise PoleError("herglotz_F: requires x > 0")
    if x < 0.05:
        raise BudgetExceeded("herglotz_F: refused for x < 0.05 (cutoff grows like 1/x)")
    b = budget or DEFAULT_BUDGET
    plan = _build_plan(x, max(tol, 1e-11), b)
    N = plan.cutoff_N
    n = np.arange(1, N + 1, dtype=float)
    vals, errs = _phi0_vec(n * x)
    head = float(np.sum(vals / n))
    head_err = float(np.sum(errs / n)) + _EPS * float(np.sum(np.abs(vals) / n))

    # psi(nx) - log(nx) = phi0(nx) - 1/(2nx):
    #   head handles phi0(nx)/n; the exact -1/(2x n^2) part sums to -pi^2/(12 x);
    #   the phi0 tail goes through zeta(2m+1, N+1).
    coef, _ = _psi_coeffs()
    tail = 0.0
    tail_err = plan.tail_error
    for m in range(1, plan.tail_order_M + 1):
        hz = hurwitz_zeta(2.0 * m + 1.0, float(N + 1))
        tail -= coef[m - 1] * x ** (-2.0 * m) * hz.value
        tail_err += abs(coef[m - 1]) * x ** (-2.0 * m) * hz.error_estimate
    val = head + tail - math.pi * math.pi / (12.0 * x)
    return EvalResult(val, head_err + tail_err + _EPS * abs(val))
