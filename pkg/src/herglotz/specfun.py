"""Scalar special functions and number-theoretic tables.

Every analytic evaluation returns an EvalResult: a value paired with an
absolute-error estimate that accounts for series truncation and rounding.
All functions are pure and safe to call concurrently; exact tables are
cached immutably.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded, DomainError, PoleError, RangeError

_EPS = float(np.finfo(float).eps)

__all__ = [
    "EvalResult",
    "PrecisionBudget",
    "MathConstants",
    "DEFAULT_BUDGET",
    "constants",
    "digamma",
    "psi1",
    "riemann_zeta",
    "hurwitz_zeta",
    "log_tail_sum",
    "dilog",
    "bernoulli_even",
    "stirling_first",
    "divisor_count_sieve",
    "stieltjes_gamma1",
]


@dataclass(frozen=True)
class EvalResult:
    """A numeric value with an absolute-error bound estimate."""

    value: complex
    error_estimate: float


@dataclass(frozen=True)
class PrecisionBudget:
    """Caller's accuracy request, threaded through all evaluators."""

    target_abs_tol: float = 1e-12
    max_series_terms: int = 50_000_000
    max_contour_height: float = 200.0
    max_quad_subdivisions: int = 20_000

    def __post_init__(self) -> None:
        if self.target_abs_tol < 1e-14:
            raise DomainError(
                "target_abs_tol below the 1e-14 floor for double-width arithmetic"
            )
        if self.max_series_terms < 1 or self.max_quad_subdivisions < 1:
            raise DomainError("budget caps must be positive")
        if self.max_contour_height <= 0:
            raise DomainError("max_contour_height must be positive")


DEFAULT_BUDGET = PrecisionBudget()


# ---------------------------------------------------------------------------
# exact tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _bernoulli_fractions(n_max: int = 62) -> tuple[Fraction, ...]:
    # B_m from sum_{j<=m} C(m+1,j) B_j = 0, B_0 = 1 (B_1 = -1/2 convention).
    table = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * table[j]
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli_even(m: int) -> Fraction:
    """Exact Bernoulli number B_{2m} for 1 <= m <= 30."""
    if not isinstance(m, int) or not 1 <= m <= 30:
        raise RangeError(f"bernoulli_even: m must be an integer in [1, 30], got {m!r}")
    return _bernoulli_fractions()[2 * m]


@lru_cache(maxsize=1)
def _stirling_table(n_max: int = 60) -> tuple[tuple[int, ...], ...]:
    # Signed Stirling numbers of the first kind, s(n+1,k) = s(n,k-1) - n*s(n,k).
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        cur = []
        for k in range(n + 2):
            left = prev[k - 1] if 1 <= k <= n + 1 else 0
            down = prev[k] if k <= n else 0
            cur.append(left - n * down)
        rows.append(tuple(cur))
    return tuple(rows)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k), 0 <= k <= n <= 60."""
    if not (isinstance(n, int) and isinstance(k, int)) or not 0 <= k <= n <= 60:
        raise RangeError(f"stirling_first: need 0 <= k <= n <= 60, got ({n!r}, {k!r})")
    return _stirling_table()[n][k]


def divisor_count_sieve(N: int) -> np.ndarray:
    """Table of divisor counts d(1..N); index 0 unused.  Read-only array."""
    if not isinstance(N, int) or N < 1:
        raise RangeError(f"divisor_count_sieve: N must be a positive integer, got {N!r}")
    if N > 10**8:
        raise RangeError("divisor_count_sieve: N > 1e8 exceeds the memory guard")
    d = np.zeros(N + 1, dtype=np.int64)
    for i in range(1, N + 1):
        d[i::i] += 1
    d.flags.writeable = False
    return d


# ---------------------------------------------------------------------------
# asymptotic coefficient tables (floats derived from the exact fractions)
# ---------------------------------------------------------------------------

def _b2m_over_2m(m: int) -> float:
    # B_{2m}/(2m)
    return float(_bernoulli_fractions()[2 * m] / (2 * m))


_PSI_M = 12
_PSI_COEF = None  # set lazily: [B_{2m}/(2m)] for m = 1.._PSI_M
_PSI_NEXT = None


def _psi_coeffs() -> tuple[np.ndarray, float]:
    global _PSI_COEF, _PSI_NEXT
    if _PSI_COEF is None:
        _PSI_COEF = np.array([_b2m_over_2m(m) for m in range(1, _PSI_M + 1)])
        _PSI_NEXT = abs(_b2m_over_2m(_PSI_M + 1))
    return _PSI_COEF, _PSI_NEXT


_PSI1_M = 8
_PSI1_TABS = None


def _psi1_coeffs() -> tuple[np.ndarray, np.ndarray, float, float]:
    # phi1-type asymptotic tail of psi1:
    #   psi1(x) ~ log^2(x)/2 - log(x)/(2x)
    #             + sum_m x^{-2m} (c1_m log x + c0_m),
    # with c1_m = B_{2m} s(2m,1)/(2m)! = -B_{2m}/(2m)
    # and  c0_m = B_{2m} s(2m,2)/(2m)! = B_{2m} H_{2m-1}/(2m)
    # (signed Stirling convention validated against the slow defining series).
    global _PSI1_TABS
    if _PSI1_TABS is None:
        bern = _bernoulli_fractions()
        c1, c0 = [], []
        for m in range(1, _PSI1_M + 2):
            f2m = math.factorial(2 * m)
            c1.append(float(bern[2 * m] * stirling_first(2 * m, 1) / f2m))
            c0.append(float(bern[2 * m] * stirling_first(2 * m, 2) / f2m))
        _PSI1_TABS = (
            np.array(c1[:_PSI1_M]),
            np.array(c0[:_PSI1_M]),
            c1[_PSI1_M],
            c0[_PSI1_M],
        )
    return _PSI1_TABS


# ---------------------------------------------------------------------------
# digamma
# ---------------------------------------------------------------------------

_PSI_LIFT_RE = 12.0


def _digamma_vec(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """psi on an array of complex points; returns (values, error estimates).

    Recurrence-lift until Re >= 12, then the Bernoulli asymptotic truncated
    at a fixed order; first omitted term enters the error estimate.
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    neg_im = flat.imag < 0.0
    w = np.where(neg_im, flat.conj(), flat)

    nearest = np.rint(w.real)
    on_axis = np.abs(w.imag) < 1e-13
    if np.any(on_axis & (nearest <= 0) & (np.abs(w - nearest) < 1e-13)):
        raise PoleError("digamma: argument within 1e-13 of a non-positive integer")

    lift = np.zeros_like(w)
    lift_mag = np.zeros(w.shape, dtype=float)
    need = w.real < _PSI_LIFT_RE
    while need.any():
        inv = np.zeros_like(w)
        inv[need] = 1.0 / w[need]
        lift += inv
        lift_mag += np.abs(inv)
        w = np.where(need, w + 1.0, w)
        need = w.real < _PSI_LIFT_RE

    coef, nxt = _psi_coeffs()
    lw = np.log(w)
    u = 1.0 / (w * w)
    acc = np.zeros_like(w)
    up = u.copy()
    for b in coef:
        acc += b * up
        up *= u
    val = lw - 0.5 / w - acc - lift
    trunc = nxt * np.abs(up)
    err = trunc + _EPS * (np.abs(lw) + np.abs(0.5 / w) + np.abs(acc) + lift_mag + 2.0)

    val = np.where(neg_im, val.conj(), val)
    return val.reshape(z.shape), err.reshape(z.shape)


def digamma(z: complex, budget: PrecisionBudget | None = None) -> EvalResult:
    """psi(z) for complex z off the non-positive integers."""
    b = budget or DEFAULT_BUDGET
    val, err = _digamma_vec(np.array([z], dtype=complex))
    e = float(err[0])
    if e > b.target_abs_tol:
        raise BudgetExceeded(
            f"digamma: achievable error {e:.2e} exceeds target {b.target_abs_tol:.2e}"
        )
    v = complex(val[0])
    if isinstance(z, (int, float)) or (isinstance(z, complex) and z.imag == 0.0):
        return EvalResult(v.real, e)
    return EvalResult(v, e)


# ---------------------------------------------------------------------------
# psi1 (derivative object of Deninger's log Gamma_1)
# ---------------------------------------------------------------------------

_PSI1_LIFT = 20.0


def _psi1_vec(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    if np.any(flat <= 0.0):
        raise PoleError("psi1: requires x > 0")

    lift = np.zeros_like(flat)
    lift_mag = np.zeros_like(flat)
    w = flat.copy()
    need = w < _PSI1_LIFT
    while need.any():
        contrib = np.zeros_like(w)
        contrib[need] = np.log(w[need]) / w[need]
        lift += contrib
        lift_mag += np.abs(contrib)
        w = np.where(need, w + 1.0, w)
        need = w < _PSI1_LIFT

    c1, c0, c1n, c0n = _psi1_coeffs()
    lw = np.log(w)
    u = 1.0 / (w * w)
    acc = np.zeros_like(w)
    up = u.copy()
    for m in range(_PSI1_M):
        acc += (c1[m] * lw + c0[m]) * up
        up *= u
    val = 0.5 * lw * lw - lw / (2.0 * w) + acc - lift
    trunc = np.abs((c1n * lw + c0n) * up)
    err = trunc + _EPS * (lw * lw + np.abs(acc) + lift_mag + 2.0)
    return val.reshape(x.shape), err.reshape(x.shape)


def psi1(x: float, budget: PrecisionBudget | None = None) -> EvalResult:
    """psi_1(x) for x > 0 via recurrence lifting plus the Bernoulli asymptotic."""
    b = budget or DEFAULT_BUDGET
    if x <= 0.0:
        raise PoleError("psi1: requires x > 0")
    val, err = _psi1_vec(np.array([x]))
    e = float(err[0])
    if e > b.target_abs_tol:
        raise BudgetExceeded(
            f"psi1: achievable error {e:.2e} exceeds target {b.target_abs_tol:.2e}"
        )
    return EvalResult(float(val[0]), e)


# ---------------------------------------------------------------------------
# complex log-gamma (internal; used by the zeta reflection, the functional
# equation checks, and the Gamma-bearing contour kernel)
# ---------------------------------------------------------------------------

_LG_M = 10
_LG_COEF = None


def _lgamma_coeffs() -> tuple[np.ndarray, float]:
    global _LG_COEF
    if _LG_COEF is None:
        bern = _bernoulli_fractions()
        cs = [float(bern[2 * m] / ((2 * m) * (2 * m - 1))) for m in range(1, _LG_M + 2)]
        _LG_COEF = (np.array(cs[:_LG_M]), abs(cs[_LG_M]))
    return _LG_COEF


def _lgamma_vec(z: np.ndarray) -> np.ndarray:
    """log Gamma on an array of complex points (continuous branch, Re-lifted)."""
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    neg_im = flat.imag < 0.0
    w = np.where(neg_im, flat.conj(), flat)

    nearest = np.rint(w.real)
    on_axis = np.abs(w.imag) < 1e-13
    if np.any(on_axis & (nearest <= 0) & (np.abs(w - nearest) < 1e-13)):
        raise PoleError("log-gamma: argument within 1e-13 of a non-positive integer")

    lift = np.zeros_like(w)
    need = w.real < 10.0
    while need.any():
        contrib = np.zeros_like(w)
        contrib[need] = np.log(w[need])
        lift += contrib
        w = np.where(need, w + 1.0, w)
        need = w.real < 10.0

    coef, _ = _lgamma_coeffs()
    acc = np.zeros_like(w)
    zp = w.copy()
    for c in coef:
        acc += c / zp
        zp *= w * w
    val = (w - 0.5) * np.log(w) - w + 0.5 * math.log(2.0 * math.pi) + acc - lift
    return np.where(neg_im, val.conj(), val).reshape(z.shape)


def _gamma_vec(z: np.ndarray) -> np.ndarray:
    return np.exp(_lgamma_vec(z))


# ---------------------------------------------------------------------------
# Riemann zeta on the strip (alternating-series acceleration)
# ---------------------------------------------------------------------------

_LOG_ACCEL = math.log(3.0 + math.sqrt(8.0))


@lru_cache(maxsize=16)
def _eta_coeffs(n: int) -> tuple[np.ndarray, float]:
    """Chebyshev acceleration coefficients (-1)^k (d_k - d_n) for k < n, and d_n."""
    fact = math.factorial
    d = []
    acc = Fraction(0)
    for k in range(n + 1):
        i = k
        acc += Fraction(fact(n + i - 1) * 4**i, fact(n - i) * fact(2 * i))
        d.append(n * acc)
    dn = d[-1]
    coef = np.array([float((-1) ** k * (d[k] - dn)) for k in range(n)])
    return coef, float(dn)


def _eta_terms_needed(tmax: float, sig_min: float, tol: float) -> int:
    need = math.pi * tmax / 2.0 + math.log(3.0 * (1.0 + 2.0 * tmax) / tol)
    if sig_min < 0.5:
        # empirical padding: the published bound covers Re >= 1/2
        need += (0.5 - sig_min) * (math.log(4.0 + tmax) + 1.5)
    n = int(need / _LOG_ACCEL) + 12
    return max(24, min(n, 420))


def _zeta_vec(s: np.ndarray, tol: float = 1e-15) -> tuple[np.ndarray, np.ndarray]:
    """zeta on an array of complex points with Re >= 0, away from s = 1."""
    s = np.asarray(s, dtype=complex)
    flat = s.ravel()
    if np.any(np.abs(flat - 1.0) < 1e-8):
        raise PoleError("riemann_zeta: argument within 1e-8 of the pole at 1")
    if np.any(flat.real < -1e-12):
        raise DomainError("_zeta_vec: requires Re(s) >= 0 (callers reflect first)")

    denom_fac = 1.0 - np.exp((1.0 - flat) * math.log(2.0))
    dmin = float(np.min(np.abs(denom_fac)))
    if dmin < 1e-9:
        raise BudgetExceeded(
            "riemann_zeta: too close to a zero of 1 - 2^{1-s}; tolerance unreachable"
        )

    tmax = float(np.max(np.abs(flat.imag)))
    if tmax > 240.0:
        # acceleration coefficients overflow doubles past ~n = 400 terms
        raise BudgetExceeded(
            "riemann_zeta: |Im| beyond the 200-height strip the evaluator covers"
        )
    sig_min = float(np.min(flat.real))
    tol_eff = tol * dmin
    n = _eta_terms_needed(tmax, sig_min, max(tol_eff, 1e-16))
    coef, dn = _eta_coeffs(n)

    logs = np.log(np.arange(1.0, n + 1.0))
    powers = np.exp(-np.multiply.outer(flat, logs))  # (npts, n): (k+1)^{-s}
    inner = powers @ coef
    val = -inner / (dn * denom_fac)

    # truncation estimate from the acceleration bound, plus rounding of the
    # alternating sum amplified by the 1/(d_n (1 - 2^{1-s})) division
    t = np.abs(flat.imag)
    trunc = (
        3.0
        * (1.0 + 2.0 * t)
        * np.exp(math.pi * t / 2.0 - n * _LOG_ACCEL)
        / np.abs(denom_fac)
    )
    max_term = np.max(np.abs(coef) * np.exp(-np.multiply.outer(flat.real, logs)), axis=1)
    rnd = _EPS * (math.sqrt(n) + 4.0) * max_term / (dn * np.abs(denom_fac))
    err = trunc + rnd + _EPS * np.abs(val)
    return val.reshape(s.shape), err.reshape(s.shape)


def riemann_zeta(w: complex, budget: PrecisionBudget | None = None) -> EvalResult:
    """zeta(w) on the strip -2 <= Re w <= 3, |Im w| <= 200 (and beyond Re 3)."""
    b = budget or DEFAULT_BUDGET
    wc = complex(w)
    if abs(wc - 1.0) < 1e-8:
        raise PoleError("riemann_zeta: argument within 1e-8 of the pole at 1")
    if abs(wc.imag) > b.max_contour_height:
        raise BudgetExceeded("riemann_zeta: |Im w| exceeds the budget height cap")

    if wc.real >= 0.0:
        val, err = _zeta_vec(np.array([wc]), tol=min(b.target_abs_tol, 1e-14))
        v, e = complex(val[0]), float(err[0])
    else:
        # reflect into Re >= 1 using the asymmetric functional equation:
        # zeta(w) = 2 (2 pi)^{w-1} Gamma(1-w) zeta(1-w) sin(pi w / 2)
        zz, ze = _zeta_vec(np.array([1.0 - wc]), tol=min(b.target_abs_tol, 1e-14))
        g = np.exp(_lgamma_vec(np.array([1.0 - wc])))[0]
        pref = 2.0 * np.exp((wc - 1.0) * math.log(2.0 * math.pi)) * np.sin(
            math.pi * wc / 2.0
        )
        v = complex(pref * g * zz[0])
        e = abs(pref * g) * float(ze[0]) + _EPS * 8.0 * abs(v)

    if isinstance(w, (int, float)) or (isinstance(w, complex) and w.imag == 0.0):
        v_out: complex | float = v.real
    else:
        v_out = v
    if e > max(b.target_abs_tol, 1e-15 * (1.0 + abs(v))):
        raise BudgetExceeded(
            f"riemann_zeta: achievable error {e:.2e} exceeds target {b.target_abs_tol:.2e}"
        )
    return EvalResult(v_out, e)


# ---------------------------------------------------------------------------
# Hurwitz zeta (real s > 1) and log-weighted tails, via Euler-Maclaurin
# ---------------------------------------------------------------------------

_EM_K = 12


def hurwitz_zeta(s: float, a: float) -> EvalResult:
    """zeta(s, a) = sum_{n>=0} (n+a)^{-s} for real s > 1, a > 0."""
    if not s > 1.0:
        raise DomainError("hurwitz_zeta: requires s > 1")
    if not a > 0.0:
        raise DomainError("hurwitz_zeta: requires a > 0")

    target = max(15.0, 1.3 * s)
    N = max(0, int(math.ceil(target - a)))
    if N > 0:
        ns = a + np.arange(N)
        head = float(np.sum(ns ** (-s)))
    else:
        head = 0.0
    A = a + N
    bern = _bernoulli_fractions()
    val = head + A ** (1.0 - s) / (s - 1.0) + 0.5 * A ** (-s)
    poch = s  # (s)_{2k-1} built iteratively
    Apow = A ** (-s - 1.0)
    term = 0.0
    for k in range(1, _EM_K + 1):
        term = float(bern[2 * k] / math.factorial(2 * k)) * poch * Apow
        val += term
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        Apow /= A * A
    nxt = abs(float(bern[2 * _EM_K + 2] / math.factorial(2 * _EM_K + 2)) * poch * Apow)
    err = nxt + _EPS * (abs(val) + head + 4.0)
    return EvalResult(val, err)


def _log_poly_derivs(m: int, j_max: int) -> list[tuple[float, float]]:
    # d^j/dt^j [log t * t^-m] = t^{-m-j} (A_j + B_j log t)
    out = [(0.0, 1.0)]
    A, B = 0.0, 1.0
    for j in range(j_max):
        A, B = B - (m + j) * A, -(m + j) * B
        out.append((A, B))
    return out


_LTS_K = 8


def log_tail_sum(m: int, N: int) -> EvalResult:
    """sum_{n>N} log(n) / n^m for integer m >= 2, N >= 1."""
    if not isinstance(m, int) or m < 2:
        raise DomainError("log_tail_sum: requires integer m >= 2")
    if not isinstance(N, int) or N < 1:
        raise DomainError("log_tail_sum: requires integer N >= 1")

    start = N + 1
    em_from = max(start, 32)
    direct = 0.0
    if em_from > start:
        ns = np.arange(start, em_from, dtype=float)
        direct = float(np.sum(np.log(ns) * ns ** (-float(m))))

    a = float(em_from)
    la = math.log(a)
    integral = a ** (1.0 - m) * (la / (m - 1.0) + 1.0 / (m - 1.0) ** 2)
    fa = la * a ** (-float(m))
    val = direct + integral + 0.5 * fa

    bern = _bernoulli_fractions()
    derivs = _log_poly_derivs(m, 2 * _LTS_K + 2)
    term = 0.0
    for k in range(1, _LTS_K + 1):
        A_, B_ = derivs[2 * k - 1]
        fd = a ** (-float(m + 2 * k - 1)) * (A_ + B_ * la)
        term = -float(bern[2 * k] / math.factorial(2 * k)) * fd
        val += term
    A_, B_ = derivs[2 * _LTS_K + 1]
    nxt = abs(
        float(bern[2 * _LTS_K + 2] / math.factorial(2 * _LTS_K + 2))
        * a ** (-float(m + 2 * _LTS_K + 1))
        * (A_ + B_ * la)
    )
    err = nxt + _EPS * (abs(val) + abs(direct) + 2.0)
    return EvalResult(val, err)


# ---------------------------------------------------------------------------
# dilogarithm
# ---------------------------------------------------------------------------

def _dilog_series(x: float) -> float:
    # |x| <= 0.5: direct series
    acc = 0.0
    p = x
    for k in range(1, 64):
        acc += p / (k * k)
        p *= x
        if abs(p) < 1e-18:
            break
    return acc


def dilog(x: float) -> EvalResult:
    """Li_2(x) for real x <= 1."""
    if x > 1.0:
        raise DomainError("dilog: requires x <= 1")
    pi2_6 = math.pi * math.pi / 6.0
    if x == 1.0:
        return EvalResult(pi2_6, _EPS * pi2_6)
    if x == 0.0:
        return EvalResult(0.0, 0.0)
    if abs(x) <= 0.5:
        v = _dilog_series(x)
        return EvalResult(v, _EPS * (abs(v) + 1.0) * 4.0)
    if x > 0.5:
        # Euler reflection: Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
        v = pi2_6 - math.log(x) * math.log1p(-x) - _dilog_series(1.0 - x)
        return EvalResult(v, _EPS * (abs(v) + 4.0) * 8.0)
    if x >= -1.0:
        # Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2
        y = x / (x - 1.0)
        v = -_dilog_series(y) - 0.5 * math.log1p(-x) ** 2
        return EvalResult(v, _EPS * (abs(v) + 4.0) * 8.0)
    # inversion: Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x), then 1/x in (-1, 0)
    inner = dilog(1.0 / x)
    v = -pi2_6 - 0.5 * math.log(-x) ** 2 - inner.value
    return EvalResult(v, inner.error_estimate + _EPS * (abs(v) + 8.0) * 8.0)


# ---------------------------------------------------------------------------
# Stieltjes constant gamma_1 and the constants bundle
# ---------------------------------------------------------------------------

def stieltjes_gamma1(N: int = 120) -> EvalResult:
    """gamma_1 via Euler-Maclaurin on lim_N (sum_{n<=N} log n / n - log^2 N / 2)."""
    if N < 16:
        raise DomainError("stieltjes_gamma1: N too small for the tail expansion")
    ns = np.arange(1, N + 1, dtype=float)
    S = float(np.sum(np.log(ns) / ns))
    lN = math.log(float(N))
    val = S - 0.5 * lN * lN - lN / (2.0 * N)

    bern = _bernoulli_fractions()
    derivs = _log_poly_derivs(1, 2 * _LTS_K + 2)
    for k in range(1, _LTS_K + 1):
        A_, B_ = derivs[2 * k - 1]
        fd = float(N) ** (-float(2 * k)) * (A_ + B_ * lN)
        val -= float(bern[2 * k] / math.factorial(2 * k)) * fd
    A_, B_ = derivs[2 * _LTS_K + 1]
    nxt = abs(
        float(bern[2 * _LTS_K + 2] / math.factorial(2 * _LTS_K + 2))
        * float(N) ** (-float(2 * _LTS_K + 2))
        * (A_ + B_ * lN)
    )
    err = nxt + _EPS * (S + lN * lN)
    return EvalResult(val, err)


@dataclass(frozen=True)
class MathConstants:
    euler_gamma: float
    stieltjes_gamma1: float
    pi: float
    log_2pi: float


@lru_cache(maxsize=1)
def constants() -> MathConstants:
    """Shared constants; gamma comes from -psi(1), gamma_1 from its own series."""
    g = float(-digamma(1.0).value)
    g1 = float(stieltjes_gamma1().value)
    if not 0.57721 < g < 0.57722:
        raise RuntimeError(f"euler_gamma sanity band violated: {g!r}")
    if not -0.0729 < g1 < -0.0728:
        raise RuntimeError(f"stieltjes_gamma1 sanity band violated: {g1!r}")
    return MathConstants(g, g1, math.pi, math.log(2.0 * math.pi))
