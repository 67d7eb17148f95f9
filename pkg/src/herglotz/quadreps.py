"""Real-axis integral and series representations: the divisor-sum, single-
and double-integral forms of H, the Wigert cosine transform, the Bose-kernel
log integral (lemma41_lhs), and the auto-correlation integral A(z).

Quadrature strategy: panel Gauss-Legendre with geometric grading toward
endpoint log singularities, half-period segmentation with iterated-averaging
acceleration for the oscillatory cosine transforms, and analytic Bernoulli /
Dirichlet-series tails wherever integrands or series decay only polynomially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, DomainError
from .specfun import (
    DEFAULT_BUDGET,
    EvalResult,
    PrecisionBudget,
    _EPS,
    _bernoulli_fractions,
    _digamma_vec,
    constants,
    divisor_count_sieve,
    hurwitz_zeta,
    log_tail_sum,
)

__all__ = [
    "QuadPlan",
    "H_divisor_series",
    "H_single_integral",
    "H_double_integral",
    "wigert",
    "lemma41_lhs",
    "A_direct",
]


@dataclass(frozen=True)
class QuadPlan:
    """A quadrature plan: scheme tag, upper truncation, panel cap, tail bound."""

    scheme: str  # endpoint_singular | smooth_decay | oscillatory_halfperiod
    truncation_upper: float
    subdivision_cap: int
    tail_bound: float


def _make_plan(
    scheme: str,
    upper: float,
    tail_bound: float,
    tol: float,
    budget: PrecisionBudget,
    what: str,
) -> QuadPlan:
    if tail_bound > tol / 2.0:
        raise BudgetExceeded(
            f"{what}: tail bound {tail_bound:.2e} above tol/2 = {tol / 2.0:.2e}"
        )
    return QuadPlan(
        scheme=scheme,
        truncation_upper=upper,
        subdivision_cap=budget.max_quad_subdivisions,
        tail_bound=tail_bound,
    )


_GL_HI = np.polynomial.legendre.leggauss(24)
_GL_LO = np.polynomial.legendre.leggauss(16)


def _panel_quad(f, edges: np.ndarray, cap: int) -> tuple[float, float]:
    """Integrate f over consecutive panels; error from a 24-vs-16 node compare."""
    n_p = len(edges) - 1
    if n_p > cap:
        raise BudgetExceeded(f"quadrature: {n_p} panels exceeds subdivision cap {cap}")
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    t_hi = (mid[:, None] + half[:, None] * _GL_HI[0][None, :]).ravel()
    t_lo = (mid[:, None] + half[:, None] * _GL_LO[0][None, :]).ravel()
    f_hi = np.asarray(f(t_hi), dtype=float).reshape(n_p, -1)
    f_lo = np.asarray(f(t_lo), dtype=float).reshape(n_p, -1)
    per_hi = half * (f_hi @ _GL_HI[1])
    per_lo = half * (f_lo @ _GL_LO[1])
    val = float(np.sum(per_hi))
    err = float(np.sum(np.abs(per_hi - per_lo))) + _EPS * float(np.sum(np.abs(per_hi)))
    return val, err


def _graded_edges(upper: float, tol: float, smooth_from: float = 1.0) -> np.ndarray:
    """Geometric panels toward 0 (for endpoint log singularities), then
    ratio-1.5 growth out to `upper`."""
    first = min(smooth_from, upper)
    # smallest panel ~ first * 2^-K; its log-singular mass is O(u0 |log u0|)
    K = 10
    while first * 2.0 ** (-K) * (K * math.log(2.0) + 4.0) > tol / 8.0 and K < 52:
        K += 1
    edges = [0.0] + [first * 2.0 ** (-K + j) for j in range(K + 1)]
    while edges[-1] < upper * (1.0 - 1e-12):
        edges.append(min(edges[-1] * 1.5, upper))
    return np.array(edges)


# ---------------------------------------------------------------------------
# stable building blocks
# ---------------------------------------------------------------------------

def _g1(t: np.ndarray) -> np.ndarray:
    """1/(e^t - 1) - 1/t for t > 0; -1/2 at 0+, -1/t at infinity."""
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = t < 0.1
    ts = t[small]
    t2 = ts * ts
    out[small] = -0.5 + ts / 12.0 - ts * t2 / 720.0 + ts * t2 * t2 / 30240.0
    big = t > 45.0
    with np.errstate(under="ignore"):
        out[big] = -1.0 / t[big] + np.exp(-t[big])
    mid = ~(small | big)
    out[mid] = 1.0 / np.expm1(t[mid]) - 1.0 / t[mid]
    return out


_WIG_M = 10
_WIG_COEF = None


def _wig_coeffs() -> tuple[np.ndarray, float]:
    # W(a) = log a - Re psi(ia) ~ sum_m (-1)^m B_{2m}/(2m) a^{-2m}
    global _WIG_COEF
    if _WIG_COEF is None:
        bern = _bernoulli_fractions()
        cs = [
            float((-1) ** m * bern[2 * m] / (2 * m)) for m in range(1, _WIG_M + 2)
        ]
        _WIG_COEF = (np.array(cs[:_WIG_M]), abs(cs[_WIG_M]))
    return _WIG_COEF


_ODD_ZETAS = None


def _odd_zetas() -> tuple[float, float, float, float]:
    global _ODD_ZETAS
    if _ODD_ZETAS is None:
        _ODD_ZETAS = tuple(hurwitz_zeta(float(k), 1.0).value for k in (3, 5, 7, 9))
    return _ODD_ZETAS


def _wigert_closed_vec(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """W(a) = log(a) - (psi(ia) + psi(-ia))/2 = log(a) - Re psi(ia), a > 0."""
    a = np.asarray(a, dtype=float)
    out = np.empty_like(a)
    err = np.empty_like(a)
    hi = a >= 20.0
    if hi.any():
        coef, nxt = _wig_coeffs()
        u = 1.0 / (a[hi] * a[hi])
        acc = np.zeros_like(u)
        up = u.copy()
        for c in coef:
            acc += c * up
            up *= u
        out[hi] = acc
        err[hi] = nxt * np.abs(up) + _EPS * np.abs(acc)
    sm = a < 0.01
    if sm.any():
        # Re psi(ia) = -gamma + zeta(3) a^2 - zeta(5) a^4 + ...; the 1/(ia)
        # pole is purely imaginary and drops out of the bracket
        z3, z5, z7, z9 = _odd_zetas()
        asq = a[sm] * a[sm]
        out[sm] = (
            np.log(a[sm])
            + constants().euler_gamma
            - asq * (z3 - asq * (z5 - asq * z7))
        )
        err[sm] = z9 * asq**4 + _EPS * (np.abs(np.log(a[sm])) + 1.0)
    lo = ~(hi | sm)
    if lo.any():
        al = a[lo]
        psi, epsi = _digamma_vec(1j * al)
        out[lo] = np.log(al) - psi.real
        err[lo] = epsi + _EPS * (np.abs(np.log(al)) + np.abs(psi.real))
    return out, err


# ---------------------------------------------------------------------------
# oscillatory cosine transform: int_0^inf g(t) cos(a t) dt
# ---------------------------------------------------------------------------

def _segment_chunks(t0: float, t1: float) -> np.ndarray:
    """Chunk edges inside [t0, t1]: geometric doubling from 0 (the integrand
    envelope has O(1)-scale structure near 0), single chunk otherwise."""
    if t0 > 0.0:
        return np.array([t0, t1])
    edges = [0.0, min(0.5, t1)]
    while edges[-1] < t1 * (1.0 - 1e-12):
        edges.append(min(edges[-1] * 2.0, t1))
    return np.array(edges)


def _average_diagonal(terms: np.ndarray) -> tuple[float, float]:
    """Iterated averaging of the partial sums of an eventually alternating
    series; returns (estimate, error estimate from the last two levels)."""
    cur = np.cumsum(terms)
    last = cur[-1]
    prev = last
    while len(cur) > 1:
        cur = 0.5 * (cur[:-1] + cur[1:])
        prev = last
        last = cur[-1]
    return float(last), abs(float(last) - float(prev))


def _fourier_cos(g, a: float, tol: float, cap: int) -> tuple[float, float]:
    """int_0^inf g(t) cos(a t) dt, cut at the half-period points t_k = k pi/a."""
    half = math.pi / a
    glw = _GL_HI

    def seg(t0: float, t1: float) -> float:
        edges = _segment_chunks(t0, t1)
        mid = 0.5 * (edges[:-1] + edges[1:])
        hlf = 0.5 * (edges[1:] - edges[:-1])
        tt = (mid[:, None] + hlf[:, None] * glw[0][None, :]).ravel()
        vals = g(tt) * np.cos(a * tt)
        per = hlf * (vals.reshape(len(edges) - 1, -1) @ glw[1])
        return float(np.sum(per))

    direct = seg(0.0, half)
    n_seg = 24
    k_start = 1
    terms = [seg(k * half, (k + 1) * half) for k in range(k_start, k_start + n_seg)]
    while True:
        est, err = _average_diagonal(np.array(terms))
        if err < tol / 4.0:
            break
        if len(terms) + 16 > cap:
            raise BudgetExceeded(
                f"oscillatory quadrature: no convergence within {cap} half-periods"
            )
        base = k_start + len(terms)
        terms.extend(seg(k * half, (k + 1) * half) for k in range(base, base + 16))
    return direct + est, err + _EPS * (abs(direct) + abs(est) + 1.0)


# ---------------------------------------------------------------------------
# Wigert's integral
# ---------------------------------------------------------------------------

def wigert(
    a: float, tol: float = 1e-9, budget: PrecisionBudget | None = None
) -> tuple[EvalResult, EvalResult]:
    """Both sides of the cosine-transform identity
    int_0^inf (1/(e^t - 1) - 1/t) cos(at) dt = log(a) - (psi(ia) + psi(-ia))/2.

    Returns (lhs quadrature, rhs closed form)."""
    b = budget or DEFAULT_BUDGET
    if a < 1e-3:
        raise DomainError(
            "wigert: a < 1e-3 refused; the closed form diverges like log(a)"
        )
    plan = _make_plan(
        "oscillatory_halfperiod",
        b.max_quad_subdivisions * math.pi / a,
        0.0,
        tol,
        b,
        "wigert",
    )
    lv, le = _fourier_cos(_g1, a, tol, plan.subdivision_cap)
    rvs, res = _wigert_closed_vec(np.array([a]))
    return EvalResult(lv, le), EvalResult(float(rvs[0]), float(res[0]))


# ---------------------------------------------------------------------------
# H representations
# ---------------------------------------------------------------------------

def _outer_tail(X: float, y: float) -> tuple[float, float]:
    # 2 pi int_X^inf g1(2 pi x) W(x y) dx with g1 ~ -1/(2 pi x):
    # tail = -sum_m (w_m / 2m) (X y)^{-2m}; error = first omitted + dropped exp
    coef, nxt = _wig_coeffs()
    u = 1.0 / (X * y) ** 2
    tail = 0.0
    up = u
    for m, c in enumerate(coef, start=1):
        tail -= (c / (2.0 * m)) * up
        up *= u
    err = (nxt / (2.0 * (_WIG_M + 1))) * up + 4.0 * math.exp(-2.0 * math.pi * X)
    return tail, err


def H_single_integral(
    y: float, tol: float = 1e-9, budget: PrecisionBudget | None = None
) -> EvalResult:
    """H(y) as a single real integral of g1(2 pi x) against the digamma bracket."""
    if y <= 0.0:
        raise DomainError("H_single_integral: requires y > 0")
    b = budget or DEFAULT_BUDGET
    X = max(15.0, 15.0 / y)
    tail, tail_err = _outer_tail(X, y)
    plan = _make_plan("endpoint_singular", X, tail_err, tol, b, "H_single_integral")
    edges = _graded_edges(plan.truncation_upper, tol / (4.0 * math.pi))

    werr_box = [0.0]

    def f(x: np.ndarray) -> np.ndarray:
        wv, we = _wigert_closed_vec(x * y)
        werr_box[0] = max(werr_box[0], float(np.max(we)))
        return 2.0 * math.pi * _g1(2.0 * math.pi * x) * wv

    val, qerr = _panel_quad(f, edges, plan.subdivision_cap)
    err = qerr + plan.tail_bound + werr_box[0] * X * math.pi + _EPS * abs(val)
    return EvalResult(val + tail, err)


def H_double_integral(
    y: float, tol: float = 1e-4, budget: PrecisionBudget | None = None
) -> EvalResult:
    """H(y) as the double integral: outer x-integral of the half-period-
    accelerated inner cosine transform at frequency x*y."""
    if y <= 0.0:
        raise DomainError("H_double_integral: requires y > 0")
    if tol < 1e-4:
        raise DomainError("H_double_integral: tol below the 1e-4 oscillatory floor")
    b = budget or DEFAULT_BUDGET
    X = max(15.0, 15.0 / y)
    tail, tail_err = _outer_tail(X, y)
    plan = _make_plan("oscillatory_halfperiod", X, tail_err, tol, b, "H_double_integral")
    edges = _graded_edges(plan.truncation_upper, tol / (4.0 * math.pi))
    inner_tol = tol / (60.0 * X)

    ierr_box = [0.0]

    def f(x: np.ndarray) -> np.ndarray:
        out = np.empty_like(x)
        for i, xi in enumerate(x):
            iv, ie = _fourier_cos(_g1, xi * y, inner_tol, plan.subdivision_cap)
            out[i] = iv
            ierr_box[0] = max(ierr_box[0], ie)
        return 2.0 * math.pi * _g1(2.0 * math.pi * x) * out

    val, qerr = _panel_quad(f, edges, plan.subdivision_cap)
    err = qerr + plan.tail_bound + ierr_box[0] * X * math.pi + _EPS * abs(val)
    return EvalResult(val + tail, err)


_DIV_J = 6  # asymptotic orders kept in the divisor-series tail


def H_divisor_series(
    y: float, tol: float = 1e-9, budget: PrecisionBudget | None = None
) -> EvalResult:
    """H(y) = pi^2/(4y) + 4 sum_n d(n) int_0^inf t log(t) e^{-2 pi n y t}/(1+t^2) dt.

    The pi^2/(4y) term is the w=1 residue picked up when the zeta-pair kernel
    is moved into the absolute-convergence half-plane; its sign is fixed by
    the residue computation and confirmed against the other two
    representations.  The inner integral decays only like log(a)/a^2 in
    a = 2 pi n y, so the series tail is resolved analytically: the 1/(1+t^2)
    expansion turns tail terms into divisor Dirichlet series
    sum d(n) n^{-2j-2} and sum d(n) log(n) n^{-2j-2}, evaluated as zeta(m)^2
    and zeta(m) zeta'(m) complements of the sieved head."""
    if y <= 0.0:
        raise DomainError("H_divisor_series: requires y > 0")
    if y < 0.05:
        raise BudgetExceeded("H_divisor_series: refused for y < 0.05 (head explodes)")
    b = budget or DEFAULT_BUDGET
    g = constants()

    N = max(60, int(math.ceil(8.0 / y)))
    d = divisor_count_sieve(N)[1:].astype(float)
    n = np.arange(1, N + 1, dtype=float)
    a = 2.0 * math.pi * y * n

    # shared s-nodes: I(a) = a^{-2} int_0^inf s (log s - log a) e^{-s} / (1 + (s/a)^2) ds
    plan = _make_plan("smooth_decay", 45.0, 60.0 * math.exp(-45.0), tol, b,
                      "H_divisor_series")
    edges = _graded_edges(plan.truncation_upper, 1e-13)
    n_p = len(edges) - 1
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])

    def inner_all(gl) -> np.ndarray:
        s = (mid[:, None] + half[:, None] * gl[0][None, :]).ravel()
        base = s * np.exp(-s)
        ls = np.log(s)
        # matrix over (heads, nodes)
        denom = 1.0 + (s[None, :] / a[:, None]) ** 2
        vals = base[None, :] * (ls[None, :] - np.log(a)[:, None]) / denom
        per = vals.reshape(N, n_p, -1) @ gl[1]
        return (per * half[None, :]).sum(axis=1) / (a * a)

    I_hi = inner_all(_GL_HI)
    I_lo = inner_all(_GL_LO)
    head = 4.0 * float(np.dot(d, I_hi))
    head_err = 4.0 * float(np.dot(d, np.abs(I_hi - I_lo))) + _EPS * 4.0 * float(
        np.dot(d, np.abs(I_hi))
    )

    # analytic tail over n > N
    tail = 0.0
    tail_err = 0.0
    l2py = math.log(2.0 * math.pi * y)
    for j in range(_DIV_J):
        m = 2 * j + 2
        zm = hurwitz_zeta(float(m), 1.0).value
        Lm = log_tail_sum(m, 1).value  # sum_{k>=2} log k / k^m = -zeta'(m)
        head_m = float(np.dot(d, n ** (-float(m))))
        headlog_m = float(np.dot(d, np.log(n) * n ** (-float(m))))
        Dtail = zm * zm - head_m
        DLtail = 2.0 * zm * Lm - headlog_m
        psi_m = -g.euler_gamma + sum(1.0 / i for i in range(1, m))
        pref = (-1.0) ** j * math.factorial(m - 1) * (2.0 * math.pi * y) ** (-float(m))
        tail += pref * ((psi_m - l2py) * Dtail - DLtail)
        tail_err += abs(pref) * (abs(Dtail) + abs(DLtail) + head_m) * 64.0 * _EPS
    # remainder after _DIV_J orders of the 1/(1+t^2) expansion, with d(n) <= n:
    # sum_{n>N} d(n)(C + log n)/n^m <= C zeta(m-1, N+1) + log-tail(m-1, N)
    m_next = 2 * _DIV_J + 2
    psi_next = -g.euler_gamma + sum(1.0 / i for i in range(1, m_next))
    rem = (
        math.factorial(m_next - 1)
        * (2.0 * math.pi * y) ** (-float(m_next))
        * (
            (abs(l2py) + abs(psi_next)) * hurwitz_zeta(float(m_next - 1), float(N + 1)).value
            + log_tail_sum(m_next - 1, N).value
        )
    )
    tail_err += rem

    val = math.pi * math.pi / (4.0 * y) + head + 4.0 * tail
    return EvalResult(val, head_err + 4.0 * tail_err + _EPS * abs(val))


# ---------------------------------------------------------------------------
# Lemma-4.1 left side and the auto-correlation integral
# ---------------------------------------------------------------------------

def lemma41_lhs(
    x: float, tol: float = 1e-9, budget: PrecisionBudget | None = None
) -> EvalResult:
    """int_0^inf t log(t) / ((1 + t^2)(e^{x t} - 1)) dt for x > 0."""
    if x <= 0.0:
        raise DomainError("lemma41_lhs: requires x > 0")
    b = budget or DEFAULT_BUDGET
    T = max(50.0 / x, 8.0)
    tail_bound = 2.0 * (math.log(T) + 1.0) / T * math.exp(-x * T) / x
    plan = _make_plan("endpoint_singular", T, tail_bound, tol, b, "lemma41_lhs")
    edges = _graded_edges(plan.truncation_upper, tol, smooth_from=min(1.0, T / 4.0))

    def f(t: np.ndarray) -> np.ndarray:
        return t * np.log(t) / (1.0 + t * t) / np.expm1(x * t)

    val, qerr = _panel_quad(f, edges, plan.subdivision_cap)
    return EvalResult(val, qerr + plan.tail_bound + _EPS * abs(val))


def A_direct(
    z: float, tol: float = 1e-9, budget: PrecisionBudget | None = None
) -> EvalResult:
    """A(z) = int_0^inf (1/(xz) - 1/(e^{xz}-1)) (1/x - 1/(e^x-1)) dx, z > 0."""
    if z <= 0.0:
        raise DomainError("A_direct: requires z > 0")
    b = budget or DEFAULT_BUDGET
    X = max(40.0, 40.0 / z)
    # beyond X both factors are 1/u to ~e^{-40}; the product tail is exactly 1/(X z)
    tail = 1.0 / (X * z)
    tail_err = 8.0 * math.exp(-min(X, X * z))
    plan = _make_plan("smooth_decay", X, tail_err, tol, b, "A_direct")

    def f(x: np.ndarray) -> np.ndarray:
        return _g1(x * z) * _g1(x)

    edges = _graded_edges(plan.truncation_upper, tol, smooth_from=1.0)
    val, qerr = _panel_quad(f, edges, plan.subdivision_cap)
    return EvalResult(val + tail, qerr + plan.tail_bound + _EPS * (abs(val) + tail))
