"""Composite functions built from the series and contour layers, plus the
verification engine that certifies every two-term relation as a residual.

A relation check never raises on mathematical failure: it fills a
RelationReport whose pass flag couples the user tolerance with the
propagated error estimates, so an over-ambitious tolerance yields an honest
fail instead of a flaky one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .contour import H_contour, J_contour, kloosterman, lemma41_rhs, A_inverse_mellin
from .errors import DomainError
from .quadreps import (
    A_direct,
    H_divisor_series,
    H_double_integral,
    H_single_integral,
    lemma41_lhs,
    wigert,
)
from .series import herglotz_F, phi_log, sum_phi0, sum_phi0_lognx, sum_phi1
from .specfun import (
    DEFAULT_BUDGET,
    EvalResult,
    PrecisionBudget,
    _EPS,
    constants,
    digamma,
    dilog,
)

__all__ = [
    "IdentityId",
    "RelationReport",
    "G_fn",
    "F_fn",
    "F1_fn",
    "ramanujan_bracket",
    "verify",
    "verify_grid",
    "default_grid",
    "all_identities",
]


class IdentityId(Enum):
    THM_1_1 = "thm1.1"
    THM_3_2 = "thm3.2"
    LEMMA_3_1 = "lemma3.1"
    RAMANUJAN_W126 = "ramanujan.w126"
    F1_K1 = "f1.k1"
    ZAGIER_2TERM = "zagier.2term"
    ZAGIER_3TERM = "zagier.3term"
    H_REP_DIVISOR = "h.rep.divisor"
    H_REP_SINGLE = "h.rep.single"
    H_REP_DOUBLE = "h.rep.double"
    LEMMA_4_1 = "lemma4.1"
    WIGERT = "wigert"
    KLOOSTERMAN = "kloosterman"
    A_PAIRING = "a.pairing"


@dataclass(frozen=True)
class RelationReport:
    identity: IdentityId
    params: tuple[float, ...]
    lhs: EvalResult
    rhs: EvalResult
    residual: float
    tolerance: float
    passed: bool


_H_PROVIDERS = {
    "contour": H_contour,
    "divisor": H_divisor_series,
    "single": H_single_integral,
    "double": H_double_integral,
}


def _h_value(x: float, tol: float, h_rep: str, budget) -> EvalResult:
    try:
        provider = _H_PROVIDERS[h_rep]
    except KeyError:
        raise DomainError(f"unknown H representation {h_rep!r}") from None
    if h_rep == "double":
        tol = max(tol, 1e-4)
    return provider(x, tol, budget)


def G_fn(
    x: float,
    tol: float = 1e-8,
    budget: PrecisionBudget | None = None,
    h_rep: str = "contour",
) -> EvalResult:
    """G(x) = phi_log(x) - H(x)/2 - (12 gamma^2 - 5 pi^2)/(48 x)
               + (gamma log x + log(2 pi) log(2 pi x))/(4 x)."""
    if x <= 0.0:
        raise DomainError("G_fn: requires x > 0")
    b = budget or DEFAULT_BUDGET
    c = constants()
    part = max(tol / 4.0, 1e-11)
    pl = phi_log(x, part, b)
    hh = _h_value(x, max(tol / 4.0, 1e-12), h_rep, b)
    lx = math.log(x)
    closed = (
        -(12.0 * c.euler_gamma**2 - 5.0 * c.pi**2) / (48.0 * x)
        + (c.euler_gamma * lx + c.log_2pi * (c.log_2pi + lx)) / (4.0 * x)
    )
    val = pl.value - 0.5 * hh.value + closed
    err = pl.error_estimate + 0.5 * hh.error_estimate + _EPS * (abs(closed) + abs(val))
    return EvalResult(val, err)


def F_fn(
    x: float,
    tol: float = 1e-8,
    budget: PrecisionBudget | None = None,
    h_rep: str = "contour",
) -> EvalResult:
    """F(x) = sum phi1(nx) - sum log(nx) phi0(nx) + H(x)/2 - pi^2/(12 x)."""
    if x <= 0.0:
        raise DomainError("F_fn: requires x > 0")
    b = budget or DEFAULT_BUDGET
    part = max(tol / 6.0, 1e-11)
    s1 = sum_phi1(x, part, b)
    slx = sum_phi0_lognx(x, part, b)
    hh = _h_value(x, max(tol / 6.0, 1e-12), h_rep, b)
    val = s1.value - slx.value + 0.5 * hh.value - math.pi**2 / (12.0 * x)
    err = (
        s1.error_estimate
        + slx.error_estimate
        + 0.5 * hh.error_estimate
        + _EPS * abs(val)
    )
    return EvalResult(val, err)


def F1_fn(
    x: float, tol: float = 1e-8, budget: PrecisionBudget | None = None
) -> EvalResult:
    """F1(x): the sqrt(x)-weighted phi1 sum with its closed corrections, minus
    (sqrt(x) log x / 2) times the phi0 bracket."""
    if x <= 0.0:
        raise DomainError("F1_fn: requires x > 0")
    b = budget or DEFAULT_BUDGET
    c = constants()
    part = max(tol / 6.0, 1e-11)
    s1 = sum_phi1(x, part, b)
    s0 = sum_phi0(x, part, b)
    rx = math.sqrt(x)
    lx = math.log(x)
    bracket1 = (
        s1.value
        + (c.log_2pi**2 - (c.euler_gamma - lx) ** 2) / (4.0 * x)
        + c.pi**2 / (48.0 * x)
    )
    bracket0 = s0.value + (c.euler_gamma - math.log(2.0 * math.pi * x)) / (2.0 * x)
    val = rx * bracket1 - 0.5 * rx * lx * bracket0
    err = (
        rx * s1.error_estimate
        + 0.5 * rx * abs(lx) * s0.error_estimate
        + _EPS * (abs(val) + rx * (abs(bracket1) + abs(bracket0)))
    )
    return EvalResult(val, err)


def ramanujan_bracket(
    x: float, tol: float = 1e-9, budget: PrecisionBudget | None = None
) -> EvalResult:
    """sqrt(x) { sum phi0(nx) + (gamma - log(2 pi x))/(2x) }."""
    if x <= 0.0:
        raise DomainError("ramanujan_bracket: requires x > 0")
    b = budget or DEFAULT_BUDGET
    c = constants()
    s0 = sum_phi0(x, max(tol / 2.0, 1e-11), b)
    rx = math.sqrt(x)
    val = rx * (s0.value + (c.euler_gamma - math.log(2.0 * math.pi * x)) / (2.0 * x))
    err = rx * s0.error_estimate + _EPS * (abs(val) + 1.0)
    return EvalResult(val, err)


# ---------------------------------------------------------------------------
# identity dispatch
# ---------------------------------------------------------------------------

def _scaled(r: EvalResult, f: float) -> EvalResult:
    return EvalResult(f * r.value, abs(f) * r.error_estimate)


def _pair_thm11(a: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    beta = 1.0 / a
    return (
        _scaled(G_fn(a, tol / 4.0, b), math.sqrt(a)),
        _scaled(G_fn(beta, tol / 4.0, b), math.sqrt(beta)),
    )


def _pair_thm32(a: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    beta = 1.0 / a
    return (
        _scaled(F_fn(a, tol / 4.0, b), math.sqrt(a)),
        _scaled(F_fn(beta, tol / 4.0, b), math.sqrt(beta)),
    )


def _pair_lemma31(a: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    beta = 1.0 / a
    return (
        _scaled(J_contour(a, tol / 4.0, b), math.sqrt(a)),
        _scaled(J_contour(beta, tol / 4.0, b), math.sqrt(beta)),
    )


def _pair_w126(a: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    return ramanujan_bracket(a, tol / 2.0, b), ramanujan_bracket(1.0 / a, tol / 2.0, b)


def _pair_f1k1(a: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    return F1_fn(a, tol / 2.0, b), F1_fn(1.0 / a, tol / 2.0, b)


def _pair_zagier2(x: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    c = constants()
    f_x = herglotz_F(x, tol / 8.0, b)
    f_inv = herglotz_F(1.0 / x, tol / 8.0, b)
    f_1 = herglotz_F(1.0, tol / 8.0, b)
    lhs = EvalResult(f_x.value + f_inv.value, f_x.error_estimate + f_inv.error_estimate)
    rv = (
        2.0 * f_1.value
        + 0.5 * math.log(x) ** 2
        - c.pi**2 / (6.0 * x) * (x - 1.0) ** 2
    )
    rhs = EvalResult(rv, 2.0 * f_1.error_estimate + _EPS * abs(rv))
    return lhs, rhs


def _pair_zagier3(x: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    f_x = herglotz_F(x, tol / 8.0, b)
    f_x1 = herglotz_F(x + 1.0, tol / 8.0, b)
    f_frac = herglotz_F(x / (x + 1.0), tol / 8.0, b)
    f_1 = herglotz_F(1.0, tol / 8.0, b)
    li = dilog(1.0 / (1.0 + x))
    lhs = EvalResult(
        f_x.value - f_x1.value - f_frac.value,
        f_x.error_estimate + f_x1.error_estimate + f_frac.error_estimate,
    )
    rhs = EvalResult(-f_1.value + li.value, f_1.error_estimate + li.error_estimate)
    return lhs, rhs


def _pair_hrep(which: str):
    def pair(y: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
        lhs = H_contour(y, max(tol / 4.0, 1e-12), b)
        rhs = _h_value(y, tol / 2.0, which, b)
        return lhs, rhs

    return pair


def _pair_lemma41(x: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    return lemma41_lhs(x, tol / 2.0, b), lemma41_rhs(x, tol / 2.0, b)


def _pair_wigert(a: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    return wigert(a, tol / 2.0, b)


def _pair_kloosterman(x: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    lhs = kloosterman(x, tol / 2.0, b)
    ps = digamma(x + 1.0, b)
    rv = ps.value.real if isinstance(ps.value, complex) else ps.value
    rhs = EvalResult(rv - math.log(x), ps.error_estimate + _EPS * abs(math.log(x)))
    return lhs, rhs


def _pair_apairing(z: float, tol: float, b) -> tuple[EvalResult, EvalResult]:
    return A_direct(z, tol / 2.0, b), A_inverse_mellin(z, tol / 2.0, b)


_DISPATCH = {
    IdentityId.THM_1_1: _pair_thm11,
    IdentityId.THM_3_2: _pair_thm32,
    IdentityId.LEMMA_3_1: _pair_lemma31,
    IdentityId.RAMANUJAN_W126: _pair_w126,
    IdentityId.F1_K1: _pair_f1k1,
    IdentityId.ZAGIER_2TERM: _pair_zagier2,
    IdentityId.ZAGIER_3TERM: _pair_zagier3,
    IdentityId.H_REP_DIVISOR: _pair_hrep("divisor"),
    IdentityId.H_REP_SINGLE: _pair_hrep("single"),
    IdentityId.H_REP_DOUBLE: _pair_hrep("double"),
    IdentityId.LEMMA_4_1: _pair_lemma41,
    IdentityId.WIGERT: _pair_wigert,
    IdentityId.KLOOSTERMAN: _pair_kloosterman,
    IdentityId.A_PAIRING: _pair_apairing,
}

_DEFAULT_GRIDS: dict[IdentityId, tuple[tuple[float, ...], float]] = {
    IdentityId.THM_1_1: ((0.25, 0.5, 0.8, 1.0, 1.25, 2.0, 4.0), 1e-6),
    IdentityId.THM_3_2: ((0.25, 0.5, 0.8, 1.0, 1.25, 2.0, 4.0), 1e-6),
    IdentityId.LEMMA_3_1: ((0.5, 0.8, 2.0, 3.0), 1e-6),
    IdentityId.RAMANUJAN_W126: ((0.5, 2.0, 5.0), 1e-8),
    IdentityId.F1_K1: ((0.5, 2.0, 3.0), 1e-6),
    IdentityId.ZAGIER_2TERM: ((0.5, 2.0, 3.0), 1e-8),
    IdentityId.ZAGIER_3TERM: ((0.5, 1.0, 2.0), 1e-8),
    IdentityId.H_REP_DIVISOR: ((0.5, 1.0, 2.0), 1e-6),
    IdentityId.H_REP_SINGLE: ((0.5, 1.0, 2.0), 1e-6),
    IdentityId.H_REP_DOUBLE: ((1.0,), 1e-4),
    IdentityId.LEMMA_4_1: ((1.0, 2.0 * math.pi, 10.0), 1e-8),
    IdentityId.WIGERT: ((0.5, 1.0, 3.0, 10.0), 1e-8),
    IdentityId.KLOOSTERMAN: ((0.3, 1.0, 5.0), 1e-10),
    IdentityId.A_PAIRING: ((1.0, 2.0), 1e-6),
}


def all_identities() -> tuple[IdentityId, ...]:
    return tuple(IdentityId)


def default_grid(identity: IdentityId) -> tuple[tuple[float, ...], float]:
    """Default parameter grid and tolerance for an identity."""
    return _DEFAULT_GRIDS[identity]


def verify(
    identity: IdentityId,
    param: float,
    tol: float | None = None,
    budget: PrecisionBudget | None = None,
) -> RelationReport:
    """Evaluate both sides of an identity at one parameter and report.

    pass <=> residual <= max(tol, 10 * (lhs.err + rhs.err)); a failing report
    is a value, not an exception."""
    b = budget or DEFAULT_BUDGET
    if tol is None:
        tol = _DEFAULT_GRIDS[identity][1]
    if param <= 0.0:
        raise DomainError("verify: identity parameters must be positive")
    lhs, rhs = _DISPATCH[identity](float(param), tol, b)
    residual = abs(lhs.value - rhs.value)
    passed = residual <= max(tol, 10.0 * (lhs.error_estimate + rhs.error_estimate))
    return RelationReport(
        identity=identity,
        params=(float(param),),
        lhs=lhs,
        rhs=rhs,
        residual=float(residual),
        tolerance=float(tol),
        passed=bool(passed),
    )


def verify_grid(
    identity: IdentityId,
    params: tuple[float, ...] | None = None,
    tol: float | None = None,
    budget: PrecisionBudget | None = None,
) -> list[RelationReport]:
    grid, default_tol = _DEFAULT_GRIDS[identity]
    if params is None:
        params = grid
    if tol is None:
        tol = default_tol
    return [verify(identity, p, tol, budget) for p in params]
