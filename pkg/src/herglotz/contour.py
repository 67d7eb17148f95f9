"""Vertical-line inverse-Mellin quadrature and the Mellin-Barnes integrals.

The shared engine integrates (1/2 pi i) int_{(c)} G(w) x^{-w} dw by folding
the line onto t in [0, T] through conjugate symmetry (all kernels here have
real Dirichlet coefficients), panel Gauss-Legendre quadrature, and an
exponential-decay certificate for the truncated tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BudgetExceeded, DomainError, PoleTooClose, TruncationUncertified
from .specfun import (
    DEFAULT_BUDGET,
    EvalResult,
    PrecisionBudget,
    _EPS,
    _digamma_vec,
    _lgamma_vec,
    _zeta_vec,
)

__all__ = [
    "ContourSpec",
    "KernelId",
    "line_integral",
    "default_spec",
    "H_contour",
    "J_contour",
    "lemma41_rhs",
    "A_inverse_mellin",
]


class KernelId(Enum):
    H_KERNEL = "H_KERNEL"
    J_KERNEL = "J_KERNEL"
    KLOOSTERMAN = "KLOOSTERMAN"
    LEMMA41_RHS = "LEMMA41_RHS"
    A_MELLIN = "A_MELLIN"


@dataclass(frozen=True)
class ContourSpec:
    """A vertical-line quadrature plan: Re w = c, |Im w| <= T."""

    abscissa_c: float
    height_T: float
    panel_count: int
    decay_rate: float


# legal open strip for the abscissa, per kernel
_STRIPS = {
    KernelId.H_KERNEL: (0.0, 1.0),
    KernelId.J_KERNEL: (0.0, 1.0),
    KernelId.KLOOSTERMAN: (0.0, 1.0),
    KernelId.A_MELLIN: (0.0, 1.0),
    KernelId.LEMMA41_RHS: (1.0, 2.0),
}

_DEFAULT_T = {
    KernelId.H_KERNEL: 40.0,
    KernelId.J_KERNEL: 40.0,
    KernelId.KLOOSTERMAN: 40.0,
    KernelId.A_MELLIN: 40.0,
    KernelId.LEMMA41_RHS: 60.0,
}

_POLE_CLEARANCE = 0.05


# ---------------------------------------------------------------------------
# numerically stable trig helpers on the upper half line (Im w >= 0)
# ---------------------------------------------------------------------------

def _inv_sin_pi(w: np.ndarray) -> np.ndarray:
    # 1/sin(pi w) = 2 i q / (q^2 - 1), q = e^{i pi w}, |q| <= 1 for Im w >= 0
    q = np.exp(1j * math.pi * w)
    return 2j * q / (q * q - 1.0)


def _cot_half_pi(w: np.ndarray) -> np.ndarray:
    # cot(pi w / 2) = i (q + 1) / (q - 1), q = e^{i pi w}
    q = np.exp(1j * math.pi * w)
    return 1j * (q + 1.0) / (q - 1.0)


def _inv_sin_half_pi(w: np.ndarray) -> np.ndarray:
    # 1/sin(pi w / 2) = 2 i p / (p^2 - 1), p = e^{i pi w / 2}
    p = np.exp(0.5j * math.pi * w)
    return 2j * p / (p * p - 1.0)


# ---------------------------------------------------------------------------
# kernels:  G(w) with per-node error estimates
# ---------------------------------------------------------------------------

def _kernel_values(kernel: KernelId, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if kernel is KernelId.KLOOSTERMAN:
        z1, e1 = _zeta_vec(1.0 - w)
        inv = _inv_sin_pi(w)
        val = -math.pi * z1 * inv
        err = math.pi * e1 * np.abs(inv)
        return val, err

    if kernel is KernelId.LEMMA41_RHS:
        g = np.exp(_lgamma_vec(w))
        z, ez = _zeta_vec(w)
        rest = _cot_half_pi(w) * _inv_sin_half_pi(w)
        pref = math.pi * math.pi / 4.0
        val = pref * g * z * rest
        err = pref * np.abs(g) * (ez + 8.0 * _EPS * np.abs(z)) * np.abs(rest)
        return val, err

    z, ez = _zeta_vec(w)
    z1, ez1 = _zeta_vec(1.0 - w)
    inv = _inv_sin_pi(w)
    base = math.pi * z * z1 * inv
    base_err = math.pi * (ez * np.abs(z1) + np.abs(z) * ez1) * np.abs(inv)

    if kernel is KernelId.A_MELLIN:
        return base, base_err
    if kernel is KernelId.H_KERNEL:
        cot = math.pi * _cot_half_pi(w)
        return base * cot, base_err * np.abs(cot)
    if kernel is KernelId.J_KERNEL:
        psi, epsi = _digamma_vec(w)
        fac = psi + (math.pi / 2.0) * _cot_half_pi(w)
        return base * fac, base_err * np.abs(fac) + np.abs(base) * epsi
    raise ValueError(f"unknown kernel {kernel!r}")


# ---------------------------------------------------------------------------
# panel engine
# ---------------------------------------------------------------------------

_GL_HI = np.polynomial.legendre.leggauss(24)
_GL_LO = np.polynomial.legendre.leggauss(16)


def _base_width(x: float) -> float:
    # x^{-it} oscillates with frequency |log x|; keep a few wavelengths per panel
    return min(2.0, 8.0 / (1.0 + abs(math.log(x))))


def _panel_edges(x: float, T: float) -> np.ndarray:
    """Deterministic edges on [0, T]: a finely split first panel, then uniform
    steps.  The layout depends on x only, so growing T appends panels without
    moving earlier ones."""
    h = _base_width(x)
    edges = [0.0, 0.25 * h, 0.5 * h, h]
    k = 1
    while edges[-1] < T - 1e-12:
        k += 1
        edges.append(k * h)
    return np.array(edges)


def default_spec(
    kernel: KernelId,
    x: float,
    tol: float = 1e-10,
    budget: PrecisionBudget | None = None,
) -> ContourSpec:
    """Build the standard plan for a kernel at x: abscissa mid-strip, default
    truncation height, decay rate pi (1/sin for the zeta kernels; Stirling
    Gamma-decay times cosec for the Gamma kernel)."""
    b = budget or DEFAULT_BUDGET
    lo, hi = _STRIPS[kernel]
    c = 0.5 * (lo + hi)
    T = min(_DEFAULT_T[kernel], b.max_contour_height)
    rate = math.pi
    # a-priori certificate: |integrand| <= K e^{-rate t} poly(t); K ~ 50 covers
    # the zeta growth on the verification lines
    bound = 50.0 * (1.0 + T) ** 2 * math.exp(-rate * T) / rate
    if bound > tol / 2.0:
        raise TruncationUncertified(
            f"contour: truncation bound {bound:.2e} above tol/2 at height {T}"
        )
    n_panels = len(_panel_edges(x, T)) - 1
    return ContourSpec(abscissa_c=c, height_T=T, panel_count=n_panels, decay_rate=rate)


def line_integral(
    kernel: KernelId,
    x: float,
    spec: ContourSpec,
    tol: float | None = None,
) -> EvalResult:
    """(1/2 pi i) int_{(c)} G(w) x^{-w} dw via folding onto t in [0, T]."""
    if x <= 0.0:
        raise DomainError("line_integral: requires x > 0")
    lo, hi = _STRIPS[kernel]
    c = spec.abscissa_c
    if not (lo + _POLE_CLEARANCE <= c <= hi - _POLE_CLEARANCE):
        raise PoleTooClose(
            f"line_integral: abscissa {c} within {_POLE_CLEARANCE} of a pole of "
            f"{kernel.value} (legal strip ({lo}, {hi}))"
        )

    edges = _panel_edges(x, spec.height_T)
    lnx = math.log(x)

    def fold(tnodes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        w = c + 1j * tnodes
        gv, ge = _kernel_values(kernel, w)
        phase = np.exp(-w * lnx)  # x^{-w}
        f = gv * phase
        return f.real / math.pi, ge * np.abs(phase) / math.pi

    val = 0.0
    quad_err = 0.0
    node_err = 0.0
    for a, bnd in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (a + bnd), 0.5 * (bnd - a)
        t_hi = mid + half * _GL_HI[0]
        t_lo = mid + half * _GL_LO[0]
        f_hi, e_hi = fold(t_hi)
        f_lo, _ = fold(t_lo)
        i_hi = half * float(np.dot(_GL_HI[1], f_hi))
        i_lo = half * float(np.dot(_GL_LO[1], f_lo))
        val += i_hi
        quad_err += abs(i_hi - i_lo)
        node_err += half * float(np.dot(_GL_HI[1], e_hi))

    # truncation certificate from the measured integrand size near T
    T = edges[-1]
    f_T, _ = fold(np.array([T, max(T - 0.5, 0.5 * T)]))
    rate = spec.decay_rate
    amp = max(abs(f_T[0]), abs(f_T[1]) * math.exp(-0.5 * rate))
    trunc = 10.0 * amp * (1.0 + 2.0 / (rate * T)) / rate + 1e-300
    if tol is not None and trunc > tol / 2.0:
        raise TruncationUncertified(
            f"line_integral: truncation bound {trunc:.2e} exceeds tol/2={tol / 2:.2e}"
        )

    err = quad_err + node_err + trunc + _EPS * abs(val) * 4.0
    return EvalResult(val, err)


# ---------------------------------------------------------------------------
# public integral evaluators
# ---------------------------------------------------------------------------

def _run(kernel: KernelId, x: float, tol: float, budget: PrecisionBudget | None) -> EvalResult:
    b = budget or DEFAULT_BUDGET
    spec = default_spec(kernel, x, tol, b)
    res = line_integral(kernel, x, spec, tol)
    if res.error_estimate > tol:
        raise BudgetExceeded(
            f"{kernel.value}: achieved error {res.error_estimate:.2e} above tol {tol:.2e}"
        )
    return res


def H_contour(x: float, tol: float = 1e-8, budget: PrecisionBudget | None = None) -> EvalResult:
    """The integral H(x): zeta-pair kernel with the pi*cot(pi w/2) factor."""
    return _run(KernelId.H_KERNEL, x, tol, budget)


def J_contour(x: float, tol: float = 1e-8, budget: PrecisionBudget | None = None) -> EvalResult:
    """The integral J(x): zeta-pair kernel with psi(w) + (pi/2) cot(pi w/2)."""
    return _run(KernelId.J_KERNEL, x, tol, budget)


def lemma41_rhs(x: float, tol: float = 1e-9, budget: PrecisionBudget | None = None) -> EvalResult:
    """(pi^2/4) (1/2 pi i) int_{(3/2)} Gamma(w) zeta(w) cot(pi w/2) cosec(pi w/2) x^{-w} dw."""
    return _run(KernelId.LEMMA41_RHS, x, tol, budget)


def A_inverse_mellin(z: float, tol: float = 1e-8, budget: PrecisionBudget | None = None) -> EvalResult:
    """A(z) recovered from its Mellin transform pi zeta(s) zeta(1-s) / sin(pi s)."""
    return _run(KernelId.A_MELLIN, z, tol, budget)


def kloosterman(x: float, tol: float = 1e-10, budget: PrecisionBudget | None = None) -> EvalResult:
    """(1/2 pi i) int_{(c)} -pi zeta(1-w)/sin(pi w) x^{-w} dw  (= psi(x+1) - log x)."""
    return _run(KernelId.KLOOSTERMAN, x, tol, budget)
