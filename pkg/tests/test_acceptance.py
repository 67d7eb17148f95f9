"""Acceptance suite: every certification criterion at its stated tolerance.

Each test prints one `ACCEPTANCE <n> <name>: PASS/FAIL (detail)` line (visible
with `pytest -s tests/test_acceptance.py` or in captured output on failure)
and asserts the criterion.
"""

import io
import math
import time
from contextlib import redirect_stdout

import numpy as np

import oracles as oc
from herglotz import cli
from herglotz import contour as ct
from herglotz import quadreps as qr
from herglotz import relations as rl
from herglotz import series as se
from herglotz import specfun as sf

G = oc.EULER_GAMMA_REF
G1 = oc.STIELTJES_G1_REF


def _report(num: int, name: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num:02d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num} ({name}): {detail}"


def _grid_check(ident, grid, tol):
    reports = [rl.verify(ident, p, tol) for p in grid]
    worst = max(r.residual for r in reports)
    ok = all(
        r.residual <= max(tol, 10.0 * (r.lhs.error_estimate + r.rhs.error_estimate))
        for r in reports
    )
    return ok, worst


def test_criterion_01_theorem_1_1_modular_relation():
    t0 = time.perf_counter()
    ok, worst = _grid_check(
        rl.IdentityId.THM_1_1, (0.25, 0.5, 0.8, 1.0, 1.25, 2.0, 4.0), 1e-6
    )
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed <= 120.0
    _report(1, "two-term relation for the log-twisted assembly G",
            ok, f"max residual {worst:.3e}, {elapsed:.1f}s")


def test_criterion_02_theorem_3_2_modular_relation():
    ok, worst = _grid_check(
        rl.IdentityId.THM_3_2, (0.25, 0.5, 0.8, 1.0, 1.25, 2.0, 4.0), 1e-6
    )
    _report(2, "two-term relation for the phi1/phi0 assembly F", ok,
            f"max residual {worst:.3e}")


def test_criterion_03_ramanujan_bracket_relation():
    t0 = time.perf_counter()
    ok, worst = _grid_check(rl.IdentityId.RAMANUJAN_W126, (0.5, 2.0, 5.0), 1e-8)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed <= 10.0
    _report(3, "Ramanujan bracket equality", ok,
            f"max residual {worst:.3e}, {elapsed:.1f}s")


def test_criterion_04_F1_two_term_relation():
    ok, worst = _grid_check(rl.IdentityId.F1_K1, (0.5, 2.0, 3.0), 1e-6)
    _report(4, "F1(alpha) = F1(1/alpha)", ok, f"max residual {worst:.3e}")


def test_criterion_05_J_modular_relation():
    ok, worst = _grid_check(rl.IdentityId.LEMMA_3_1, (0.5, 0.8, 2.0, 3.0), 1e-6)
    _report(5, "sqrt-weighted J relation", ok, f"max residual {worst:.3e}")


def test_criterion_06_H_representation_equivalence():
    t0 = time.perf_counter()
    worst = 0.0
    ok = True
    for y in (0.5, 1.0, 2.0):
        hc = ct.H_contour(y, 1e-9).value
        for rep in (qr.H_divisor_series(y, 1e-9), qr.H_single_integral(y, 1e-9)):
            r = abs(rep.value - hc)
            worst = max(worst, r)
            ok = ok and r <= 1e-6
    hd = abs(qr.H_double_integral(1.0, 1e-4).value - ct.H_contour(1.0, 1e-9).value)
    ok = ok and hd <= 1e-4
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed <= 60.0
    _report(6, "H representation equivalence", ok,
            f"max series/single residual {worst:.3e}, double {hd:.3e}, {elapsed:.1f}s")


def test_criterion_07_boundary_divisor_integral_identity():
    ok, worst = _grid_check(rl.IdentityId.LEMMA_4_1, (1.0, 2.0 * math.pi, 10.0), 1e-8)
    _report(7, "t log t / (1+t^2) Bose-kernel integral identity", ok,
            f"max residual {worst:.3e}")


def test_criterion_08_wigert_identity():
    ok, worst = _grid_check(rl.IdentityId.WIGERT, (0.5, 1.0, 3.0, 10.0), 1e-8)
    _report(8, "cosine-transform digamma bracket identity", ok,
            f"max residual {worst:.3e}")


def test_criterion_09_kloosterman_identity():
    ok, worst = _grid_check(rl.IdentityId.KLOOSTERMAN, (0.3, 1.0, 5.0), 1e-10)
    _report(9, "Kloosterman line integral = psi(x+1) - log x", ok,
            f"max residual {worst:.3e}")


def test_criterion_10_zagier_functional_equations():
    ok2, worst2 = _grid_check(rl.IdentityId.ZAGIER_2TERM, (0.5, 2.0, 3.0), 1e-8)
    ok3, worst3 = _grid_check(rl.IdentityId.ZAGIER_3TERM, (0.5, 1.0, 2.0), 1e-8)
    closed = -0.5 * G * G - math.pi**2 / 12.0 - G1
    f1_resid = abs(se.herglotz_F(1.0, 1e-10).value - closed)
    ok = ok2 and ok3 and f1_resid <= 1e-8
    _report(10, "Zagier two/three-term equations and F(1)", ok,
            f"2-term {worst2:.3e}, 3-term {worst3:.3e}, F(1) {f1_resid:.3e}")


def test_criterion_11_autocorrelation_pairing():
    okp, worstp = _grid_check(rl.IdentityId.A_PAIRING, (1.0, 2.0), 1e-6)
    worst_s = 0.0
    for z in (0.5, 4.0):
        r = abs(qr.A_direct(z, 1e-10).value - qr.A_direct(1.0 / z, 1e-10).value / z)
        worst_s = max(worst_s, r)
    ok = okp and worst_s <= 1e-8
    _report(11, "A(z) direct/Mellin pairing and scaling", ok,
            f"pairing {worstp:.3e}, scaling {worst_s:.3e}")


def test_criterion_12_scalar_function_suite():
    checks = []
    checks.append(abs(sf.digamma(1.0).value + G) <= 1e-12)
    checks.append(abs(sf.digamma(0.5).value - (-G - 2.0 * math.log(2.0))) <= 1e-12)

    rng = np.random.default_rng(101)
    xs = rng.uniform(0.01, 50.0, size=100)
    worst_psi = max(
        abs(sf.digamma(x + 1.0).value - sf.digamma(x).value - 1.0 / x) for x in xs
    )
    worst_psi1 = max(
        abs(sf.psi1(x + 1.0).value - sf.psi1(x).value - math.log(x) / x) for x in xs
    )
    checks.append(worst_psi <= 1e-12 and worst_psi1 <= 1e-12)

    worst_fe = 0.0
    for sig in (0.1, 0.3, 0.5, 0.7, 0.9):
        for t in (2.0, 7.3, 13.7, 21.9, 29.1):
            w = complex(sig, t)
            gamma_w = np.exp(sf._lgamma_vec(np.array([w])))[0]
            rhs = (
                2.0 * (2.0 * math.pi) ** (-w) * gamma_w
                * sf.riemann_zeta(w).value * np.cos(math.pi * w / 2.0)
            )
            worst_fe = max(worst_fe, abs(sf.riemann_zeta(1.0 - w).value - rhs))
    checks.append(worst_fe <= 1e-10)

    worst_slow = max(
        abs(sf.psi1(x).value - oc.psi1_defining_series(x)) for x in (0.5, 1.0, 2.5, 10.0)
    )
    checks.append(worst_slow <= 1e-10)

    g1_gap = abs(sf.stieltjes_gamma1(100).value - sf.stieltjes_gamma1(200).value)
    checks.append(g1_gap <= 1e-12)

    ok = all(checks)
    _report(12, "scalar special-function suite", ok,
            f"recurrences {max(worst_psi, worst_psi1):.2e}, zeta FE {worst_fe:.2e}, "
            f"psi1 slow-vs-fast {worst_slow:.2e}, gamma1 two-N {g1_gap:.2e}")


def test_criterion_13_determinism():
    def run_verify_all() -> str:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(["verify", "--id", "all"])
        assert code == 0
        return buf.getvalue()

    first = run_verify_all()
    second = run_verify_all()
    byte_identical = first == second

    base = ct.H_contour(1.0, 1e-9)
    doubled = ct.line_integral(
        ct.KernelId.H_KERNEL, 1.0, ct.ContourSpec(0.5, 80.0, 0, math.pi)
    )
    height_ok = abs(base.value - doubled.value) <= base.error_estimate

    a = qr.A_direct(1.0, 1e-8)
    b = qr.A_direct(1.0, 1e-11)
    depth_ok = abs(a.value - b.value) <= a.error_estimate
    s = se.sum_phi0(1.0, 1e-9)
    s2 = se.sum_phi0(1.0, 1e-11)
    depth_ok = depth_ok and abs(s.value - s2.value) <= s.error_estimate

    ok = byte_identical and height_ok and depth_ok
    _report(13, "byte-identical reports and refinement stability", ok,
            f"identical={byte_identical}, height_ok={height_ok}, depth_ok={depth_ok}")
