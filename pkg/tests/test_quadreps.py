import math

import numpy as np
import pytest

from herglotz import contour as ct
from herglotz import quadreps as qr
from herglotz.errors import BudgetExceeded, DomainError


@pytest.mark.parametrize("a", [0.5, 1.0, 3.0, 10.0])
def test_wigert_identity(a):
    lhs, rhs = qr.wigert(a, 1e-9)
    assert abs(lhs.value - rhs.value) <= 2e-9


def test_wigert_refuses_small_argument():
    with pytest.raises(DomainError):
        qr.wigert(5e-4)


def test_wigert_bracket_decay_constant():
    # log(a) - Re psi(ia) ~ -1/(12 a^2): fixes the leading decay constant
    for a in (40.0, 80.0):
        w, _ = qr._wigert_closed_vec(np.array([a]))
        assert abs(float(w[0]) * 12.0 * a * a + 1.0) <= 0.01
        assert float(w[0]) < 0.0


def test_wigert_bracket_matches_series_near_zero():
    # W(a) = log a + gamma - zeta(3) a^2 + ... across the branch switch
    from herglotz.specfun import constants, hurwitz_zeta

    z3 = hurwitz_zeta(3.0, 1.0).value
    z5 = hurwitz_zeta(5.0, 1.0).value
    for a in (0.009, 0.011):
        w, _ = qr._wigert_closed_vec(np.array([a]))
        ref = math.log(a) + constants().euler_gamma - z3 * a * a + z5 * a**4
        assert abs(float(w[0]) - ref) <= 1e-11


@pytest.mark.parametrize("y", [0.5, 1.0, 2.0])
def test_H_divisor_vs_contour(y):
    hc = ct.H_contour(y, 1e-9).value
    hd = qr.H_divisor_series(y, 1e-9)
    assert abs(hd.value - hc) <= 1e-6


@pytest.mark.parametrize("y", [0.5, 1.0, 2.0])
def test_H_single_vs_contour(y):
    hc = ct.H_contour(y, 1e-9).value
    hs = qr.H_single_integral(y, 1e-9)
    assert abs(hs.value - hc) <= 1e-6


def test_H_double_vs_contour_at_one():
    hc = ct.H_contour(1.0, 1e-9).value
    hd = qr.H_double_integral(1.0, 1e-4)
    assert abs(hd.value - hc) <= 1e-4


def test_H_double_rejects_tight_tol():
    with pytest.raises(DomainError):
        qr.H_double_integral(1.0, 1e-6)


def test_H_divisor_refuses_tiny_y():
    with pytest.raises(BudgetExceeded):
        qr.H_divisor_series(0.01)


def test_H_reps_refinement_stability():
    a = qr.H_divisor_series(1.0, 1e-9)
    b = qr.H_divisor_series(1.0, 1e-11)
    assert abs(a.value - b.value) <= a.error_estimate + b.error_estimate
    c = qr.H_single_integral(1.0, 1e-8)
    d = qr.H_single_integral(1.0, 1e-10)
    assert abs(c.value - d.value) <= c.error_estimate + d.error_estimate


@pytest.mark.parametrize("x", [1.0, 2.0 * math.pi, 10.0])
def test_lemma41_sides_agree(x):
    lhs = qr.lemma41_lhs(x, 1e-9)
    rhs = ct.lemma41_rhs(x, 1e-9)
    assert abs(lhs.value - rhs.value) <= 1e-8


def test_lemma41_monotone_in_x():
    vals = [qr.lemma41_lhs(x, 1e-9).value for x in (1.0, 2.0, 4.0, 8.0)]
    assert all(a < b for a, b in zip(vals, vals[1:]))  # negative, shrinking in size


@pytest.mark.parametrize("z", [1.0, 2.0])
def test_A_pairing(z):
    ad = qr.A_direct(z, 1e-9)
    am = ct.A_inverse_mellin(z, 1e-8)
    assert abs(ad.value - am.value) <= 1e-6


@pytest.mark.parametrize("z", [0.5, 2.0, 4.0])
def test_A_change_of_variables(z):
    lhs = qr.A_direct(z, 1e-10).value
    rhs = qr.A_direct(1.0 / z, 1e-10).value / z
    assert abs(lhs - rhs) <= 1e-8


def test_A_direct_domain():
    with pytest.raises(DomainError):
        qr.A_direct(0.0)


def test_quadrature_self_consistency():
    a = qr.A_direct(1.0, 1e-8)
    b = qr.A_direct(1.0, 1e-11)
    assert abs(a.value - b.value) <= a.error_estimate
    la = qr.lemma41_lhs(1.0, 1e-8)
    lb = qr.lemma41_lhs(1.0, 1e-11)
    assert abs(la.value - lb.value) <= la.error_estimate
