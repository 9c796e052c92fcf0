"""Generic rule construction tests.

The separated-magnitude sample generator keeps adjacent samples at
ratios in [1.5, 3] so that the identity-target quotient (a difference of
squares over a difference) stays well conditioned; that is what makes
the 1e-15 weight-identity comparisons meaningful in doubles.
"""
import math

import numpy as np
import pytest

import nlquad as nq
from nlquad.errors import OutOfRange


def separated_vectors(rng, n, count):
    """Positive vectors with adjacent ratios in [1.5, 3], random scale and order."""
    out = []
    for _ in range(count):
        base = rng.uniform(0.1, 10.0)
        vec = [base]
        for _ in range(n - 1):
            vec.append(vec[-1] * rng.uniform(1.5, 3.0))
        vec = list(rng.permutation(vec))
        if rng.random() < 0.5:
            vec = [-v for v in vec]
        out.append(tuple(vec))
    return out


IV = nq.Interval(0.0, 1.0)


def test_identity_target_gives_trapezoid():
    rule = nq.build_q1(nq.IDENTITY)
    rng = np.random.default_rng(1)
    for f0, f1 in separated_vectors(rng, 2, 200):
        assert rule.q((f0, f1), IV) == pytest.approx((f0 + f1) / 2, rel=1e-15)


def test_exp_target_degenerate_limit():
    rule = nq.build_q1(nq.EXP)
    assert rule.q((2.0, 2.0), IV) == 2.0


def test_exp_target_closed_form():
    rule = nq.build_q1(nq.EXP)
    q = rule.q((1.0, math.exp(-1)), IV)
    assert q == pytest.approx(1 - math.exp(-1), rel=1e-14)


def test_exp_target_rejects_negative_sample():
    rule = nq.build_q1(nq.EXP)
    with pytest.raises(OutOfRange):
        rule.q((1.0, -0.5), IV)


def test_q2_of_trapezoid_is_simpson():
    rule = nq.build_q2(nq.build_q1(nq.IDENTITY))
    rng = np.random.default_rng(2)
    for fhat in separated_vectors(rng, 3, 1000):
        f0, f1, f2 = fhat
        assert rule.q(fhat, IV) == pytest.approx((f0 + 4 * f1 + f2) / 6,
                                                 rel=1e-15)


def test_q2_requires_two_point_symmetric_base():
    with pytest.raises(ValueError):
        nq.build_q2(nq.classic("simpson"))


def test_q2_exp_constant_and_exact():
    rule = nq.build_q2(nq.build_q1(nq.EXP))
    assert rule.q((2.0, 2.0, 2.0), IV) == pytest.approx(2.0, rel=1e-15)
    est = nq.apply_panel(rule, lambda x: math.exp(-x), nq.Interval(0, 1))
    assert est.value == pytest.approx(1 - math.exp(-1), rel=1e-14)


def test_affine_exactness_random_draws():
    q1 = nq.build_q1(nq.EXP)
    q2 = nq.build_q2(q1)
    rng = np.random.default_rng(20231116)
    n = 0
    while n < 200:
        alpha = rng.uniform(-3, 3)
        if abs(alpha) < 0.05:
            continue
        n += 1
        beta = rng.uniform(-2, 2)
        a = rng.uniform(-1, 1)
        h = rng.uniform(0.1, 2)
        f = lambda x: math.exp(alpha * x + beta)
        exact = (math.exp(alpha * (a + h) + beta)
                 - math.exp(alpha * a + beta)) / alpha
        for rule in (q1, q2):
            est = nq.apply_panel(rule, f, nq.Interval(a, h))
            assert est.value == pytest.approx(exact, rel=1e-12)


def test_scaling_exactness_exp():
    q1 = nq.build_q1(nq.EXP)
    q2 = nq.build_q2(q1)
    rng = np.random.default_rng(5)
    for _ in range(200):
        lam = rng.uniform(0.25, 4)
        alpha = rng.uniform(0.05, 3) * rng.choice([-1, 1])
        a = rng.uniform(-1, 1)
        h = rng.uniform(0.1, 2)
        f = lambda x: lam * math.exp(alpha * x)
        exact = lam * (math.exp(alpha * (a + h)) - math.exp(alpha * a)) / alpha
        for rule in (q1, q2):
            est = nq.apply_panel(rule, f, nq.Interval(a, h))
            assert est.value == pytest.approx(exact, rel=1e-12)


def test_degenerate_branch_continuity():
    rule = nq.build_q1(nq.EXP)
    # threshold sits at |log f1| = 1e-6; probe both sides of it
    for t in (0.5e-6, 0.9e-6, 0.99e-6, 1.01e-6, 1.1e-6, 2e-6):
        for s in (t, -t):
            f1 = 1.0 + s
            a = rule.q((1.0, f1), IV)
            b = rule.q((1.0, f1 * (1 + 1e-12)), IV)
            assert abs(a - b) <= 1e-9


def fit_slope(rule, a=0.3, h_lo=1e-3, h_hi=1e-1, points=20):
    logs_h, logs_e = [], []
    for i in range(points):
        h = h_lo * (h_hi / h_lo) ** (i / (points - 1))
        est = nq.apply_panel(rule, math.cosh, nq.Interval(a, h))
        exact = 2 * math.cosh(a + h / 2) * math.sinh(h / 2)  # sinh(a+h)-sinh(a)
        err = abs(est.value - exact)
        logs_h.append(math.log(h))
        logs_e.append(math.log(err))
    return float(np.polyfit(logs_h, logs_e, 1)[0])


def test_single_step_orders():
    assert 2.9 <= fit_slope(nq.build_q1(nq.EXP)) <= 3.2
    assert 4.8 <= fit_slope(nq.build_q2(nq.build_q1(nq.EXP))) <= 5.3


def test_curvature_trapezoid_zero_kappa():
    rule = nq.curvature_trapezoid(0.0)
    rng = np.random.default_rng(3)
    for _ in range(50):
        f0, f1 = rng.uniform(-5, 5, size=2)
        assert rule.q((f0, f1), IV) == (f0 + f1) / 2


def test_curvature_trapezoid_exp_correction():
    # kappa = 1 matches f* = e^x at a preimage where f(a) = 1
    rule = nq.curvature_trapezoid(1.0)
    f0, f1 = 1.0, math.exp(-1)
    q = rule.q((f0, f1), IV)
    expected = (f0 + f1) / 2 - (f1 - f0) ** 2 / 12
    assert q == pytest.approx(expected, rel=1e-15)
    # the correction removes well over half of the trapezoid error at h = 1
    exact_mean = 1 - math.exp(-1)
    trap_err = abs((f0 + f1) / 2 - exact_mean)
    corr_err = abs(q - exact_mean)
    assert corr_err < 0.45 * trap_err


def test_curvature_trapezoid_constant():
    rule = nq.curvature_trapezoid(17.0)
    assert rule.q((4.0, 4.0), IV) == 4.0


def test_curvature_trapezoid_for_target():
    rule = nq.curvature_trapezoid_for(nq.EXP, 0.0)  # kappa = e^0 / e^0 = 1
    assert rule.q((1.0, math.exp(-1)), IV) == pytest.approx(
        nq.curvature_trapezoid(1.0).q((1.0, math.exp(-1)), IV), rel=1e-15)


def test_derivative_report_exp_q1():
    report = nq.diagonal_derivative_report(nq.exp_q1(), 1.0, 1e-5)
    assert report.passed
    assert report.q_value == pytest.approx(1.0, abs=1e-12)
    assert report.q10 == pytest.approx(0.5, abs=1e-5)
    assert report.q01 == pytest.approx(0.5, abs=1e-5)
    # symbolic value for the exponential target at f = 1
    assert report.q02 == pytest.approx(-1 / 6, abs=1e-4)


def test_derivative_report_trapezoid():
    report = nq.diagonal_derivative_report(nq.classic("trapezoid"), 5.0)
    assert report.passed
    assert report.q_value == 5.0
    assert report.q10 == pytest.approx(0.5, abs=1e-9)
    assert report.q20 == pytest.approx(0.0, abs=1e-9)
    assert report.q02 == pytest.approx(0.0, abs=1e-9)


def test_derivative_report_rejects_inadmissible_point():
    with pytest.raises(nq.errors.DomainError):
        nq.diagonal_derivative_report(nq.exp_q1(), 0.0)
