"""Newton-Cotes derivation tests.

The independent oracle integrates the Lagrange basis polynomials over
[0, 1] in exact rational arithmetic; the derived weights must match it
fraction for fraction.
"""
import math
from fractions import Fraction

import numpy as np
import pytest

import nlquad as nq
from nlquad.errors import ConfigError


def lagrange_weights(n):
    """Integrals of the Lagrange basis on equispaced nodes k/(n-1) over [0, 1]."""
    nodes = [Fraction(k, n - 1) for k in range(n)]
    weights = []
    for k in range(n):
        # basis polynomial as a coefficient list, lowest order first
        poly = [Fraction(1)]
        for j, xj in enumerate(nodes):
            if j == k:
                continue
            denom = nodes[k] - xj
            # multiply by (x - xj) / (xk - xj)
            new = [Fraction(0)] * (len(poly) + 1)
            for d, c in enumerate(poly):
                new[d] += c * (-xj) / denom
                new[d + 1] += c / denom
            poly = new
        weights.append(sum(c / (d + 1) for d, c in enumerate(poly)))
    return tuple(weights)


def test_alpha_system_n3():
    sol = nq.solve_alpha(3)
    # displayed system: alpha_0 + (3/4) alpha_1 = 2/3, alpha_0 + (5/8) alpha_1 = 1/2
    a0, a1 = sol.alphas
    assert a0 + Fraction(3, 4) * a1 == Fraction(2, 3)
    assert a0 + Fraction(5, 8) * a1 == Fraction(1, 2)
    assert a0 == Fraction(-1, 3)
    assert sol.weights == (Fraction(1, 6), Fraction(4, 6), Fraction(1, 6))


def test_n5_and_n7_weights():
    assert nq.solve_alpha(5).weights == (
        Fraction(7, 90), Fraction(32, 90), Fraction(12, 90),
        Fraction(32, 90), Fraction(7, 90))
    assert nq.solve_alpha(7).weights == (
        Fraction(41, 840), Fraction(216, 840), Fraction(27, 840),
        Fraction(272, 840), Fraction(27, 840), Fraction(216, 840),
        Fraction(41, 840))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_weights_match_lagrange_oracle(n):
    assert nq.solve_alpha(n).weights == lagrange_weights(n)


@pytest.mark.parametrize("n", [2, 4, 1, 11])
def test_invalid_n(n):
    with pytest.raises(ConfigError):
        nq.solve_alpha(n)


def test_derived_simpson_equals_classic():
    derived = nq.solve_alpha(3).weights
    rng = np.random.default_rng(4)
    classic = nq.classic("simpson")
    iv = nq.Interval(0.0, 1.0)
    for _ in range(100):
        fhat = tuple(rng.uniform(-5, 5, size=3))
        expect = math.fsum(float(w) * f for w, f in zip(derived, fhat))
        assert classic.q(fhat, iv) == pytest.approx(expect, rel=1e-15, abs=1e-15)


def test_simpson_cubic_exact():
    est = nq.apply_panel(nq.classic("simpson"), lambda x: x ** 3, nq.Interval(0, 1))
    assert est.value == pytest.approx(0.25, rel=1e-15)


def test_boole_quintic():
    est = nq.apply_panel(nq.classic("boole"), lambda x: x ** 5, nq.Interval(0, 2))
    assert est.value == pytest.approx(32 / 3, rel=1e-13)


def test_weddle_degree_seven():
    est = nq.apply_panel(nq.classic("weddle"), lambda x: x ** 7, nq.Interval(0, 1))
    assert est.value == pytest.approx(1 / 8, rel=1e-13)


@pytest.mark.parametrize("name,degree", [("trapezoid", 1), ("simpson", 3),
                                         ("boole", 5), ("weddle", 7)])
def test_polynomial_exactness_boundary(name, degree):
    rule = nq.classic(name)
    rng = np.random.default_rng(degree)
    for p in range(degree + 1):
        for _ in range(5):
            a = rng.uniform(-2, 2)
            h = rng.uniform(0.5, 2)
            est = nq.apply_panel(rule, lambda x: x ** p, nq.Interval(a, h))
            exact = ((a + h) ** (p + 1) - a ** (p + 1)) / (p + 1)
            assert est.value == pytest.approx(exact, rel=1e-12, abs=1e-12)
    # degree + 2 (matching parity) must miss at h = 1
    p = degree + 2
    est = nq.apply_panel(rule, lambda x: x ** p, nq.Interval(1.0, 1.0))
    exact = (2 ** (p + 1) - 1) / (p + 1)
    assert abs(est.value - exact) / abs(exact) > 1e-6


def test_unknown_classic():
    with pytest.raises(ConfigError):
        nq.classic("gauss")
