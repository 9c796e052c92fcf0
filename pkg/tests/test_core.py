"""Panel and rule abstraction tests."""
import math

import numpy as np
import pytest

import nlquad as nq
from nlquad.errors import SampleError


def all_builtin_rules():
    return [nq.exp_q1(), nq.exp_q2(), nq.gauss_like_rule(),
            nq.classic("trapezoid"), nq.classic("simpson"),
            nq.classic("boole"), nq.classic("weddle"),
            nq.build_q1(nq.EXP), nq.build_q2(nq.build_q1(nq.EXP)),
            nq.build_q1(nq.IDENTITY), nq.curvature_trapezoid(0.7)]


def test_sample_identity():
    fhat = nq.sample(lambda x: x, nq.Interval(0, 1), nq.NodeSet((0.0, 1.0)))
    assert fhat == (0.0, 1.0)


def test_sample_exp():
    fhat = nq.sample(lambda x: math.exp(-x), nq.Interval(0, 1),
                     nq.NodeSet((0.0, 0.5, 1.0)))
    assert fhat == (1.0, math.exp(-0.5), math.exp(-1.0))


def test_sample_pole_raises():
    with pytest.raises(SampleError) as exc:
        nq.sample(lambda x: 1.0 / x, nq.Interval(0, 1), nq.NodeSet((0.0, 1.0)))
    assert exc.value.node_index == 0


def test_apply_panel_trapezoid_linear():
    est = nq.apply_panel(nq.classic("trapezoid"), lambda x: x, nq.Interval(0, 1))
    assert est.value == 0.5


def test_apply_panel_exp_exact():
    est = nq.apply_panel(nq.exp_q1(), lambda x: math.exp(-x), nq.Interval(0, 1))
    assert est.value == pytest.approx(1 - math.exp(-1), rel=1e-14)


def test_apply_panel_simpson_quadratic():
    est = nq.apply_panel(nq.classic("simpson"), lambda x: x * x, nq.Interval(0, 1))
    assert est.value == pytest.approx(1 / 3, rel=1e-15)


def test_fallback_panel_rule():
    import dataclasses
    rule = dataclasses.replace(nq.exp_q1(), fallback=nq.classic("trapezoid"))
    est = nq.apply_panel(rule, lambda x: x - 0.5, nq.Interval(0, 1))
    assert est.fallback_used
    assert est.value == pytest.approx(0.0, abs=1e-15)


def test_interval_requires_positive_width():
    with pytest.raises(ValueError):
        nq.Interval(0.0, 0.0)


def test_nodeset_validation():
    with pytest.raises(ValueError):
        nq.NodeSet((0.5, 0.5))
    with pytest.raises(ValueError):
        nq.NodeSet((0.0, 1.5))
    with pytest.raises(ValueError):
        nq.NodeSet((0.3,))
    assert nq.NodeSet((0.0, 0.5, 1.0)).is_symmetric


@pytest.mark.parametrize("rule", all_builtin_rules(), ids=lambda r: r.name)
def test_constant_mean(rule):
    # every rule estimates a panel mean, so constants come back untouched
    for c in (0.5, 1.0, 3.0, 7.25):
        iv = nq.Interval(2.0, 0.7)
        est = nq.apply_panel(rule, lambda x: c, iv)
        assert est.value == pytest.approx(c * iv.h, rel=1e-14)


@pytest.mark.parametrize("rule", [r for r in all_builtin_rules() if r.symmetric],
                         ids=lambda r: r.name)
def test_symmetric_reversal(rule):
    rng = np.random.default_rng(20231116)
    iv = nq.Interval(0.0, 1.0)
    n = len(rule.nodes)
    for _ in range(1000):
        fhat = tuple(np.exp(rng.uniform(-2, 2, size=n)))
        fwd = rule.q(fhat, iv)
        rev = rule.q(tuple(reversed(fhat)), iv)
        assert rev == pytest.approx(fwd, rel=1e-14)


@pytest.mark.parametrize("rule",
                         [r for r in all_builtin_rules()
                          if "quasilinear" in r.exactness_tags],
                         ids=lambda r: r.name)
def test_quasilinear(rule):
    rng = np.random.default_rng(7)
    iv = nq.Interval(0.0, 1.0)
    n = len(rule.nodes)
    linear = any(t.startswith("polynomials") for t in rule.exactness_tags)
    for _ in range(50):
        fhat = tuple(np.exp(rng.uniform(-1, 1, size=n)))
        base = rule.q(fhat, iv)
        for lam in (-2.0, 0.5, 3.0):
            scaled = rule.q(tuple(lam * f for f in fhat), iv)
            assert scaled == pytest.approx(lam * base, rel=1e-13, abs=1e-300)
    if linear:
        assert rule.q(tuple(0.0 for _ in range(n)), iv) == 0.0
