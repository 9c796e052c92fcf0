"""Generic construction of affinely exact rules from a target function.

Given a bijective target f* with antiderivative F*, the two-point mean
estimator

    q1(f0, f1) = [F*(x1) - F*(x0)] / (x1 - x0),   x_i = inverse(f_i)

integrates every f*(alpha x + beta) exactly.  The three-point refinement
combines three q1 evaluations and gains two orders.  Near the diagonal
the quotient loses precision, so q1 switches to a quadratic series whose
truncation error is below double-precision noise at the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import Interval, NodeSet, PanelRule
from .errors import DomainError, DerivativeZero, OutOfRange
from .targets import TargetFunction

# relative threshold (preimage coordinates) below which q1 uses its series form
DEGENERATE_THRESHOLD = 1e-6


def build_q1(target: TargetFunction) -> PanelRule:
    """Two-point rule, symmetric and exact on f*(alpha x + beta)."""

    def q(fhat: Sequence[float], interval: Interval) -> float:
        f0, f1 = fhat
        if not target.range_check(f0):
            raise OutOfRange(f"sample {f0} outside range of target {target.name}")
        if not target.range_check(f1):
            raise OutOfRange(f"sample {f1} outside range of target {target.name}")
        x0 = target.inverse(f0)
        x1 = target.inverse(f1)
        if abs(x1 - x0) <= DEGENERATE_THRESHOLD * max(1.0, abs(x0), abs(x1)):
            xbar = 0.5 * (x0 + x1)
            d1 = target.deriv1(xbar)
            if d1 == 0:
                raise DerivativeZero(
                    f"target {target.name} has zero derivative at {xbar}")
            kappa = target.deriv2(xbar) / (d1 * d1)
            return 0.5 * (f0 + f1) - (kappa / 12.0) * (f1 - f0) ** 2
        return ((target.antiderivative(x1) - target.antiderivative(x0))
                / (x1 - x0))

    return PanelRule(
        name=f"{target.name}-q1",
        nodes=NodeSet((0.0, 1.0)),
        q=q,
        order_p=3,
        symmetric=True,
        exactness_tags=frozenset({f"affine-{target.name}"}),
    )


def build_q2(q1_rule: PanelRule) -> PanelRule:
    """Three-point refinement of a symmetric affinely exact two-point rule."""
    if tuple(q1_rule.nodes.xi) != (0.0, 1.0):
        raise ValueError("q2 construction needs a two-point rule on nodes {0, 1}")
    if not q1_rule.symmetric:
        raise ValueError("q2 construction needs a symmetric base rule")
    if not any(t.startswith("affine") for t in q1_rule.exactness_tags):
        raise ValueError("q2 construction needs an affinely exact base rule")
    q1 = q1_rule.q

    def q(fhat: Sequence[float], interval: Interval) -> float:
        f0, f1, f2 = fhat
        return ((2.0 / 3.0) * (q1((f0, f1), interval) + q1((f1, f2), interval))
                - (1.0 / 3.0) * q1((f0, f2), interval))

    return PanelRule(
        name=f"{q1_rule.name}-refined",
        nodes=NodeSet((0.0, 0.5, 1.0)),
        q=q,
        order_p=5,
        symmetric=True,
        exactness_tags=q1_rule.exactness_tags,
    )


def curvature_ratio(target: TargetFunction, x: float) -> float:
    """kappa = f*''(x) / [f*'(x)]^2 at the preimage point x."""
    d1 = target.deriv1(x)
    if d1 == 0:
        raise DerivativeZero(f"target {target.name} has zero derivative at {x}")
    return target.deriv2(x) / (d1 * d1)


def curvature_trapezoid(kappa: float) -> PanelRule:
    """Trapezoid with the quadratic curvature correction for a known target."""
    if not math.isfinite(kappa):
        raise ValueError(f"kappa must be finite, got {kappa}")

    def q(fhat: Sequence[float], interval: Interval) -> float:
        f0, f1 = fhat
        return 0.5 * (f0 + f1) - (kappa / 12.0) * (f1 - f0) ** 2

    return PanelRule(
        name=f"curvature-trapezoid({kappa})",
        nodes=NodeSet((0.0, 1.0)),
        q=q,
        order_p=3,
        symmetric=True,
        exactness_tags=frozenset(),
    )


def curvature_trapezoid_for(target: TargetFunction, x_left: float) -> PanelRule:
    """Convenience: curvature correction evaluated at the panel's left preimage."""
    return curvature_trapezoid(curvature_ratio(target, x_left))


@dataclass(frozen=True)
class DerivativeReport:
    """Finite-difference picture of a two-point mean estimator at (c, c)."""

    c: float
    q_value: float
    q10: float
    q01: float
    q20: float
    q11: float
    q02: float
    q30: float | None
    q12: float | None
    value_ok: bool
    first_order_ok: bool
    second_order_ok: bool
    third_order_ok: bool | None

    @property
    def passed(self) -> bool:
        ok = self.value_ok and self.first_order_ok and self.second_order_ok
        if self.third_order_ok is not None:
            ok = ok and self.third_order_ok
        return ok


def diagonal_derivative_report(rule: PanelRule, c: float,
                               fd_step: float | None = None) -> DerivativeReport:
    """Check the diagonal derivative relations of a scalably/affinely exact rule.

    Expected at (c, c): q = c, both first partials 1/2, and
    q20 = -q11 = q02.  Symmetric rules additionally satisfy q30 = -3 q12;
    that check uses a wider step since third-order stencils are noisy.
    """
    if fd_step is None:
        fd_step = 1e-5 * max(1.0, abs(c))
    iv = Interval(0.0, 1.0)

    def ev(u: float, v: float) -> float:
        # rule domain violations propagate as DomainError
        return rule.q((u, v), iv)

    d = fd_step
    g = {(i, j): ev(c + i * d, c + j * d)
         for i in (-1, 0, 1) for j in (-1, 0, 1)}
    q00 = g[(0, 0)]
    q10 = (g[(1, 0)] - g[(-1, 0)]) / (2 * d)
    q01 = (g[(0, 1)] - g[(0, -1)]) / (2 * d)
    q20 = (g[(1, 0)] - 2 * q00 + g[(-1, 0)]) / d ** 2
    q02 = (g[(0, 1)] - 2 * q00 + g[(0, -1)]) / d ** 2
    q11 = (g[(1, 1)] - g[(1, -1)] - g[(-1, 1)] + g[(-1, -1)]) / (4 * d ** 2)

    value_ok = abs(q00 - c) <= 1e-9 * max(1.0, abs(c))
    first_ok = abs(q10 - 0.5) <= 1e-5 and abs(q01 - 0.5) <= 1e-5
    tol2 = 1e-3 * abs(q20) + 1e-8
    second_ok = abs(q20 - q02) <= tol2 and abs(q20 + q11) <= tol2

    q30 = q12 = None
    third_ok = None
    if rule.symmetric:
        # third-order stencils divide by d^3; use a wider step for headroom
        d3 = max(fd_step, 1e-3 * max(1.0, abs(c)))
        h3 = {(i, j): ev(c + i * d3, c + j * d3)
              for i in (-2, -1, 0, 1, 2) for j in (-1, 0, 1)}
        q30 = (h3[(2, 0)] - 2 * h3[(1, 0)] + 2 * h3[(-1, 0)] - h3[(-2, 0)]) / (2 * d3 ** 3)
        q12 = (h3[(1, 1)] - 2 * h3[(1, 0)] + h3[(1, -1)]
               - h3[(-1, 1)] + 2 * h3[(-1, 0)] - h3[(-1, -1)]) / (2 * d3 ** 3)
        # the stencils divide rounding noise of size eps*|q| by d3^3, so the
        # absolute floor has to scale the same way
        noise = 16 * 2.3e-16 * max(1.0, abs(c)) / d3 ** 3
        third_ok = abs(q30 + 3 * q12) <= 1e-2 * abs(q30) + noise

    return DerivativeReport(
        c=c, q_value=q00, q10=q10, q01=q01, q20=q20, q11=q11, q02=q02,
        q30=q30, q12=q12,
        value_ok=value_ok, first_order_ok=first_ok,
        second_order_ok=second_ok, third_order_ok=third_ok,
    )
