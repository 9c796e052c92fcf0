"""Panels, node sets, and the rule abstraction.

A rule estimates the *mean* of the integrand over one panel [a, a+h];
the integral estimate is always h times that mean.  The mean estimator
``q`` receives the panel as a second argument so that position-dependent
rules (moment rules) fit the same abstraction; shift-invariant rules
ignore it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import SampleError, DomainError


@dataclass(frozen=True)
class Interval:
    """Integration panel [a, a + h], h > 0."""

    a: float
    h: float

    def __post_init__(self):
        if not (self.h > 0):
            raise ValueError(f"panel width must be positive, got h={self.h}")

    @property
    def b(self) -> float:
        return self.a + self.h


@dataclass(frozen=True)
class NodeSet:
    """Normalized abscissae in [0, 1], strictly increasing, at least two."""

    xi: tuple

    def __init__(self, xi: Sequence[float]):
        xs = tuple(float(x) for x in xi)
        if len(xs) < 2:
            raise ValueError("a node set needs at least two nodes")
        for x in xs:
            if not (0.0 <= x <= 1.0):
                raise ValueError(f"node {x} outside [0, 1]")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("nodes must be strictly increasing")
        object.__setattr__(self, "xi", xs)

    def __len__(self) -> int:
        return len(self.xi)

    @property
    def is_symmetric(self) -> bool:
        n = len(self.xi)
        return all(
            math.isclose(self.xi[n - 1 - k], 1.0 - self.xi[k], abs_tol=1e-15)
            for k in range(n)
        )


# q maps (sample vector, panel) -> mean estimate
MeanEstimator = Callable[[Sequence[float], Interval], float]


@dataclass(frozen=True)
class PanelRule:
    """A quadrature rule on normalized nodes with a (possibly nonlinear) mean estimator."""

    name: str
    nodes: NodeSet
    q: MeanEstimator
    order_p: int
    symmetric: bool = False
    exactness_tags: frozenset = field(default_factory=frozenset)
    position_dependent: bool = False
    fallback: Optional["PanelRule"] = None


@dataclass(frozen=True)
class RuleEstimate:
    value: float
    samples_used: tuple
    fallback_used: bool = False


def sample(integrand: Callable[[float], float], interval: Interval, nodes: NodeSet) -> tuple:
    """Evaluate the integrand at a + xi_k * h for every node."""
    out = []
    for k, xi in enumerate(nodes.xi):
        x = interval.a + xi * interval.h
        try:
            v = float(integrand(x))
        except (ZeroDivisionError, OverflowError, ValueError) as exc:
            raise SampleError(f"integrand undefined at node {k} (x={x}): {exc}",
                              node_index=k, x=x) from exc
        if not math.isfinite(v):
            raise SampleError(f"non-finite sample {v} at node {k} (x={x})",
                              node_index=k, x=x)
        out.append(v)
    return tuple(out)


def apply_panel(rule: PanelRule, integrand: Callable[[float], float],
                interval: Interval) -> RuleEstimate:
    """Apply a rule to a callable on one panel: value = h * q(samples)."""
    fhat = sample(integrand, interval, rule.nodes)
    fallback_used = False
    try:
        qv = rule.q(fhat, interval)
    except DomainError:
        if rule.fallback is None:
            raise
        fhat = sample(integrand, interval, rule.fallback.nodes)
        qv = rule.fallback.q(fhat, interval)
        fallback_used = True
    value = interval.h * qv
    if not math.isfinite(value):
        raise DomainError(f"rule {rule.name} produced non-finite value {value}")
    return RuleEstimate(value=value, samples_used=fhat, fallback_used=fallback_used)
