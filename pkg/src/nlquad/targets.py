"""Target functions for the generic rule constructor.

A target bundles the function with its inverse, antiderivative and first
two derivatives.  All five callables are supplied explicitly: the
constructor's exactness guarantee rests on the inverse and antiderivative
being exact, so the library never inverts or differentiates numerically.
The target is assumed twice continuously differentiable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ConfigError


@dataclass(frozen=True)
class TargetFunction:
    name: str
    value: Callable[[float], float]
    inverse: Callable[[float], float]
    antiderivative: Callable[[float], float]
    deriv1: Callable[[float], float]
    deriv2: Callable[[float], float]
    range_check: Callable[[float], bool]


@dataclass(frozen=True)
class ExactnessFamily:
    """Family descriptor: value scaling (lambda) or affine argument transform (alpha, beta)."""

    kind: str  # "scaling" or "affine"
    parameters: tuple

    def __post_init__(self):
        if self.kind not in ("scaling", "affine"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "scaling":
            lam_lo, lam_hi = self.parameters[1], self.parameters[2]
            if not lam_lo < 1 < lam_hi:
                raise ValueError("scaling bracket must contain 1")


@dataclass(frozen=True)
class ValidationReport:
    max_inverse_residual: float
    max_antiderivative_residual: float
    max_deriv1_residual: float
    max_deriv2_residual: float

    @property
    def passed(self) -> bool:
        return (self.max_inverse_residual <= 1e-10
                and self.max_antiderivative_residual <= 1e-6
                and self.max_deriv1_residual <= 1e-5
                and self.max_deriv2_residual <= 1e-5)


def _rel(err: float, ref: float) -> float:
    return abs(err) / max(1.0, abs(ref))


def validate_target(target: TargetFunction, probes: Sequence[float]) -> ValidationReport:
    """Check the target's callables for mutual consistency at the probe points.

    Failures are reported, never raised.
    """
    inv_r = anti_r = d1_r = d2_r = 0.0
    for x in probes:
        fx = target.value(x)
        inv_r = max(inv_r, abs(target.inverse(fx) - x) / max(1.0, abs(x)))

        delta = 1e-5 * max(1.0, abs(x))
        fd_f = (target.antiderivative(x + delta) - target.antiderivative(x - delta)) / (2 * delta)
        anti_r = max(anti_r, abs(fd_f - fx) / max(1.0, abs(fx)))

        fd_1 = (target.value(x + delta) - target.value(x - delta)) / (2 * delta)
        d1_r = max(d1_r, abs(fd_1 - target.deriv1(x)) / max(1.0, abs(target.deriv1(x))))

        fd_2 = (target.value(x + delta) - 2 * fx + target.value(x - delta)) / delta ** 2
        d2_r = max(d2_r, abs(fd_2 - target.deriv2(x)) / max(1.0, abs(target.deriv2(x))))
    return ValidationReport(inv_r, anti_r, d1_r, d2_r)


EXP = TargetFunction(
    name="exp",
    value=math.exp,
    inverse=math.log,
    antiderivative=math.exp,
    deriv1=math.exp,
    deriv2=math.exp,
    range_check=lambda f: f > 0,
)

IDENTITY = TargetFunction(
    name="identity",
    value=lambda x: x,
    inverse=lambda x: x,
    antiderivative=lambda x: 0.5 * x * x,
    deriv1=lambda x: 1.0,
    deriv2=lambda x: 0.0,
    range_check=lambda f: math.isfinite(f),
)

_BUILTINS = {"EXP": EXP, "IDENTITY": IDENTITY}


def builtin(name: str) -> TargetFunction:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ConfigError(f"unknown builtin target {name!r}; have {sorted(_BUILTINS)}") from None
