"""Multistep integration of callables and of equispaced sample series.

The data-series path implements the regime-switch heuristic: a sample is
classified convex-decaying when it drops below its left neighbor and
lies below the chord of its neighbors; panels whose endpoints are both
convex-decaying (and positive) use the logarithmic-mean rule, everything
else goes through Simpson pairs with a trapezoid seam.  The first and
last samples have no two-sided neighborhood, so they copy the nearest
interior classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .core import Interval, PanelRule, apply_panel
from .errors import DomainError, LengthError, TailError, ConfigError
from .exprules import MomentRule, log_mean, moment_panel, _log_ratio

_SIMPSON_STRATEGIES = ("auto", "nonlinear", "simpson")


@dataclass(frozen=True)
class SampledSeries:
    """Equispaced samples f_k = f(a + k h), k = 0..M."""

    a: float
    h: float
    values: tuple

    def __init__(self, a: float, h: float, values: Sequence[float]):
        if not h > 0:
            raise ValueError(f"spacing must be positive, got {h}")
        vals = tuple(float(v) for v in values)
        if len(vals) < 2:
            raise ValueError("a series needs at least two samples")
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "h", float(h))
        object.__setattr__(self, "values", vals)

    @property
    def panels(self) -> int:
        return len(self.values) - 1

    def x(self, k: int) -> float:
        return self.a + k * self.h


@dataclass(frozen=True)
class CompositeResult:
    value: float
    panels: int
    fallback_panels: tuple = ()
    tail: Optional[float] = None


def integrate(integrand: Callable[[float], float], a: float, b: float,
              panels: int, rule: PanelRule,
              fallback: Optional[PanelRule] = None) -> CompositeResult:
    """Sum a rule over uniform panels, optionally falling back per panel."""
    if not b > a:
        raise ConfigError(f"need b > a, got [{a}, {b}]")
    if panels < 1:
        raise ConfigError(f"need at least one panel, got {panels}")
    h = (b - a) / panels
    parts = []
    fallback_panels = []
    for k in range(panels):
        iv = Interval(a + k * h, h)
        try:
            parts.append(apply_panel(rule, integrand, iv).value)
        except DomainError:
            if fallback is None:
                raise
            parts.append(apply_panel(fallback, integrand, iv).value)
            fallback_panels.append(k)
    return CompositeResult(value=math.fsum(parts), panels=panels,
                           fallback_panels=tuple(fallback_panels))


def _classify_convex_decaying(values: Sequence[float]) -> list:
    """Pointwise convex-decay flags; endpoints copy the nearest interior flag."""
    m = len(values) - 1
    flags = [False] * (m + 1)
    for k in range(1, m):
        flags[k] = (values[k] < values[k - 1]
                    and 2 * values[k] < values[k - 1] + values[k + 1])
    flags[0] = flags[1]
    flags[m] = flags[m - 1]
    return flags


def _simpson_run(series: SampledSeries, start: int, stop: int,
                 parts: list, seams: list) -> None:
    """Integrate panels [start, stop) with Simpson pairs, trapezoid at an odd seam."""
    f = series.values
    h = series.h
    k = start
    while k + 2 <= stop:
        parts.append(2 * h * (f[k] + 4 * f[k + 1] + f[k + 2]) / 6.0)
        k += 2
    if k < stop:
        parts.append(h * (f[k] + f[k + 1]) / 2.0)
        seams.append(k)


def integrate_series(series: SampledSeries, strategy: str = "auto") -> CompositeResult:
    """Integrate an equispaced series with the chosen panel strategy."""
    if strategy not in _SIMPSON_STRATEGIES:
        raise ConfigError(f"unknown strategy {strategy!r}")
    f = series.values
    m = series.panels
    h = series.h

    if strategy == "nonlinear":
        parts = []
        fallback_panels = []
        for k in range(m):
            try:
                parts.append(h * log_mean(f[k], f[k + 1]))
            except DomainError:
                parts.append(h * (f[k] + f[k + 1]) / 2.0)
                fallback_panels.append(k)
        return CompositeResult(math.fsum(parts), m, tuple(fallback_panels))

    if len(f) < 3:
        raise LengthError("need at least three samples for this strategy")

    if strategy == "simpson":
        parts, seams = [], []
        _simpson_run(series, 0, m, parts, seams)
        return CompositeResult(math.fsum(parts), m, tuple(seams))

    flags = _classify_convex_decaying(f)
    nonlinear = [flags[k] and flags[k + 1] and f[k] > 0 and f[k + 1] > 0
                 for k in range(m)]
    parts, seams = [], []
    k = 0
    while k < m:
        if nonlinear[k]:
            parts.append(h * log_mean(f[k], f[k + 1]))
            k += 1
        else:
            run_end = k
            while run_end < m and not nonlinear[run_end]:
                run_end += 1
            _simpson_run(series, k, run_end, parts, seams)
            k = run_end
    return CompositeResult(math.fsum(parts), m, tuple(seams))


def _tail_from_last_pair(series: SampledSeries, n: int) -> float:
    """Improper tail beyond the last sample, decay rate from the final pair."""
    f_prev, f_last = series.values[-2], series.values[-1]
    if not (f_prev > f_last > 0):
        raise TailError(
            f"tail needs decaying positive samples, got {f_prev}, {f_last}")
    alpha = _log_ratio(f_prev, f_last) / series.h
    x_end = series.x(series.panels)
    # antiderivative of x^n * (exponential through the last sample); the
    # upper limit vanishes for alpha < 0
    terms = []
    coef = 1.0
    for k in range(n + 1):
        if k > 0:
            coef *= n - k + 1
        terms.append(-((-1.0) ** k) * coef * x_end ** (n - k) * f_last
                     / alpha ** (k + 1))
    return math.fsum(terms)


def moment_series(series: SampledSeries, n: int,
                  with_tail: bool = False) -> CompositeResult:
    """Integral of x^n f(x) over the sampled range, optionally out to infinity."""
    rule = MomentRule(n)
    parts = []
    for k in range(series.panels):
        iv = Interval(series.x(k), series.h)
        parts.append(moment_panel(rule, series.values[k], series.values[k + 1], iv))
    tail = _tail_from_last_pair(series, n) if with_tail else None
    total = math.fsum(parts) + (tail or 0.0)
    return CompositeResult(value=total, panels=series.panels, tail=tail)


@dataclass(frozen=True)
class ConvergenceRecord:
    n_panels: int
    h: float
    estimate: float
    baseline_estimate: float
    exact: float
    err: float
    baseline_err: float
    ratio: float
    failed: bool = False


def _relative_error(estimate: float, exact: float) -> float:
    if exact == 0:
        return abs(estimate)
    return abs(estimate - exact) / abs(exact)


def convergence_table(integrand: Callable[[float], float], a: float, b: float,
                      rule: PanelRule, baseline: PanelRule,
                      panel_counts: Sequence[int], exact: float) -> list:
    """Error-vs-N rows for a rule and its linear baseline.

    A failing row is marked rather than aborting the table.
    """
    if not panel_counts:
        raise ConfigError("panel count list must be nonempty")
    if list(panel_counts) != sorted(panel_counts):
        raise ConfigError("panel counts must be increasing")
    records = []
    for n in panel_counts:
        h = (b - a) / n
        try:
            est = integrate(integrand, a, b, n, rule).value
            base = integrate(integrand, a, b, n, baseline).value
        except (DomainError, ConfigError):
            records.append(ConvergenceRecord(
                n_panels=n, h=h, estimate=math.nan, baseline_estimate=math.nan,
                exact=exact, err=math.nan, baseline_err=math.nan,
                ratio=math.nan, failed=True))
            continue
        err = _relative_error(est, exact)
        base_err = _relative_error(base, exact)
        ratio = err / base_err if base_err > 0 else math.inf
        records.append(ConvergenceRecord(
            n_panels=n, h=h, estimate=est, baseline_estimate=base,
            exact=exact, err=err, baseline_err=base_err, ratio=ratio))
    return records
