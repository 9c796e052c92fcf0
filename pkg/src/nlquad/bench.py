"""Benchmark presets, error sweeps, and CSV emission.

Single-step sweeps anchor every panel at the preset's left endpoint and
compare a rule against a linear baseline on a geometric h grid; the
exact reference comes from the preset's closed-form antiderivative.
Floats are written with their shortest round-trip representation and LF
line endings so identical flags produce byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

from .core import Interval, PanelRule, apply_panel
from .errors import ConfigError
from .exprules import exp_q1, exp_q2, gauss_like_rule
from .newtoncotes import classic
from .composite import integrate, ConvergenceRecord


@dataclass(frozen=True)
class IntegrandPreset:
    id: str
    fn: Callable[[float], float]
    antiderivative: Callable[[float], float]
    a: float
    b: float

    @property
    def exact(self) -> float:
        return self.antiderivative(self.b) - self.antiderivative(self.a)

    def exact_step(self, h: float) -> float:
        return self.antiderivative(self.a + h) - self.antiderivative(self.a)


PRESETS = {
    "f1": IntegrandPreset(
        id="f1",
        fn=lambda x: math.exp(-x) + 0.5 * math.exp(-2 * x),
        antiderivative=lambda x: -math.exp(-x) - 0.25 * math.exp(-2 * x),
        a=0.0, b=1.0),
    "f2": IntegrandPreset(
        id="f2",
        fn=lambda x: 1.0 / (math.exp(x) - 1.0),
        antiderivative=lambda x: math.log(1.0 - math.exp(-x)),
        a=1.0, b=2.0),
    "f3": IntegrandPreset(
        id="f3",
        fn=math.cosh,
        antiderivative=math.sinh,
        a=0.0, b=1.0),
    "f4": IntegrandPreset(
        id="f4",
        fn=math.sin,
        antiderivative=lambda x: -math.cos(x),
        a=math.pi / 8, b=math.pi / 4),
}


def get_preset(integrand_id: str) -> IntegrandPreset:
    try:
        return PRESETS[integrand_id]
    except KeyError:
        raise ConfigError(
            f"unknown integrand {integrand_id!r}; have {sorted(PRESETS)}") from None


_RULE_FACTORIES = {
    "exp-q1": exp_q1,
    "exp-q2": exp_q2,
    "gauss-like": gauss_like_rule,
    "trapezoid": lambda: classic("trapezoid"),
    "simpson": lambda: classic("simpson"),
    "boole": lambda: classic("boole"),
    "weddle": lambda: classic("weddle"),
}


def get_rule(rule_id: str) -> PanelRule:
    try:
        return _RULE_FACTORIES[rule_id]()
    except KeyError:
        raise ConfigError(
            f"unknown rule {rule_id!r}; have {sorted(_RULE_FACTORIES)}") from None


@dataclass(frozen=True)
class ErrorRecord:
    h: float
    est_nl: float
    est_lin: float
    exact: float
    e_nl: float
    e_lin: float
    ratio: float  # e_nl / e_lin, inf when the baseline hits exactly


def _error(estimate: float, exact: float) -> float:
    if exact == 0:
        return abs(estimate)
    return abs(estimate - exact) / abs(exact)


def geometric_grid(h_min: float, h_max: float, points: int) -> list:
    return [h_min * (h_max / h_min) ** (i / (points - 1)) for i in range(points)]


def sweep_records(preset: IntegrandPreset, rule: PanelRule, baseline: PanelRule,
                  h_min: float, h_max: float, points: int) -> list:
    """Single-step error records on a geometric h grid anchored at the preset's a."""
    if not 0 < h_min < h_max:
        raise ConfigError(f"need 0 < h_min < h_max, got {h_min}, {h_max}")
    if h_max > preset.b - preset.a:
        raise ConfigError(
            f"h_max {h_max} exceeds the preset interval width {preset.b - preset.a}")
    if points < 2:
        raise ConfigError(f"need at least 2 grid points, got {points}")
    records = []
    for h in geometric_grid(h_min, h_max, points):
        iv = Interval(preset.a, h)
        est_nl = apply_panel(rule, preset.fn, iv).value
        est_lin = apply_panel(baseline, preset.fn, iv).value
        exact = preset.exact_step(h)
        e_nl = _error(est_nl, exact)
        e_lin = _error(est_lin, exact)
        ratio = e_nl / e_lin if e_lin > 0 else math.inf
        records.append(ErrorRecord(h=h, est_nl=est_nl, est_lin=est_lin,
                                   exact=exact, e_nl=e_nl, e_lin=e_lin,
                                   ratio=ratio))
    return records


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return repr(x)


SWEEP_HEADER = "h,est_nl,est_lin,exact,e_nl,e_lin,ratio"


def write_sweep_csv(records: Sequence[ErrorRecord], stream: TextIO) -> None:
    stream.write(SWEEP_HEADER + "\n")
    for r in records:
        stream.write(",".join(_fmt(v) for v in
                              (r.h, r.est_nl, r.est_lin, r.exact,
                               r.e_nl, r.e_lin, r.ratio)) + "\n")


def converge_columns(preset: IntegrandPreset, rules: Sequence[PanelRule],
                     panel_counts: Sequence[int]) -> list:
    """Rows (N, estimates..., exact) for the multistep convergence table."""
    if not panel_counts:
        raise ConfigError("panel count list must be nonempty")
    rows = []
    for n in panel_counts:
        estimates = [integrate(preset.fn, preset.a, preset.b, n, rule).value
                     for rule in rules]
        rows.append((n, estimates, preset.exact))
    return rows


def write_converge_csv(rows: Sequence[tuple], rule_ids: Sequence[str],
                       stream: TextIO) -> None:
    header = "N," + ",".join(f"estimate_{rid}" for rid in rule_ids) + ",exact"
    stream.write(header + "\n")
    for n, estimates, exact in rows:
        cells = [str(n)] + [_fmt(v) for v in estimates] + [_fmt(exact)]
        stream.write(",".join(cells) + "\n")
