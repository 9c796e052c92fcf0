"""Nonlinear quadrature rules exact on scaled and affinely transformed families."""

from .core import Interval, NodeSet, PanelRule, RuleEstimate, sample, apply_panel
from .targets import (TargetFunction, ExactnessFamily, ValidationReport,
                      validate_target, builtin, EXP, IDENTITY)
from .construct import (build_q1, build_q2, curvature_trapezoid,
                        curvature_trapezoid_for, curvature_ratio,
                        diagonal_derivative_report, DerivativeReport)
from .exprules import (log_mean, exp_q1, exp_q2, MomentRule, moment_panel,
                       improper_tail, gauss_like, gauss_like_nodes,
                       gauss_like_rule, resolve_gauss_like_sign,
                       gauss_like_sign_slopes)
from .newtoncotes import AlphaSolution, solve_alpha, classic, linear_rule
from .composite import (SampledSeries, CompositeResult, ConvergenceRecord,
                        integrate, integrate_series, moment_series,
                        convergence_table)
from .bench import (IntegrandPreset, PRESETS, ErrorRecord, get_preset,
                    get_rule, sweep_records, write_sweep_csv,
                    converge_columns, write_converge_csv)
from . import errors

__all__ = [
    "Interval", "NodeSet", "PanelRule", "RuleEstimate", "sample", "apply_panel",
    "TargetFunction", "ExactnessFamily", "ValidationReport", "validate_target",
    "builtin", "EXP", "IDENTITY",
    "build_q1", "build_q2", "curvature_trapezoid", "curvature_trapezoid_for",
    "curvature_ratio", "diagonal_derivative_report", "DerivativeReport",
    "log_mean", "exp_q1", "exp_q2", "MomentRule", "moment_panel",
    "improper_tail", "gauss_like", "gauss_like_nodes", "gauss_like_rule",
    "resolve_gauss_like_sign", "gauss_like_sign_slopes",
    "AlphaSolution", "solve_alpha", "classic", "linear_rule",
    "SampledSeries", "CompositeResult", "ConvergenceRecord", "integrate",
    "integrate_series", "moment_series", "convergence_table",
    "IntegrandPreset", "PRESETS", "ErrorRecord", "get_preset", "get_rule",
    "sweep_records", "write_sweep_csv", "converge_columns", "write_converge_csv",
    "errors",
]
