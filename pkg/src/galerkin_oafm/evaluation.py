"""Error metrics, convergence rates and table construction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .assembly import eval_ansatz
from .core import (
    ConvergenceError,
    InvalidParameterError,
    MissingExactSolutionError,
    ProblemSpec,
    SolveConfig,
    SolveReport,
)
from .solver import solve_coefficients


@dataclass(frozen=True)
class ErrorTableRow:
    x: float
    t: float
    approx: float
    exact: float
    abs_error: float


@dataclass(frozen=True)
class ConvergenceRow:
    t: float
    mae: float
    rate: Optional[float] = None


def absolute_error(exact: float, approx: float) -> float:
    if not (math.isfinite(exact) and math.isfinite(approx)):
        raise InvalidParameterError("absolute_error needs finite inputs")
    return abs(exact - approx)


def convergence_rate(e1: float, e2: float, t1: float, t2: float) -> float:
    """log(e1/e2) / log(t1/t2)."""
    if min(e1, e2, t1, t2) <= 0:
        raise InvalidParameterError("errors and times must be positive")
    if t1 == t2:
        raise InvalidParameterError("t1 and t2 must differ")
    return math.log(e1 / e2) / math.log(t1 / t2)


def loglog_slope(ts: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log(error) against log(t)."""
    return float(np.polyfit(np.log(ts), np.log(errors), 1)[0])


def default_grid(problem: ProblemSpec) -> np.ndarray:
    """The x grid used in the benchmark tables for this problem."""
    if problem.name == "bbm":
        return np.array([0.03, 0.04])
    if problem.name == "shock":
        return np.round(np.linspace(-1.0, 1.0, 11), 12)
    a, b = problem.domain.a, problem.domain.b
    return np.round(np.linspace(a, b, 11), 12)


def approximate(problem: ProblemSpec, coefficients, x, t: float) -> np.ndarray:
    return eval_ansatz(problem, coefficients, x, t).value


def _require_exact(problem: ProblemSpec):
    if problem.exact is None:
        raise MissingExactSolutionError(f"{problem.name} has no exact solution")
    return problem.exact


def solve_levels(
    problem: ProblemSpec,
    ts: Sequence[float],
    config: Optional[SolveConfig] = None,
    coefficient_time: Optional[float] = None,
) -> dict[float, SolveReport]:
    """Solve once per distinct t, or once at ``coefficient_time`` shared by all t."""
    config = config or SolveConfig()
    if coefficient_time is not None:
        report = _solve(problem, coefficient_time, config)
        return {float(t): report for t in ts}
    out = {}
    for t in ts:
        t = float(t)
        if t not in out:
            out[t] = _solve(problem, t, config)
    return out


def _solve(problem, t, config):
    try:
        return solve_coefficients(problem, t, config)
    except ConvergenceError as exc:
        raise ConvergenceError(f"t={t}: {exc}", exc.best, exc.residual) from exc


def error_table(
    problem: ProblemSpec,
    ts: Sequence[float],
    xs: Sequence[float],
    config: Optional[SolveConfig] = None,
    coefficient_time: Optional[float] = None,
) -> list[ErrorTableRow]:
    """One row per (t, x), t-major.  Coefficients are solved once per t.

    With ``coefficient_time`` set, a single coefficient vector solved at that
    time level is reused for every t.
    """
    if len(ts) == 0 or len(xs) == 0:
        raise InvalidParameterError("t and x grids must be nonempty")
    exact = _require_exact(problem)
    xs = problem.domain.check(np.asarray(xs, dtype=float))
    reports = solve_levels(problem, ts, config, coefficient_time)
    rows = []
    for t in ts:
        t = float(t)
        approx = approximate(problem, reports[t].coefficients, xs, t)
        ex = np.broadcast_to(exact(xs, t), xs.shape)
        for x, a, e in zip(xs, approx, ex):
            rows.append(ErrorTableRow(float(x), t, float(a), float(e), absolute_error(float(e), float(a))))
    return rows


def max_absolute_error(
    problem: ProblemSpec,
    t: float,
    xs: Sequence[float],
    config: Optional[SolveConfig] = None,
    coefficient_time: Optional[float] = None,
) -> float:
    return max(r.abs_error for r in error_table(problem, [t], xs, config, coefficient_time))


def convergence_table(
    problem: ProblemSpec,
    ts: Sequence[float],
    xs: Sequence[float],
    config: Optional[SolveConfig] = None,
    coefficient_time: Optional[float] = None,
) -> list[ConvergenceRow]:
    """MAE per t and the rate between consecutive t levels."""
    if len(ts) < 2:
        raise InvalidParameterError("need at least two time levels")
    rows = error_table(problem, ts, xs, config, coefficient_time)
    out: list[ConvergenceRow] = []
    for t in ts:
        mae = max(r.abs_error for r in rows if r.t == float(t))
        rate = None
        if out:
            prev = out[-1]
            rate = convergence_rate(prev.mae, mae, prev.t, float(t))
        out.append(ConvergenceRow(float(t), mae, rate))
    return out
