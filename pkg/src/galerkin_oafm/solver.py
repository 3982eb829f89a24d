"""Root finding for the Galerkin coefficients at one time level.

Newton's method started from the solution of the linear part ``K c = F``.
All coupling terms carry a factor of ``t``, so for the small time levels of
interest the linear start is already close and Newton converges in a handful
of steps.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from .assembly import GalerkinAssembler
from .core import (
    ConvergenceError,
    InvalidParameterError,
    ProblemSpec,
    QuadratureRule,
    SingularMatrixError,
    SolveConfig,
    SolveReport,
    as_coefficients,
)
from .quadrature import gauss_legendre_rule

log = logging.getLogger(__name__)

FALLBACK_ITERATIONS = 100


def linear_solve(k, f) -> np.ndarray:
    """Solve ``k @ c = f`` by Gaussian elimination with partial pivoting.

    Raises SingularMatrixError when a pivot drops below 1e-14 * ||k||_inf.
    """
    a = np.array(k, dtype=float)
    b = np.array(f, dtype=float).reshape(-1)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n) or b.shape != (n,):
        raise InvalidParameterError(f"shape mismatch: k {a.shape}, f {b.shape}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise InvalidParameterError("matrix and right-hand side must be finite")
    scale = np.max(np.sum(np.abs(a), axis=1)) if n else 0.0
    threshold = 1e-14 * scale
    for col in range(n):
        p = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[p, col]) <= threshold or a[p, col] == 0.0:
            raise SingularMatrixError(f"pivot {a[p, col]:.3e} in column {col} below {threshold:.3e}")
        if p != col:
            a[[col, p]] = a[[p, col]]
            b[[col, p]] = b[[p, col]]
        m = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(m, a[col, col:])
        b[col + 1 :] -= m * b[col]
    c = np.empty(n)
    for row in range(n - 1, -1, -1):
        c[row] = (b[row] - a[row, row + 1 :] @ c[row + 1 :]) / a[row, row]
    return c


def _numeric_jacobian(g: GalerkinAssembler, c: np.ndarray, h: float) -> np.ndarray:
    n = c.size
    jac = np.empty((n, n))
    for j in range(n):
        hj = h * (1.0 + abs(c[j]))
        e = np.zeros(n)
        e[j] = hj
        jac[:, j] = (g(c + e) - g(c - e)) / (2 * hj)
    return jac


def _coupling_columns(g: GalerkinAssembler, c: np.ndarray) -> np.ndarray:
    """Columns 2*Q(c, e_j) by polarisation: G(c+e) - G(c) - G(e) + G(0)."""
    n = c.size
    g0 = g(np.zeros(n))
    gc = g(c)
    out = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        out[:, j] = g(c + e) - gc - g(e) + g0
    return out


def numeric_jacobian(problem: ProblemSpec, c, t: float, rule: QuadratureRule, h: float = 1e-7) -> np.ndarray:
    """Central-difference Jacobian of G with steps h * (1 + |c_j|)."""
    if not h > 0:
        raise InvalidParameterError("h must be positive")
    return _numeric_jacobian(GalerkinAssembler(problem, t, rule), np.array(as_coefficients(c, problem.n)), h)


def quadratic_jacobian(problem: ProblemSpec, c, t: float, rule: QuadratureRule) -> np.ndarray:
    """K + 2 Q(c, .), exact when the problem is quadratic."""
    g = GalerkinAssembler(problem, t, rule)
    return g.linear_system().k + _coupling_columns(g, np.array(as_coefficients(c, problem.n)))


def solve_coefficients(
    problem: ProblemSpec,
    t: float,
    config: Optional[SolveConfig] = None,
    rule: Optional[QuadratureRule] = None,
    raise_on_failure: bool = True,
) -> SolveReport:
    """Find c with ||G(c; t)||_inf <= config.newton_tol.

    If Newton's residual grows on two consecutive steps the solver switches to
    a frozen-coupling fixed-point iteration.  On failure a ConvergenceError
    carrying the best iterate is raised, unless ``raise_on_failure`` is False,
    in which case the report is returned with ``converged=False``.
    """
    config = config or SolveConfig()
    if not t >= 0:
        raise InvalidParameterError(f"t must be >= 0, got {t}")
    rule = rule or gauss_legendre_rule(config.quad_order, problem.domain)
    g = GalerkinAssembler(problem, t, rule)
    tol = config.newton_tol

    system = g.linear_system()
    c = linear_solve(system.k, system.f)
    res = g(c)
    norm = float(np.max(np.abs(res)))
    best_c, best_norm = c, norm
    iterations = 0
    growth = 0
    used_fallback = False

    while norm > tol and iterations < config.max_iter:
        if config.jacobian == "quadratic" and problem.quadratic:
            jac = system.k + _coupling_columns(g, c)
        else:
            jac = _numeric_jacobian(g, c, config.fd_step)
        c = c + linear_solve(jac, -res)
        res = g(c)
        new_norm = float(np.max(np.abs(res)))
        iterations += 1
        growth = growth + 1 if new_norm > norm else 0
        norm = new_norm
        if norm < best_norm:
            best_c, best_norm = c, norm
        if growth >= 2:
            log.info("%s t=%g: Newton diverging, switching to fixed-point", problem.name, t)
            used_fallback = True
            c = best_c
            for _ in range(FALLBACK_ITERATIONS):
                frozen = system.k + 0.5 * _coupling_columns(g, c)
                c = linear_solve(frozen, system.f)
                res = g(c)
                norm = float(np.max(np.abs(res)))
                iterations += 1
                if norm < best_norm:
                    best_c, best_norm = c, norm
                if norm <= tol:
                    break
            break

    converged = best_norm <= tol
    if not converged and raise_on_failure:
        raise ConvergenceError(
            f"{problem.name}: no convergence at t={t} after {iterations} iterations "
            f"(best ||G||_inf = {best_norm:.3e})",
            best=as_coefficients(best_c),
            residual=best_norm,
        )
    return SolveReport(
        coefficients=as_coefficients(best_c),
        residual_inf_norm=best_norm,
        iterations=iterations,
        converged=converged,
        t=float(t),
        used_fallback=used_fallback,
    )
