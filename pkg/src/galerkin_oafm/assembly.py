"""Ansatz evaluation and Galerkin projection of the PDE residual.

For a fixed time level ``t`` the Galerkin vector is

    G_i(c) = integral over D of R(x, t; c) * phi_i(x) dx,

where R is the problem's pointwise residual applied to the ansatz.  Its root
in ``c`` gives the convergence-control coefficients.  The linear system used
to start Newton is ``K c = F`` with ``K = dG/dc`` at ``c = 0`` and
``F = -G(0)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AnsatzEval, NonFiniteError, ProblemSpec, QuadratureRule, as_coefficients


@dataclass(frozen=True)
class GalerkinLinearSystem:
    k: np.ndarray
    f: np.ndarray


def _combine(m0, m0_dx, m0_dxx, phi, phi_dx, phi_dxx, c, t) -> AnsatzEval:
    s = np.tensordot(c, phi, axes=1)
    s_dxx = np.tensordot(c, phi_dxx, axes=1)
    return AnsatzEval(
        value=m0 + t * s,
        dt=s,
        dx=m0_dx + t * np.tensordot(c, phi_dx, axes=1),
        dxx=m0_dxx + t * s_dxx,
        dxxt=s_dxx,
    )


def eval_ansatz(problem: ProblemSpec, c, x, t: float) -> AnsatzEval:
    """Evaluate M~ = M0 + t * sum c_j phi_j and its derivatives at ``x``."""
    xs = problem.domain.check(x)
    c = as_coefficients(c, problem.n)
    phi, phi_dx, phi_dxx = problem.basis(xs)
    return _combine(problem.m0(xs), problem.m0_dx(xs), problem.m0_dxx(xs), phi, phi_dx, phi_dxx, c, t)


def pointwise_residual(problem: ProblemSpec, c, x, t: float):
    xs = problem.domain.check(x)
    r = problem.pde_residual(eval_ansatz(problem, c, xs, t), xs, t)
    if not np.all(np.isfinite(r)):
        raise NonFiniteError(f"{problem.name}: residual not finite at t={t}")
    return r


class GalerkinAssembler:
    """Tabulates M0 and the basis on a quadrature rule once, then evaluates G(c) cheaply.

    The solver evaluates G dozens of times per time level, so the callbacks are
    only invoked here.
    """

    def __init__(self, problem: ProblemSpec, t: float, rule: QuadratureRule):
        if rule.domain != problem.domain:
            raise ValueError(f"rule is on {rule.domain}, problem {problem.name} on {problem.domain}")
        self.problem = problem
        self.t = float(t)
        self.rule = rule
        x = rule.nodes
        self._m0 = (problem.m0(x), problem.m0_dx(x), problem.m0_dxx(x))
        self._phi = problem.basis(x)
        self._weighted_phi = self._phi[0] * rule.weights

    @property
    def n(self) -> int:
        return self.problem.n

    def __call__(self, c) -> np.ndarray:
        c = np.asarray(c, dtype=float)
        ev = _combine(*self._m0, *self._phi, c, self.t)
        r = self.problem.pde_residual(ev, self.rule.nodes, self.t)
        if not np.all(np.isfinite(r)):
            raise NonFiniteError(f"{self.problem.name}: Galerkin integrand not finite at t={self.t}")
        return self._weighted_phi @ r

    def linear_system(self, step: float | None = None) -> GalerkinLinearSystem:
        # a unit central difference is exact for a quadratic G
        if step is None:
            step = 1.0 if self.problem.quadratic else 1e-5
        g0 = self(np.zeros(self.n))
        k = np.empty((self.n, self.n))
        for j in range(self.n):
            e = np.zeros(self.n)
            e[j] = step
            k[:, j] = (self(e) - self(-e)) / (2 * step)
        return GalerkinLinearSystem(k=k, f=-g0)

    def quadratic_part(self, c) -> np.ndarray:
        """Q(c, c) = (G(c) + G(-c)) / 2 - G(0); the whole nonlinearity when G is quadratic."""
        c = np.asarray(c, dtype=float)
        return 0.5 * (self(c) + self(-c)) - self(np.zeros(self.n))


def galerkin_vector(problem: ProblemSpec, c, t: float, rule: QuadratureRule) -> np.ndarray:
    """G_i(c) = integral of residual * phi_i over the domain, by the given rule."""
    return GalerkinAssembler(problem, t, rule)(as_coefficients(c, problem.n))


def linear_init_system(problem: ProblemSpec, t: float, rule: QuadratureRule) -> GalerkinLinearSystem:
    """K = dG/dc at c = 0 and F = -G(0)."""
    return GalerkinAssembler(problem, t, rule).linear_system()


def quadratic_part(problem: ProblemSpec, c, t: float, rule: QuadratureRule) -> np.ndarray:
    return GalerkinAssembler(problem, t, rule).quadratic_part(as_coefficients(c, problem.n))
