"""Shared domain types for the Galerkin auxiliary-function solver.

The ansatz handled throughout the package is

    M~(x, t) = M0(x) + t * sum_j c_j * phi_j(x)

where ``M0`` is the (time-independent) initial approximation and ``phi_j`` are
fixed coordinate functions.  Everything a benchmark needs to describe itself
lives on :class:`ProblemSpec`; the remaining types are small value objects
passed between the assembly, solver and evaluation layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

Func = Callable[[np.ndarray], np.ndarray]


class OAFMError(Exception):
    """Base class for errors raised by this package."""


class DomainError(OAFMError, ValueError):
    """Raised for invalid intervals or points outside a problem's domain."""


class InvalidParameterError(OAFMError, ValueError):
    pass


class NonFiniteError(OAFMError, ArithmeticError):
    """An integrand or residual produced NaN/inf."""


class SingularMatrixError(OAFMError, np.linalg.LinAlgError):
    pass


class MissingExactSolutionError(OAFMError, LookupError):
    pass


class ConvergenceError(OAFMError, RuntimeError):
    """Newton (and its fallback) failed to reach the tolerance.

    ``best`` holds the iterate with the smallest residual seen and
    ``residual`` its infinity norm.
    """

    def __init__(self, message: str, best: np.ndarray, residual: float):
        super().__init__(message)
        self.best = best
        self.residual = residual


def _frozen(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SpaceDomain:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"domain endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise DomainError(f"need a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    def check(self, x) -> np.ndarray:
        """Return ``x`` as an array, raising DomainError if any point lies outside [a, b]."""
        xs = np.asarray(x, dtype=float)
        # allow a few ulps of slack so that grids built with arange hit the endpoints
        slack = 8 * np.finfo(float).eps * max(1.0, abs(self.a), abs(self.b))
        if np.any(xs < self.a - slack) or np.any(xs > self.b + slack) or np.any(~np.isfinite(xs)):
            raise DomainError(f"x outside domain [{self.a}, {self.b}]")
        return xs

    def __str__(self):
        return f"[{self.a:g}, {self.b:g}]"


@dataclass(frozen=True)
class AnsatzEval:
    """Value and partial derivatives of a space-time function at one or more points.

    Fields may be scalars or equally shaped arrays.
    """

    value: np.ndarray
    dt: np.ndarray
    dx: np.ndarray
    dxx: np.ndarray
    dxxt: np.ndarray


Residual = Callable[[AnsatzEval, np.ndarray, float], np.ndarray]


@dataclass(frozen=True)
class ProblemSpec:
    """One benchmark PDE written as ``pde_residual(M) = 0``.

    All callables must accept numpy arrays and work elementwise.  ``phi``,
    ``phi_dx`` and ``phi_dxx`` hold one callable per coordinate function.
    ``quadratic`` declares that the residual is a polynomial of degree <= 2 in
    the ansatz and its derivatives, which makes the Galerkin vector exactly
    quadratic in the coefficients.
    """

    name: str
    domain: SpaceDomain
    m0: Func
    m0_dx: Func
    m0_dxx: Func
    phi: Sequence[Func]
    phi_dx: Sequence[Func]
    phi_dxx: Sequence[Func]
    pde_residual: Residual
    exact: Optional[Callable[[np.ndarray, float], np.ndarray]] = None
    exact_eval: Optional[Callable[[np.ndarray, float], AnsatzEval]] = None
    params: Mapping[str, float] = field(default_factory=dict)
    quadratic: bool = True

    def __post_init__(self):
        n = len(self.phi)
        if n == 0:
            raise InvalidParameterError("need at least one coordinate function")
        if len(self.phi_dx) != n or len(self.phi_dxx) != n:
            raise InvalidParameterError(
                f"phi/phi_dx/phi_dxx lengths differ: {n}, {len(self.phi_dx)}, {len(self.phi_dxx)}"
            )
        object.__setattr__(self, "phi", tuple(self.phi))
        object.__setattr__(self, "phi_dx", tuple(self.phi_dx))
        object.__setattr__(self, "phi_dxx", tuple(self.phi_dxx))
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @property
    def n(self) -> int:
        return len(self.phi)

    def basis(self, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Coordinate functions and their first two derivatives, each shaped (n, *x.shape)."""
        x = np.asarray(x, dtype=float)
        return (
            np.array([f(x) for f in self.phi]),
            np.array([f(x) for f in self.phi_dx]),
            np.array([f(x) for f in self.phi_dxx]),
        )


def as_coefficients(c, n: Optional[int] = None) -> np.ndarray:
    """Validate a coefficient vector and return it as a read-only float array."""
    arr = np.array(c, dtype=float).reshape(-1)
    if n is not None and arr.shape != (n,):
        raise InvalidParameterError(f"expected {n} coefficients, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("coefficients must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    domain: SpaceDomain

    def __post_init__(self):
        nodes = _frozen(self.nodes)
        weights = _frozen(self.weights)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise InvalidParameterError("nodes and weights must be equal-length 1-D arrays")
        if np.any(weights <= 0):
            raise InvalidParameterError("quadrature weights must be positive")
        if np.any(np.diff(nodes) <= 0):
            raise InvalidParameterError("quadrature nodes must be strictly increasing")
        if nodes[0] <= self.domain.a or nodes[-1] >= self.domain.b:
            raise InvalidParameterError("quadrature nodes must lie strictly inside the domain")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def order(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class SolveConfig:
    quad_order: int = 32
    newton_tol: float = 1e-12
    max_iter: int = 50
    fd_step: float = 1e-7
    # "numeric" (central differences) or "quadratic" (exact for quadratic problems)
    jacobian: str = "numeric"

    def __post_init__(self):
        if self.quad_order < 1 or self.max_iter < 1:
            raise InvalidParameterError("quad_order and max_iter must be positive")
        if not (self.newton_tol > 0 and self.fd_step > 0):
            raise InvalidParameterError("newton_tol and fd_step must be positive")
        if self.jacobian not in ("numeric", "quadratic"):
            raise InvalidParameterError(f"unknown jacobian mode {self.jacobian!r}")


@dataclass(frozen=True)
class SolveReport:
    coefficients: np.ndarray
    residual_inf_norm: float
    iterations: int
    converged: bool
    t: float = 0.0
    used_fallback: bool = False
