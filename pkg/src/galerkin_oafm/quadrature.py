"""Gauss-Legendre quadrature on a finite interval."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .core import InvalidParameterError, NonFiniteError, QuadratureRule, SpaceDomain


def _legendre(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P_n(x) and P_n'(x) by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def _reference_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order == 1:
        return np.array([0.0]), np.array([2.0])
    i = np.arange(1, order + 1)
    x = np.cos(np.pi * (i - 0.25) / (order + 0.5))
    for _ in range(100):
        p, dp = _legendre(order, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    _, dp = _legendre(order, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # roots come out in decreasing order; symmetrise to kill rounding asymmetry
    x = x[::-1]
    w = w[::-1]
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    return x, w


def gauss_legendre_rule(order: int, a: float, b: float | None = None) -> QuadratureRule:
    """Return the ``order``-point Gauss-Legendre rule mapped onto [a, b].

    ``a`` may also be a :class:`SpaceDomain`, in which case ``b`` is omitted.
    The rule integrates polynomials of degree <= 2*order - 1 exactly.
    """
    domain = a if isinstance(a, SpaceDomain) else SpaceDomain(float(a), float(b))
    if int(order) != order or order < 1:
        raise InvalidParameterError(f"quadrature order must be a positive integer, got {order}")
    x, w = _reference_rule(int(order))
    half = 0.5 * domain.length
    mid = 0.5 * (domain.a + domain.b)
    return QuadratureRule(nodes=mid + half * x, weights=half * w, domain=domain)


def integrate(f: Callable[[np.ndarray], np.ndarray], rule: QuadratureRule) -> float:
    """Sum of weights * f(nodes).  ``f`` is called once with the node array."""
    values = np.broadcast_to(np.asarray(f(rule.nodes), dtype=float), rule.nodes.shape)
    if not np.all(np.isfinite(values)):
        raise NonFiniteError("integrand is not finite at some quadrature node")
    return float(math.fsum(rule.weights * values))
