"""The four benchmark problems.

Each constructor returns a :class:`ProblemSpec` with closed-form initial
approximation, coordinate functions (with first and second derivatives), the
pointwise residual and the exact solution.  Every exact solution here is a
traveling wave of the initial profile, ``M(x, t) = M0(x - s t)``, which is
what ``exact_eval`` uses to supply exact derivatives.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .core import (
    AnsatzEval,
    InvalidParameterError,
    NonFiniteError,
    ProblemSpec,
    SpaceDomain,
)

Profile = Callable[[np.ndarray], tuple]


def sech(z):
    """1/cosh(z), written to avoid overflow of cosh for large |z|."""
    a = np.exp(-np.abs(np.asarray(z, dtype=float)))
    return 2.0 * a / (1.0 + a * a)


def _power_rule(p: float, g0, g1, g2, g3):
    """Value and first three derivatives of g**p given g and its derivatives."""

    def term(coef, k, *factors):
        if coef == 0:
            return 0.0
        out = coef * g0 ** (p - k)
        for f in factors:
            out = out * f
        return out

    d0 = g0**p
    d1 = term(p, 1, g1)
    d2 = term(p * (p - 1), 2, g1, g1) + term(p, 1, g2)
    d3 = term(p * (p - 1) * (p - 2), 3, g1, g1, g1) + term(3 * p * (p - 1), 2, g1, g2) + term(p, 1, g3)
    return d0, d1, d2, d3


def _component(fn: Profile, k: int) -> Callable[[np.ndarray], np.ndarray]:
    return lambda x: np.asarray(fn(np.asarray(x, dtype=float))[k], dtype=float) + 0.0 * np.asarray(x)


def _negated_powers(profile: Profile, n: int):
    """phi_j = -profile**j for j = 1..n, with derivatives."""
    phi, phi_dx, phi_dxx = [], [], []
    for j in range(1, n + 1):
        fam = lambda x, j=j: tuple(-d for d in _power_rule(j, *profile(x)))
        phi.append(_component(fam, 0))
        phi_dx.append(_component(fam, 1))
        phi_dxx.append(_component(fam, 2))
    return phi, phi_dx, phi_dxx


def _traveling_wave(profile: Profile, speed: float):
    def exact_eval(x, t):
        g0, g1, g2, g3 = profile(np.asarray(x, dtype=float) - speed * t)
        return AnsatzEval(value=g0, dt=-speed * g1, dx=g1, dxx=g2, dxxt=-speed * g3)

    return exact_eval


# -- Benjamin-Bona-Mahony -----------------------------------------------------


def _sech_power_tanh(k: int, x):
    """s^k * T and its first two x-derivatives, s = sech(x/4), T = tanh(x/4)."""
    s = sech(x / 4)
    th = np.tanh(x / 4)
    v = s**k * th
    d1 = ((k + 1) * s ** (k + 2) - k * s**k) / 4
    d2 = (k * k * s**k - (k + 1) * (k + 2) * s ** (k + 2)) * th / 16
    return v, d1, d2


def _sech_power(k: int, x):
    s = sech(x / 4)
    th = np.tanh(x / 4)
    v = s**k
    d1 = -k * s**k * th / 4
    d2 = -k * ((k + 1) * s ** (k + 2) - k * s**k) / 16
    return v, d1, d2


def _bbm_profile(x):
    x = np.asarray(x, dtype=float)
    s = sech(x / 4)
    th = np.tanh(x / 4)
    v, d1, d2 = _sech_power(2, x)
    d3 = (3 * s**4 - s**2) * th / 8
    return v, d1, d2, d3


def bbm() -> ProblemSpec:
    """u_t - u_xxt + u_x + u u_x = 0 on [0, 0.07], u(x, 0) = sech^2(x/4)."""

    def combo(*parts):
        # parts: (weight, family, k)
        def deriv(order):
            return lambda x: sum(w * fam(k, np.asarray(x, dtype=float))[order] for w, fam, k in parts)

        return deriv(0), deriv(1), deriv(2)

    families = [
        combo((0.5, _sech_power_tanh, 4), (0.5, _sech_power_tanh, 6)),
        combo((0.5, _sech_power_tanh, 6), (0.5, _sech_power_tanh, 8)),
        combo((-1.0, _sech_power, 6)),
        combo((-1.0, _sech_power, 8)),
    ]

    def residual(e: AnsatzEval, x, t):
        return e.dt - e.dxxt + e.dx + e.value * e.dx

    return ProblemSpec(
        name="bbm",
        domain=SpaceDomain(0.0, 0.07),
        m0=_component(_bbm_profile, 0),
        m0_dx=_component(_bbm_profile, 1),
        m0_dxx=_component(_bbm_profile, 2),
        phi=[f[0] for f in families],
        phi_dx=[f[1] for f in families],
        phi_dxx=[f[2] for f in families],
        pde_residual=residual,
        exact=lambda x, t: sech(np.asarray(x, dtype=float) / 4 - t / 3) ** 2,
        exact_eval=_traveling_wave(_bbm_profile, 4.0 / 3.0),
        params={},
    )


# -- Fisher -------------------------------------------------------------------


def _fisher_profile(x):
    # w = 1/(1+e^x), profile = w^2
    w = 1.0 / (1.0 + np.exp(np.asarray(x, dtype=float)))
    w1 = w * w - w
    w2 = (2 * w - 1) * w1
    w3 = 2 * w1 * w1 + (2 * w - 1) * w2
    return w * w, 2 * w * w1, 2 * w1 * w1 + 2 * w * w2, 6 * w1 * w2 + 2 * w * w3


def fisher() -> ProblemSpec:
    """u_t = u_xx + 6u(1 - u) on [0, 1], u(x, 0) = (1 + e^x)^-2."""
    phi, phi_dx, phi_dxx = _negated_powers(_fisher_profile, 4)

    def residual(e: AnsatzEval, x, t):
        return e.dt - e.dxx - 6.0 * e.value * (1.0 - e.value)

    return ProblemSpec(
        name="fisher",
        domain=SpaceDomain(0.0, 1.0),
        m0=_component(_fisher_profile, 0),
        m0_dx=_component(_fisher_profile, 1),
        m0_dxx=_component(_fisher_profile, 2),
        phi=phi,
        phi_dx=phi_dx,
        phi_dxx=phi_dxx,
        pde_residual=residual,
        exact=lambda x, t: (1.0 + np.exp(np.asarray(x, dtype=float) - 5.0 * t)) ** -2,
        exact_eval=_traveling_wave(_fisher_profile, 5.0),
        params={},
    )


# -- uniformly propagating shock ------------------------------------------------


def _shock_profile(x):
    d = np.asarray(x, dtype=float) - 2.0
    return 1.0 - 2.0 / d, 2.0 / d**2, -4.0 / d**3, 12.0 / d**4


def shock(re: float = 1.0) -> ProblemSpec:
    """u_t = u_xx / Re - u u_x on [-1, 1], u(x, 0) = (x - 4)/(x - 2)."""
    if not (math.isfinite(re) and re > 0):
        raise InvalidParameterError(f"Reynolds number must be positive, got {re}")
    phi, phi_dx, phi_dxx = _negated_powers(_shock_profile, 4)

    def residual(e: AnsatzEval, x, t):
        return e.dt - e.dxx / re + e.value * e.dx

    return ProblemSpec(
        name="shock",
        domain=SpaceDomain(-1.0, 1.0),
        m0=_component(_shock_profile, 0),
        m0_dx=_component(_shock_profile, 1),
        m0_dxx=_component(_shock_profile, 2),
        phi=phi,
        phi_dx=phi_dx,
        phi_dxx=phi_dxx,
        pde_residual=residual,
        exact=lambda x, t: 1.0 - 2.0 / (np.asarray(x, dtype=float) - t - 2.0),
        exact_eval=_traveling_wave(_shock_profile, 1.0),
        params={"re": re},
    )


# -- Burgers-Fisher -----------------------------------------------------------


def burgers_fisher(
    alpha: float = 1.0, beta: float = 1.0, omega: float = 1.0, published_sign: bool = False
) -> ProblemSpec:
    """u_t + alpha u^w u_x - u_xx = beta u (1 - u^w) on [0, 1].

    ``published_sign=True`` flips the sign of the linearised advection
    coupling ``t * phi_j * M0'`` in the Galerkin system, i.e. the residual
    gains the extra term ``-2 alpha t (sum c_j phi_j) M0'``.  That is the form
    under which the tabulated benchmark values for this problem were
    generated; it is only defined for omega = 1 and is *not* a consistent
    discretisation of the PDE (the exact solution no longer annihilates it).
    """
    for name, v in (("alpha", alpha), ("beta", beta), ("omega", omega)):
        if not math.isfinite(v):
            raise InvalidParameterError(f"{name} must be finite")
    if omega <= 0:
        raise InvalidParameterError(f"omega must be positive, got {omega}")
    if alpha == 0:
        raise InvalidParameterError("alpha must be nonzero (it divides the wave speed)")
    if published_sign and omega != 1:
        raise InvalidParameterError("published_sign is only defined for omega = 1")

    k = -alpha * omega / (2.0 * (omega + 1.0))
    speed = alpha / (omega + 1.0) + beta * (omega + 1.0) / alpha
    integer_power = float(omega).is_integer()

    def base(x):
        u = 0.5 + 0.5 * np.tanh(k * np.asarray(x, dtype=float))
        u1 = 2 * k * u * (1 - u)
        u2 = 2 * k * (1 - 2 * u) * u1
        u3 = 2 * k * (-2 * u1 * u1 + (1 - 2 * u) * u2)
        return u, u1, u2, u3

    def profile(x):
        return _power_rule(1.0 / omega, *base(x))

    phi, phi_dx, phi_dxx = _negated_powers(profile, 4)
    m0_dx = _component(profile, 1)

    def power(v):
        if integer_power:
            return v ** int(omega)
        if np.any(np.asarray(v) <= 0):
            raise NonFiniteError("non-positive ansatz value with non-integer omega")
        return v**omega

    def residual(e: AnsatzEval, x, t):
        vw = power(e.value)
        r = e.dt + alpha * vw * e.dx - e.dxx - beta * e.value * (1.0 - vw)
        if published_sign:
            r = r - 2.0 * alpha * t * e.dt * m0_dx(x)
        return r

    def exact(x, t):
        xi = np.asarray(x, dtype=float) - speed * t
        return (0.5 + 0.5 * np.tanh(k * xi)) ** (1.0 / omega)

    return ProblemSpec(
        name="burgers-fisher",
        domain=SpaceDomain(0.0, 1.0),
        m0=_component(profile, 0),
        m0_dx=m0_dx,
        m0_dxx=_component(profile, 2),
        phi=phi,
        phi_dx=phi_dx,
        phi_dxx=phi_dxx,
        pde_residual=residual,
        exact=exact,
        exact_eval=_traveling_wave(profile, speed),
        params={"alpha": alpha, "beta": beta, "omega": omega, "published_sign": float(published_sign)},
        quadratic=omega == 1,
    )


PROBLEMS = {
    "bbm": bbm,
    "burgers-fisher": burgers_fisher,
    "fisher": fisher,
    "shock": shock,
}


def get_problem(name: str, **params) -> ProblemSpec:
    """Build a benchmark by CLI identifier; ``params`` go to its constructor."""
    try:
        ctor = PROBLEMS[name]
    except KeyError:
        raise InvalidParameterError(f"unknown problem {name!r}; choose from {', '.join(PROBLEMS)}") from None
    return ctor(**params)
