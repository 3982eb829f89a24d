"""Setting up a new problem: the heat equation u_t = u_xx with u = e^{-t} sin x.

Only the initial profile, a few coordinate functions and the pointwise
residual are needed.  Here sin x is an eigenfunction, so one basis function
is enough: the Galerkin condition gives c = -1/(1 + t), so the ansatz is
sin(x)/(1 + t), which agrees with e^{-t} sin x up to O(t^2).
"""

import numpy as np

from galerkin_oafm import ProblemSpec, SpaceDomain, error_table

heat = ProblemSpec(
    name="heat",
    domain=SpaceDomain(0.0, np.pi),
    m0=np.sin,
    m0_dx=np.cos,
    m0_dxx=lambda x: -np.sin(x),
    phi=[np.sin],
    phi_dx=[np.cos],
    phi_dxx=[lambda x: -np.sin(x)],
    pde_residual=lambda e, x, t: e.dt - e.dxx,
    exact=lambda x, t: np.exp(-t) * np.sin(x),
)

for row in error_table(heat, [0.01, 0.1], [np.pi / 2]):
    print(f"t = {row.t}: approx {row.approx:.8f}, exact {row.exact:.8f}, AE {row.abs_error:.2e}")
