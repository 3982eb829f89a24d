"""Uniformly propagating shock, u(x, t) = 1 - 2/(x - t - 2), with Re = 1.

The error grows toward x = 1, where the front sits closest to the pole at
x = 2 + t.
"""

import numpy as np

from galerkin_oafm import error_table, shock

xs = np.linspace(-1, 1, 11)
rows = error_table(shock(), [0.01, 0.02, 0.03], xs)

for t in (0.01, 0.02, 0.03):
    level = [r for r in rows if r.t == t]
    lo = min(level, key=lambda r: r.abs_error)
    hi = max(level, key=lambda r: r.abs_error)
    print(f"t = {t}: smallest AE {lo.abs_error:.2e} at x={lo.x:+.1f}, largest {hi.abs_error:.2e} at x={hi.x:+.1f}")
