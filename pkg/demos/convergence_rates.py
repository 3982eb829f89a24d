"""Second-order behaviour in t of the ansatz error.

Since the correction is linear in t with t-dependent coefficients, the error
at a fixed x behaves like O(t^2) for small t.  We fit log MAE against log t.
"""

import numpy as np

from galerkin_oafm import burgers_fisher, convergence_table, fisher, loglog_slope

cases = [
    (fisher(), [0.001, 0.002, 0.003, 0.004, 0.005]),
    (burgers_fisher(), [0.01, 0.02, 0.03, 0.04, 0.05]),
]

for problem, ts in cases:
    rows = convergence_table(problem, ts, np.linspace(0, 1, 11))
    slope = loglog_slope(ts, [r.mae for r in rows])
    pairwise = ", ".join(f"{r.rate:.3f}" for r in rows[1:])
    print(f"{problem.name}: pairwise rates {pairwise}; fitted slope {slope:.3f}")
