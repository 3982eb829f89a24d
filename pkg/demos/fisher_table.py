"""Fisher's equation: approximate vs exact solution at two time levels.

Run:  python3 demos/fisher_table.py
"""

import numpy as np

from galerkin_oafm import error_table, fisher, solve_coefficients

problem = fisher()

# the coefficients change with t; look at the two levels we tabulate
for t in (0.001, 0.01):
    report = solve_coefficients(problem, t)
    print(f"t = {t}: c = {np.array2string(report.coefficients, precision=6)}, "
          f"{report.iterations} Newton steps, ||G|| = {report.residual_inf_norm:.1e}")

print()
print(f"{'x':>5} {'t':>6} {'approx':>12} {'exact':>12} {'abs err':>12}")
for row in error_table(problem, [0.001, 0.01], np.linspace(0, 1, 11)):
    print(f"{row.x:5.1f} {row.t:6.3f} {row.approx:12.8f} {row.exact:12.8f} {row.abs_error:12.5e}")
