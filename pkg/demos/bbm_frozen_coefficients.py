"""BBM: one coefficient vector reused across time levels.

The BBM benchmark values are matched by solving for c once at t = 0.01 and
then evaluating the ansatz M0 + t * sum(c_j phi_j) at later t with that same
c.  Re-solving at every t, shown alongside, gives larger errors past t = 0.01.
"""

from galerkin_oafm import bbm, error_table

problem = bbm()
ts = [0.01, 0.02, 0.03, 0.04, 0.05]
xs = [0.03, 0.04]

frozen = error_table(problem, ts, xs, coefficient_time=0.01)
fresh = error_table(problem, ts, xs)

print(f"{'x':>5} {'t':>5} {'AE frozen c':>13} {'AE per-t c':>13}")
for a, b in zip(frozen, fresh):
    print(f"{a.x:5.2f} {a.t:5.2f} {a.abs_error:13.6e} {b.abs_error:13.6e}")
