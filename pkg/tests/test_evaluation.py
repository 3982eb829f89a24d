import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from galerkin_oafm import (
    InvalidParameterError,
    MissingExactSolutionError,
    absolute_error,
    convergence_rate,
    convergence_table,
    default_grid,
    error_table,
    loglog_slope,
    max_absolute_error,
    solve_coefficients,
)
from galerkin_oafm.evaluation import approximate

X01 = np.round(np.linspace(0, 1, 11), 12)


def test_absolute_error_examples():
    assert absolute_error(0.5, 0.5) == 0
    assert absolute_error(1.0, 0.0) == 1.0
    assert absolute_error(0.2626536, 0.26274282) == pytest.approx(8.92e-5, abs=1e-7)
    with pytest.raises(InvalidParameterError):
        absolute_error(math.nan, 0.0)


def test_convergence_rate_examples():
    assert convergence_rate(2.08e-06, 7.890e-06, 0.001, 0.002) == pytest.approx(1.9234, abs=5e-4)
    assert convergence_rate(7.8876e-06, 3.1840e-05, 0.01, 0.02) == pytest.approx(2.0132, abs=5e-4)
    assert convergence_rate(3e-4, 3e-4, 0.1, 0.3) == 0


@given(
    st.floats(1e-12, 1), st.floats(1e-12, 1), st.floats(1e-4, 1), st.floats(1e-4, 1)
)
def test_convergence_rate_swap_symmetry(e1, e2, t1, t2):
    if t1 == t2:
        return
    assert convergence_rate(e1, e2, t1, t2) == pytest.approx(convergence_rate(e2, e1, t2, t1), rel=1e-12, abs=1e-12)
    # base invariance: same value with log10
    want = math.log10(e1 / e2) / math.log10(t1 / t2)
    assert convergence_rate(e1, e2, t1, t2) == pytest.approx(want, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("args", [(0, 1, 1, 2), (1, 1, 0, 2), (1, 2, 0.5, 0.5), (-1, 1, 1, 2)])
def test_convergence_rate_domain(args):
    with pytest.raises(InvalidParameterError):
        convergence_rate(*args)


def test_loglog_slope_recovers_power_law():
    ts = np.array([0.01, 0.02, 0.04, 0.08])
    assert loglog_slope(ts, 3.0 * ts**2) == pytest.approx(2.0, abs=1e-12)


def test_error_table_shape_and_consistency(problems):
    rows = error_table(problems["fisher"], [0.001, 0.01], X01)
    assert len(rows) == 22
    assert [r.t for r in rows[:11]] == [0.001] * 11
    for r in rows:
        assert r.abs_error == abs(r.exact - r.approx)
    shock_rows = error_table(problems["shock"], [0.01, 0.02, 0.03], default_grid(problems["shock"]))
    assert len(shock_rows) == 33
    assert len(error_table(problems["bbm"], [0.01], [0.03])) == 1


def test_error_table_reuses_coefficients_per_t(problems):
    p = problems["fisher"]
    rows = error_table(p, [0.01], [0.3])
    c = solve_coefficients(p, 0.01).coefficients
    assert rows[0].approx == approximate(p, c, 0.3, 0.01)


def test_coefficient_time_freezes_coefficients(problems):
    p = problems["bbm"]
    frozen = error_table(p, [0.01, 0.03], [0.03], coefficient_time=0.01)
    c = solve_coefficients(p, 0.01).coefficients
    assert frozen[1].approx == pytest.approx(float(approximate(p, c, 0.03, 0.03)), rel=0, abs=0)
    per_t = error_table(p, [0.03], [0.03])
    assert per_t[0].approx != frozen[1].approx


def test_mae_reference_points(problems):
    assert max_absolute_error(problems["fisher"], 0.001, X01) == pytest.approx(2.08e-6, rel=0.02)


def test_mae_is_zero_at_t0(problem):
    assert max_absolute_error(problem, 0.0, default_grid(problem)) <= 1e-12


def test_missing_exact_solution(problems):
    from dataclasses import replace

    p = replace(problems["fisher"], exact=None)
    with pytest.raises(MissingExactSolutionError):
        max_absolute_error(p, 0.01, X01)


def test_empty_grids_rejected(problems):
    with pytest.raises(InvalidParameterError):
        error_table(problems["fisher"], [], X01)
    with pytest.raises(InvalidParameterError):
        error_table(problems["fisher"], [0.1], [])


def test_convergence_table(problems):
    rows = convergence_table(problems["fisher"], [0.001, 0.002, 0.003], X01)
    assert rows[0].rate is None
    assert rows[1].rate == pytest.approx(convergence_rate(rows[0].mae, rows[1].mae, 0.001, 0.002))
    with pytest.raises(InvalidParameterError):
        convergence_table(problems["fisher"], [0.001], X01)
