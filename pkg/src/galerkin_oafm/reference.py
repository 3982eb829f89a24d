"""Tabulated benchmark values for the four test problems.

Keys are ``(x, t)`` pairs.  ``BBM_OHAM_ERROR`` holds the errors of an earlier
homotopy-asymptotic solution of the same BBM problem, kept for comparison.
"""

BBM_ABS_ERROR = {
    (0.03, 0.01): 1.411273e-05, (0.04, 0.01): 1.584927e-05,
    (0.03, 0.02): 6.004954e-06, (0.04, 0.02): 9.480540e-06,
    (0.03, 0.03): 2.432482e-05, (0.04, 0.03): 1.910947e-05,
    (0.03, 0.04): 7.697610e-05, (0.04, 0.04): 6.992144e-05,
    (0.03, 0.05): 1.516464e-04, (0.04, 0.05): 1.429545e-04,
}

BBM_OHAM_ERROR = {
    (0.03, 0.01): 2.2664e-04, (0.04, 0.01): 2.7703e-04,
    (0.03, 0.02): 6.03525e-04, (0.04, 0.02): 7.04304e-04,
    (0.03, 0.03): 1.13601e-03, (0.04, 0.03): 1.28165e-03,
    (0.03, 0.04): 1.80786e-03, (0.04, 0.04): 2.00908e-03,
    (0.03, 0.05): 2.63254e-03, (0.04, 0.05): 2.88653e-03,
}

# the BBM table was produced with one coefficient vector, solved at this t
BBM_COEFFICIENT_TIME = 0.01

_X01 = [round(0.1 * i, 1) for i in range(11)]
_XSHOCK = [round(-1.0 + 0.2 * i, 1) for i in range(11)]


def _table(xs, columns):
    out = {}
    for t, (approx, err) in columns.items():
        for x, a, e in zip(xs, approx, err):
            out[(x, t)] = (a, e)
    return out


# (approximate, absolute error)
FISHER = _table(_X01, {
    0.001: (
        [0.25125226, 0.22683291, 0.20376738, 0.18214311, 0.16201943, 0.14342796,
         0.12637404, 0.11083896, 0.09678273, 0.08414747, 0.07286085],
        [7.00945e-07, 1.84484e-06, 1.90543e-06, 1.75098e-06, 1.72015e-06, 1.84292e-06,
         2.00938e-06, 2.08225e-06, 1.95933e-06, 1.59713e-06, 1.00891e-06],
    ),
    0.01: (
        [0.26274282, 0.23780423, 0.21414333, 0.19187472, 0.17107753, 0.15179831,
         0.13405416, 0.11783625, 0.10311327, 0.08983494, 0.07793554],
        [8.92336e-05, 1.45442e-04, 1.72178e-04, 1.85299e-04, 1.92511e-04, 1.96502e-04,
         1.97392e-04, 1.94426e-04, 1.86959e-04, 1.74906e-04, 1.58800e-04],
    ),
})

FISHER_CONVERGENCE = [
    (0.001, 2.08e-06, None),
    (0.002, 7.890e-06, 1.9234),
    (0.003, 1.758e-05, 1.9759),
    (0.004, 3.122e-05, 1.9963),
    (0.005, 4.882e-05, 2.0035),
]

SHOCK = _table(_XSHOCK, {
    0.01: (
        [1.66446466, 1.71175467, 1.76629410, 1.82988779, 1.90499387, 1.99504863,
         2.10500705, 2.24228626, 2.41851329, 2.65301155, 2.98045785],
        [1.28377e-05, 1.09049e-05, 1.05769e-05, 1.22779e-05, 1.64933e-05, 2.37565e-05,
         3.46761e-05, 5.02384e-05, 7.35720e-05, 1.18993e-04, 2.59828e-04],
    ),
    0.02: (
        [1.66228964, 1.70925886, 1.76340273, 1.82650026, 1.90097158, 1.99019534,
         2.09903586, 2.23476196, 2.40874659, 2.63985645, 2.96191353],
        [7.00945e-05, 1.84484e-05, 1.90543e-05, 1.75098e-05, 1.72015e-05, 1.84292e-05,
         2.00938e-04, 2.08225e-04, 1.95933e-04, 1.59713e-04, 1.00891e-03],
    ),
    0.03: (
        [1.66013535, 1.70679439, 1.76055458, 1.82316979, 1.89702342, 1.98543925,
         2.09319728, 2.22743305, 2.39930454, 2.62733328, 2.94484991],
        [6.93521e-05, 8.06126e-05, 9.83131e-04, 1.24524e-04, 1.62435e-04, 2.17583e-04,
         3.01108e-04, 4.39187e-04, 7.03143e-04, 1.31702e-03, 3.10234e-03],
    ),
})

BURGERS_FISHER = _table(_X01, {
    0.01: (
        [0.50311707, 0.49061870, 0.47813206, 0.46567269, 0.45325602, 0.44089725,
         0.42861129, 0.41641271, 0.40431565, 0.39233377, 0.38048017],
        [7.88760e-06, 7.39628e-06, 6.88732e-06, 6.36334e-06, 5.82707e-06, 5.28131e-06,
         4.72898e-06, 4.17297e-06, 3.61619e-06, 3.06152e-06, 2.51176e-06],
    ),
    0.05: (
        [0.51541589, 0.50293257, 0.49044584, 0.47797125, 0.46552430, 0.45312034,
         0.44077450, 0.42850165, 0.41631626, 0.40423242, 0.39226371],
        [2.04019e-04, 1.92383e-04, 1.80254e-04, 1.67690e-04, 1.54751e-04, 1.41505e-04,
         1.28020e-04, 1.14367e-04, 1.00616e-04, 8.68417e-05, 7.31134e-05],
    ),
    0.1: (
        [0.53036447, 0.51793963, 0.50549354, 0.49304159, 0.48059921, 0.46818172,
         0.45580433, 0.44348206, 0.43122962, 0.41906141, 0.40699138],
        [8.44902e-04, 8.01589e-04, 7.56136e-04, 7.08728e-04, 6.59576e-04, 6.08911e-04,
         5.56982e-04, 5.04051e-04, 4.50392e-04, 3.96286e-04, 3.42017e-04],
    ),
})

BURGERS_FISHER_CONVERGENCE = [
    (0.01, 7.8876e-06, None),
    (0.02, 3.1840e-05, 2.0132),
    (0.03, 7.2265e-05, 2.0214),
    (0.04, 1.2954e-04, 2.0288),
    (0.05, 2.0402e-04, 2.0356),
]
