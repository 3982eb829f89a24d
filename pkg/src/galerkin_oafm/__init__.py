"""Galerkin optimal auxiliary function method for 1-D nonlinear parabolic PDEs.

The approximate solution is ``M0(x) + t * sum_j c_j phi_j(x)``; the
coefficients are fixed at each time level by making the PDE residual
orthogonal to every ``phi_i`` over the spatial domain.
"""

from .assembly import (
    GalerkinAssembler,
    GalerkinLinearSystem,
    eval_ansatz,
    galerkin_vector,
    linear_init_system,
    pointwise_residual,
    quadratic_part,
)
from .core import (
    AnsatzEval,
    ConvergenceError,
    DomainError,
    InvalidParameterError,
    MissingExactSolutionError,
    NonFiniteError,
    OAFMError,
    ProblemSpec,
    QuadratureRule,
    SingularMatrixError,
    SolveConfig,
    SolveReport,
    SpaceDomain,
)
from .evaluation import (
    ConvergenceRow,
    ErrorTableRow,
    absolute_error,
    approximate,
    convergence_rate,
    convergence_table,
    default_grid,
    error_table,
    loglog_slope,
    max_absolute_error,
)
from .problems import PROBLEMS, bbm, burgers_fisher, fisher, get_problem, shock
from .quadrature import gauss_legendre_rule, integrate
from .solver import linear_solve, numeric_jacobian, quadratic_jacobian, solve_coefficients

__version__ = "0.1.0"
