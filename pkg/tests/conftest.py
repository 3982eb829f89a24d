import numpy as np
import pytest

from galerkin_oafm import bbm, burgers_fisher, fisher, gauss_legendre_rule, shock

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def problems():
    return {"bbm": bbm(), "fisher": fisher(), "shock": shock(), "burgers-fisher": burgers_fisher()}


@pytest.fixture(params=["bbm", "fisher", "shock", "burgers-fisher"])
def problem(request, problems):
    return problems[request.param]


@pytest.fixture
def rule_for():
    return lambda p, order=32: gauss_legendre_rule(order, p.domain)


def interior_points(problem, count=50):
    a, b = problem.domain.a, problem.domain.b
    return np.linspace(a, b, count + 2)[1:-1]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split()[0].rstrip("abcdefg")), k)):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
