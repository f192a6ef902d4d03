import math

import numpy as np
import pytest
import pytest_cases
from scipy import integrate
from scipy.special import beta as beta_fn

from fractional.errors import DomainError, InvalidInputError, InvalidOrderError
from fractional.operators.quadrature import (
    _plain_table,
    _two_factor_table,
    clear_weight_cache,
    psi_frac_integral,
    quadrature_weights,
)
from fractional.operators.special import power_rule
from fractional.problem.grid import SolutionGrid, make_grid
from fractional.problem.psi import linear, log, power

ORDERS = [(alpha, delta) for alpha in (0.3, 0.5, 0.9) for delta in (0.5, 0.8, 1.0)]


def build_grid(n):
    nodes = np.linspace(0.0, 1.0, n + 1)
    return SolutionGrid(nodes=nodes, psi_nodes=nodes, gamma=1.0, regular_values=np.zeros(n + 1))


@pytest_cases.fixture
@pytest_cases.parametrize(
    "psi, interval",
    [(linear(), (0.0, 1.0)), (power(2.0), (1.0, 2.0)), (log(), (1.0, math.e))],
    ids=["linear", "square", "log"],
)
def psi_grid(make_problem, psi, interval):
    problem = make_problem(psi=psi, interval=interval)
    return make_grid(problem, 1024)


@pytest_cases.parametrize("alpha, delta", ORDERS)
def test_power_rule_is_reproduced(psi_grid, alpha, delta):
    n = psi_grid.size
    values = psi_frac_integral(np.ones(n + 1), alpha, psi_grid, singular_order=delta)
    expected = power_rule(delta, alpha, psi_grid.offsets)

    tail = slice(n // 4, None)
    rel_error = np.max(np.abs(values[tail] - expected[tail]) / np.abs(expected[tail]))
    assert rel_error <= 1e-3


def _exp_oracle(alpha, delta, s):
    value, _ = integrate.quad(np.exp, 0.0, s, weight="alg", wvar=(delta - 1.0, alpha - 1.0), epsabs=1e-14, epsrel=1e-13)
    return value / math.gamma(alpha)


def _max_exp_error(alpha, delta, n, stride):
    grid = build_grid(n)
    values = psi_frac_integral(np.exp(grid.offsets), alpha, grid, singular_order=delta)
    picks = range(n // 4, n + 1, stride)
    return max(abs(values[i] - _exp_oracle(alpha, delta, grid.offsets[i])) for i in picks)


@pytest_cases.parametrize("alpha, delta", ORDERS)
def test_error_shrinks_on_refinement(alpha, delta):
    coarse = _max_exp_error(alpha, delta, 512, 32)
    fine = _max_exp_error(alpha, delta, 1024, 64)
    assert fine < 1e-3
    assert coarse / fine >= 1.8


@pytest_cases.parametrize("alpha", [0.3, 0.5, 0.9, 1.0])
def test_plain_weights_integrate_linear_functions_exactly(alpha):
    n, h = 16, 0.125
    weights = quadrature_weights(alpha, n, h)
    i = np.arange(n + 1, dtype=float)
    s = h * i

    assert np.allclose(weights.apply(np.ones(n + 1)), s**alpha / alpha, rtol=1e-13, atol=0.0)
    assert np.allclose(weights.apply(s), s ** (alpha + 1.0) / (alpha * (alpha + 1.0)), rtol=1e-13, atol=0.0)


@pytest_cases.parametrize("alpha, delta", [(0.3, 0.5), (0.6, 0.4), (0.9, 0.75)])
def test_two_factor_weights_integrate_linear_functions_exactly(alpha, delta):
    n, h = 12, 0.25
    weights = quadrature_weights(alpha, n, h, delta=delta)
    s = h * np.arange(n + 1, dtype=float)

    ones = weights.apply(np.ones(n + 1))
    ramp = weights.apply(s)
    assert np.allclose(ones[1:], beta_fn(delta, alpha) * s[1:] ** (alpha + delta - 1.0), rtol=1e-12, atol=0.0)
    assert np.allclose(ramp[1:], beta_fn(delta + 1.0, alpha) * s[1:] ** (alpha + delta), rtol=1e-12, atol=0.0)


@pytest_cases.parametrize("alpha", [0.25, 0.5, 0.8])
def test_two_factor_table_agrees_with_closed_form_for_unit_delta(alpha):
    assert np.allclose(_two_factor_table(alpha, 1.0, 10), _plain_table(alpha, 10), rtol=1e-12, atol=1e-14)


def test_weights_are_lower_triangular_and_nonnegative():
    table = quadrature_weights(0.4, 9, 1.0, delta=0.7).table
    assert np.all(table >= 0.0)
    assert np.all(np.triu(table, 1) == 0.0)
    assert np.all(table[0] == 0.0)


@pytest_cases.parametrize(
    "delta, g0, expected",
    [(0.8, 1.0, 0.0), (0.5, 2.0, 2.0 * math.gamma(0.5)), (0.3, 1.0, math.inf), (0.3, 0.0, 0.0)],
)
def test_value_at_lower_end(delta, g0, expected):
    grid = build_grid(8)
    g = np.ones(9)
    g[0] = g0
    corner = psi_frac_integral(g, 0.5, grid, singular_order=delta)[0]
    assert corner == expected or math.isclose(corner, expected, rel_tol=1e-14)


def test_tables_are_cached_and_read_only():
    clear_weight_cache()
    first = quadrature_weights(0.5, 32, 0.1, delta=0.75)
    second = quadrature_weights(0.5, 32, 0.4, delta=0.75)
    assert first.table is second.table
    assert not first.table.flags.writeable
    assert second.scale == pytest.approx(0.4**0.25)

    assert clear_weight_cache() == 1
    assert quadrature_weights(0.5, 32, 0.1, delta=0.75).table is not first.table


def test_invalid_arguments_are_rejected():
    grid = build_grid(4)
    with pytest.raises(InvalidOrderError):
        psi_frac_integral(np.ones(5), 0.0, grid)
    with pytest.raises(InvalidOrderError):
        psi_frac_integral(np.ones(5), 1.2, grid)
    with pytest.raises(InvalidInputError):
        psi_frac_integral(np.ones(4), 0.5, grid)
    with pytest.raises(DomainError):
        quadrature_weights(0.5, 4, 0.25, delta=0.0)


def test_integral_is_linear_in_the_samples():
    grid = build_grid(64)
    rng = np.random.default_rng(7)
    g1, g2 = rng.normal(size=65), rng.normal(size=65)
    for delta in (0.6, 1.0):
        combined = psi_frac_integral(2.5 * g1 - 0.75 * g2, 0.4, grid, singular_order=delta)
        separate = 2.5 * psi_frac_integral(g1, 0.4, grid, singular_order=delta) - 0.75 * psi_frac_integral(g2, 0.4, grid, singular_order=delta)
        assert np.allclose(combined, separate, rtol=1e-12, atol=1e-12)


@pytest_cases.parametrize("delta", [0.5, 1.0])
def test_nonnegative_samples_give_nonnegative_integrals(delta):
    grid = build_grid(128)
    g = np.abs(np.random.default_rng(11).normal(size=129))
    assert np.all(psi_frac_integral(g, 0.35, grid, singular_order=delta) >= 0.0)


def _semigroup_error(n, alpha, beta):
    grid = build_grid(n)
    nested = psi_frac_integral(psi_frac_integral(np.ones(n + 1), beta, grid), alpha, grid)
    direct = power_rule(1.0, alpha + beta, grid.offsets)
    return np.max(np.abs(nested - direct)[n // 4 :])


@pytest_cases.parametrize("alpha, beta", [(0.3, 0.4), (0.5, 0.5), (0.2, 0.7)])
def test_nested_integrals_approach_the_summed_order(alpha, beta):
    coarse = _semigroup_error(256, alpha, beta)
    fine = _semigroup_error(512, alpha, beta)
    assert fine < 1e-3
    assert fine < coarse
