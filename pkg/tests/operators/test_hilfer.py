import math

import numpy as np
import pytest
import pytest_cases
from scipy import integrate

from fractional.errors import InsufficientGridError, InvalidInputError
from fractional.operators.hilfer import check_indices, psi_hilfer_derivative, round_trip_check
from fractional.problem.grid import SolutionGrid, make_grid
from fractional.problem.order import FractionalOrder
from fractional.problem.psi import linear, power


def unit_grid(n, gamma):
    nodes = np.linspace(0.0, 1.0, n + 1)
    return SolutionGrid(nodes=nodes, psi_nodes=nodes, gamma=gamma, regular_values=np.zeros(n + 1))


@pytest_cases.parametrize("alpha, beta", [(0.5, 0.0), (0.4, 0.5), (0.7, 0.25)])
def test_kernel_function_has_zero_derivative(alpha, beta):
    order = FractionalOrder(alpha, beta)
    grid = unit_grid(64, order.gamma).with_values(np.full(65, 1.7))
    assert np.all(psi_hilfer_derivative(grid, order) == 0.0)


def _caputo_square(alpha, x):
    value, _ = integrate.quad(lambda t: 2.0 * t, 0.0, x, weight="alg", wvar=(0.0, -alpha))
    return value / math.gamma(1.0 - alpha)


@pytest_cases.parametrize("alpha", [0.3, 0.5, 0.8])
def test_caputo_derivative_of_square(alpha):
    order = FractionalOrder(alpha, 1.0)
    n = 256
    grid = unit_grid(n, 1.0).with_raw_values(np.linspace(0.0, 1.0, n + 1) ** 2)
    derivative = psi_hilfer_derivative(grid, order)

    indices = check_indices(grid)
    exact = 2.0 / math.gamma(3.0 - alpha) * grid.nodes[indices] ** (2.0 - alpha)
    assert np.max(np.abs(derivative[indices - 1] - exact)) <= 2.0 * grid.step

    for i in (indices[0], indices[len(indices) // 2], indices[-1]):
        assert abs(derivative[i - 1] - _caputo_square(alpha, grid.nodes[i])) <= 2.0 * grid.step


def test_derivative_in_psi_geometry(make_problem):
    problem = make_problem(alpha=0.6, beta=1.0, psi=power(2.0), interval=(1.0, 2.0))
    grid = make_grid(problem, 300)
    grid = grid.with_raw_values(grid.offsets**2)
    derivative = psi_hilfer_derivative(grid, problem.order, psi=problem.psi)

    indices = check_indices(grid)
    exact = 2.0 / math.gamma(2.4) * grid.offsets[indices] ** 1.4
    assert np.max(np.abs(derivative[indices - 1] - exact)) <= 3.0 * grid.step


@pytest_cases.parametrize("alpha, beta", [(0.5, 0.0), (0.5, 0.5), (0.7, 1.0), (0.3, 0.6)])
def test_round_trip_deviation_halves_under_refinement(alpha, beta):
    order = FractionalOrder(alpha, beta)
    deviations = []
    for n in (512, 1024):
        grid = unit_grid(n, order.gamma)
        deviations.append(round_trip_check(grid.offsets, order, grid))

    assert deviations[1] < 5e-3
    assert 1.6 <= deviations[0] / deviations[1] <= 2.4


def test_check_indices_skip_the_corner():
    grid = unit_grid(8, 1.0)
    assert list(check_indices(grid)) == list(range(2, 8))
    assert list(check_indices(grid, corner_fraction=0.0)) == list(range(1, 8))


def test_derivative_rejects_bad_grids():
    order = FractionalOrder(0.5, 0.5)
    with pytest.raises(InsufficientGridError):
        psi_hilfer_derivative(unit_grid(3, order.gamma), order)
    with pytest.raises(InvalidInputError):
        psi_hilfer_derivative(unit_grid(16, 1.0), order)
    with pytest.raises(InvalidInputError):
        psi_hilfer_derivative(unit_grid(16, order.gamma), order, psi=linear(2.0))
