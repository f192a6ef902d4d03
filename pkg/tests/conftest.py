"""Shared fixtures: problem and grid builders."""

import numpy as np
import pytest

from fractional.problem.catalog import constant_coefficient, linear_rhs, zero_kernel
from fractional.problem.grid import SolutionGrid
from fractional.problem.order import FractionalOrder
from fractional.problem.problem import GrowthCoefficients, IvProblem, LipschitzConstants
from fractional.problem.psi import linear


def build_problem(
    alpha=0.5,
    beta=1.0,
    z_a=1.0,
    f=None,
    w=None,
    psi=None,
    interval=(0.0, 1.0),
    q1=None,
    q2=0.0,
    q3=None,
    q4=0.0,
    name="test",
):
    constants = None if q1 is None else LipschitzConstants(q1=q1, q2=q2)
    growth = None if q3 is None else GrowthCoefficients(q3=constant_coefficient(q3), q4=constant_coefficient(q4))
    return IvProblem(
        a=interval[0],
        b=interval[1],
        order=FractionalOrder(alpha, beta),
        psi=psi or linear(),
        z_a=z_a,
        f=f or linear_rhs(),
        w=w or zero_kernel(),
        constants=constants,
        growth=growth,
        name=name,
    )


def build_grid(n, gamma=1.0, a=0.0, b=1.0):
    nodes = np.linspace(a, b, n + 1)
    return SolutionGrid(nodes=nodes, psi_nodes=nodes, gamma=gamma, regular_values=np.zeros(n + 1))


@pytest.fixture
def make_problem():
    return build_problem


@pytest.fixture
def make_grid_on_unit():
    return build_grid
