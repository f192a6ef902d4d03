"""
Numeric psi-Hilfer derivative (0 < alpha < 1) for residual and round-trip checks.

The operator I^{beta(1-alpha);psi} (d/dpsi) I^{(1-beta)(1-alpha);psi} is evaluated
with the outer integral moved inside the derivative:

    ^H D^{alpha,beta;psi} z = d/dpsi I^{1-alpha;psi} [ z - z_a/Gamma(gamma) (psi(x) - psi(a))^{gamma-1} ],

where z_a = I^{1-gamma;psi} z(a) = Gamma(gamma) r_0. The bracket is zero for the
kernel function, so the derivative of (psi(x) - psi(a))^{gamma-1} vanishes exactly.
The psi-derivative is a backward difference, which keeps the scheme first order
and defined at every node i >= 1. Never used on the solve path.
"""

import math

import numpy as np

from app.core.settings import settings
from fractional.errors import InsufficientGridError, InvalidInputError
from fractional.operators.quadrature import psi_frac_integral
from fractional.problem.grid import SolutionGrid
from fractional.problem.order import FractionalOrder
from fractional.problem.psi import PsiFunction

MIN_DERIVATIVE_NODES = 5


def psi_hilfer_derivative(z: SolutionGrid, order: FractionalOrder, psi: PsiFunction | None = None) -> np.ndarray:
    """
    ^H D^{alpha,beta;psi} z at the interior nodes x_1 .. x_{N-1}.

    Args:
        z: Function in regularized form; its gamma must match the order.
        order: Derivative order (alpha, beta).
        psi: When given, the grid's psi-values are checked against it.

    Returns:
        Array of length N - 1.
    """
    if len(z.nodes) < MIN_DERIVATIVE_NODES:
        raise InsufficientGridError(f"psi-Hilfer derivative needs at least {MIN_DERIVATIVE_NODES} nodes, got {len(z.nodes)}")
    if not math.isclose(z.gamma, order.gamma, rel_tol=0.0, abs_tol=1e-14):
        raise InvalidInputError(f"grid is regularized with gamma={z.gamma}, order has gamma={order.gamma}")
    if psi is not None and not np.allclose(psi(z.nodes), z.psi_nodes, rtol=1e-9, atol=1e-12):
        raise InvalidInputError(f"grid nodes were not built with psi '{psi.label}'")

    excess = z.regular_values - z.regular_values[0]
    smoothed = psi_frac_integral(excess, 1.0 - order.alpha, z, singular_order=order.gamma)
    derivative = np.diff(smoothed) / z.step
    return derivative[:-1]


def check_indices(grid: SolutionGrid, corner_fraction: float | None = None) -> np.ndarray:
    """Interior node indices whose psi-offset is at least corner_fraction of the span."""
    fraction = settings.CHECK_CORNER_FRACTION if corner_fraction is None else corner_fraction
    first = max(1, math.ceil(fraction * grid.size))
    return np.arange(first, grid.size)


def round_trip_check(g, order: FractionalOrder, grid: SolutionGrid, corner_fraction: float | None = None) -> float:
    """
    max |^H D^{alpha,beta;psi} I^{alpha;psi} g - g| over the checked interior nodes.

    The deviation is first order in the psi-step and shrinks under refinement.
    """
    g = np.asarray(g, dtype=float)
    integral = psi_frac_integral(g, order.alpha, grid)

    lifted = SolutionGrid(nodes=grid.nodes, psi_nodes=grid.psi_nodes, gamma=order.gamma, regular_values=np.zeros_like(g))
    lifted = lifted.with_raw_values(integral)

    derivative = psi_hilfer_derivative(lifted, order)
    indices = check_indices(grid, corner_fraction)
    return float(np.max(np.abs(derivative[indices - 1] - g[indices])))
