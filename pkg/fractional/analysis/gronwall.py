"""Pachpatte-type Gronwall bound evaluated by cumulative trapezoid quadrature."""

import numpy as np
from scipy.integrate import cumulative_trapezoid

from fractional.errors import DomainError, InvalidInputError
from fractional.problem.grid import SolutionGrid


def pachpatte_gronwall(u0: float, f_vals, g_vals, grid) -> np.ndarray:
    """
    u0 (1 + int_0^t f(s) exp(int_0^s (f + g)) ds) at every grid point.

    `grid` is a SolutionGrid or an increasing array of sample points.
    """
    t = grid.nodes if isinstance(grid, SolutionGrid) else np.asarray(grid, dtype=float)
    f_vals = np.broadcast_to(np.asarray(f_vals, dtype=float), t.shape)
    g_vals = np.broadcast_to(np.asarray(g_vals, dtype=float), t.shape)

    if t.ndim != 1 or len(t) < 2:
        raise InvalidInputError("gronwall bound needs at least two sample points")
    if u0 < 0.0 or np.any(f_vals < 0.0) or np.any(g_vals < 0.0):
        raise DomainError("gronwall bound needs nonnegative u0, f and g")

    exponent = cumulative_trapezoid(f_vals + g_vals, t, initial=0.0)
    growth = cumulative_trapezoid(f_vals * np.exp(exponent), t, initial=0.0)
    return u0 * (1.0 + growth)
