"""
One Picard sweep of the Volterra form

    z(x) = z_a/Gamma(gamma) (psi(x)-psi(a))^{gamma-1} + I^{alpha;psi} f(., z, W)(x),
    W(x) = int_a^x w(x, t, z(t)) dt,

carried out on the regularized values r = (psi(x)-psi(a))^{1-gamma} z.
"""

import numpy as np
from scipy.special import gamma as gamma_fn

from app.utils.logger_config import logger
from fractional.errors import InvalidInputError, StepError
from fractional.operators.quadrature import psi_frac_integral
from fractional.problem.catalog import InnerKernel, RightHandSide
from fractional.problem.grid import SolutionGrid
from fractional.problem.problem import IvProblem


def corner_extrapolate(values: np.ndarray) -> float:
    """Linear extrapolation to t_0 from t_1, t_2."""
    return float(2.0 * values[1] - values[2])


def _first_bad_row(evaluate, nodes: np.ndarray) -> int | None:
    for i in range(len(nodes)):
        try:
            row = np.asarray(evaluate(i), dtype=float)
        except Exception:
            return i
        if not np.all(np.isfinite(row)):
            return i
    return None


def _kernel_matrix(w: InnerKernel, z: SolutionGrid) -> np.ndarray:
    """M[i, j] = w(x_i, t_j, z(t_j)) with the t_0 column filled by the corner convention."""
    x = z.nodes
    raw = z.values
    if z.gamma < 1.0:
        # z(t_0) is unbounded; evaluate at t_1 in its place, column 0 is overwritten below
        raw = raw.copy()
        raw[0] = raw[1]

    try:
        matrix = np.array(w(x[:, None], x[None, :], raw[None, :]), dtype=float)
    except Exception as exc:
        bad = _first_bad_row(lambda i: w(x[i], x, raw), x)
        raise StepError(f"inner kernel '{w.label}' failed: {exc}", bad, None if bad is None else float(x[bad])) from exc

    if z.gamma < 1.0:
        matrix[:, 0] = 2.0 * matrix[:, 1] - matrix[:, 2]

    finite = np.isfinite(np.tril(matrix))
    if not np.all(finite):
        bad = int(np.argmin(np.all(finite, axis=1)))
        raise StepError(f"inner kernel '{w.label}' returned a non-finite value", bad, float(x[bad]))
    return matrix


def inner_integrals(w: InnerKernel, z: SolutionGrid) -> np.ndarray:
    """W(x_i) for every node by the trapezoid rule in x; W(x_0) = 0."""
    if w.is_zero:
        return np.zeros_like(z.nodes)

    matrix = _kernel_matrix(w, z)
    panels = 0.5 * (matrix[:, :-1] + matrix[:, 1:]) * np.diff(z.nodes)[None, :]
    # row i accumulates panels j = 0 .. i-1
    return np.tril(panels, k=-1).sum(axis=1)


def inner_integral(w: InnerKernel, z: SolutionGrid, node_index: int) -> float:
    """W(x_i) = int_a^{x_i} w(x_i, t, z(t)) dt for a single node i >= 1."""
    if not 1 <= node_index <= z.size:
        raise InvalidInputError(f"node_index must lie in [1, {z.size}], got {node_index}")
    if w.is_zero:
        return 0.0

    x = z.nodes
    raw = z.values
    t = x[: node_index + 1]
    x_i = float(x[node_index])

    try:
        if z.gamma < 1.0:
            # t_1, t_2 feed the extrapolated t_0 value even when node_index = 1
            head = np.asarray(w(x_i, x[1:3], raw[1:3]), dtype=float)
            body = np.asarray(w(x_i, t[1:], raw[1 : node_index + 1]), dtype=float)
            integrand = np.concatenate(([2.0 * head[0] - head[1]], np.broadcast_to(body, t[1:].shape)))
        else:
            integrand = np.asarray(w(x_i, t, raw[: node_index + 1]), dtype=float)
    except Exception as exc:
        raise StepError(f"inner kernel '{w.label}' failed: {exc}", node_index, x_i) from exc

    if not np.all(np.isfinite(integrand)):
        raise StepError(f"inner kernel '{w.label}' returned a non-finite value", node_index, x_i)
    return float(np.trapezoid(integrand, t))


def regular_forcing(f: RightHandSide, z: SolutionGrid, inner: np.ndarray) -> np.ndarray:
    """
    (psi(x)-psi(a))^{1-gamma} f(x, z, W) at every node.

    For gamma < 1 the node x_0 is filled by extrapolation from x_1, x_2.
    """
    x = z.nodes
    raw = z.values
    start = 1 if z.gamma < 1.0 else 0

    try:
        forcing = np.asarray(f(x[start:], raw[start:], inner[start:]), dtype=float)
    except Exception as exc:
        bad = _first_bad_row(lambda i: f(x[start + i], raw[start + i], inner[start + i]), x[start:])
        node = None if bad is None else start + bad
        raise StepError(f"right-hand side '{f.label}' failed: {exc}", node, None if node is None else float(x[node])) from exc

    forcing = np.broadcast_to(forcing, x[start:].shape)
    if not np.all(np.isfinite(forcing)):
        node = start + int(np.argmin(np.isfinite(forcing)))
        raise StepError(f"right-hand side '{f.label}' returned a non-finite value", node, float(x[node]))

    result = np.empty_like(x)
    if z.gamma < 1.0:
        result[1:] = np.power(z.offsets[1:], 1.0 - z.gamma) * forcing
        result[0] = corner_extrapolate(result)
    else:
        result[:] = forcing
    return result


def picard_step(z: SolutionGrid, problem: IvProblem) -> SolutionGrid:
    """
    Apply the Volterra map once.

    The forcing is integrated in regularized form against the two-factor weights
    (psi(x_i)-u)^{alpha-1} (u-psi(a))^{gamma-1}, so no singular sample is ever formed.
    r_new(x_0) = z_a/Gamma(gamma) exactly.
    """
    gamma = problem.gamma
    if not np.isclose(z.gamma, gamma, rtol=0.0, atol=1e-14):
        raise InvalidInputError(f"grid is regularized with gamma={z.gamma}, problem has gamma={gamma}")

    if problem.f.uses_inner and not problem.w.is_zero:
        inner = inner_integrals(problem.w, z)
    else:
        inner = np.zeros_like(z.nodes)

    forcing = regular_forcing(problem.f, z, inner)
    integral = psi_frac_integral(forcing, problem.alpha, z, singular_order=gamma)

    start_value = problem.z_a / gamma_fn(gamma)
    regular = np.empty_like(integral)
    regular[1:] = start_value + np.power(z.offsets[1:], 1.0 - gamma) * integral[1:]
    regular[0] = start_value
    logger.debug("solver: sweep done on N=%d, max|r|=%.6e", z.size, float(np.max(np.abs(regular))))
    return z.with_values(regular)
