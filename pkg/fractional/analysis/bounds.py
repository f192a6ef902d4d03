"""
A priori and continuous-dependence envelopes, the measured data mismatch, and containment verdicts.

Both envelopes freeze the evaluation point x inside the kernel (psi(x) - psi(t))^{alpha-1},
so every node gets its own nested quadrature. Kernel moments are taken exactly on each
psi-panel against the panel average of the regular factor.
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.special import gamma as gamma_fn

from app.core.settings import settings
from app.utils.logger_config import logger
from fractional.errors import BoundUnavailableError, DomainError, InvalidInputError
from fractional.operators.quadrature import psi_frac_integral
from fractional.problem.grid import SolutionGrid, make_grid
from fractional.problem.problem import GrowthCoefficients, IvProblem
from fractional.solver.picard import inner_integrals, picard_step

BoundKind = Literal["a-priori", "dependence"]


@dataclass(frozen=True, eq=False)
class BoundEnvelope:
    """
    Attributes:
        nodes: Grid nodes x_i.
        values: Bound B(x_i) >= 0.
        kind: "a-priori" or "dependence".
        prefactor: p2 for the a priori bound, eps for the dependence bound.
    """

    nodes: np.ndarray
    values: np.ndarray
    kind: BoundKind
    prefactor: float


@dataclass(frozen=True, eq=False)
class ContainmentTable:
    """
    Per-node comparison of a measured magnitude against an envelope.

    Nodes where the magnitude is not finite (x_0 when gamma < 1) are not judged.
    """

    nodes: np.ndarray
    magnitudes: np.ndarray
    bound: np.ndarray
    judged: np.ndarray
    contained: np.ndarray

    @property
    def all_contained(self) -> bool:
        return bool(np.all(self.contained[self.judged]))

    @property
    def violations(self) -> np.ndarray:
        return np.flatnonzero(self.judged & ~self.contained)


def _growth(problem: IvProblem) -> GrowthCoefficients:
    if problem.growth is None:
        raise BoundUnavailableError(f"problem '{problem.name}' carries no growth coefficients q3/q4")
    return problem.growth


def _kernel_moments(alpha: float, grid: SolutionGrid) -> np.ndarray:
    """P[i, m] = int over panel m of (psi(x_i) - u)^{alpha-1} du, zero for m > i; column 0 unused."""
    n = grid.size
    k = np.arange(n + 1, dtype=float)[:, None] - np.arange(n + 1, dtype=float)[None, :] + 1.0
    with np.errstate(invalid="ignore"):
        moments = grid.step**alpha * (np.power(k, alpha) - np.power(np.abs(k - 1.0), alpha)) / alpha
    mask = (k >= 1.0) & (np.arange(n + 1)[None, :] >= 1)
    return np.where(mask, moments, 0.0)


def _panel_mean(values: np.ndarray) -> np.ndarray:
    """Averages over panels along the last axis, with a zero column in front so panel m sits at index m."""
    mean = 0.5 * (values[..., :-1] + values[..., 1:])
    pad = np.zeros(values.shape[:-1] + (1,))
    return np.concatenate((pad, mean), axis=-1)


def _frozen_exponent(problem: IvProblem, grid: SolutionGrid, inner_gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """
    E[i, j] = exp( int_a^{t_j} [psi'(s) (psi(x_i) - psi(s))^{alpha-1} Q3(s)/inner_gamma + Q4(s)] ds ).

    Returns (E, q3 samples).
    """
    growth = _growth(problem)
    q3 = growth.q3(grid.nodes)
    q4 = growth.q4(grid.nodes)

    moments = _kernel_moments(problem.alpha, grid)
    kernel_part = np.cumsum(moments * _panel_mean(q3)[None, :], axis=1) / inner_gamma
    q4_part = np.concatenate(([0.0], np.cumsum(0.5 * (q4[:-1] + q4[1:]) * np.diff(grid.nodes))))
    return np.exp(kernel_part + q4_part[None, :]), q3


def zero_forcing_peak(problem: IvProblem, grid: SolutionGrid) -> float:
    """
    p2: max over nodes of |z_a/Gamma(gamma) (psi(x)-psi(a))^{gamma-1} + I^{alpha;psi} f(t, 0, int w(t, tau, 0))|.

    Nodes where the first term is unbounded (x_0 when gamma < 1) are skipped.
    """
    image = picard_step(grid.with_values(np.zeros(grid.size + 1)), problem)
    start = 1 if problem.gamma < 1.0 else 0
    return float(np.max(np.abs(image.values[start:])))


def apriori_bound(problem: IvProblem, grid: SolutionGrid | None = None) -> BoundEnvelope:
    """
    Solution bound p2 [1 + 1/Gamma(alpha) int psi'(t)(psi(x)-psi(t))^{alpha-1} Q3(t) exp(...) dt].

    The exponent integrates psi'(s)(psi(x)-psi(s))^{alpha-1} Q3(s)/Gamma(alpha) + Q4(s)
    with x frozen at each node.

    Raises:
        BoundUnavailableError: The problem has no growth coefficients.
    """
    _growth(problem)
    grid = grid or make_grid(problem, settings.DEFAULT_GRID_SIZE)
    p2 = zero_forcing_peak(problem, grid)

    gamma_alpha = gamma_fn(problem.alpha)
    exponent, q3 = _frozen_exponent(problem, grid, gamma_alpha)
    moments = _kernel_moments(problem.alpha, grid)
    outer = np.sum(moments * _panel_mean(q3[None, :] * exponent), axis=1) / gamma_alpha

    values = p2 * (1.0 + outer)
    logger.info("analysis: a priori bound p2=%.6g, B(b)=%.6g", p2, values[-1])
    return BoundEnvelope(nodes=grid.nodes.copy(), values=values, kind="a-priori", prefactor=p2)


def dependence_bound(problem: IvProblem, perturbed: IvProblem, eps: float, grid: SolutionGrid | None = None) -> BoundEnvelope:
    """
    Envelope eps [1 + int psi'(t)(psi(x)-psi(a))^{alpha-1} Q3(t) exp(...) dt] for |z - v|.

    The exponent integrates psi'(s)(psi(x)-psi(s))^{alpha-1} Q3(s)/Gamma(gamma) + Q4(s).
    The outer kernel is constant in t, so the outer integral is a trapezoid rule in psi.

    Raises:
        IncompatibleProblemsError: order, psi or interval differ.
        DomainError: eps <= 0.
    """
    problem.check_compatible(perturbed)
    if not eps > 0.0:
        raise DomainError(f"dependence bound needs eps > 0, got {eps}")
    _growth(problem)
    grid = grid or make_grid(problem, settings.DEFAULT_GRID_SIZE)

    exponent, q3 = _frozen_exponent(problem, grid, gamma_fn(problem.gamma))
    integrand = q3[None, :] * exponent
    panels = 0.5 * (integrand[:, :-1] + integrand[:, 1:]) * grid.step
    running = np.concatenate((np.zeros((grid.size + 1, 1)), np.cumsum(panels, axis=1)), axis=1)
    accumulated = np.diagonal(running).copy()

    values = np.full(grid.size + 1, eps)
    span_power = np.power(grid.offsets[1:], problem.alpha - 1.0)
    values[1:] = eps * (1.0 + span_power * accumulated[1:])
    logger.info("analysis: dependence envelope eps=%.3e, B(b)=%.6g", eps, values[-1])
    return BoundEnvelope(nodes=grid.nodes.copy(), values=values, kind="dependence", prefactor=eps)


def mismatch_profile(problem: IvProblem, perturbed: IvProblem, solution_v: SolutionGrid) -> np.ndarray:
    """
    Data mismatch at every node along the perturbed solution v:

        |z_a - v_a| (psi(x)-psi(a))^{gamma-1}/Gamma(gamma)
          + 1/Gamma(gamma) int psi'(t)(psi(x)-psi(t))^{alpha-1} |f(t, v, W[v]) - fbar(t, v, Wbar[v])| dt.

    Entry 0 is +inf when gamma < 1 and the initial data differ.
    """
    problem.check_compatible(perturbed)
    gamma = problem.gamma
    v = solution_v
    offsets = v.offsets

    inner = inner_integrals(problem.w, v) if problem.f.uses_inner else np.zeros_like(v.nodes)
    inner_bar = inner_integrals(perturbed.w, v) if perturbed.f.uses_inner else np.zeros_like(v.nodes)

    start = 1 if gamma < 1.0 else 0
    x, raw = v.nodes[start:], v.values[start:]
    gap = np.abs(problem.f(x, raw, inner[start:]) - perturbed.f(x, raw, inner_bar[start:]))

    regular_gap = np.empty_like(v.nodes)
    if gamma < 1.0:
        regular_gap[1:] = np.power(offsets[1:], 1.0 - gamma) * gap
        regular_gap[0] = max(0.0, 2.0 * regular_gap[1] - regular_gap[2])
    else:
        regular_gap[:] = gap

    forcing_term = gamma_fn(problem.alpha) / gamma_fn(gamma) * psi_frac_integral(regular_gap, problem.alpha, v, singular_order=gamma)

    datum_gap = abs(problem.z_a - perturbed.z_a) / gamma_fn(gamma)
    profile = np.empty_like(v.nodes)
    profile[1:] = datum_gap * np.power(offsets[1:], gamma - 1.0) + forcing_term[1:]
    if gamma < 1.0:
        profile[0] = np.inf if datum_gap > 0.0 else forcing_term[0]
    else:
        profile[0] = datum_gap + forcing_term[0]
    return profile


def measure_mismatch(problem: IvProblem, perturbed: IvProblem, solution_v: SolutionGrid, grid: SolutionGrid | None = None) -> float:
    """Empirical eps: the largest finite entry of `mismatch_profile`."""
    if grid is not None and (grid.size != solution_v.size or not np.allclose(grid.nodes, solution_v.nodes)):
        raise InvalidInputError("solution_v does not live on the given grid")
    profile = mismatch_profile(problem, perturbed, solution_v)
    start = 1 if problem.gamma < 1.0 else 0
    eps = float(np.max(profile[start:]))
    logger.info("analysis: measured mismatch eps=%.3e", eps)
    return eps


def containment(envelope: BoundEnvelope, magnitudes, gamma: float, slack: float | None = None) -> ContainmentTable:
    """Verdict |value_i| <= B_i (1 + slack) per node; x_0 is only judged when gamma = 1."""
    slack = settings.CONTAINMENT_SLACK if slack is None else slack
    magnitudes = np.abs(np.asarray(magnitudes, dtype=float))
    if magnitudes.shape != envelope.values.shape:
        raise InvalidInputError(f"expected {len(envelope.values)} magnitudes, got {magnitudes.shape}")

    judged = np.isfinite(magnitudes)
    if gamma < 1.0:
        judged[0] = False
    contained = ~judged | (magnitudes <= envelope.values * (1.0 + slack))
    table = ContainmentTable(nodes=envelope.nodes, magnitudes=magnitudes, bound=envelope.values, judged=judged, contained=contained)
    if not table.all_contained:
        logger.warning("analysis: %s bound violated at %d nodes", envelope.kind, len(table.violations))
    return table
