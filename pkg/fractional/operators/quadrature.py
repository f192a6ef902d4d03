"""
Product-trapezoidal quadrature for the left-sided psi-fractional integral.

On a grid uniform in u = psi(x) the integral

    I^{alpha;psi} g(x_i) = 1/Gamma(alpha) int_{u_0}^{u_i} (u_i - u)^{alpha-1} (u - u_0)^{delta-1} g(u) du

is approximated by interpolating the regular factor g piecewise linearly and
integrating every hat function exactly against the singular kernel. delta = 1
is the plain kernel; delta < 1 lets callers pass regularized samples of an
integrand that blows up like (psi(t) - psi(a))^{delta-1} at a.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import beta as beta_fn
from scipy.special import betainc, gamma

from app.core.settings import settings
from app.utils.logger_config import logger
from fractional.errors import DomainError, InvalidInputError, InvalidOrderError
from fractional.operators.special import power_rule
from fractional.problem.grid import SolutionGrid


@dataclass(frozen=True, eq=False)
class QuadratureWeights:
    """
    Weights w_{i,j} with  int (u_i - u)^{alpha-1} (u - u_0)^{delta-1} g(u) du  ~  sum_j w_{i,j} g_j.

    Attributes:
        alpha: Kernel order in (0, 1].
        delta: Exponent of the singular weight at u_0 (1 for none).
        h: psi-space step.
        table: Lower-triangular weights for h = 1 (read-only, shared through the cache).
    """

    alpha: float
    delta: float
    h: float
    table: np.ndarray

    @property
    def scale(self) -> float:
        return self.h ** (self.alpha + self.delta - 1.0)

    @property
    def weights(self) -> np.ndarray:
        return self.scale * self.table

    def apply(self, samples: np.ndarray) -> np.ndarray:
        return self.scale * (self.table @ samples)


def _plain_table(alpha: float, n: int) -> np.ndarray:
    """Closed-form product-trapezoid weights for delta = 1."""
    i = np.arange(n + 1, dtype=float)[:, None]
    j = np.arange(n + 1, dtype=float)[None, :]
    k = i - j
    c = 1.0 / (alpha * (alpha + 1.0))

    with np.errstate(invalid="ignore"):
        interior = c * (np.power(k + 1.0, alpha + 1.0) - 2.0 * np.power(k, alpha + 1.0) + np.power(np.abs(k - 1.0), alpha + 1.0))
    table = np.where((j >= 1) & (j < i), interior, 0.0)

    rows = np.arange(1, n + 1, dtype=float)
    table[1:, 0] = c * (np.power(rows - 1.0, alpha + 1.0) - (rows - 1.0 - alpha) * np.power(rows, alpha))
    table[np.arange(1, n + 1), np.arange(1, n + 1)] = c
    return table


def _panel_increments(p: float, q: float, x: np.ndarray) -> np.ndarray:
    """I_{x_{k+1}}(p, q) - I_{x_k}(p, q) for increasing x in [0, 1], using the complement from x = 0.5 on."""
    split = int(np.searchsorted(x, 0.5))
    direct = betainc(p, q, x[: split + 1])
    mirrored = betainc(q, p, 1.0 - x[split:])
    return np.concatenate((np.diff(direct), -np.diff(mirrored)))


def _two_factor_table(alpha: float, delta: float, n: int) -> np.ndarray:
    """Hat-function moments of (i - s)^{alpha-1} s^{delta-1} via regularized incomplete beta functions."""
    table = np.zeros((n + 1, n + 1))
    b0 = beta_fn(delta, alpha)
    b1 = beta_fn(delta + 1.0, alpha)

    for i in range(1, n + 1):
        k = np.arange(i, dtype=float)
        x = np.arange(i + 1, dtype=float) / i
        m0 = i ** (alpha + delta - 1.0) * b0 * _panel_increments(delta, alpha, x)
        m1 = i ** (alpha + delta) * b1 * _panel_increments(delta + 1.0, alpha, x)

        table[i, :i] += (k + 1.0) * m0 - m1
        table[i, 1 : i + 1] += m1 - k * m0

    # exact moments are nonnegative; clip rounding noise
    return np.maximum(table, 0.0)


@lru_cache(maxsize=settings.WEIGHT_CACHE_SIZE)
def _normalized_table(alpha: float, delta: float, n: int) -> np.ndarray:
    logger.debug("quadrature: building weights alpha=%s delta=%s N=%s", alpha, delta, n)
    table = _plain_table(alpha, n) if delta == 1.0 else _two_factor_table(alpha, delta, n)
    table.setflags(write=False)
    return table


def clear_weight_cache() -> int:
    cached = _normalized_table.cache_info().currsize
    _normalized_table.cache_clear()
    return cached


def quadrature_weights(alpha: float, n: int, h: float, delta: float = 1.0) -> QuadratureWeights:
    """Weights for order alpha on N panels of psi-step h, cached by (alpha, delta, N)."""
    if not 0.0 < alpha <= 1.0:
        raise InvalidOrderError(f"quadrature order must lie in (0, 1], got {alpha}")
    if delta <= 0.0:
        raise DomainError(f"singular order must be positive, got {delta}")
    return QuadratureWeights(alpha=float(alpha), delta=float(delta), h=float(h), table=_normalized_table(float(alpha), float(delta), int(n)))


def psi_frac_integral(g, order_alpha: float, grid: SolutionGrid, singular_order: float = 1.0) -> np.ndarray:
    """
    Samples of I_{a+}^{alpha;psi} [(psi(t) - psi(a))^{delta-1} g(t)] at every node.

    Args:
        g: Regular factor sampled at the grid nodes.
        order_alpha: Integral order, 0 < alpha <= 1.
        grid: Grid uniform in psi-space.
        singular_order: delta; the default 1 integrates g itself.

    Returns:
        Array of node values. The value at x_0 is the limit g_0 * power_rule(delta, alpha, 0),
        i.e. exactly 0 whenever alpha + delta > 1.

    Raises:
        InvalidOrderError: alpha outside (0, 1].
        InvalidInputError: sample count differs from the node count.
    """
    if not 0.0 < order_alpha <= 1.0:
        raise InvalidOrderError(f"integral order must lie in (0, 1], got {order_alpha}")
    g = np.asarray(g, dtype=float)
    if g.shape != grid.nodes.shape:
        raise InvalidInputError(f"expected {len(grid.nodes)} samples, got shape {g.shape}")

    weights = quadrature_weights(order_alpha, grid.size, grid.step, singular_order)
    result = weights.apply(g) / gamma(order_alpha)

    corner = power_rule(singular_order, order_alpha, 0.0)
    result[0] = 0.0 if g[0] == 0.0 or corner == 0.0 else g[0] * corner
    return result
