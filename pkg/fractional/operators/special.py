"""
Closed-form rules: the psi power rule and the two-parameter Mittag-Leffler function.

Gamma values come from scipy.special (relative accuracy well below 1e-13 on (0, 50]).
"""

import math

import numpy as np
from scipy.special import gamma, gammaln

from app.core.settings import settings
from fractional.errors import DomainError, InvalidOrderError, UnsupportedRangeError

# Largest tolerated ratio between the biggest series term and the result
MAX_CANCELLATION = 1e4


def power_rule(delta: float, order_alpha: float, psi_span):
    """
    I^{alpha;psi} of (psi(t) - psi(a))^{delta-1}, evaluated at psi(x) - psi(a) = psi_span.

    Returns Gamma(delta) / Gamma(delta + alpha) * psi_span^{delta + alpha - 1}. At psi_span = 0
    the limit is 0, the Gamma ratio, or +inf depending on the sign of delta + alpha - 1.
    """
    if delta <= 0.0:
        raise DomainError(f"power rule needs delta > 0, got {delta}")
    if order_alpha <= 0.0:
        raise InvalidOrderError(f"power rule needs alpha > 0, got {order_alpha}")

    span = np.asarray(psi_span, dtype=float)
    if np.any(span < 0.0):
        raise DomainError("psi span must be nonnegative")

    exponent = delta + order_alpha - 1.0
    ratio = math.exp(gammaln(delta) - gammaln(delta + order_alpha))
    with np.errstate(divide="ignore"):
        powers = np.power(span, exponent) if exponent != 0.0 else np.ones_like(span)
    result = ratio * powers
    return float(result) if result.ndim == 0 else result


def _mittag_leffler_scalar(a_param: float, b_param: float, z: float) -> float:
    if z == 0.0:
        return float(1.0 / gamma(b_param))

    log_abs_z = math.log(abs(z))
    negative = z < 0.0
    terms: list[float] = []
    running = 0.0
    largest = 0.0
    previous = math.inf

    for k in range(settings.ML_MAX_TERMS):
        log_magnitude = k * log_abs_z - float(gammaln(a_param * k + b_param))
        if log_magnitude > 700.0:
            raise UnsupportedRangeError(f"E_{{{a_param},{b_param}}}({z}) overflows double precision")
        magnitude = math.exp(log_magnitude)
        term = -magnitude if negative and k % 2 else magnitude
        terms.append(term)
        running += term
        largest = max(largest, magnitude)

        # terms eventually decrease monotonically; stop once they stop contributing
        if magnitude < previous and magnitude <= 1e-17 * abs(running):
            break
        previous = magnitude
    else:
        raise UnsupportedRangeError(f"E_{{{a_param},{b_param}}}({z}) needs more than {settings.ML_MAX_TERMS} series terms")

    value = math.fsum(terms)
    if value == 0.0 or largest / abs(value) > MAX_CANCELLATION:
        raise UnsupportedRangeError(f"E_{{{a_param},{b_param}}}({z}) loses accuracy to cancellation in the power series")
    return value


def mittag_leffler(a_param: float, b_param: float, z):
    """
    Two-parameter Mittag-Leffler function E_{a,b}(z) = sum_k z^k / Gamma(a k + b).

    Plain power series with compensated summation (math.fsum). Supported for
    a >= ML_MIN_ORDER and |z| <= ML_MAX_ARGUMENT; arguments whose series does not
    settle within ML_MAX_TERMS terms, overflows, or cancels badly raise
    UnsupportedRangeError instead of returning an inaccurate value.
    """
    if a_param <= 0.0 or b_param <= 0.0:
        raise DomainError(f"Mittag-Leffler parameters must be positive, got a={a_param}, b={b_param}")
    if a_param < settings.ML_MIN_ORDER:
        raise UnsupportedRangeError(f"Mittag-Leffler order a={a_param} is below the supported minimum {settings.ML_MIN_ORDER}")

    z_array = np.asarray(z, dtype=float)
    if np.any(np.abs(z_array) > settings.ML_MAX_ARGUMENT):
        raise UnsupportedRangeError(f"Mittag-Leffler argument outside |z| <= {settings.ML_MAX_ARGUMENT}")

    if z_array.ndim == 0:
        return _mittag_leffler_scalar(a_param, b_param, float(z_array))
    return np.array([_mittag_leffler_scalar(a_param, b_param, float(v)) for v in z_array.ravel()]).reshape(z_array.shape)
