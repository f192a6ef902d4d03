"""Numerical psi-fractional operator calculus."""

from fractional.operators.hilfer import check_indices, psi_hilfer_derivative, round_trip_check
from fractional.operators.quadrature import QuadratureWeights, clear_weight_cache, psi_frac_integral, quadrature_weights
from fractional.operators.special import mittag_leffler, power_rule

__all__ = [
    "QuadratureWeights",
    "check_indices",
    "clear_weight_cache",
    "mittag_leffler",
    "power_rule",
    "psi_frac_integral",
    "psi_hilfer_derivative",
    "quadrature_weights",
    "round_trip_check",
]
