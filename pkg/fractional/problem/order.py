"""Fractional order (alpha, beta) of the psi-Hilfer derivative."""

from dataclasses import dataclass

from fractional.errors import InvalidOrderError


@dataclass(frozen=True, slots=True)
class FractionalOrder:
    """
    Order pair of the psi-Hilfer derivative.

    Attributes:
        alpha: Derivative order, 0 < alpha < 1.
        beta: Type parameter, 0 <= beta <= 1 (0 Riemann-Liouville, 1 Caputo).
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise InvalidOrderError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0.0 <= self.beta <= 1.0:
            raise InvalidOrderError(f"beta must lie in [0, 1], got {self.beta}")

    @property
    def gamma(self) -> float:
        """Singularity order alpha + beta (1 - alpha); exactly 1 in the Caputo case."""
        if self.beta == 1.0:
            return 1.0
        return self.alpha + self.beta * (1.0 - self.alpha)

    @property
    def inner_order(self) -> float:
        """Order (1 - beta)(1 - alpha) = 1 - gamma of the inner integral."""
        return (1.0 - self.beta) * (1.0 - self.alpha)

    @property
    def outer_order(self) -> float:
        """Order beta (1 - alpha) of the outer integral."""
        return self.beta * (1.0 - self.alpha)
