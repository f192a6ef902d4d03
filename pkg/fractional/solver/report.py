"""
Outcome of a Picard solve.
"""

from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        __format__ = str.__format__
from typing import TYPE_CHECKING

import numpy as np

from app.core.settings import settings
from fractional.problem.grid import SolutionGrid

if TYPE_CHECKING:
    from fractional.analysis.certificate import Certificate


class SolveStatus(StrEnum):
    CONVERGED = "converged"
    MAX_ITER = "max_iter"


@dataclass(eq=False)
class SolveReport:
    """
    Result of `solve`.

    Attributes:
        solution: Last iterate (regularized values).
        iterations: Number of Picard sweeps performed.
        final_delta: Weighted-norm change made by the last sweep.
        status: CONVERGED when final_delta <= tolerance, MAX_ITER otherwise.
        tolerance: Requested tolerance.
        delta_history: Weighted-norm change of every sweep.
        certificate: Contraction certificate when the problem carries Lipschitz constants.
        residual: Derivative defect, filled on request.
    """

    solution: SolutionGrid
    iterations: int
    final_delta: float
    status: SolveStatus
    tolerance: float
    delta_history: tuple[float, ...] = ()
    certificate: "Certificate | None" = None
    residual: float | None = None

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.CONVERGED

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.unique

    @property
    def a_posteriori_bound(self) -> float | None:
        """Weighted-norm distance to the fixed point implied by q < 1."""
        if not self.certified:
            return None
        return self.certificate.error_bound(self.final_delta)

    def observed_rate(self, window: int | None = None) -> float | None:
        """
        Geometric contraction ratio fitted to the last `window` positive deltas.

        Returns None when fewer than two positive deltas are available.
        """
        window = window or settings.RATE_WINDOW
        tail = np.array(self.delta_history[-window:], dtype=float)
        tail = tail[tail > 0.0]
        if len(tail) < 2:
            return None
        slope = np.polyfit(np.arange(len(tail), dtype=float), np.log(tail), 1)[0]
        return float(np.exp(slope))
