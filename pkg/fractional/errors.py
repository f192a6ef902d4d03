"""Exceptions raised by the numeric core."""


class FractionalError(Exception):
    """Base class for every failure reported by the `fractional` package."""


class InvalidInputError(FractionalError, ValueError):
    """Malformed arguments: empty grids, length mismatches, bad tolerances."""


class InvalidOrderError(FractionalError, ValueError):
    """Fractional order outside its admissible range."""


class DomainError(FractionalError, ValueError):
    """Argument outside the mathematical domain of a closed-form rule."""


class UnsupportedRangeError(FractionalError):
    """Argument outside the working range of a series evaluation."""


class GridConstructionError(FractionalError):
    """psi is not strictly increasing (or not invertible) on the interval."""


class InsufficientGridError(FractionalError):
    """Too few nodes for a finite-difference operator."""


class StepError(FractionalError):
    """A kernel evaluation failed inside a Picard sweep."""

    def __init__(self, message: str, node_index: int | None = None, x: float | None = None):
        super().__init__(message)
        self.node_index = node_index
        self.x = x

    def __str__(self) -> str:
        base = super().__str__()
        if self.node_index is None:
            return base
        return f"{base} (node {self.node_index}, x={self.x!r})"


class CertificateUnavailableError(FractionalError):
    """The problem carries no (Q1, Q2) Lipschitz constants."""


class BoundUnavailableError(FractionalError):
    """The problem carries no (Q3, Q4) growth coefficients."""


class IncompatibleProblemsError(FractionalError):
    """Two problems do not share order, psi and interval."""


class CatalogError(FractionalError, ValueError):
    """Unknown kind requested from a function catalog."""

    def __init__(self, family: str, kind: str, known: list[str]):
        super().__init__(f"unknown {family} kind '{kind}' (registered: {', '.join(sorted(known))})")
        self.family = family
        self.kind = kind
        self.known = known
