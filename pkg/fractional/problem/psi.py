"""
Weight functions psi and the catalog of analytic kinds.

psi must be C^1 and strictly increasing on [a, b]; every psi-fractional
operator is a Riemann-Liouville operator in the variable u = psi(x).
"""

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from app.core.settings import settings
from fractional.errors import CatalogError, GridConstructionError, InvalidInputError

ArrayMap = Callable[[np.ndarray], np.ndarray]

# Bisection never needs more halvings than this for double precision
MAX_BISECTION_STEPS = 200


@dataclass(frozen=True, eq=False)
class PsiFunction:
    """
    Increasing weight function psi with its derivative.

    Attributes:
        psi: Vectorized map x -> psi(x).
        psi_prime: Vectorized derivative psi'(x).
        label: Catalog kind ("linear", "power", "log", "exp") or a free label.
        inverse: Optional analytic inverse psi^{-1}; bisection is used without it.
        params: Parameters the kind was built with (for reports and comparisons).
    """

    psi: ArrayMap
    psi_prime: ArrayMap
    label: str
    inverse: ArrayMap | None = None
    params: dict[str, float] = field(default_factory=dict)

    def __call__(self, x):
        return self.psi(np.asarray(x, dtype=float))

    def derivative(self, x):
        return self.psi_prime(np.asarray(x, dtype=float))

    def same_as(self, other: "PsiFunction") -> bool:
        return self.label == other.label and self.params == other.params

    def check_on(self, a: float, b: float, probes: int | None = None) -> None:
        """Check psi is finite, strictly increasing and psi' > 0 on a probe grid of [a, b]."""
        probes = probes or settings.PSI_PROBE_POINTS
        x = np.linspace(a, b, probes)
        with np.errstate(all="ignore"):
            values = self(x)
            slopes = self.derivative(x)

        if not np.all(np.isfinite(values)):
            raise GridConstructionError(f"psi '{self.label}' is not finite on [{a}, {b}]")
        if not np.all(np.isfinite(slopes)) or np.any(slopes <= 0.0):
            raise GridConstructionError(f"psi '{self.label}' has psi' <= 0 somewhere on [{a}, {b}]")
        if np.any(np.diff(values) <= 0.0):
            raise GridConstructionError(f"psi '{self.label}' is not strictly increasing on [{a}, {b}]")

    def invert(self, targets: np.ndarray, a: float, b: float, tol: float | None = None) -> np.ndarray:
        """Return x in [a, b] with psi(x) = target for every target."""
        targets = np.asarray(targets, dtype=float)
        if self.inverse is not None:
            return np.clip(self.inverse(targets), a, b)
        return self._bisect(targets, a, b, tol or settings.PSI_INVERSION_TOLERANCE)

    def _bisect(self, targets: np.ndarray, a: float, b: float, tol: float) -> np.ndarray:
        lo = np.full_like(targets, a)
        hi = np.full_like(targets, b)
        psi_a, psi_b = float(self(a)), float(self(b))
        if np.any(targets < psi_a - 1e-12 * abs(psi_a)) or np.any(targets > psi_b + 1e-12 * abs(psi_b)):
            raise GridConstructionError(f"psi '{self.label}' does not reach every requested value on [{a}, {b}]")

        for _ in range(MAX_BISECTION_STEPS):
            if np.max(hi - lo) <= tol:
                break
            mid = 0.5 * (lo + hi)
            below = self(mid) < targets
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return 0.5 * (lo + hi)


# =========================================================================
# CATALOG
# =========================================================================


def linear(scale: float = 1.0) -> PsiFunction:
    """psi(x) = scale * x (classical Riemann-Liouville geometry for scale = 1)."""
    if scale <= 0.0:
        raise InvalidInputError("linear psi needs scale > 0")
    return PsiFunction(
        psi=lambda x: scale * x,
        psi_prime=lambda x: np.full_like(x, scale),
        label="linear",
        inverse=lambda u: u / scale,
        params={"scale": scale},
    )


def power(exponent: float) -> PsiFunction:
    """psi(x) = x^p, defined for x >= 0."""
    if exponent <= 0.0:
        raise InvalidInputError("power psi needs exponent > 0")
    return PsiFunction(
        psi=lambda x: np.power(x, exponent),
        psi_prime=lambda x: exponent * np.power(x, exponent - 1.0),
        label="power",
        inverse=lambda u: np.power(np.maximum(u, 0.0), 1.0 / exponent),
        params={"exponent": exponent},
    )


def log(shift: float = 0.0) -> PsiFunction:
    """psi(x) = ln(x + shift) (Hadamard-type geometry for shift = 0)."""
    return PsiFunction(
        psi=lambda x: np.log(x + shift),
        psi_prime=lambda x: 1.0 / (x + shift),
        label="log",
        inverse=lambda u: np.exp(u) - shift,
        params={"shift": shift},
    )


def exp(rate: float = 1.0) -> PsiFunction:
    """psi(x) = e^{rate x}."""
    if rate <= 0.0:
        raise InvalidInputError("exp psi needs rate > 0")
    return PsiFunction(
        psi=lambda x: np.exp(rate * x),
        psi_prime=lambda x: rate * np.exp(rate * x),
        label="exp",
        inverse=lambda u: np.log(u) / rate,
        params={"rate": rate},
    )


PSI_KINDS: dict[str, Callable[..., PsiFunction]] = {
    "linear": linear,
    "power": power,
    "log": log,
    "exp": exp,
}


def make_psi(kind: str, **params: float) -> PsiFunction:
    """Build a catalog psi by kind name."""
    try:
        factory = PSI_KINDS[kind]
    except KeyError:
        raise CatalogError("psi", kind, list(PSI_KINDS)) from None
    try:
        return factory(**params)
    except TypeError as exc:
        raise InvalidInputError(f"bad parameters for psi kind '{kind}': {exc}") from None
