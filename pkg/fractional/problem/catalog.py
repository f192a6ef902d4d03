"""
Registered right-hand sides f(x, z, W), inner kernels w(x, t, z) and
nonnegative coefficient functions used for Q3/Q4.

Problems are assembled from these entries only; an unknown kind is an error.
"""

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from fractional.errors import CatalogError, InvalidInputError


@dataclass(frozen=True, eq=False)
class RightHandSide:
    """
    Right-hand side f(x, z, W) of the integrodifferential equation.

    Attributes:
        fn: Vectorized f(x, z, W).
        label: Catalog kind.
        params: Parameters the kind was built with.
        uses_inner: False when f ignores W, which lets the solver skip the inner integral.
    """

    fn: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    label: str
    params: dict[str, float] = field(default_factory=dict)
    uses_inner: bool = True

    def __call__(self, x, z, inner):
        return self.fn(np.asarray(x, dtype=float), np.asarray(z, dtype=float), np.asarray(inner, dtype=float))


@dataclass(frozen=True, eq=False)
class InnerKernel:
    """
    Inner Volterra kernel w(x, t, z).

    Attributes:
        fn: Vectorized w(x, t, z).
        label: Catalog kind.
        params: Parameters the kind was built with.
        is_zero: True for the zero kernel.
    """

    fn: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    label: str
    params: dict[str, float] = field(default_factory=dict)
    is_zero: bool = False

    def __call__(self, x, t, z):
        return self.fn(np.asarray(x, dtype=float), np.asarray(t, dtype=float), np.asarray(z, dtype=float))


@dataclass(frozen=True, eq=False)
class Coefficient:
    """Nonnegative coefficient function on [a, b] (Q3 or Q4)."""

    fn: Callable[[np.ndarray], np.ndarray]
    label: str
    params: dict[str, float] = field(default_factory=dict)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.broadcast_to(self.fn(x), x.shape).astype(float)


# =========================================================================
# RIGHT-HAND SIDES
# =========================================================================


def zero_rhs() -> RightHandSide:
    return RightHandSide(fn=lambda x, z, W: np.zeros(np.broadcast(x, z, W).shape), label="zero", uses_inner=False)


def constant_rhs(value: float = 0.0) -> RightHandSide:
    return RightHandSide(
        fn=lambda x, z, W: np.full(np.broadcast(x, z, W).shape, value),
        label="constant",
        params={"value": value},
        uses_inner=False,
    )


def linear_rhs(lam: float = 0.0, mu: float = 0.0, source: float = 0.0) -> RightHandSide:
    """f = lambda z + mu W + source."""
    return RightHandSide(
        fn=lambda x, z, W: lam * z + mu * W + source,
        label="linear",
        params={"lambda": lam, "mu": mu, "source": source},
        uses_inner=mu != 0.0,
    )


def sine_rhs(lam: float = 0.0, mu: float = 0.0, source: float = 0.0) -> RightHandSide:
    """f = lambda sin(z) + mu W + source; Lipschitz in (z, W) with constant max(|lambda|, |mu|)."""
    return RightHandSide(
        fn=lambda x, z, W: lam * np.sin(z) + mu * W + source,
        label="sine",
        params={"lambda": lam, "mu": mu, "source": source},
        uses_inner=mu != 0.0,
    )


RHS_KINDS: dict[str, Callable[..., RightHandSide]] = {
    "zero": zero_rhs,
    "constant": constant_rhs,
    "linear": linear_rhs,
    "linear-in-z": linear_rhs,
    "linear-in-z-and-w": linear_rhs,
    "sine": sine_rhs,
}


# =========================================================================
# INNER KERNELS
# =========================================================================


def zero_kernel() -> InnerKernel:
    return InnerKernel(fn=lambda x, t, z: np.zeros(np.broadcast(x, t, z).shape), label="zero", is_zero=True)


def constant_kernel(value: float = 0.0) -> InnerKernel:
    return InnerKernel(
        fn=lambda x, t, z: np.full(np.broadcast(x, t, z).shape, value),
        label="constant",
        params={"value": value},
        is_zero=value == 0.0,
    )


def linear_kernel(kappa: float = 0.0) -> InnerKernel:
    """w = kappa z."""
    return InnerKernel(
        fn=lambda x, t, z: kappa * np.broadcast_to(z, np.broadcast(x, t, z).shape),
        label="linear",
        params={"kappa": kappa},
        is_zero=kappa == 0.0,
    )


def separable_kernel(kappa: float = 0.0, rate_x: float = 0.0, rate_t: float = 0.0) -> InnerKernel:
    """w = kappa e^{rate_x x} e^{rate_t t} z."""
    return InnerKernel(
        fn=lambda x, t, z: kappa * np.exp(rate_x * x) * np.exp(rate_t * t) * z,
        label="separable",
        params={"kappa": kappa, "rate_x": rate_x, "rate_t": rate_t},
        is_zero=kappa == 0.0,
    )


KERNEL_KINDS: dict[str, Callable[..., InnerKernel]] = {
    "zero": zero_kernel,
    "constant": constant_kernel,
    "linear": linear_kernel,
    "linear-in-z": linear_kernel,
    "separable": separable_kernel,
}


# =========================================================================
# COEFFICIENTS
# =========================================================================


def constant_coefficient(value: float) -> Coefficient:
    if value < 0.0:
        raise InvalidInputError(f"coefficient must be nonnegative, got {value}")
    return Coefficient(fn=lambda x: np.full_like(x, value), label="constant", params={"value": value})


def linear_coefficient(intercept: float, slope: float = 0.0) -> Coefficient:
    """intercept + slope x; nonnegativity is checked on the problem interval."""
    return Coefficient(fn=lambda x: intercept + slope * x, label="linear", params={"intercept": intercept, "slope": slope})


def exp_coefficient(scale: float, rate: float = 0.0) -> Coefficient:
    if scale < 0.0:
        raise InvalidInputError(f"coefficient scale must be nonnegative, got {scale}")
    return Coefficient(fn=lambda x: scale * np.exp(rate * x), label="exp", params={"scale": scale, "rate": rate})


COEFFICIENT_KINDS: dict[str, Callable[..., Coefficient]] = {
    "constant": constant_coefficient,
    "linear": linear_coefficient,
    "exp": exp_coefficient,
}


def _lookup(family: str, registry: dict[str, Callable], kind: str) -> Callable:
    try:
        return registry[kind]
    except KeyError:
        raise CatalogError(family, kind, list(registry)) from None


def _build(family: str, registry: dict[str, Callable], kind: str, params: dict[str, float]):
    factory = _lookup(family, registry, kind)
    try:
        return factory(**params)
    except TypeError as exc:
        raise InvalidInputError(f"bad parameters for {family} kind '{kind}': {exc}") from None


def make_rhs(kind: str, **params: float) -> RightHandSide:
    return _build("f", RHS_KINDS, kind, params)


def make_kernel(kind: str, **params: float) -> InnerKernel:
    return _build("w", KERNEL_KINDS, kind, params)


def make_coefficient(kind: str, **params: float) -> Coefficient:
    return _build("coefficient", COEFFICIENT_KINDS, kind, params)
