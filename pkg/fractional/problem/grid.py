"""Grids uniform in psi-space and the weighted C_{1-gamma;psi} norm."""

from dataclasses import dataclass

import numpy as np

from fractional.errors import GridConstructionError, InvalidInputError
from fractional.problem.problem import IvProblem


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SolutionGrid:
    """
    Nodes uniform in psi-space with the regularized solution r = (psi(x) - psi(a))^{1-gamma} z.

    Attributes:
        nodes: x_0 = a < x_1 < ... < x_N = b.
        psi_nodes: psi(x_i) = psi(a) + i h.
        gamma: Singularity order used to move between r and z.
        regular_values: r_i at each node.
    """

    nodes: np.ndarray
    psi_nodes: np.ndarray
    gamma: float
    regular_values: np.ndarray

    def __post_init__(self):
        for name in ("nodes", "psi_nodes", "regular_values"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        if not (len(self.nodes) == len(self.psi_nodes) == len(self.regular_values)):
            raise InvalidInputError("grid arrays must have equal length")
        if len(self.nodes) > 1 and np.any(np.diff(self.nodes) <= 0.0):
            raise GridConstructionError("grid nodes must be strictly increasing")

    @property
    def size(self) -> int:
        """N, the number of panels."""
        return len(self.nodes) - 1

    @property
    def step(self) -> float:
        """psi-space step h."""
        return float(self.psi_nodes[-1] - self.psi_nodes[0]) / self.size

    @property
    def offsets(self) -> np.ndarray:
        """psi(x_i) - psi(a) = i h."""
        return self.step * np.arange(self.size + 1, dtype=float)

    @property
    def values(self) -> np.ndarray:
        """
        Raw values z_i = r_i (psi(x_i) - psi(a))^{gamma-1}.

        For gamma < 1 the node x_0 carries the signed infinite limit (0 when r_0 = 0).
        """
        return raw_from_regular(self.regular_values, self.offsets, self.gamma)

    def with_values(self, regular_values) -> "SolutionGrid":
        regular_values = np.asarray(regular_values, dtype=float)
        if regular_values.shape != self.nodes.shape:
            raise InvalidInputError(f"expected {len(self.nodes)} values, got {regular_values.shape}")
        return SolutionGrid(nodes=self.nodes, psi_nodes=self.psi_nodes, gamma=self.gamma, regular_values=regular_values)

    def with_raw_values(self, raw_values) -> "SolutionGrid":
        """Grid storing r = s^{1-gamma} z; node 0 keeps r_0 = 0 for a raw function that is finite at a."""
        raw_values = np.asarray(raw_values, dtype=float)
        with np.errstate(invalid="ignore"):
            regular = np.power(self.offsets, 1.0 - self.gamma) * raw_values
        if self.gamma < 1.0:
            regular[0] = 0.0
        return self.with_values(regular)


def raw_from_regular(regular: np.ndarray, offsets: np.ndarray, gamma: float) -> np.ndarray:
    """z = r s^{gamma-1}, with the limit convention at s = 0."""
    regular = np.asarray(regular, dtype=float)
    if gamma == 1.0:
        return regular.copy()
    raw = np.empty_like(regular)
    raw[1:] = regular[1:] * np.power(offsets[1:], gamma - 1.0)
    raw[0] = np.sign(regular[0]) * np.inf if regular[0] != 0.0 else 0.0
    return raw


def make_grid(problem: IvProblem, n: int) -> SolutionGrid:
    """
    N + 1 nodes with psi(x_i) equally spaced on [psi(a), psi(b)].

    Nodes come from the analytic inverse of psi when one is registered, by bisection otherwise.
    """
    if isinstance(n, bool) or not isinstance(n, int | np.integer) or n < 2:
        raise InvalidInputError(f"grid size N must be an integer >= 2, got {n!r}")

    psi_a = float(problem.psi(problem.a))
    psi_b = float(problem.psi(problem.b))
    if not psi_b > psi_a:
        raise GridConstructionError(f"psi '{problem.psi.label}' is not increasing on [{problem.a}, {problem.b}]")

    h = (psi_b - psi_a) / n
    psi_nodes = psi_a + h * np.arange(n + 1, dtype=float)
    psi_nodes[-1] = psi_b

    nodes = problem.psi.invert(psi_nodes, problem.a, problem.b)
    nodes[0], nodes[-1] = problem.a, problem.b
    if np.any(np.diff(nodes) <= 0.0):
        raise GridConstructionError(f"psi '{problem.psi.label}' could not be inverted to strictly increasing nodes")

    return SolutionGrid(nodes=nodes, psi_nodes=psi_nodes, gamma=problem.gamma, regular_values=np.zeros(n + 1))


def weighted_norm(grid: SolutionGrid) -> float:
    """Discrete C_{1-gamma;psi} norm: max_i |r_i|."""
    if len(grid.regular_values) == 0:
        raise InvalidInputError("weighted norm of an empty grid")
    return float(np.max(np.abs(grid.regular_values)))
