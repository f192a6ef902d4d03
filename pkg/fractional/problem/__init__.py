"""Problem data model: psi functions, orders, IVP definitions and grids."""

from fractional.problem.catalog import (
    Coefficient,
    InnerKernel,
    RightHandSide,
    make_coefficient,
    make_kernel,
    make_rhs,
)
from fractional.problem.grid import SolutionGrid, make_grid, raw_from_regular, weighted_norm
from fractional.problem.order import FractionalOrder
from fractional.problem.problem import GrowthCoefficients, IvProblem, LipschitzConstants
from fractional.problem.psi import PsiFunction, make_psi

__all__ = [
    "Coefficient",
    "FractionalOrder",
    "GrowthCoefficients",
    "InnerKernel",
    "IvProblem",
    "LipschitzConstants",
    "PsiFunction",
    "RightHandSide",
    "SolutionGrid",
    "make_coefficient",
    "make_grid",
    "make_kernel",
    "make_psi",
    "make_rhs",
    "raw_from_regular",
    "weighted_norm",
]
