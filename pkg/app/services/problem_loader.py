"""
Problem loader service.
"""

from pathlib import Path

from app.utils.logger_config import logger
from fractional.problem.problem import IvProblem
from schemas.problem_file import read_problem_file


def load_problem(path: Path) -> IvProblem:
    """
    Read, validate and build a problem from a `.json` or `.toml` file.

    Raises:
        OSError: The file cannot be read.
        pydantic.ValidationError: The file does not match the schema.
        FractionalError: Catalog lookup or problem validation failed.
    """
    problem = read_problem_file(path).build()
    logger.info("cli: loaded problem '%s' from %s (psi=%s, f=%s, w=%s)", problem.name, path, problem.psi.label, problem.f.label, problem.w.label)
    return problem
