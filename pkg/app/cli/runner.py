"""
Entry point of the `psi-hilfer` command.

Exit codes: 0 success, 2 configuration or validation failure, 3 non-convergence,
4 containment violation, 1 unexpected error.
"""

import sys
from collections.abc import Callable

import sentry_sdk
from pydantic import BaseModel, ValidationError

from app.cli.parser import parse_config
from app.services.problem_loader import load_problem
from app.services.result_writer import (
    certificate_artifact,
    containment_artifact,
    make_header,
    render,
    solution_artifact,
    verify_artifact,
    write_output,
)
from app.utils.logger_config import logger
from config import bootstrap
from fractional.analysis.certificate import contraction_certificate
from fractional.analysis.studies import apriori_study, dependence_study, refinement_study
from fractional.errors import FractionalError
from fractional.problem.problem import IvProblem
from fractional.solver.solve import solve
from schemas.run_config import Command, RunConfig

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_CONFIG = 2
EXIT_NOT_CONVERGED = 3
EXIT_VIOLATION = 4


def _run_solve(config: RunConfig, problem: IvProblem) -> tuple[BaseModel, int]:
    report = solve(problem, n=config.n, tol=config.tol, max_iter=config.max_iter)
    artifact = solution_artifact(make_header("solve", problem, config.n, config.tol), report)
    return artifact, EXIT_OK if report.converged else EXIT_NOT_CONVERGED


def _run_certify(config: RunConfig, problem: IvProblem) -> tuple[BaseModel, int]:
    certificate = contraction_certificate(problem, n=config.n)
    return certificate_artifact(make_header("certify", problem, config.n, config.tol), certificate), EXIT_OK


def _run_bound(config: RunConfig, problem: IvProblem) -> tuple[BaseModel, int]:
    study = apriori_study(problem, n=config.n, tol=config.tol, max_iter=config.max_iter)
    artifact = containment_artifact(make_header("bound", problem, config.n, config.tol), study.envelope, study.table)
    if not study.report.converged:
        return artifact, EXIT_NOT_CONVERGED
    return artifact, EXIT_OK if study.table.all_contained else EXIT_VIOLATION


def _run_depend(config: RunConfig, problem: IvProblem) -> tuple[BaseModel, int]:
    perturbed = load_problem(config.perturbed_path)
    study = dependence_study(problem, perturbed, n=config.n, tol=config.tol, max_iter=config.max_iter, eps=config.eps)
    artifact = containment_artifact(make_header("depend", problem, config.n, config.tol), study.envelope, study.table, study.measured_eps)
    if not (study.report.converged and study.perturbed_report.converged):
        return artifact, EXIT_NOT_CONVERGED
    return artifact, EXIT_OK if study.table.all_contained else EXIT_VIOLATION


def _run_verify(config: RunConfig, problem: IvProblem) -> tuple[BaseModel, int]:
    study = refinement_study(problem, n=config.n, tol=config.tol, max_iter=config.max_iter)
    artifact = verify_artifact(make_header("verify", problem, config.n, config.tol), study)
    return artifact, EXIT_OK if study.converged else EXIT_NOT_CONVERGED


HANDLERS: dict[Command, Callable[[RunConfig, IvProblem], tuple[BaseModel, int]]] = {
    Command.SOLVE: _run_solve,
    Command.CERTIFY: _run_certify,
    Command.BOUND: _run_bound,
    Command.DEPEND: _run_depend,
    Command.VERIFY: _run_verify,
}


def run(config: RunConfig) -> int:
    """Execute one configured run, emit its artifact and return the exit status."""
    try:
        problem = load_problem(config.problem_path)
        artifact, status = HANDLERS[config.command](config, problem)
        write_output(render(artifact, config.format), config.output)
    except (ValidationError, FractionalError, OSError) as e:
        logger.error("cli: %s failed: %s", config.command, e)
        return EXIT_CONFIG
    except Exception as e:
        logger.error("cli: unexpected failure in %s: %s", config.command, e, exc_info=True)
        sentry_sdk.capture_exception(e)
        return EXIT_UNEXPECTED

    if status == EXIT_NOT_CONVERGED:
        logger.error("cli: %s did not converge within max_iter=%d", config.command, config.max_iter)
    elif status == EXIT_VIOLATION:
        logger.error("cli: %s found a containment violation", config.command)
    return status


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except ValidationError as e:
        bootstrap("cli")
        logger.error("cli: invalid arguments: %s", e)
        return EXIT_CONFIG

    bootstrap("cli", verbose=config.verbose)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
