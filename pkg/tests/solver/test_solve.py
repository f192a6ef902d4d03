import dataclasses
import math

import numpy as np
import pytest
import pytest_cases

from fractional.analysis.studies import refinement_study
from fractional.errors import InvalidInputError
from fractional.operators.special import mittag_leffler
from fractional.problem.catalog import linear_rhs, zero_rhs
from fractional.solver.report import SolveReport, SolveStatus
from fractional.solver.solve import residual_check, solve


@pytest_cases.parametrize("beta", [0.0, 0.5, 1.0])
def test_zero_forcing_converges_in_one_sweep(make_problem, beta):
    problem = make_problem(alpha=0.6, beta=beta, z_a=1.5, f=zero_rhs())
    report = solve(problem, n=32, tol=1e-12)

    assert report.converged
    assert report.status is SolveStatus.CONVERGED
    assert report.iterations == 1
    assert report.final_delta == 0.0
    assert np.allclose(report.solution.regular_values, 1.5 / math.gamma(problem.gamma))
    assert report.certificate is None


@pytest_cases.parametrize("tol", [0.0, -1e-6, float("nan"), float("inf")])
def test_invalid_tolerance(make_problem, tol):
    with pytest.raises(InvalidInputError):
        solve(make_problem(), n=8, tol=tol)


@pytest_cases.parametrize("max_iter", [0, -3, 2.5, True])
def test_invalid_iteration_cap(make_problem, max_iter):
    with pytest.raises(InvalidInputError):
        solve(make_problem(), n=8, max_iter=max_iter)


def test_exhausting_the_cap_is_reported_not_raised(make_problem):
    problem = make_problem(f=linear_rhs(lam=0.5))
    report = solve(problem, n=64, tol=1e-14, max_iter=3)

    assert report.status is SolveStatus.MAX_ITER
    assert not report.converged
    assert report.iterations == 3
    assert len(report.delta_history) == 3
    assert report.final_delta == report.delta_history[-1] > 1e-14
    with pytest.raises(InvalidInputError):
        residual_check(report, problem)


def test_linear_problem_converges_quickly(make_problem):
    report = solve(make_problem(f=linear_rhs(lam=0.5)), n=256, tol=1e-10)
    assert report.converged
    assert report.iterations < 100
    assert report.final_delta <= 1e-10


def test_solution_is_deterministic(make_problem):
    problem = make_problem(alpha=0.7, beta=0.3, f=linear_rhs(lam=-0.4, source=0.2))
    first = solve(problem, n=128, tol=1e-11)
    second = solve(problem, n=128, tol=1e-11)
    assert np.array_equal(first.solution.regular_values, second.solution.regular_values)
    assert first.delta_history == second.delta_history


def test_observed_rate_from_history():
    report = SolveReport(
        solution=None,
        iterations=5,
        final_delta=1e-4,
        status=SolveStatus.CONVERGED,
        tolerance=1e-3,
        delta_history=(1.0, 0.1, 0.01, 1e-3, 1e-4),
    )
    assert report.observed_rate() == pytest.approx(0.1, rel=1e-10)
    assert report.observed_rate(window=2) == pytest.approx(0.1, rel=1e-10)

    single = SolveReport(solution=None, iterations=1, final_delta=0.0, status=SolveStatus.CONVERGED, tolerance=1e-3, delta_history=(0.0,))
    assert single.observed_rate() is None
    assert single.a_posteriori_bound is None


def test_contraction_matches_certificate(make_problem):
    problem = make_problem(alpha=0.5, beta=1.0, f=linear_rhs(lam=0.5), q1=0.5, q2=0.0)
    report = solve(problem, n=256, tol=1e-10)

    assert report.converged
    assert report.certified
    assert report.certificate.q < 1.0
    assert report.observed_rate(window=5) <= report.certificate.q + 0.1
    assert report.a_posteriori_bound == pytest.approx(report.final_delta * report.certificate.q / (1.0 - report.certificate.q))


@pytest_cases.parametrize("alpha, beta", [(0.5, 1.0), (0.6, 0.4)])
def test_failed_certificate_does_not_stop_the_solver(make_problem, alpha, beta):
    base = make_problem(alpha=alpha, beta=beta)
    q1 = 1.2 * math.gamma(alpha + base.gamma) / (math.gamma(base.gamma) * base.span**alpha)
    problem = make_problem(alpha=alpha, beta=beta, f=linear_rhs(lam=0.1), q1=q1)

    report = solve(problem, n=128, tol=1e-10)
    assert report.certificate.q == pytest.approx(1.2)
    assert not report.certificate.unique
    assert not report.certified
    assert report.converged
    assert report.a_posteriori_bound is None


def test_residual_on_request(make_problem):
    problem = make_problem(alpha=0.5, beta=1.0, f=linear_rhs(lam=0.5))
    report = solve(problem, n=256, tol=1e-11, with_residual=True)
    assert report.residual is not None
    assert report.residual < 0.05
    assert residual_check(report, problem) == report.residual


def test_refinement_halves_the_residual(make_problem):
    problem = make_problem(alpha=0.5, beta=1.0, f=linear_rhs(lam=0.5))
    study = refinement_study(problem, n=256, tol=1e-11)

    assert study.converged
    assert [level.n for level in study.levels] == [256, 512]
    assert study.residual_ratio >= 1.6
    assert study.round_trip_ratio >= 1.6


def _oracle_error(problem, n):
    report = solve(problem, n=n, tol=1e-12)
    assert report.converged
    grid = report.solution
    exact = problem.z_a * mittag_leffler(problem.alpha, problem.gamma, grid.offsets**problem.alpha * problem.f.params["lambda"])
    return float(np.max(np.abs(grid.regular_values - exact)))


@pytest.mark.slow
@pytest_cases.parametrize("alpha", [0.5, 0.7])
@pytest_cases.parametrize("beta", [0.0, 0.5, 1.0])
@pytest_cases.parametrize("lam", [0.5, -0.5])
def test_linear_problem_matches_mittag_leffler(make_problem, alpha, beta, lam):
    problem = make_problem(alpha=alpha, beta=beta, z_a=1.0, f=linear_rhs(lam=lam))
    sizes = [256, 512, 1024, 2048]
    errors = [_oracle_error(problem, n) for n in sizes]

    assert errors[-1] <= 1e-3
    assert all(fine < coarse for coarse, fine in zip(errors, errors[1:], strict=False))
    order = np.polyfit(np.log([1.0 / n for n in sizes]), np.log(errors), 1)[0]
    assert order >= 0.9


def test_report_fields():
    names = [f.name for f in dataclasses.fields(SolveReport)]
    assert names == ["solution", "iterations", "final_delta", "status", "tolerance", "delta_history", "certificate", "residual"]
