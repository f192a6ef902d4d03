import math

import numpy as np
import pytest
import pytest_cases

from fractional.analysis.bounds import (
    BoundEnvelope,
    apriori_bound,
    containment,
    dependence_bound,
    measure_mismatch,
    mismatch_profile,
    zero_forcing_peak,
)
from fractional.analysis.studies import apriori_study, dependence_study
from fractional.errors import BoundUnavailableError, DomainError, IncompatibleProblemsError, InvalidInputError
from fractional.problem.catalog import linear_kernel, linear_rhs, sine_rhs, zero_rhs
from fractional.problem.grid import make_grid
from fractional.problem.psi import log, power
from fractional.solver.solve import solve


def case_decaying_hilfer(make_problem):
    return make_problem(alpha=0.6, beta=0.4, f=linear_rhs(lam=-0.5), q3=0.5)


def case_memory_in_log_geometry(make_problem):
    return make_problem(
        alpha=0.7,
        beta=0.5,
        z_a=0.5,
        f=linear_rhs(lam=-0.6, mu=0.2, source=0.1),
        w=linear_kernel(-0.2),
        psi=log(shift=1.0),
        q3=0.6,
        q4=0.2,
    )


def case_sine_in_square_geometry(make_problem):
    return make_problem(alpha=0.8, beta=0.25, f=sine_rhs(lam=-0.4, source=0.2), psi=power(2.0), interval=(1.0, 2.0), q3=0.4)


def case_caputo_with_memory(make_problem):
    return make_problem(alpha=0.5, beta=1.0, f=linear_rhs(lam=-0.3, mu=0.3), w=linear_kernel(-0.5), q3=0.3, q4=0.5)


def case_forcing_free_riemann_liouville(make_problem):
    return make_problem(alpha=0.5, beta=0.0, f=zero_rhs(), q3=0.0)


def case_damped_source(make_problem):
    return make_problem(alpha=0.5, beta=0.8, z_a=0.3, f=linear_rhs(lam=-1.0, source=0.5), interval=(0.0, 2.0), q3=1.0)


@pytest_cases.parametrize_with_cases("problem", cases=".", prefix="case_")
def test_solution_stays_inside_the_apriori_bound(problem):
    study = apriori_study(problem, n=512, tol=1e-11)
    assert study.report.converged
    assert study.table.all_contained, study.table.violations
    if problem.gamma < 1.0:
        assert not study.table.judged[0]


def test_bound_without_growth_is_flat_at_p2(make_problem):
    problem = make_problem(alpha=0.5, beta=1.0, z_a=1.0, f=linear_rhs(source=1.0), q3=0.0)
    envelope = apriori_bound(problem, make_grid(problem, 64))
    assert envelope.prefactor == pytest.approx(1.0 + 1.0 / math.gamma(1.5), rel=1e-12)
    assert np.all(envelope.values == envelope.prefactor)
    assert envelope.kind == "a-priori"


def test_bound_with_constant_growth_matches_closed_form(make_problem):
    problem = make_problem(alpha=0.5, beta=1.0, z_a=1.0, f=zero_rhs(), q3=0.4)
    envelope = apriori_bound(problem, make_grid(problem, 512))
    x = envelope.nodes
    expected = np.exp(0.4 * x**0.5 / math.gamma(1.5))

    assert envelope.prefactor == 1.0
    assert envelope.values[0] == 1.0
    assert np.allclose(envelope.values[x >= 0.1], expected[x >= 0.1], rtol=1e-2)


def test_zero_forcing_peak_skips_the_singular_node(make_problem):
    problem = make_problem(alpha=0.5, beta=0.0, z_a=1.0, f=zero_rhs())
    grid = make_grid(problem, 16)
    assert zero_forcing_peak(problem, grid) == pytest.approx(grid.step**-0.5 / math.gamma(0.5), rel=1e-13)


def test_bounds_need_growth_coefficients(make_problem):
    problem = make_problem()
    with pytest.raises(BoundUnavailableError):
        apriori_bound(problem)
    with pytest.raises(BoundUnavailableError):
        dependence_bound(problem, problem, 1e-3)


def test_dependence_envelope_shape(make_problem):
    problem = make_problem(alpha=0.6, beta=0.4, f=linear_rhs(lam=-0.5), q3=0.5, q4=0.1)
    envelope = dependence_bound(problem, problem, 1e-3, make_grid(problem, 128))

    assert envelope.kind == "dependence"
    assert envelope.prefactor == 1e-3
    assert envelope.values[0] == 1e-3
    assert np.all(envelope.values >= 1e-3)

    assert envelope.values[-1] > 1e-3

    flat_problem = make_problem(alpha=0.6, beta=0.4, q3=0.0)
    flat = dependence_bound(flat_problem, flat_problem, 1e-3, make_grid(flat_problem, 128))
    assert np.all(flat.values == 1e-3)


def test_dependence_envelope_rejects_bad_arguments(make_problem):
    problem = make_problem(alpha=0.6, beta=0.4, q3=0.5)
    for eps in (0.0, -1e-3, float("nan")):
        with pytest.raises(DomainError):
            dependence_bound(problem, problem, eps)
    with pytest.raises(IncompatibleProblemsError):
        dependence_bound(problem, make_problem(alpha=0.6, beta=0.5, q3=0.5), 1e-3)


def test_mismatch_from_shifted_source(make_problem):
    problem = make_problem(alpha=0.7, beta=0.5, f=linear_rhs(lam=-0.3))
    perturbed = make_problem(alpha=0.7, beta=0.5, f=linear_rhs(lam=-0.3, source=0.01))
    v = solve(perturbed, n=512, tol=1e-12).solution

    eps = measure_mismatch(problem, perturbed, v)
    assert eps == pytest.approx(0.01 / (0.7 * math.gamma(problem.gamma)), rel=1e-2)
    assert eps < 0.02


def test_mismatch_from_initial_datum_singular_case(make_problem):
    problem = make_problem(alpha=0.5, beta=0.5, z_a=1.0, f=linear_rhs(lam=-0.2))
    perturbed = make_problem(alpha=0.5, beta=0.5, z_a=1.05, f=linear_rhs(lam=-0.2))
    grid = make_grid(perturbed, 64)
    v = solve(perturbed, n=64, tol=1e-12).solution

    profile = mismatch_profile(problem, perturbed, v)
    assert profile[0] == math.inf
    expected = 0.05 * grid.step ** (problem.gamma - 1.0) / math.gamma(problem.gamma)
    assert measure_mismatch(problem, perturbed, v, grid) == pytest.approx(expected, rel=1e-12)


def test_mismatch_from_initial_datum_caputo_case(make_problem):
    problem = make_problem(alpha=0.5, beta=1.0, z_a=1.0, f=linear_rhs(lam=-0.2))
    perturbed = make_problem(alpha=0.5, beta=1.0, z_a=0.95, f=linear_rhs(lam=-0.2))
    v = solve(perturbed, n=64, tol=1e-12).solution
    assert np.allclose(mismatch_profile(problem, perturbed, v), 0.05, rtol=1e-12)


def test_mismatch_checks_grid_and_compatibility(make_problem):
    problem = make_problem(alpha=0.5, beta=0.5, f=linear_rhs(lam=-0.2))
    v = solve(problem, n=32, tol=1e-12).solution
    with pytest.raises(InvalidInputError):
        measure_mismatch(problem, problem, v, make_grid(problem, 64))
    with pytest.raises(IncompatibleProblemsError):
        measure_mismatch(problem, make_problem(alpha=0.5, beta=0.5, interval=(0.0, 2.0)), v)


@pytest_cases.parametrize("beta", [0.4, 1.0])
@pytest_cases.parametrize("shift", ["lambda", "z_a"])
def test_difference_stays_inside_the_dependence_envelope(make_problem, beta, shift):
    lam, z_a = -0.5, 1.0
    problem = make_problem(alpha=0.6, beta=beta, z_a=z_a, f=linear_rhs(lam=lam), q3=0.5)
    if shift == "lambda":
        perturbed = make_problem(alpha=0.6, beta=beta, z_a=z_a, f=linear_rhs(lam=lam + 0.01), q3=0.5)
    else:
        perturbed = make_problem(alpha=0.6, beta=beta, z_a=z_a + 0.05, f=linear_rhs(lam=lam), q3=0.5)

    study = dependence_study(problem, perturbed, n=512, tol=1e-12)
    assert study.report.converged and study.perturbed_report.converged
    assert study.measured_eps > 0.0
    assert study.eps == study.measured_eps
    assert study.table.all_contained, study.table.violations


def test_dependence_study_keeps_a_supplied_eps(make_problem):
    problem = make_problem(alpha=0.6, beta=1.0, f=linear_rhs(lam=-0.5), q3=0.5)
    perturbed = make_problem(alpha=0.6, beta=1.0, z_a=1.05, f=linear_rhs(lam=-0.5), q3=0.5)
    study = dependence_study(problem, perturbed, n=64, tol=1e-12, eps=1e-4)
    assert study.eps == 1e-4
    assert study.measured_eps == pytest.approx(0.05, rel=1e-12)
    assert study.envelope.prefactor == 1e-4


def test_identical_problems_fall_back_to_a_tiny_eps(make_problem):
    problem = make_problem(alpha=0.6, beta=1.0, f=linear_rhs(lam=-0.5), q3=0.5)
    study = dependence_study(problem, problem, n=32, tol=1e-12)
    assert study.measured_eps == 0.0
    assert 0.0 < study.eps < 1e-15
    assert study.table.all_contained


def _envelope(values):
    values = np.asarray(values, dtype=float)
    return BoundEnvelope(nodes=np.arange(len(values), dtype=float), values=values, kind="a-priori", prefactor=1.0)


def test_containment_verdicts():
    table = containment(_envelope([1.0, 1.0, 1.0]), [np.inf, -0.5, 1.0000005], gamma=0.5)
    assert list(table.judged) == [False, True, True]
    assert table.all_contained

    table = containment(_envelope([1.0, 1.0, 1.0]), [0.2, 1.1, 0.3], gamma=1.0)
    assert list(table.judged) == [True, True, True]
    assert not table.all_contained
    assert list(table.violations) == [1]

    table = containment(_envelope([1.0, 1.0]), [2.0, 0.5], gamma=0.8)
    assert table.all_contained


def test_containment_shape_mismatch():
    with pytest.raises(InvalidInputError):
        containment(_envelope([1.0, 1.0]), [0.5], gamma=1.0)
