import numpy as np
import pytest

from models.random_variable import RandomVariable
from services.conditional import (
    cond_expectation,
    conditional_from_coefficients,
    induced_measure,
    total_probability,
    total_probability_terms,
    tower_check,
    verify_properties,
)
from services.lp import expectation, indicator, inner_product, lp_norm
from services.random_instances import (
    random_event,
    random_partition,
    random_space,
    random_variable,
)
from services.sigma import coefficients, generate, is_measurable, make_partition
from services.space import full_event, make_event, make_space, prob
from utils.exceptions import SpaceMismatch


def test_cond_expectation_die6(die6):
    xi = cond_expectation(die6.space, die6.one_a, die6.partition)
    np.testing.assert_allclose(xi.coefficients, [0.5, 0.5, 0.5], atol=1e-15)


def test_cond_expectation_skew(skew):
    xi = cond_expectation(skew.space, skew.one_a, skew.partition)
    np.testing.assert_allclose(xi.coefficients, [1.0, 0.6], atol=1e-15)
    np.testing.assert_allclose(xi.as_variable.values, [1.0, 0.6, 0.6], atol=1e-15)


def test_cond_expectation_is_measurable_with_matching_coefficients(skew):
    xi = cond_expectation(skew.space, skew.one_a, skew.partition)
    sigma = generate(skew.partition)
    assert is_measurable(sigma, xi.as_variable)
    assert coefficients(sigma, xi.as_variable) == list(xi.coefficients)


def test_cond_expectation_idempotent(rng):
    for _ in range(100):
        space = random_space(rng)
        partition = random_partition(rng, space, int(rng.integers(1, min(16, space.n) + 1)))
        xi = cond_expectation(space, random_variable(rng, space), partition)
        again = cond_expectation(space, xi.as_variable, partition)
        np.testing.assert_allclose(again.coefficients, xi.coefficients, atol=1e-12)


def test_trivial_sigma_algebra_gives_expectation(die6):
    partition = make_partition(die6.space, [full_event(die6.space)])
    xi = cond_expectation(die6.space, die6.one_a, partition)
    assert xi.coefficients[0] == pytest.approx(prob(die6.space, die6.a))


def test_verify_properties_closed_form(die6):
    xi = cond_expectation(die6.space, die6.one_a, die6.partition)
    report = verify_properties(die6.space, die6.one_a, die6.partition, xi)
    assert report.measurable and report.integrable
    assert report.property_iii_max_violation <= 1e-12
    assert report.members_checked == 8
    assert report.passed and not report.partial


def test_verify_properties_detects_perturbation(die6):
    xi = cond_expectation(die6.space, die6.one_a, die6.partition)
    alphas = list(xi.coefficients)
    alphas[0] += 0.1
    perturbed = conditional_from_coefficients(die6.space, die6.partition, alphas)
    report = verify_properties(die6.space, die6.one_a, die6.partition, perturbed)
    assert report.measurable
    assert not report.property_iii_holds
    assert report.property_iii_max_violation == pytest.approx(1 / 30, abs=1e-12)
    assert report.worst_member == (0, 1)


def test_verify_properties_measurable_input(skew):
    x = RandomVariable(space=skew.space, values=(1.0, 0.6, 0.6))
    xi = conditional_from_coefficients(skew.space, skew.partition, [1.0, 0.6])
    assert verify_properties(skew.space, x, skew.partition, xi).passed


def test_verify_properties_flags_non_measurable_candidate(die6):
    xi = cond_expectation(die6.space, die6.one_a, die6.partition)
    forged = xi.model_copy(update={"as_variable": die6.one_a})
    report = verify_properties(die6.space, die6.one_a, die6.partition, forged)
    assert not report.measurable
    assert not report.passed


def test_verify_properties_rejects_xi_on_another_partition(die6):
    halves = [make_event(die6.space, [0, 1, 2]), make_event(die6.space, [3, 4, 5])]
    coarse = make_partition(die6.space, halves)
    xi = cond_expectation(die6.space, die6.one_a, coarse)
    with pytest.raises(SpaceMismatch):
        verify_properties(die6.space, die6.one_a, die6.partition, xi)


def test_verify_properties_beyond_enumeration_limit():
    space = make_space([1 / 24] * 24)
    partition = make_partition(space, [make_event(space, [i]) for i in range(24)])
    x = indicator(space, make_event(space, range(0, 24, 3)))
    xi = cond_expectation(space, x, partition)
    report = verify_properties(space, x, partition, xi)
    assert report.partial
    assert report.members_checked == 24
    assert report.property_iii_max_violation <= 1e-12


def test_definition_audit_on_random_instances(rng):
    for _ in range(200):
        space = random_space(rng)
        n_blocks = int(rng.integers(1, min(10, space.n) + 1))
        partition = random_partition(rng, space, n_blocks)
        x = random_variable(rng, space)
        report = verify_properties(space, x, partition, cond_expectation(space, x, partition))
        assert report.passed
        assert report.members_checked == 2**n_blocks


def test_total_probability_examples(die6, skew):
    assert total_probability(skew.space, skew.a, skew.partition) == pytest.approx(0.8, abs=1e-12)
    assert total_probability(die6.space, die6.a, die6.partition) == pytest.approx(0.5, abs=1e-12)
    omega = full_event(die6.space)
    assert total_probability(die6.space, omega, die6.partition) == pytest.approx(1.0, abs=1e-12)
    terms = total_probability_terms(skew.space, skew.a, skew.partition)
    np.testing.assert_allclose(terms, [(0.5, 1.0), (0.5, 0.6)], atol=1e-15)


def test_total_probability_over_every_die6_event(die6):
    for mask in range(2**6):
        a = make_event(die6.space, [i for i in range(6) if mask >> i & 1])
        assert total_probability(die6.space, a, die6.partition) == pytest.approx(
            prob(die6.space, a), abs=1e-12
        )


def test_total_probability_on_random_instances(rng):
    for _ in range(1000):
        space = random_space(rng)
        partition = random_partition(rng, space, int(rng.integers(1, min(16, space.n) + 1)))
        a = random_event(rng, space)
        assert total_probability(space, a, partition) == pytest.approx(prob(space, a), abs=1e-12)


def test_tower_check(die6, skew, rng):
    assert tower_check(die6.space, die6.one_a, die6.partition) <= 1e-12
    assert tower_check(skew.space, skew.one_a, skew.partition) <= 1e-12
    for _ in range(50):
        x = random_variable(rng, die6.space)
        assert tower_check(die6.space, x, die6.partition) <= 1e-12


def test_projection_contraction_and_linearity(rng):
    for _ in range(200):
        space = random_space(rng)
        partition = random_partition(rng, space, int(rng.integers(1, min(16, space.n) + 1)))
        x, y = random_variable(rng, space), random_variable(rng, space)
        xi = cond_expectation(space, x, partition)

        residual = RandomVariable.from_array(space, x.array - xi.as_variable.array)
        for block in partition.blocks:
            assert inner_product(space, residual, indicator(space, block)) == pytest.approx(0.0, abs=1e-12)

        assert lp_norm(space, xi.as_variable, 2) <= lp_norm(space, x, 2) + 1e-12

        a, b = rng.uniform(-2, 2, size=2)
        combo = RandomVariable.from_array(space, a * x.array + b * y.array)
        np.testing.assert_allclose(
            cond_expectation(space, combo, partition).array,
            a * xi.array + b * cond_expectation(space, y, partition).array,
            atol=1e-12,
        )


def test_induced_measure(skew):
    entries = induced_measure(skew.space, skew.one_a, generate(skew.partition))
    by_member = {e.member: e for e in entries}
    assert by_member[()].q == 0.0
    assert by_member[(0,)].q == pytest.approx(0.5)
    assert by_member[(1, 2)].q == pytest.approx(0.3)
    assert by_member[(0, 1, 2)].q == pytest.approx(0.8)
    assert all(e.q <= e.p + 1e-15 for e in entries)
    assert expectation(skew.space, skew.one_a) == pytest.approx(by_member[(0, 1, 2)].q)
