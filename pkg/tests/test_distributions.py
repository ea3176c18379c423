import math

import numpy as np
import pytest
from scipy import integrate, stats

from igen.sgmc.distributions import (
    LOG_SQRT_2PI,
    Rng,
    bernoulli_logpmf,
    bernoulli_sample,
    beta_logpdf,
    categorical_sample,
    categorical_sample_rows,
    empirical_frequencies,
    normal_logpdf,
    normal_sample,
    uniform_sample,
)
from igen.sgmc.error import EvaluationError, UsageError


def test_standard_normal_density_at_zero():
    assert normal_logpdf(0.0, 1.0, 0.0) == pytest.approx(-LOG_SQRT_2PI)


def test_normal_density_broadcasts():
    values = normal_logpdf(np.array([0.0, 1.0]), 2.0, 1.0)
    expected = [-math.log(2.0) - LOG_SQRT_2PI - 0.125, -math.log(2.0) - LOG_SQRT_2PI]
    np.testing.assert_allclose(values, expected)


@pytest.mark.parametrize("sigma", [0.0, -1.0])
def test_normal_density_rejects_non_positive_scale(sigma):
    with pytest.raises(UsageError):
        normal_logpdf(0.0, sigma, 0.0)


def test_bernoulli_density():
    assert bernoulli_logpmf(0.3, True) == pytest.approx(math.log(0.3))
    assert bernoulli_logpmf(0.3, False) == pytest.approx(math.log(0.7))


def test_bernoulli_impossible_outcome_is_negative_infinity():
    assert bernoulli_logpmf(1.0, False) == -np.inf


def test_bernoulli_rejects_probability_outside_unit_interval():
    with pytest.raises(UsageError):
        bernoulli_logpmf(1.5, True)


def test_beta_density():
    assert beta_logpdf(1.0, 1.0, 0.3) == pytest.approx(0.0)
    assert beta_logpdf(2.0, 2.0, 0.5) == pytest.approx(math.log(1.5))


def test_rng_replays_identical_streams():
    np.testing.assert_array_equal(Rng(7, 3).normal(size=10), Rng(7, 3).normal(size=10))


def test_rng_streams_are_distinct():
    assert not np.array_equal(Rng(7, 0).normal(size=10), Rng(7, 1).normal(size=10))


def test_rng_spawn_shares_seed():
    np.testing.assert_array_equal(Rng(5).spawn(2).random(4), Rng(5, 2).random(4))


def test_rng_rejects_negative_seed():
    with pytest.raises(UsageError):
        Rng(-1)


def test_categorical_sample_frequencies(rng):
    weights = np.array([0.2, 0.5, 0.3])
    draws = [categorical_sample(np.log(weights), rng) for _ in range(20_000)]
    np.testing.assert_allclose(empirical_frequencies(np.array(draws), 3), weights, atol=0.02)


def test_categorical_sample_skips_impossible_entries(rng):
    draws = {categorical_sample(np.array([-np.inf, 0.0, -np.inf]), rng) for _ in range(100)}
    assert draws == {1}


def test_categorical_sample_with_all_impossible_entries_raises(rng):
    with pytest.raises(EvaluationError):
        categorical_sample(np.array([-np.inf, -np.inf]), rng)


def test_categorical_sample_rows(rng):
    log_weights = np.log(np.array([[1.0, 0.0], [0.0, 1.0], [0.5, 0.5]]) + 1e-300)
    draws = categorical_sample_rows(log_weights, rng)
    assert draws.shape == (3,)
    assert draws[0] == 0 and draws[1] == 1


def test_samplers_return_scalars_without_size(rng):
    assert isinstance(normal_sample(0.0, 1.0, rng), float)
    assert isinstance(bernoulli_sample(0.5, rng), bool)
    assert 2.0 <= uniform_sample(2.0, 3.0, rng) < 3.0


def test_uniform_sample_rejects_empty_interval(rng):
    with pytest.raises(UsageError):
        uniform_sample(1.0, 1.0, rng)


def test_normal_density_reference_values():
    assert normal_logpdf(0.0, 1.0, 0.0) == pytest.approx(-0.9189385332046727, abs=1e-12)
    assert normal_logpdf(1.0, 0.5, 0.0) == pytest.approx(-2.2257913526447273, abs=1e-12)


@pytest.mark.parametrize("mu, sigma", [(0.0, 1.0), (-3.0, 0.2), (12.0, 7.5)])
def test_normal_density_drops_by_one_half_one_sigma_out(mu, sigma):
    assert normal_logpdf(mu, sigma, mu + sigma) - normal_logpdf(mu, sigma, mu) == pytest.approx(-0.5, abs=1e-12)


@pytest.mark.parametrize("mu, sigma", [(0.0, 1.0), (1.0, 0.5), (-4.0, 3.0)])
def test_normal_density_integrates_to_one(mu, sigma):
    total, _ = integrate.quad(lambda v: math.exp(normal_logpdf(mu, sigma, v)), -np.inf, np.inf)
    assert total == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 3.0), (5.0, 2.0)])
def test_beta_density_integrates_to_one(a, b):
    total, _ = integrate.quad(lambda v: math.exp(beta_logpdf(a, b, v)), 0.0, 1.0)
    assert total == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("p", [0.0, 0.3, 0.67, 1.0])
def test_bernoulli_mass_sums_to_one(p):
    assert math.exp(bernoulli_logpmf(p, True)) + math.exp(bernoulli_logpmf(p, False)) == pytest.approx(1.0, abs=1e-15)


def test_normal_sample_moments():
    n = 100_000
    draws = normal_sample(2.0, 3.0, Rng(11), size=n)
    assert abs(draws.mean() - 2.0) < 4 * 3.0 / math.sqrt(n)
    assert draws.var() == pytest.approx(9.0, rel=0.1)


def test_standard_normal_sample_mean():
    assert abs(normal_sample(0.0, 1.0, Rng(12), size=100_000).mean()) < 0.013


def test_normal_sample_rejects_a_zero_scale(rng):
    with pytest.raises(UsageError):
        normal_sample(5.0, 0.0, rng)


def test_normal_sample_passes_a_kolmogorov_smirnov_test():
    draws = normal_sample(0.0, 1.0, Rng(13), size=10_000)
    assert stats.kstest(draws, "norm").pvalue > 0.01


def test_normal_sample_histogram_matches_the_density():
    n = 100_000
    draws = normal_sample(1.0, 0.5, Rng(14), size=n)
    interior = np.linspace(-0.5, 2.5, 25)
    edges = np.concatenate([[-np.inf], interior, [np.inf]])
    observed = np.bincount(np.searchsorted(interior, draws), minlength=edges.size - 1)

    mass = np.array(
        [integrate.quad(lambda v: math.exp(normal_logpdf(1.0, 0.5, v)), lo, hi)[0] for lo, hi in zip(edges, edges[1:])]
    )
    assert stats.chisquare(observed, mass / mass.sum() * n).pvalue > 0.01


def test_bernoulli_sample_matches_the_mass_function():
    n = 100_000
    draws = bernoulli_sample(0.67, Rng(15), size=n)
    observed = [np.sum(draws), n - np.sum(draws)]
    expected = [n * math.exp(bernoulli_logpmf(0.67, True)), n * math.exp(bernoulli_logpmf(0.67, False))]
    assert stats.chisquare(observed, expected).pvalue > 0.01


def test_categorical_sample_with_equal_weights_is_fair():
    draws = categorical_sample_rows(np.full((10_000, 2), -3.0), Rng(16))
    assert np.mean(draws == 0) == pytest.approx(0.5, abs=0.02)


def test_categorical_sample_reproduces_the_two_normals_posterior():
    log_weights = np.tile(np.log([0.982, 0.018]), (100_000, 1))
    draws = categorical_sample_rows(log_weights, Rng(17))
    assert np.mean(draws == 0) == pytest.approx(0.982, abs=0.01)


def test_categorical_sample_always_picks_the_only_possible_index(rng):
    assert {categorical_sample(np.array([0.0, -np.inf]), rng) for _ in range(100)} == {0}


def test_identical_generator_state_gives_identical_draws():
    first, second = Rng(21, 4), Rng(21, 4)
    assert normal_sample(0.0, 1.0, first) == normal_sample(0.0, 1.0, second)
    assert categorical_sample(np.zeros(5), first) == categorical_sample(np.zeros(5), second)
