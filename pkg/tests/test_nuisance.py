import numpy as np
import pytest
from scipy import stats

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import GmmData, SurveyData
from igen.sgmc.enum import NuisanceKernel
from igen.sgmc.error import UsageError
from igen.sgmc.model import exact_posterior_nuisance
from igen.sgmc.nuisance import gibbs_sweep, mh_sweep, site_transition_matrix, sweep
from igen.sgmc.zoo import GmmModel, HmmModel, SurveyModel


def _site_kernel(kind: NuisanceKernel, log_weights: np.ndarray, current: int) -> np.ndarray:
    """Exact distribution of a site's next value under one site update."""
    if kind is NuisanceKernel.GIBBS:
        weights = np.exp(log_weights - log_weights.max())
        return weights / weights.sum()
    return site_transition_matrix(log_weights)[current]


def _propagate(model, x, distribution: dict, kind: NuisanceKernel) -> dict:
    """Push a distribution over nuisance states through one systematic sweep, site by site."""
    for site in range(model.site_count):
        updated: dict = {}
        for state, probability in distribution.items():
            current = np.array(state, dtype=np.int64)
            kernel = _site_kernel(kind, model.site_log_weights(site, x, current), int(current[site]))
            for value, step in enumerate(kernel):
                target = current.copy()
                target[site] = value
                key = tuple(int(v) for v in target)
                updated[key] = updated.get(key, 0.0) + probability * step
        distribution = updated
    return distribution


@pytest.fixture(params=["survey", "gmm", "hmm"])
def small_model(request, small_survey, small_gmm, small_hmm):
    return {
        "survey": lambda: SurveyModel(small_survey),
        "gmm": lambda: GmmModel(small_gmm),
        "hmm": lambda: HmmModel(small_hmm),
    }[request.param]()


@pytest.mark.parametrize("kind", [NuisanceKernel.GIBBS, NuisanceKernel.MH])
def test_one_sweep_leaves_the_exact_conditional_invariant(small_model, kind):
    x = Rng(21).normal(size=small_model.trace_dim)
    states, probabilities = exact_posterior_nuisance(small_model, x)
    posterior = {tuple(int(v) for v in state): p for state, p in zip(states, probabilities)}

    after = _propagate(small_model, x, posterior, kind)
    for state, probability in posterior.items():
        assert after.get(state, 0.0) == pytest.approx(probability, abs=1e-12)


def test_vectorized_site_weights_match_single_site_weights(small_gmm):
    model = GmmModel(small_gmm)
    x = Rng(22).normal(size=model.trace_dim)
    z = np.zeros(model.site_count, dtype=np.int64)
    matrix = model.all_site_log_weights(x, z)
    for site in range(model.site_count):
        np.testing.assert_allclose(matrix[site], model.site_log_weights(site, x, z))


def test_mh_site_transition_satisfies_detailed_balance():
    log_weights = np.log(np.array([0.2, 0.5, 0.3]))
    transition = site_transition_matrix(log_weights)
    target = np.exp(log_weights)
    np.testing.assert_allclose(transition.sum(axis=1), 1.0)
    flow = target[:, None] * transition
    np.testing.assert_allclose(flow, flow.T, atol=1e-15)


def test_sweeps_skip_single_valued_sites():
    model = GmmModel(GmmData(np.array([0.0, 1.0, 2.0]), n_components=1))
    z = np.zeros(3, dtype=np.int64)
    for step in (gibbs_sweep, mh_sweep):
        np.testing.assert_array_equal(step(model, np.zeros(2), z, Rng(0)), z)


def test_sweep_does_not_mutate_its_input(small_survey):
    model = SurveyModel(small_survey)
    z = np.zeros(model.site_count, dtype=np.int64)
    sweep(model, [0.0], z, Rng(23))
    assert not z.any()


def test_sweep_count_must_be_positive(small_survey):
    with pytest.raises(UsageError):
        sweep(SurveyModel(small_survey), [0.0], np.zeros(small_survey.size, dtype=np.int64), Rng(0), sweeps=0)


@pytest.mark.slow
def test_gibbs_draws_follow_the_conditional_chi_square():
    model = SurveyModel(SurveyData(np.array([True, False])))
    x = np.array([0.8])
    states, probabilities = exact_posterior_nuisance(model, x)
    index = {tuple(int(v) for v in state): i for i, state in enumerate(states)}

    rng = Rng(24)
    z = states[0]
    counts = np.zeros(len(states))
    for _ in range(20_000):
        z = gibbs_sweep(model, x, z, rng)
        counts[index[tuple(int(v) for v in z)]] += 1

    _, p_value = stats.chisquare(counts, probabilities * counts.sum())
    assert p_value > 1e-3


def _state_frequencies(step, model, x, z, rng, sweeps):
    counts = np.zeros(model.cardinality)
    for _ in range(sweeps):
        z = step(model, x, z, rng)
        counts[z[0]] += 1
    return counts / sweeps


def test_gibbs_and_mh_sweeps_share_a_stationary_distribution():
    model = GmmModel(GmmData(np.array([0.5]), n_components=2))
    x = np.array([-2.0, 0.0, 2.0, 0.0])
    start = np.zeros(1, dtype=np.int64)

    gibbs = _state_frequencies(gibbs_sweep, model, x, start, Rng(25), 10_000)
    metropolis = _state_frequencies(mh_sweep, model, x, start, Rng(26), 10_000)
    _, exact = exact_posterior_nuisance(model, x)

    assert 0.5 * np.abs(gibbs - metropolis).sum() < 0.02
    assert 0.5 * np.abs(gibbs - exact).sum() < 0.02
