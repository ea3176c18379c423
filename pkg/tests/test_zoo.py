import numpy as np
import pytest

from igen.sgmc.distributions import Rng, empirical_frequencies
from igen.sgmc.domain import GmmData, HmmData, SurveyData, TwoNormalsData, write_observations
from igen.sgmc.enum import ModelKind
from igen.sgmc.error import EvaluationError, UsageError
from igen.sgmc.model import LIKELIHOOD, log_joint, marginal_gradient, marginal_log_density
from igen.sgmc.zoo import (
    GmmModel,
    HmmModel,
    MarginalizedGmmModel,
    MarginalizedHmmModel,
    MarginalizedSurveyModel,
    SurveyModel,
    SurveyPrior,
    generate_gmm,
    generate_hmm,
    generate_survey,
    true_transition_matrix,
)


def test_survey_generator_default_size():
    assert generate_survey(Rng(0)).size == 60


def test_survey_generator_rejects_empty_surveys():
    with pytest.raises(UsageError):
        generate_survey(Rng(0), n=0)


def test_survey_generator_rejects_invalid_rates():
    with pytest.raises(UsageError):
        generate_survey(Rng(0), theta=1.5)


def test_survey_yes_rate_mixes_truth_and_coin():
    answers = generate_survey(Rng(1), theta=0.67, n=100_000).answers
    assert answers.mean() == pytest.approx(0.5 * 0.67 + 0.25, abs=0.01)


def test_gmm_generator_default_size():
    data = generate_gmm(Rng(0))
    assert data.size == 100
    assert data.n_components == 2


def test_gmm_generator_mean_is_the_weighted_component_mean():
    assert generate_gmm(Rng(2), n=100_000).values.mean() == pytest.approx(0.0, abs=0.05)


def test_gmm_generator_respects_weights():
    values = generate_gmm(Rng(3), n=1000, weights=(1.0, 0.0)).values
    assert values.mean() == pytest.approx(-2.0, abs=0.15)


def test_gmm_generator_rejects_mismatched_components():
    with pytest.raises(UsageError):
        generate_gmm(Rng(0), means=(0.0, 1.0), sds=(1.0,))


def test_hmm_generator_default_size():
    data = generate_hmm(Rng(0))
    assert data.size == 16
    assert data.n_states == 3


def test_hmm_with_one_state_emits_iid_noise():
    values = generate_hmm(Rng(4), t=20_000, k=1, noise=0.5).values
    assert values.mean() == pytest.approx(0.0, abs=0.02)
    assert values.std() == pytest.approx(0.5, abs=0.02)


def test_hmm_emissions_without_noise_reveal_the_states():
    values = generate_hmm(Rng(5), t=200, noise=1e-9).values
    np.testing.assert_allclose(values, np.round(values), atol=1e-6)
    assert set(np.round(values).astype(int)) <= {0, 1, 2}


def test_hmm_states_follow_the_stationary_distribution():
    states = np.round(generate_hmm(Rng(6), t=30_000, noise=1e-6).values).astype(np.int64)
    eigenvalues, eigenvectors = np.linalg.eig(true_transition_matrix().T)
    stationary = np.real(eigenvectors[:, np.argmax(np.real(eigenvalues))])
    stationary /= stationary.sum()
    np.testing.assert_allclose(empirical_frequencies(states, 3), stationary, atol=0.03)


def test_true_transition_matrix_is_row_stochastic():
    matrix = true_transition_matrix(4, 0.7)
    np.testing.assert_allclose(matrix.sum(axis=1), 1.0)
    np.testing.assert_allclose(np.diag(matrix), 0.7)
    np.testing.assert_array_equal(true_transition_matrix(1), [[1.0]])


def test_hmm_constrained_transitions_sum_to_one(small_hmm):
    model = MarginalizedHmmModel(small_hmm)
    matrix = model.constrain(Rng(7).normal(size=model.trace_dim)).reshape(2, 2)
    np.testing.assert_allclose(matrix.sum(axis=1), 1.0, atol=1e-12)


def test_gmm_constrain_exponentiates_the_scales():
    model = GmmModel(GmmData(np.array([0.0])))
    np.testing.assert_allclose(model.constrain(np.array([1.0, 0.0, -1.0, np.log(2.0)])), [1.0, 1.0, -1.0, 2.0])
    assert model.parameter_names == ("mu_0", "sigma_0", "mu_1", "sigma_1")


def test_gmm_marginal_is_invariant_under_label_swap(small_gmm):
    model = MarginalizedGmmModel(small_gmm)
    x = np.array([-1.0, 0.2, 1.5, -0.3])
    swapped = np.array([1.5, -0.3, -1.0, 0.2])
    assert marginal_log_density(model, x) == pytest.approx(marginal_log_density(model, swapped), abs=1e-12)


def test_survey_beta_prior_is_uniform_on_theta():
    model = MarginalizedSurveyModel(SurveyData(), prior=SurveyPrior.BETA)
    # Beta(1, 1) on theta pulls back to the logistic density on the logit.
    for x in (-2.0, 0.0, 1.5):
        theta = 1.0 / (1.0 + np.exp(-x))
        assert marginal_log_density(model, [x]) == pytest.approx(np.log(theta * (1.0 - theta)))


def test_survey_likelihood_counts_reflect_the_enumeration_cost(small_survey):
    n = small_survey.size
    stochastic, marginalized = SurveyModel(small_survey), MarginalizedSurveyModel(small_survey)
    log_joint(stochastic, [0.1], np.zeros(n, dtype=np.int64))
    marginal_log_density(marginalized, [0.1])
    assert stochastic.counter[LIKELIHOOD] == n
    assert marginalized.counter[LIKELIHOOD] == 2 * n


def test_gmm_likelihood_counts_grow_with_components(small_gmm):
    stochastic, marginalized = GmmModel(small_gmm), MarginalizedGmmModel(small_gmm)
    log_joint(stochastic, np.zeros(4), np.zeros(small_gmm.size, dtype=np.int64))
    marginal_log_density(marginalized, np.zeros(4))
    assert marginalized.counter[LIKELIHOOD] == small_gmm.n_components * stochastic.counter[LIKELIHOOD]


def test_hmm_forward_pass_cost_grows_quadratically_in_states():
    values = np.linspace(0.0, 1.0, 8)
    costs = {}
    for k in (2, 3):
        model = MarginalizedHmmModel(HmmData(values, k, 0.5))
        marginal_log_density(model, np.zeros(k * k))
        costs[k] = model.counter[LIKELIHOOD]

    stochastic = HmmModel(HmmData(values, 3, 0.5))
    log_joint(stochastic, np.zeros(9), np.zeros(8, dtype=np.int64))

    assert costs[2] == 8 * 2 + 7 * 4
    assert costs[3] == 8 * 3 + 7 * 9
    assert costs[3] >= 3 * stochastic.counter[LIKELIHOOD]


def test_registry_is_a_singleton(registry):
    assert registry is type(registry)()


def test_registry_rejects_unknown_models(registry):
    with pytest.raises(UsageError, match="unknown model"):
        registry.entry("lda")


def test_registry_generates_the_default_datasets(registry):
    assert registry.generate("survey").size == 60
    assert registry.generate("gmm").size == 100
    assert registry.generate("hmm").size == 16
    assert isinstance(registry.generate("twonormals"), TwoNormalsData)


def test_registry_generation_is_deterministic(registry):
    np.testing.assert_array_equal(registry.generate("gmm", seed=3).values, registry.generate("gmm", seed=3).values)


def test_registry_converts_generator_overrides(registry):
    params = registry.generator_params("hmm", {"t": "5", "noise": "0.25"})
    assert params["t"] == 5 and params["noise"] == 0.25


def test_registry_rejects_unknown_generator_overrides(registry):
    with pytest.raises(UsageError):
        registry.generator_params("survey", {"k": "3"})


def test_registry_parses_what_it_writes(registry):
    data = registry.generate("hmm")
    parsed = registry.parse("hmm", data.to_lines())
    np.testing.assert_array_equal(parsed.values, data.values)
    assert parsed.noise == data.noise


def test_small_instance_uses_the_check_size(registry):
    data = registry.generate("gmm")
    assert registry.small_instance("gmm", data).size == ModelKind.GMM.check_size


def test_registry_canonicalizes_gmm_draws_by_component_mean(registry):
    draws = np.array([[2.0, 1.0, -2.0, 3.0]])
    np.testing.assert_array_equal(registry.canonicalize("gmm", draws), [[-2.0, 3.0, 2.0, 1.0]])
    np.testing.assert_array_equal(registry.canonicalize("survey", draws), draws)


def test_registry_loads_the_shipped_dataset_when_no_path_is_given(registry, tmp_path, monkeypatch):
    monkeypatch.setattr("igen.sgmc.zoo.registry.SHIPPED_DATA", tmp_path)
    shipped = registry.generate("survey", seed=5, n=7)
    write_observations(tmp_path / "survey.txt", shipped, "model=survey seed=5 n=7")

    loaded = registry.load("survey")
    np.testing.assert_array_equal(loaded.answers, shipped.answers)
    assert registry.default_source("survey") == str(tmp_path / "survey.txt")


def test_registry_simulates_when_nothing_is_shipped(registry, tmp_path, monkeypatch):
    monkeypatch.setattr("igen.sgmc.zoo.registry.SHIPPED_DATA", tmp_path)
    np.testing.assert_array_equal(registry.load("gmm").values, registry.generate("gmm").values)
    assert registry.default_source("gmm") == "generated with seed 0"


@pytest.mark.parametrize("log_sigma", [-800.0, 800.0])
def test_gmm_scale_outside_the_floating_range_is_an_evaluation_error(small_gmm, log_sigma):
    x = np.array([0.0, log_sigma, 0.0, 0.0])
    with pytest.raises(EvaluationError):
        marginal_gradient(MarginalizedGmmModel(small_gmm), x)

    model = GmmModel(small_gmm)
    with pytest.raises(EvaluationError):
        model.all_site_log_weights(x, np.zeros(model.site_count, dtype=np.int64))
    with pytest.raises(EvaluationError):
        model.site_log_weights(0, x, np.zeros(model.site_count, dtype=np.int64))
