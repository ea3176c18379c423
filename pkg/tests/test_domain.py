from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from igen.sgmc.domain import (
    Chain,
    GmmData,
    HmmData,
    RunSpec,
    SamplerConfig,
    SurveyData,
    read_lines,
    write_observations,
)
from igen.sgmc.enum import ModelKind, Scheme
from igen.sgmc.error import EvaluationError, UsageError


def test_survey_data_skips_comments_and_blank_lines():
    data = SurveyData.from_lines(["# generated", "1", "", "0", "  1  "])
    np.testing.assert_array_equal(data.answers, [True, False, True])


def test_survey_data_rejects_other_values():
    with pytest.raises(UsageError):
        SurveyData.from_lines(["1", "yes"])


def test_gmm_data_reads_an_optional_component_header():
    data = GmmData.from_lines(["K=3", "0.5", "-1.25"])
    assert data.n_components == 3
    np.testing.assert_array_equal(data.values, [0.5, -1.25])


def test_gmm_data_rejects_non_numeric_lines():
    with pytest.raises(UsageError):
        GmmData.from_lines(["0.5", "abc"])


def test_hmm_data_requires_its_header():
    with pytest.raises(UsageError):
        HmmData.from_lines(["0.5", "1.0"])
    with pytest.raises(UsageError):
        HmmData.from_lines(["K=3", "0.5"])


def test_hmm_data_header_carries_states_and_noise():
    data = HmmData.from_lines(["K=2 noise=0.25", "0.1", "0.9"])
    assert (data.n_states, data.noise, data.size) == (2, 0.25, 2)


def test_observations_are_read_only():
    data = GmmData(np.array([1.0, 2.0]))
    with pytest.raises(ValueError):
        data.values[0] = 5.0


def test_write_observations_prepends_the_comment(tmp_path: Path):
    path = write_observations(tmp_path / "data" / "survey.txt", SurveyData(np.array([True, False])), "model=survey")
    assert read_lines(path) == ["# model=survey", "1", "0"]


def test_read_lines_reports_missing_files(tmp_path: Path):
    with pytest.raises(UsageError, match="dataset not found"):
        read_lines(tmp_path / "missing.txt")


@pytest.mark.parametrize(
    "overrides",
    [
        {"n_samples": 0},
        {"steps_per_sample": 0},
        {"step_size": 0.0},
        {"friction": 1.5},
        {"grad_samples": 0},
        {"sweeps": 0},
        {"seed": -1},
    ],
)
def test_sampler_config_rejects_invalid_settings(overrides):
    with pytest.raises(UsageError):
        SamplerConfig(**overrides)


def test_sampler_config_learning_rate_is_the_squared_step():
    assert SamplerConfig(step_size=0.03).learning_rate == pytest.approx(9e-4)


def test_sampler_config_burn_in_is_a_tenth_of_the_samples():
    assert SamplerConfig(n_samples=1200).burn_in == 120


def test_sampler_config_overrides_skip_none():
    config = SamplerConfig().with_overrides(step_size=0.2, friction=None)
    assert config.step_size == 0.2
    assert config.friction == SamplerConfig().friction


def test_run_spec_rejects_hmc_marg_on_the_illustration_model():
    with pytest.raises(UsageError, match="marginalized"):
        RunSpec(ModelKind.TWONORMALS, (Scheme.HMC_MARG,))


def test_run_spec_requires_two_replicas():
    with pytest.raises(UsageError):
        RunSpec(ModelKind.SURVEY, (Scheme.SGHMC1,), replicas=1)


def test_run_spec_default_schemes():
    assert RunSpec.default_schemes(ModelKind.SURVEY) == Scheme.SCHEMES
    assert Scheme.HMC_MARG not in RunSpec.default_schemes(ModelKind.TWONORMALS)


def test_run_spec_output_paths(tmp_path: Path):
    spec = RunSpec(ModelKind.GMM, (Scheme.SGHMC1,), out_path=tmp_path)
    assert spec.chain_path(Scheme.SGHMC1, 3) == tmp_path / "gmm_sghmc1_chain3.csv"
    assert spec.report_path == tmp_path / "gmm_report.csv"
    assert spec.parameters_path == tmp_path / "gmm_parameters.csv"
    assert spec.table_path == tmp_path / "gmm_table.txt"


def _chain(n: int, config: SamplerConfig) -> Chain:
    draws = np.arange(n, dtype=np.float64).reshape(n, 1)
    return Chain(draws, draws * 2.0, ("theta",), "sghmc1", config, accepted_count=n // 2)


def test_chain_length_must_match_the_config():
    with pytest.raises(EvaluationError):
        _chain(5, SamplerConfig(n_samples=6))


def test_chain_rejects_non_finite_draws():
    draws = np.array([[0.0], [np.nan]])
    with pytest.raises(EvaluationError):
        Chain(draws, draws, ("theta",), "sghmc1", SamplerConfig(n_samples=2))


def test_chain_kept_discards_burn_in():
    chain = _chain(20, SamplerConfig(n_samples=20))
    assert chain.kept().shape == (18, 1)
    assert chain.kept()[0, 0] == 4.0
    assert chain.acceptance_rate == 0.5


def test_chain_csv_has_one_column_per_parameter(tmp_path: Path):
    path = _chain(4, SamplerConfig(n_samples=4)).write_csv(tmp_path / "chain.csv")
    frame = pd.read_csv(path)
    assert list(frame.columns) == ["theta"]
    np.testing.assert_array_equal(frame["theta"], [0.0, 2.0, 4.0, 6.0])
