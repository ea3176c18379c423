import numpy as np
import pytest

from igen.sgmc.distributions import Rng
from igen.sgmc.domain import GmmData, HmmData, SurveyData
from igen.sgmc.zoo import ModelRegistry, generate_gmm, generate_hmm, generate_survey


@pytest.fixture
def rng() -> Rng:
    return Rng(seed=0, stream_id=0)


@pytest.fixture(scope="session")
def registry() -> ModelRegistry:
    return ModelRegistry()


@pytest.fixture
def small_survey() -> SurveyData:
    return generate_survey(Rng(1), n=5)


@pytest.fixture
def small_gmm() -> GmmData:
    return generate_gmm(Rng(2), n=6)


@pytest.fixture
def small_hmm() -> HmmData:
    return generate_hmm(Rng(3), t=4, k=2)


@pytest.fixture
def tiny_hmm() -> HmmData:
    return HmmData(np.array([0.1, 0.9]), n_states=2, noise=0.5)
