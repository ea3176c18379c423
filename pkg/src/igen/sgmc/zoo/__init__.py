"""The programs of the benchmark, each in stochastic and marginalized form, with dataset generators."""

from .gmm import GmmModel, MarginalizedGmmModel, generate_gmm
from .hmm import HmmModel, MarginalizedHmmModel, generate_hmm, true_transition_matrix
from .registry import DATA_SEED, ModelEntry, ModelRegistry
from .survey import HEADS, TAILS, MarginalizedSurveyModel, SurveyModel, SurveyPrior, generate_survey
from .two_normals import COMPONENT_MEANS, COMPONENT_SD, MarginalizedTwoNormalsModel, TwoNormalsModel

__all__ = [
    "COMPONENT_MEANS",
    "COMPONENT_SD",
    "DATA_SEED",
    "HEADS",
    "TAILS",
    "GmmModel",
    "HmmModel",
    "MarginalizedGmmModel",
    "MarginalizedHmmModel",
    "MarginalizedSurveyModel",
    "MarginalizedTwoNormalsModel",
    "ModelEntry",
    "ModelRegistry",
    "SurveyModel",
    "SurveyPrior",
    "TwoNormalsModel",
    "generate_gmm",
    "generate_hmm",
    "generate_survey",
    "true_transition_matrix",
]
