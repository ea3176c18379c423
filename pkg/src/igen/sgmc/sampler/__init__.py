from .composing import composing_mh_hmc
from .hmc import GradientFn, PhasePoint, Transition, hamiltonian, hmc, hmc_transition, leapfrog, start_point
from .recorder import ChainRecorder
from .run_scheme import initial_trace, run_scheme
from .sghmc import sghmc

__all__ = [
    "ChainRecorder",
    "GradientFn",
    "PhasePoint",
    "Transition",
    "composing_mh_hmc",
    "hamiltonian",
    "hmc",
    "hmc_transition",
    "initial_trace",
    "leapfrog",
    "run_scheme",
    "sghmc",
    "start_point",
]
