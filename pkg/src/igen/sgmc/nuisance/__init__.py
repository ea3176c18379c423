from .gibbs import gibbs_sweep
from .kernel import SitewiseKernel
from .metropolis import mh_sweep, site_transition_matrix
from .sweep import sweep

__all__ = [
    "SitewiseKernel",
    "gibbs_sweep",
    "mh_sweep",
    "site_transition_matrix",
    "sweep",
]
