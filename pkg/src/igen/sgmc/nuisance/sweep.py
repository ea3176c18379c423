from __future__ import annotations

import numpy as np

from igen.sgmc.distributions import Rng
from igen.sgmc.enum import NuisanceKernel
from igen.sgmc.error import UsageError

from .gibbs import gibbs_sweep
from .kernel import SitewiseKernel
from .metropolis import mh_sweep

_SWEEPS = {
    NuisanceKernel.GIBBS: gibbs_sweep,
    NuisanceKernel.MH: mh_sweep,
}


def sweep(
    kernel: SitewiseKernel,
    x: np.ndarray,
    z: np.ndarray,
    rng: Rng,
    kind: NuisanceKernel = NuisanceKernel.GIBBS,
    sweeps: int = 1,
) -> np.ndarray:
    """Apply ``sweeps`` full systematic sweeps of the chosen kernel."""
    if sweeps < 1:
        raise UsageError("sweeps must be >= 1", context={"sweeps": sweeps})

    step = _SWEEPS[kind]
    state = z
    for _ in range(sweeps):
        state = step(kernel, x, state, rng)
    return state
