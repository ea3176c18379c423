from __future__ import annotations

import numpy as np

from igen.sgmc.distributions import Rng, categorical_sample, categorical_sample_rows

from .kernel import SitewiseKernel


def gibbs_sweep(kernel: SitewiseKernel, x: np.ndarray, z: np.ndarray, rng: Rng) -> np.ndarray:
    """Redraw sites ``0..n-1`` in order from their exact full conditionals; returns a new state."""
    state = np.array(z, dtype=np.int64, copy=True)

    if kernel.independent_sites and state.size:
        return categorical_sample_rows(kernel.all_site_log_weights(x, state), rng)

    for site in range(kernel.site_count):
        if kernel.site_cardinality(site) == 1:
            continue
        state[site] = categorical_sample(kernel.site_log_weights(site, x, state), rng)

    return state
