from __future__ import annotations

import numpy as np

from igen.sgmc.distributions import Rng

from .kernel import SitewiseKernel


def _propose(current: np.ndarray | int, cardinality: int, rng: Rng, size: int | None = None):
    """Uniform proposal over the support, excluding the current value."""
    offset = rng.integers(0, cardinality - 1, size)
    return offset + (offset >= current)


def mh_sweep(kernel: SitewiseKernel, x: np.ndarray, z: np.ndarray, rng: Rng) -> np.ndarray:
    """Sitewise Metropolis-Hastings in ascending site order; returns a new state.

    Sites with a single-valued support are skipped without consuming randomness.
    """
    state = np.array(z, dtype=np.int64, copy=True)

    if kernel.independent_sites and state.size:
        weights = kernel.all_site_log_weights(x, state)
        cardinality = weights.shape[1]
        if cardinality == 1:
            return state
        rows = np.arange(state.size)
        proposal = _propose(state, cardinality, rng, state.size)
        log_ratio = weights[rows, proposal] - weights[rows, state]
        accept = np.log(rng.random(state.size)) < log_ratio
        return np.where(accept, proposal, state)

    for site in range(kernel.site_count):
        cardinality = kernel.site_cardinality(site)
        if cardinality == 1:
            continue
        weights = kernel.site_log_weights(site, x, state)
        current = int(state[site])
        proposal = int(_propose(current, cardinality, rng))
        if np.log(rng.random()) < weights[proposal] - weights[current]:
            state[site] = proposal

    return state


def site_transition_matrix(log_weights: np.ndarray) -> np.ndarray:
    """One-site MH transition matrix ``P[a, b]`` under the uniform-exclusive proposal."""
    weights = np.asarray(log_weights, dtype=np.float64)
    cardinality = weights.size
    if cardinality == 1:
        return np.ones((1, 1))

    ratio = np.exp(np.minimum(0.0, weights[None, :] - weights[:, None]))
    transition = ratio / (cardinality - 1)
    np.fill_diagonal(transition, 0.0)
    np.fill_diagonal(transition, 1.0 - transition.sum(axis=1))
    return transition
