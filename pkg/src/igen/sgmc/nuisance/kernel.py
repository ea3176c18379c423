from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np


@runtime_checkable
class SitewiseKernel(Protocol):
    """Full conditionals of the nuisance state, one site at a time.

    ``site_log_weights`` must depend on ``z`` only through sites other than
    ``site``. Kernels whose sites are conditionally independent given ``x`` set
    ``independent_sites`` and provide every site's weights at once.
    """

    independent_sites: bool

    @property
    def site_count(self) -> int:
        """Number of nuisance sites."""
        ...

    def site_cardinality(self, site: int) -> int:
        """Size of the support of ``site``."""
        ...

    def site_log_weights(self, site: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Unnormalized log conditional over the support of ``site``."""
        ...

    def all_site_log_weights(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        """``(site_count, cardinality)`` matrix of log conditionals for independent sites."""
        ...
