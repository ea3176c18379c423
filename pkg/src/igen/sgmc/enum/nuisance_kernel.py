from enum import Enum


class NuisanceKernel(Enum):
    """Sitewise kernels available for refreshing the nuisance state."""

    GIBBS = "gibbs"
    MH = "mh"
