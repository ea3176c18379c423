from enum import Enum


class SchemeFamily(Enum):
    """How a scheme moves the trace: noisy-gradient dynamics, alternating kernels, or exact HMC."""

    SGHMC = "sghmc"
    COMPOSING = "composing"
    HMC = "hmc"
