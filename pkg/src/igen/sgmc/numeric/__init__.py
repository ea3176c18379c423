from .log_space import LOG_HALF, log_sigmoid, log_softmax, log_sum_exp, sigmoid

__all__ = [
    "LOG_HALF",
    "log_sigmoid",
    "log_softmax",
    "log_sum_exp",
    "sigmoid",
]
