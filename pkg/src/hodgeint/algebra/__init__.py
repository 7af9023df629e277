"""Exact coefficient arithmetic."""

from hodgeint.algebra.gaussian import GaussianRational, I, ONE, ZERO, i_power
from hodgeint.algebra.qrat import QRat, qrat_to_series
from hodgeint.algebra.series import (
    LambdaSeries,
    exp_linear,
    series_div,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
)
from hodgeint.algebra.taupoly import TAU, TauPoly, tau_poly

__all__ = [
    "GaussianRational", "I", "ONE", "ZERO", "i_power",
    "QRat", "qrat_to_series",
    "LambdaSeries", "exp_linear", "series_div", "series_exp", "series_inverse",
    "series_log", "series_mul",
    "TAU", "TauPoly", "tau_poly",
]
