"""Exact restricted-partition counts and their Sylvester wave decomposition."""

from .exact import Polynomial, binomial_generalized, poly_shift_negate, stirling2
from .partitions import Components, DenumerantTable, denumerant_bruteforce, denumerant_series
from .waves import QuasiPolynomial, Wave, fourier_dedekind, quasipolynomial, wave, wave_series_oracle

__all__ = [
    "Components",
    "DenumerantTable",
    "Polynomial",
    "QuasiPolynomial",
    "Wave",
    "binomial_generalized",
    "denumerant_bruteforce",
    "denumerant_series",
    "fourier_dedekind",
    "poly_shift_negate",
    "quasipolynomial",
    "stirling2",
    "wave",
    "wave_series_oracle",
]

__version__ = "0.1.0"
