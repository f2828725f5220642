"""Secrecy-rate analysis of a zero-forcing downlink with quantized feedback.

A Monte Carlo link simulator (explicit codebooks and beams, or the faster
quantization-cell approximation) and a closed-form analytic engine for the
ergodic secrecy sum-rate and its interference- and noise-limited limits,
each cross-validating the other.
"""

from .analytic import (Link, Regime, exp_integral_e1, exp_integral_e1_scaled,
                       gauss_2f1, laplace_pole_integral,
                       laplace_two_pole_integral, rate_from_cdf_quadrature,
                       secrecy_rate_closed_form,
                       secrecy_rate_interference_limited,
                       secrecy_rate_noise_limited, sinr_cdf)
from .linalg import (DegenerateInputError, RngStream, inner_product,
                     orthonormal_complement, sample_complex_gaussian,
                     unit_direction)
from .params import SystemParams, quantization_distortion
from .codebooks import (Codebook, CodebookSizeError, QuantizationOutcome,
                       generate_codebook, qca_interference_gain, quantize,
                       zfbf_beams)
from .simulate import (RateEstimate, SimMode, SinrRealization,
                       collect_sinr_samples, estimate_secrecy_rate,
                       ks_statistic, simulate_realization)

__all__ = [
    "Codebook", "CodebookSizeError", "DegenerateInputError", "Link",
    "QuantizationOutcome", "RateEstimate", "Regime", "RngStream", "SimMode",
    "SinrRealization", "SystemParams", "collect_sinr_samples",
    "estimate_secrecy_rate", "exp_integral_e1", "exp_integral_e1_scaled",
    "gauss_2f1", "generate_codebook", "inner_product", "ks_statistic",
    "laplace_pole_integral", "laplace_two_pole_integral",
    "orthonormal_complement", "qca_interference_gain",
    "quantization_distortion", "quantize", "rate_from_cdf_quadrature",
    "sample_complex_gaussian", "secrecy_rate_closed_form",
    "secrecy_rate_interference_limited", "secrecy_rate_noise_limited",
    "simulate_realization", "sinr_cdf", "unit_direction", "zfbf_beams",
]

__version__ = "0.1.0"
