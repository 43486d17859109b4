"""Convergence-rate certificates and benchmarks for the momentum method."""

from ._core import (
    bisect_tau,
    certified_rate,
    certify_point,
    classic_beta,
    closed_form_P,
    discriminant_threshold,
    optimal_tuning,
    rate_cubic_roots,
    rate_row,
    reference_rate,
    simulate,
)

__all__ = [
    "bisect_tau",
    "certified_rate",
    "certify_point",
    "classic_beta",
    "closed_form_P",
    "discriminant_threshold",
    "optimal_tuning",
    "rate_cubic_roots",
    "rate_row",
    "reference_rate",
    "simulate",
]
