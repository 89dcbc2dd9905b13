"""Certificate search and independent verification."""

from .certificate import FORMAT_VERSION, KINDS, Certificate, NotFound
from .prng import SplitMix64
from .search import (
    DEFAULT_BUDGET, ParityReport, SophieReport, base_two_search, find_lb3, find_lb4,
    involution_distance, involution_distance_certificate, involution_distances,
    largest_prime_normalizer,
    normalizer_parity_report, sophie_bound, sophie_certificate, SweepReport,
    sweep_upper_bound,
)
from .verify import PAIR_CEILING, VerifyResult, check, verify

__all__ = [
    "DEFAULT_BUDGET", "FORMAT_VERSION", "KINDS", "PAIR_CEILING", "Certificate",
    "NotFound", "ParityReport", "SophieReport", "SplitMix64", "VerifyResult",
    "base_two_search", "check", "find_lb3", "find_lb4", "involution_distance",
    "involution_distance_certificate", "involution_distances", "largest_prime_normalizer",
    "normalizer_parity_report", "sophie_bound", "sophie_certificate",
    "SweepReport", "sweep_upper_bound", "verify",
]
