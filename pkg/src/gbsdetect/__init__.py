"""Detectors and one-way LOCC verdicts for sets of generalized Bell states."""

from .analysis import (
    FEquivalenceWitness,
    Reason,
    Status,
    Verdict,
    delta_commutative,
    detection_range,
    detectors_of,
    discriminant_set,
    f_equivalent,
    invertible_components,
    lemma6_pattern,
    verdict,
)
from .mcs import Mcs, McsId, enumerate_mcs, materialize, mcs_containing
from .pauli import GbsSet, Gpm, commutant, commutes, diff_set, standardize
from .zmod import gcd_d, sigma_divisors, solve_congruence

__version__ = "0.1.0"

__all__ = [
    "FEquivalenceWitness", "GbsSet", "Gpm", "Mcs", "McsId", "Reason", "Status", "Verdict",
    "commutant", "commutes", "delta_commutative", "detection_range", "detectors_of",
    "diff_set", "discriminant_set", "enumerate_mcs", "f_equivalent", "gcd_d",
    "invertible_components", "lemma6_pattern", "materialize", "mcs_containing",
    "sigma_divisors", "solve_congruence", "standardize", "verdict",
]
