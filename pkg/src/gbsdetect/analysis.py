"""Distinguishability of GBS sets: discriminant sets, detectors,
F-equivalence, and the verdict cascade."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import DomainError
from .mcs import McsId, enumerate_mcs, materialize, mcs_containing
from .pauli import GbsSet, Gpm, all_gpms, commutes, diff_set, is_commutative
from .zmod import gcd_d, is_prime


class Status(str, enum.Enum):
    DISTINGUISHABLE = "Distinguishable"
    INDISTINGUISHABLE = "Indistinguishable"
    UNKNOWN = "Unknown"


class Reason(str, enum.Enum):
    SMALL_SET = "SmallSet"
    DETECTOR_FOUND = "DetectorFound"
    DELTA_COMMUTATIVE = "DeltaCommutative"
    INVERTIBLE_COMPONENTS = "InvertibleComponents"
    SPECIAL_DIFF_SET_33 = "SpecialDiffSet33"
    LEMMA6_PATTERN = "Lemma6Pattern"
    THEOREM2_EXHAUSTED = "Theorem2Exhausted"
    INSUFFICIENT = "Insufficient"


# Name of the explicit witness state (|0> + |1>)/sqrt(2) for the
# {(0,d/2), (d/2,0), (d/2,d/2)} difference set.
HALF_SHIFT_WITNESS = "plus01"


@dataclass(frozen=True)
class FEquivalenceWitness:
    found: bool
    alpha: int = 0
    beta: int = 0


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: Reason
    witness: Optional[Union[McsId, FEquivalenceWitness, str, int]] = None


def detection_range(mid: McsId, d: int) -> frozenset[Gpm]:
    """GPMs outside the MCS; a set is detected when its difference set lies here."""
    members = materialize(mid, d).members
    return frozenset(g for g in all_gpms(d) if g not in members)


def discriminant_set(s: GbsSet) -> frozenset[Gpm]:
    """GPMs that commute with no element of the difference set."""
    delta = diff_set(s)
    return frozenset(
        g for g in all_gpms(s.d) if not any(commutes(g, h, s.d) for h in delta)
    )


def detectors_of(s: GbsSet) -> list[McsId]:
    """All MCSs disjoint from the difference set, sorted by label."""
    hit: set[McsId] = set()
    for g in diff_set(s):
        hit.update(mcs_containing(g, s.d))
    return [mid for mid in enumerate_mcs(s.d) if mid not in hit]


def detectors_brute(s: GbsSet) -> list[McsId]:
    delta = diff_set(s)
    return [mid for mid in enumerate_mcs(s.d) if not (delta & materialize(mid, s.d).members)]


def f_equivalent(s: GbsSet) -> FEquivalenceWitness:
    """First (alpha, beta) in lexicographic order making m*alpha + n*beta
    pairwise distinct mod d over the set."""
    d, l = s.d, len(s)
    for alpha in range(d):
        for beta in range(d):
            if len({(m * alpha + n * beta) % d for m, n in s}) == l:
                return FEquivalenceWitness(True, alpha, beta)
    return FEquivalenceWitness(False)


def delta_commutative(s: GbsSet) -> bool:
    return is_commutative(diff_set(s), s.d)


def delta_inside_some_mcs(s: GbsSet) -> bool:
    delta = diff_set(s)
    return any(delta <= materialize(mid, s.d).members for mid in enumerate_mcs(s.d))


def invertible_components(s: GbsSet) -> bool:
    """Every difference has an invertible coordinate. Always False for prime d,
    where the criterion does not apply."""
    d = s.d
    if is_prime(d):
        return False
    return all(gcd_d(d, m) == 1 or gcd_d(d, n) == 1 for m, n in diff_set(s))


def half_shift_diff_set(d: int) -> frozenset[Gpm]:
    h = d // 2
    return frozenset({Gpm(0, h), Gpm(h, 0), Gpm(h, h)})


def lemma6_pattern(s: GbsSet) -> Optional[int]:
    """Smallest i0 in (0, d-1) with the difference set containing both
    {(d/2, i) : 0 <= i <= d/2} and {(0, i0 + 2k) : 0 <= k < d/2}."""
    d = s.d
    if d % 2:
        raise DomainError(f"the half-shift pattern needs even d, got d={d}")
    h = d // 2
    delta = diff_set(s)
    if not all(Gpm(h, i) in delta for i in range(h + 1)):
        return None
    for i0 in range(1, d - 1):
        if all(Gpm(0, (i0 + 2 * k) % d) in delta for k in range(h)):
            return i0
    return None


def verdict(s: GbsSet, assume_small_sets: bool = True) -> Verdict:
    """One-way LOCC verdict by a fixed rule cascade; the first rule that
    applies decides."""
    d, l = s.d, len(s)
    if l < 2:
        raise DomainError(f"verdicts need at least 2 states, got {l}")
    if l > d:
        raise DomainError(f"set size {l} exceeds d={d}; only 2 <= l <= d is supported")

    if assume_small_sets and l <= 3:
        return Verdict(Status.DISTINGUISHABLE, Reason.SMALL_SET)
    detectors = detectors_of(s)
    if detectors:
        return Verdict(Status.DISTINGUISHABLE, Reason.DETECTOR_FOUND, detectors[0])
    if delta_commutative(s):
        return Verdict(Status.DISTINGUISHABLE, Reason.DELTA_COMMUTATIVE)
    if invertible_components(s):
        return Verdict(Status.DISTINGUISHABLE, Reason.INVERTIBLE_COMPONENTS)
    if d % 2 == 0:
        if diff_set(s) == half_shift_diff_set(d):
            return Verdict(Status.DISTINGUISHABLE, Reason.SPECIAL_DIFF_SET_33, HALF_SHIFT_WITNESS)
        i0 = lemma6_pattern(s)
        if i0 is not None:
            return Verdict(Status.INDISTINGUISHABLE, Reason.LEMMA6_PATTERN, i0)
    if d in (4, 6) and l == 4:
        return Verdict(Status.INDISTINGUISHABLE, Reason.THEOREM2_EXHAUSTED)
    return Verdict(Status.UNKNOWN, Reason.INSUFFICIENT)
