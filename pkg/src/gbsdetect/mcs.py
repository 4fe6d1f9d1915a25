"""Maximally commutative sets (MCSs) of GPMs.

Every MCS on C^d is one of the sets C_{i,j} with ``i | d``, ``i < d`` and
``0 <= j < d/i``, defined by ``x in i*Z_d`` and ``i*y - j*x = 0 (mod d)``,
or the special set C_{0,0} = {(0, y)} (which is what i = d would give).
There are sigma(d) of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError
from .pauli import Gpm, all_gpms, commutes, gpm, is_commutative
from .zmod import check_dimension, divisors, gcd_d, inverse_mod


class McsId(NamedTuple):
    i: int
    j: int

    def render(self) -> str:
        return f"C{self.i},{self.j}"


C00 = McsId(0, 0)


def validate_id(mid: McsId, d: int) -> McsId:
    i, j = mid
    if (i, j) == (0, 0):
        return C00
    if 1 <= i < d and d % i == 0 and 0 <= j < d // i:
        return McsId(i, j)
    if (i, j) == (d, 0):
        raise DomainError(f"C{d},0 coincides with C0,0; use the C0,0 label")
    raise DomainError(f"invalid MCS label C{i},{j} for d={d}")


@dataclass(frozen=True)
class Mcs:
    id: McsId
    members: frozenset[Gpm]


@lru_cache(maxsize=None)
def _enumerate(d: int) -> tuple[McsId, ...]:
    ids = [C00]
    for i in divisors(d)[:-1]:
        ids.extend(McsId(i, j) for j in range(d // i))
    return tuple(ids)


def enumerate_mcs(d: int) -> list[McsId]:
    """All MCS labels for dimension ``d``, ordered by (i, j) with C_{0,0} first."""
    check_dimension(d)
    return list(_enumerate(d))


def materialize(mid: McsId, d: int) -> Mcs:
    check_dimension(d)
    i, j = validate_id(mid, d)
    if i == 0:
        members = frozenset(Gpm(0, y) for y in range(d))
    else:
        members = frozenset(
            Gpm(x, y)
            for x in range(0, d, i)
            for y in range(d)
            if (i * y - j * x) % d == 0
        )
    return Mcs(McsId(i, j), members)


def mcs_containing(g: Gpm, d: int) -> list[McsId]:
    """Labels of all MCSs containing ``g``, solved directly from the congruence
    ``i*n = j*m (mod d)`` rather than by scanning members."""
    check_dimension(d)
    m, n = gpm(*g, d)
    if m == 0:
        d_n = gcd_d(d, n)
        found = [C00]
        for i in divisors(d)[:-1]:
            if d_n % (d // i) == 0:
                found.extend(McsId(i, j) for j in range(d // i))
        return sorted(found)

    d_m = gcd_d(d, m)
    d_mn = gcd_d(d_m, n)
    period = d // d_m
    m_inv = inverse_mod(m // d_m, period)
    found = []
    for i in divisors(d_m):
        k = d_m // i
        if d_mn % k:
            continue
        j0 = (n // k) * m_inv % period
        found.extend(McsId(i, j0 + t * period) for t in range(k))
    return sorted(found)


def mcs_containing_brute(g: Gpm, d: int) -> list[McsId]:
    """Reference filter over materialized MCSs."""
    g = gpm(*g, d)
    return [mid for mid in enumerate_mcs(d) if g in materialize(mid, d).members]


def render_ids(ids: Iterable[McsId]) -> str:
    ids = sorted(ids)
    return " ".join(mid.render() for mid in ids) if ids else "∅"


def is_maximal_commutative(members: frozenset[Gpm], d: int) -> bool:
    if not is_commutative(members, d):
        return False
    return all(
        any(not commutes(g, h, d) for h in members)
        for g in all_gpms(d)
        if g not in members
    )
