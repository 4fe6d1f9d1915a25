"""Index-level algebra of generalized Pauli matrices X^m Z^n and GBS sets.

Everything here works on the index pair (m, n) in Z_d x Z_d; global phases
are never tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DomainError
from .zmod import check_dimension


class Gpm(NamedTuple):
    """Index pair (m, n) of X^m Z^n, up to phase."""

    m: int
    n: int

    def render(self) -> str:
        return f"{self.m},{self.n}"


def gpm(m: int, n: int, d: int) -> Gpm:
    return Gpm(m % d, n % d)


def neg(g: Gpm, d: int) -> Gpm:
    return Gpm(-g.m % d, -g.n % d)


def add(a: Gpm, b: Gpm, d: int) -> Gpm:
    return Gpm((a.m + b.m) % d, (a.n + b.n) % d)


def sub(a: Gpm, b: Gpm, d: int) -> Gpm:
    return Gpm((a.m - b.m) % d, (a.n - b.n) % d)


def all_gpms(d: int) -> list[Gpm]:
    return [Gpm(m, n) for m in range(d) for n in range(d)]


def symplectic(a: Gpm, b: Gpm, d: int) -> int:
    """n_a*m_b - m_a*n_b mod d; zero iff the two GPMs commute."""
    return (a.n * b.m - a.m * b.n) % d


def commutes(a: Gpm, b: Gpm, d: int) -> bool:
    return symplectic(a, b, d) == 0


def commutant(g: Gpm, d: int) -> frozenset[Gpm]:
    """All GPMs commuting with ``g``."""
    return frozenset(h for h in all_gpms(d) if commutes(g, h, d))


def is_commutative(gs: Iterable[Gpm], d: int) -> bool:
    gs = list(gs)
    return all(commutes(a, b, d) for k, a in enumerate(gs) for b in gs[k + 1:])


@dataclass(frozen=True)
class GbsSet:
    """An ordered set of distinct GBS labels in C^d (x) C^d.

    Residues are reduced mod d on construction. Equality ignores order.
    """

    d: int
    elements: tuple[Gpm, ...]

    def __init__(self, d: int, elements: Iterable[Iterable[int]]):
        check_dimension(d)
        elems = tuple(gpm(*e, d) for e in elements)
        if not elems:
            raise DomainError("a GBS set needs at least one element")
        if len(set(elems)) != len(elems):
            dup = sorted({e for e in elems if elems.count(e) > 1})
            raise DomainError(f"duplicate elements in set: {' '.join(g.render() for g in dup)}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "elements", elems)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GbsSet):
            return NotImplemented
        return self.d == other.d and set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash((self.d, frozenset(self.elements)))

    def render(self) -> str:
        return " ".join(g.render() for g in self.elements)


def diff_set(s: GbsSet) -> frozenset[Gpm]:
    """All pairwise differences of the labels of ``s``; never contains (0, 0)."""
    d = s.d
    return frozenset(sub(a, b, d) for a in s for b in s if a != b)


def standardize(s: GbsSet) -> GbsSet:
    """Translate ``s`` so that its first element becomes (0, 0)."""
    first = s.elements[0]
    return GbsSet(s.d, [sub(g, first, s.d) for g in s])


def render_gpms(gs: Iterable[Gpm]) -> str:
    gs = sorted(gs)
    return " ".join(g.render() for g in gs) if gs else "∅"
