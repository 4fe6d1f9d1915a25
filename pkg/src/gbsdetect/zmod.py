"""Exact residue arithmetic over Z_d."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def check_dimension(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {d!r}")
    return d


def gcd_d(d: int, m: int) -> int:
    """gcd(d, m) for a residue m; m = 0 gives d."""
    return math.gcd(d, m % d)


def divisors(d: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= d:
        if d % k == 0:
            small.append(k)
            if k * k != d:
                large.append(d // k)
        k += 1
    return small + large[::-1]


def sigma_divisors(d: int) -> tuple[list[int], int]:
    """Sorted divisors of ``d`` and their sum."""
    check_dimension(d)
    divs = divisors(d)
    return divs, sum(divs)


def is_prime(d: int) -> bool:
    if d < 2:
        return False
    return divisors(d) == [1, d]


def inverse_mod(a: int, modulus: int) -> int:
    """Inverse of ``a`` modulo ``modulus`` via extended Euclid; modulus 1 gives 0."""
    if modulus == 1:
        return 0
    old_r, r = a % modulus, modulus
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise DomainError(f"{a} is not invertible modulo {modulus}")
    return old_s % modulus


@dataclass(frozen=True)
class CongruenceSolution:
    """Solution set of ``a x = b (mod d)``.

    When solvable, the solutions are ``x0 + t * period`` for
    ``t = 0 .. class_count - 1``.
    """

    solvable: bool
    x0: int
    period: int
    class_count: int
    d: int

    def solutions(self) -> list[int]:
        if not self.solvable:
            return []
        return [(self.x0 + t * self.period) % self.d for t in range(self.class_count)]


def solve_congruence(a: int, b: int, d: int) -> CongruenceSolution:
    check_dimension(d)
    a, b = a % d, b % d
    c = math.gcd(a, d)
    period = d // c
    if b % c:
        return CongruenceSolution(False, 0, period, 0, d)
    x0 = (b // c) * inverse_mod(a // c, period) % period
    return CongruenceSolution(True, x0, period, c, d)
