"""Exact integer helpers: gcd, extended Euclid and linear congruences.

Python integers are exact, so there is no overflow concern; callers keep
moduli below ``MAX_MODULUS`` anyway so the arithmetic stays within the
range the rest of the package validates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

MAX_MODULUS = 1 << 62


@dataclass(frozen=True)
class CongruenceSolution:
    """Solution set ``{base + k*period}`` of ``a*x = b (mod n)``."""

    base: int
    period: int

    def __post_init__(self):
        if self.period < 1 or not 0 <= self.base < self.period:
            raise ValueError(f"invalid solution class {self.base} mod {self.period}")

    def __contains__(self, x: int) -> bool:
        return (x - self.base) % self.period == 0


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative arguments")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def ext_gcd_steps(a: int, b: int) -> tuple[int, int, int, int]:
    """Extended Euclid returning ``(g, s, t, iterations)``.

    ``g = gcd(|a|, |b|)`` and ``s*a + t*b == g``.  The iteration count is the
    number of division steps taken, exposed so callers can check the
    logarithmic step bound.
    """
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    if a and b % a == 0:
        # a | b: the identity combination, so (1, k) -> (1, 1, 0)
        return abs(a), (1 if a > 0 else -1), 0, 0
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    steps = 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
        steps += 1
    if a < 0:
        old_s = -old_s
    if b < 0:
        old_t = -old_t
    return old_r, old_s, old_t, steps


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    g, s, t, _ = ext_gcd_steps(a, b)
    return g, s, t


def solve_congruence(a: int, b: int, n: int) -> Optional[CongruenceSolution]:
    """Solve ``a*x = b (mod n)``.

    Returns ``None`` when ``gcd(a, n)`` does not divide ``b``; otherwise the
    least nonnegative solution together with the period ``n / gcd(a, n)``.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if a < 0:
        raise ValueError("coefficient must be nonnegative")
    a %= n
    b %= n
    if a == 0:
        # every x works when b = 0 (mod n), none otherwise
        return CongruenceSolution(0, 1) if b == 0 else None
    g, s, _ = ext_gcd(a, n)
    if b % g:
        return None
    period = n // g
    return CongruenceSolution((s * (b // g)) % period, period)


def smallest_solution_at_least(a: int, b: int, n: int, lower: int) -> Optional[int]:
    """Smallest integer ``x >= lower`` with ``a*x = b (mod n)``, or ``None``."""
    sol = solve_congruence(a, b, n)
    if sol is None:
        return None
    # base + period * ceil((lower - base) / period)
    return sol.base + sol.period * -((sol.base - lower) // sol.period)


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n``; raises ``ValueError`` if none exists."""
    g, s, _ = ext_gcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    return s % n
