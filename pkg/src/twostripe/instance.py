"""Two-stripe circulant instances and their cylinder decomposition.

Vertex ``v = row*a1 + col*a2 (mod n)`` sits at ``(row, col)`` on an
``r x c`` cylinder with ``c = gcd(n, a1)`` columns and ``r = n / c`` rows.
Steps of ``+-a1`` move vertically inside a column (with wraparound),
steps of ``+-a2`` move between neighbouring columns.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .congruence import MAX_MODULUS, gcd, solve_congruence


class InvalidInstanceError(ValueError):
    """Raised for inputs outside the supported instance domain."""


class Triviality(enum.Enum):
    INFEASIBLE = "infeasible"
    SINGLE_STRIPE = "single_stripe"
    EQUAL_COSTS = "equal_costs"
    NON_TRIVIAL = "non_trivial"


class CylinderCoord(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Decomposition:
    g1: int
    g2: int
    r: int
    c: int

    @property
    def feasible(self) -> bool:
        return self.g2 == 1


@dataclass(frozen=True)
class TwoStripeInstance:
    """Canonical instance: ``a1`` is the cheap stripe (``cost1 <= cost2``).

    Use :func:`build_instance` to construct one from unordered stripes.
    """

    n: int
    a1: int
    a2: int
    cost1: int
    cost2: int

    def __post_init__(self):
        _check_domain(self.n, self.a1, self.a2, self.cost1, self.cost2)
        if self.cost1 > self.cost2:
            raise InvalidInstanceError("cost1 must not exceed cost2; use build_instance")

    @property
    def half(self) -> int:
        return self.n // 2


def _check_domain(n, s1, s2, c1, c2):
    for name, v in (("n", n), ("stripe", s1), ("stripe", s2), ("cost", c1), ("cost", c2)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidInstanceError(f"{name} must be an integer, got {v!r}")
    if n < 4:
        raise InvalidInstanceError(f"n must be at least 4, got {n}")
    if n >= MAX_MODULUS:
        raise InvalidInstanceError(f"n must be below 2^62, got {n}")
    for s in (s1, s2):
        if not 1 <= s <= n // 2:
            raise InvalidInstanceError(f"stripe length {s} outside [1, {n // 2}]")
    if s1 == s2:
        raise InvalidInstanceError("stripe lengths must differ")
    if c1 < 0 or c2 < 0:
        raise InvalidInstanceError("costs must be nonnegative")


def build_instance(n: int, s1: int, c1: int, s2: int, c2: int) -> TwoStripeInstance:
    """Canonicalize two (length, cost) stripes into a :class:`TwoStripeInstance`.

    The cheaper stripe becomes ``a1``; on a cost tie the shorter stripe does.
    """
    _check_domain(n, s1, s2, c1, c2)
    if (c2, s2) < (c1, s1):
        s1, c1, s2, c2 = s2, c2, s1, c1
    return TwoStripeInstance(n, s1, s2, c1, c2)


def decompose(inst: TwoStripeInstance) -> Decomposition:
    g1 = gcd(inst.n, inst.a1)
    g2 = gcd(g1, inst.a2)
    return Decomposition(g1=g1, g2=g2, r=inst.n // g1, c=g1)


def classify(inst: TwoStripeInstance) -> Triviality:
    d = decompose(inst)
    if d.g2 > 1:
        return Triviality.INFEASIBLE
    if d.g1 == 1:
        return Triviality.SINGLE_STRIPE
    if inst.cost1 == inst.cost2:
        return Triviality.EQUAL_COSTS
    return Triviality.NON_TRIVIAL


def label_of(coord: CylinderCoord | tuple[int, int], inst: TwoStripeInstance) -> int:
    row, col = coord
    return (row * inst.a1 + col * inst.a2) % inst.n


def coord_of(label: int, inst: TwoStripeInstance) -> CylinderCoord:
    """Inverse of :func:`label_of`; needs ``g2 == 1`` for the map to be a bijection."""
    d = decompose(inst)
    if d.g2 != 1:
        raise InvalidInstanceError("cylinder coordinates need gcd(n, a1, a2) = 1")
    if not 0 <= label < inst.n:
        raise ValueError(f"label {label} outside [0, {inst.n})")
    if d.g1 == 1:
        col = 0
    else:
        # columns are the residue classes mod g1; a2 steps one column right
        col = solve_congruence(inst.a2 % d.g1, label, d.g1).base
    row = solve_congruence(inst.a1, label - col * inst.a2, inst.n).base
    return CylinderCoord(row, col)


def row_of_minus_a2(inst: TwoStripeInstance) -> int:
    """Row ``x`` of vertex ``-a2``, which sits in the last column ``(x, c-1)``."""
    d = decompose(inst)
    if d.g2 != 1 or d.g1 == 1:
        raise InvalidInstanceError("row of -a2 needs g2 = 1 and g1 > 1")
    sol = solve_congruence(inst.a1, -d.g1 * inst.a2, inst.n)
    return sol.base
