"""Optimal two-stripe tour cost in O(log^2 n) arithmetic.

With ``x`` the row of ``-a2`` on the ``r x c`` cylinder, let ``m*`` be the
least integer ``m >= ceil(-c/2)`` with ``x = +-(c + 2m) (mod r)``.  The
optimal tour uses ``h*`` expensive edges where

* ``h* = c``          if ``m* <= 0``,
* ``h* = c + 2m*``    if ``0 < 2m* < c - 2``,
* ``h* = 2c - 2``     otherwise (or if ``m*`` does not exist).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .congruence import ext_gcd, gcd, mod_inverse, smallest_solution_at_least, solve_congruence
from .ggpath import GgParams, gg_tour_params
from .instance import (
    Decomposition,
    Triviality,
    TwoStripeInstance,
    classify,
    decompose,
    row_of_minus_a2,
)


class Branch(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class MStarResult:
    value: Optional[int]
    branch: Optional[Branch] = None

    @property
    def exists(self) -> bool:
        return self.value is not None


# Tour descriptors ----------------------------------------------------------

@dataclass(frozen=True)
class Infeasible:
    tag = "infeasible"


@dataclass(frozen=True)
class AllCheapCycle:
    tag = "all_cheap_cycle"


@dataclass(frozen=True)
class GgPlusWrap:
    params: GgParams
    tag = "gg_plus_wrap"

    @property
    def m_eff(self) -> int:
        return self.params.m


@dataclass(frozen=True)
class UpperBoundSerpentine:
    tag = "upper_bound_serpentine"


@dataclass(frozen=True)
class EqualCostAny:
    inner: "TourDescriptor"
    tag = "equal_cost_any"


TourDescriptor = Union[Infeasible, AllCheapCycle, GgPlusWrap, UpperBoundSerpentine, EqualCostAny]


@dataclass(frozen=True)
class SolveResult:
    instance: TwoStripeInstance
    triviality: Triviality
    decomposition: Decomposition
    descriptor: TourDescriptor
    x: Optional[int] = None
    m_star: Optional[MStarResult] = None
    h_star: Optional[int] = None
    total_cost: Optional[int] = field(default=None)

    @property
    def feasible(self) -> bool:
        return self.triviality is not Triviality.INFEASIBLE


def compute_m_star(x: int, r: int, c: int) -> MStarResult:
    """Least ``m >= ceil(-c/2)`` with ``x = c+2m`` or ``x = -(c+2m)`` mod ``r``."""
    if r < 2 or c < 2 or not 0 <= x < r:
        raise ValueError(f"bad m* query x={x}, r={r}, c={c}")
    lower = -(c // 2)
    plus = smallest_solution_at_least(2, x - c, r, lower)
    minus = smallest_solution_at_least(2, -x - c, r, lower)
    if plus is None and minus is None:
        return MStarResult(None)
    if minus is None or (plus is not None and plus <= minus):
        return MStarResult(plus, Branch.PLUS)
    return MStarResult(minus, Branch.MINUS)


def h_star_from_m_star(m_star: MStarResult, c: int) -> int:
    m = m_star.value
    if m is None:
        return 2 * c - 2
    if m <= 0:
        return c
    if 2 * m < c - 2:
        return c + 2 * m
    return 2 * c - 2


def _general_tour(inst: TwoStripeInstance, d: Decomposition):
    x = row_of_minus_a2(inst)
    ms = compute_m_star(x, d.r, d.c)
    h = h_star_from_m_star(ms, d.c)
    if ms.exists and 2 * ms.value < d.c - 2:
        desc: TourDescriptor = GgPlusWrap(gg_tour_params(x, d.r, d.c, max(0, ms.value)))
    else:
        desc = UpperBoundSerpentine()
    return x, ms, h, desc


def solve(inst: TwoStripeInstance) -> SolveResult:
    """Optimal cost, expensive-edge count and a tour descriptor for ``inst``."""
    d = decompose(inst)
    kind = classify(inst)
    if kind is Triviality.INFEASIBLE:
        return SolveResult(inst, kind, d, Infeasible())
    if kind is Triviality.SINGLE_STRIPE:
        return SolveResult(inst, kind, d, AllCheapCycle(), h_star=0, total_cost=inst.n * inst.cost1)
    x, ms, h, desc = _general_tour(inst, d)
    if kind is Triviality.EQUAL_COSTS:
        desc = EqualCostAny(desc)
    total = (inst.n - h) * inst.cost1 + h * inst.cost2
    return SolveResult(inst, kind, d, desc, x=x, m_star=ms, h_star=h, total_cost=total)


def decide(inst: TwoStripeInstance, budget: int) -> bool:
    """True iff a Hamiltonian cycle of cost at most ``budget`` exists."""
    res = solve(inst)
    return res.feasible and res.total_cost <= budget


def solve_via_gg_formula(inst: TwoStripeInstance) -> Optional[int]:
    """Expensive-edge count from the Gerace-Greco set ``S``.

    ``S = {y in [0, r) : (2y - g1)*a1 + g1*a2 = 0 (mod n)}``.  Empty ``S`` gives
    ``2c-2``; ``min S <= g1`` gives ``c``; otherwise
    ``min(c + 2*min(y1 - g1, r - y2), 2c - 2)``.  Independent of the m* route.
    """
    d = decompose(inst)
    if d.g2 != 1 or d.g1 == 1:
        return None
    n, a1, a2, g1, r = inst.n, inst.a1, inst.a2, d.g1, d.r
    sol = solve_congruence(2 * a1, g1 * a1 - g1 * a2, n)
    if sol is None or sol.base >= r:
        return 2 * g1 - 2
    y1 = sol.base
    y2 = y1 + sol.period * ((r - 1 - y1) // sol.period)
    if y1 <= g1:
        return g1
    return min(g1 + 2 * min(y1 - g1, r - y2), 2 * g1 - 2)


# Vectorized sweeps -----------------------------------------------------------

def _smallest_at_least_vec(two_m_rhs: np.ndarray, r: int, lower: int):
    """Vectorized least ``m >= lower`` with ``2m = rhs (mod r)``; -1 sentinel mask."""
    rhs = two_m_rhs % r
    if r % 2:
        inv2 = (r + 1) // 2
        base = (rhs * inv2) % r
        period = r
        ok = np.ones(rhs.shape, dtype=bool)
    else:
        ok = rhs % 2 == 0
        period = r // 2
        base = (rhs // 2) % period
    m = base + period * (-((base - lower) // period))
    return m, ok


def sweep_n(n: int):
    """Both routes for every non-trivial stripe pair of one ``n``.

    Returns ``(a1, a2, h_main, h_gg, c)`` arrays covering all ordered pairs
    ``a1 != a2`` in ``[1, n//2]`` with ``g1 > 1`` and ``g2 = 1``.  The main
    route mirrors :func:`solve`; the second mirrors :func:`solve_via_gg_formula`.
    """
    half = n // 2
    a2_all = np.arange(1, half + 1, dtype=np.int64)
    out = [[], [], [], [], []]
    for a1 in range(1, half + 1):
        g1 = gcd(n, a1)
        if g1 == 1:
            continue
        r, c = n // g1, g1
        a2 = a2_all[(a2_all != a1) & (np.gcd(a2_all, g1) == 1)]
        if a2.size == 0:
            continue
        # x * (a1/g1) = -a2 (mod r)
        x = (-a2 * mod_inverse(a1 // g1, r)) % r
        lower = -(c // 2)
        mp, okp = _smallest_at_least_vec(x - c, r, lower)
        mm, okm = _smallest_at_least_vec(-x - c, r, lower)
        big = np.iinfo(np.int64).max
        mstar = np.minimum(np.where(okp, mp, big), np.where(okm, mm, big))
        exists = okp | okm
        h_main = np.where(
            exists & (mstar <= 0),
            c,
            np.where(exists & (2 * mstar < c - 2), c + 2 * mstar, 2 * c - 2),
        )
        # 2*a1*y = g1*(a1 - a2) (mod n)
        G, s, _ = ext_gcd(2 * a1, n)
        rhs = (g1 * (a1 - a2)) % n
        feas = rhs % G == 0
        period = n // G
        y1 = ((rhs // G) * (s % period)) % period
        in_range = feas & (y1 < r)
        y2 = y1 + period * ((r - 1 - y1) // period)
        cand = np.minimum(c + 2 * np.minimum(y1 - g1, r - y2), 2 * c - 2)
        h_gg = np.where(~in_range, 2 * c - 2, np.where(y1 <= g1, c, cand))
        out[0].append(np.full(a2.shape, a1))
        out[1].append(a2)
        out[2].append(h_main)
        out[3].append(h_gg)
        out[4].append(np.full(a2.shape, c))
    if not out[0]:
        return tuple(np.empty(0, dtype=np.int64) for _ in range(5))
    return tuple(np.concatenate(col) for col in out)
