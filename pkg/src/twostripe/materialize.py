"""Explicit tours: GG path plus wrap edge, serpentine upper bound, checker.

Everything streams, so tours for very large ``n`` can be written out with
O(1) state beyond the output itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .ggpath import GgParams, emit_gg_path, gg_tour_params, iter_gg_path  # noqa: F401
from .instance import CylinderCoord, TwoStripeInstance, decompose, label_of
from .solver import (
    AllCheapCycle,
    EqualCostAny,
    GgPlusWrap,
    Infeasible,
    SolveResult,
    UpperBoundSerpentine,
)


class TourError(ValueError):
    """Requested tour does not exist or its preconditions fail."""


def iter_upper_bound_tour(r: int, c: int) -> Iterator[CylinderCoord]:
    """Hamiltonian cycle on the cylinder with ``2(c-1)`` horizontal edges.

    Column 0 runs down from ``(0, 0)``; columns ``1..c-1`` snake over rows
    ``1..r-1``; row 0 of columns ``c-1..1`` is the corridor back to the
    start.  For odd ``c`` the snake ends at row ``r-1`` and reaches the
    corridor through the vertical wrap edge.
    """
    if r < 2 or c < 2:
        raise ValueError(f"cylinder needs r >= 2 and c >= 2, got {r}x{c}")
    for row in range(r):
        yield CylinderCoord(row, 0)
    for col in range(1, c):
        rows = range(r - 1, 0, -1) if col % 2 else range(1, r)
        for row in rows:
            yield CylinderCoord(row, col)
    for col in range(c - 1, 0, -1):
        yield CylinderCoord(0, col)


def emit_upper_bound_tour(r: int, c: int) -> list[CylinderCoord]:
    return list(iter_upper_bound_tour(r, c))


def _descriptor_cells(desc, r, c):
    if isinstance(desc, GgPlusWrap):
        return iter_gg_path(r, c, desc.params)
    if isinstance(desc, UpperBoundSerpentine):
        return iter_upper_bound_tour(r, c)
    raise TourError(f"no cylinder walk for {desc!r}")


def iter_tour(inst: TwoStripeInstance, result: SolveResult) -> Iterator[int]:
    """Stream the ``n`` labels of the optimal tour described by ``result``."""
    desc = result.descriptor
    if isinstance(desc, Infeasible):
        raise TourError("instance has no Hamiltonian cycle")
    if isinstance(desc, EqualCostAny):
        desc = desc.inner
    if isinstance(desc, AllCheapCycle):
        v = 0
        for _ in range(inst.n):
            yield v
            v = (v + inst.a1) % inst.n
        return
    d = result.decomposition
    for cell in _descriptor_cells(desc, d.r, d.c):
        yield label_of(cell, inst)


def emit_tour(inst: TwoStripeInstance, result: SolveResult) -> list[int]:
    return list(iter_tour(inst, result))


def emit_lower_bound_tour_y(inst: TwoStripeInstance, y: int) -> list[int]:
    """Cost-``g1`` cycle: ``y`` columns swept with ``-a1``, the rest with ``+a1``.

    Requires ``0 <= y <= g1`` and ``(2y - g1)*a1 + g1*a2 = 0 (mod n)``.
    """
    d = decompose(inst)
    n, a1, a2, g1 = inst.n, inst.a1, inst.a2, d.g1
    if d.g2 != 1:
        raise TourError("instance has no Hamiltonian cycle")
    if not 0 <= y <= g1 or ((2 * y - g1) * a1 + g1 * a2) % n:
        raise TourError(f"y={y} does not satisfy the lower-bound congruence")
    tour = []
    v = 0
    for col in range(g1):
        step = -a1 if col < y else a1
        for i in range(d.r):
            tour.append(v)
            if i < d.r - 1:
                v = (v + step) % n
        v = (v + a2) % n
    return tour


@dataclass(frozen=True)
class TourCheck:
    hamiltonian: bool
    length: int
    count_a1: int
    count_a2: int
    plus_a2: int
    minus_a2: int
    bad_steps: int
    cost: int


def validate_tour(inst: TwoStripeInstance, tour: Iterable[int]) -> TourCheck:
    """Check a closed tour step by step; counts are reported even when invalid."""
    n, a1, a2 = inst.n, inst.a1, inst.a2
    seen = bytearray(n)
    distinct = True
    count_a1 = plus = minus = bad = length = 0
    first = prev = None
    for v in tour:
        if not 0 <= v < n or seen[v]:
            distinct = False
        else:
            seen[v] = 1
        if prev is None:
            first = v
        else:
            c1, p, m_, b = _classify_step(prev, v, n, a1, a2)
            count_a1 += c1
            plus += p
            minus += m_
            bad += b
        prev = v
        length += 1
    if length:
        c1, p, m_, b = _classify_step(prev, first, n, a1, a2)
        count_a1 += c1
        plus += p
        minus += m_
        bad += b
    count_a2 = plus + minus
    ok = distinct and length == n and bad == 0
    return TourCheck(
        hamiltonian=ok,
        length=length,
        count_a1=count_a1,
        count_a2=count_a2,
        plus_a2=plus,
        minus_a2=minus,
        bad_steps=bad,
        cost=count_a1 * inst.cost1 + count_a2 * inst.cost2,
    )


def _classify_step(u, v, n, a1, a2):
    step = (v - u) % n
    if step == a1 or step == n - a1:
        return 1, 0, 0, 0
    if step == a2:
        return 0, 1, 0, 0
    if step == n - a2:
        return 0, 0, 1, 0
    return 0, 0, 0, 1
