"""Brute-force ground truth for small instances.

Nothing here uses the closed-form theory: Held-Karp sees only a cost
matrix, and the cylinder search walks the grid graph exhaustively.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .instance import TwoStripeInstance

HELD_KARP_MAX_N = 18
CYLINDER_MAX_CELLS = 24

# saturating "no edge" cost; any sum involving it stays >= INF
INF = np.int64(1) << 40


def cost_matrix(inst: TwoStripeInstance) -> np.ndarray:
    """Dense symmetric cost matrix with ``INF`` on non-stripe pairs."""
    n = inst.n
    idx = np.arange(n)
    diff = np.abs(idx[:, None] - idx[None, :])
    dist = np.minimum(diff, n - diff)
    w = np.full((n, n), INF, dtype=np.int64)
    w[dist == inst.a1] = inst.cost1
    w[dist == inst.a2] = inst.cost2
    return w


def held_karp(inst: TwoStripeInstance) -> Optional[tuple[int, list[int]]]:
    """Exact minimum-cost Hamiltonian cycle by subset DP; ``None`` if none exists."""
    n = inst.n
    if n > HELD_KARP_MAX_N:
        raise ValueError(f"Held-Karp limited to n <= {HELD_KARP_MAX_N}, got {n}")
    w = cost_matrix(inst)
    k = n - 1  # vertices 1..n-1 are bits 0..k-1; vertex 0 is the fixed start
    full = (1 << k) - 1
    dp = np.full((1 << k, k), INF, dtype=np.int64)
    parent = np.full((1 << k, k), -1, dtype=np.int8)
    for j in range(k):
        dp[1 << j, j] = w[0, j + 1]
    masks = np.arange(1 << k, dtype=np.int64)
    popcount = np.zeros(1 << k, dtype=np.int8)
    for j in range(k):
        popcount += ((masks >> j) & 1).astype(np.int8)
    inner = w[1:, 1:]
    for size in range(1, k):
        layer = masks[popcount == size]
        best = dp[layer]  # (len, k), INF where j is not in the mask
        for nxt in range(k):
            free = ((layer >> nxt) & 1) == 0
            src = layer[free]
            cand = best[free] + inner[:, nxt]
            arg = cand.argmin(axis=1)
            val = np.minimum(cand[np.arange(len(src)), arg], INF)
            dst = src | (1 << nxt)
            dp[dst, nxt] = val
            parent[dst, nxt] = arg
    closing = np.minimum(dp[full] + w[1:, 0], INF)
    last = int(closing.argmin())
    cost = int(closing[last])
    if cost >= INF:
        return None
    tour = []
    mask, j = full, last
    while j >= 0:
        tour.append(j + 1)
        pj = int(parent[mask, j])
        mask ^= 1 << j
        j = pj
    tour.append(0)
    tour.reverse()
    return cost, tour


@dataclass
class CylinderReachability:
    """Exact minimum horizontal-edge counts of Hamiltonian paths from ``(0, 0)``.

    ``min_horizontal[row]`` is the fewest horizontal edges over all paths
    ending at ``(row, c-1)``; unreachable rows are absent.  ``gg_shaped``
    collects ``(row, first_cut_crossings)`` for paths that cross every later
    column cut exactly once.
    """

    r: int
    c: int
    min_horizontal: dict[int, int] = field(default_factory=dict)
    gg_shaped: set[tuple[int, int]] = field(default_factory=set)
    nodes: int = 0


def _neighbours(r, c):
    # cell id = col * r + row
    nbrs = []
    for col in range(c):
        for row in range(r):
            out = []
            for dr in (1, -1):
                v = col * r + (row + dr) % r
                if v != col * r + row and (v, False) not in out:
                    out.append((v, False))
            for dc in (1, -1):
                if 0 <= col + dc < c:
                    out.append(((col + dc) * r + row, True))
            nbrs.append(tuple(out))
    return nbrs


def cylinder_reachability(
    r: int,
    c: int,
    horizontal_budget: Optional[int] = None,
    *,
    target_row: Optional[int] = None,
    prune: bool = True,
    max_cells: int = CYLINDER_MAX_CELLS,
) -> CylinderReachability:
    """Exhaustive DFS over Hamiltonian paths from ``(0, 0)`` into the last column.

    With ``prune`` the search cuts branches that strand an unvisited cell,
    that leave the unvisited region disconnected, or whose horizontal-edge
    lower bound exceeds the budget.  ``prune=False`` keeps only the
    budget cut and is the reference used to check those rules.
    """
    if r < 2 or c < 2:
        raise ValueError(f"cylinder needs r >= 2 and c >= 2, got {r}x{c}")
    cells = r * c
    if cells > max_cells:
        raise ValueError(f"{r}x{c} cylinder exceeds the {max_cells}-cell search limit")
    nbrs = _neighbours(r, c)
    nbr_mask = [sum(1 << v for v, _ in nb) for nb in nbrs]
    col_mask = [((1 << r) - 1) << (col * r) for col in range(c)]
    last_col = col_mask[c - 1]
    all_mask = (1 << cells) - 1
    target = None if target_row is None else (c - 1) * r + target_row
    res = CylinderReachability(r, c)
    best = res.min_horizontal
    cuts = [0] * (c - 1)

    def lower_bound(col, visited):
        # every cut right of us needs one more crossing; every cut left of us
        # with unvisited cells behind it needs two
        need = c - 1 - col
        for left in range(col):
            if col_mask[left] & ~visited:
                need += 2 * (col - left)
                break
        return need

    def connected(cur, visited):
        free = all_mask & ~visited
        if not free:
            return True
        seed = nbr_mask[cur] & free
        if not seed:
            return False
        seen = seed & -seed
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= nbr_mask[low.bit_length() - 1]
                f ^= low
            grow &= free & ~seen
            seen |= grow
            frontier = grow
        return seen == free

    def stranded_ok(cur, visited):
        # an unvisited cell with at most one free exit must be the endpoint
        free = all_mask & ~visited
        ends = 0
        f = free
        while f:
            low = f & -f
            v = low.bit_length() - 1
            deg = bin(nbr_mask[v] & (free | (1 << cur))).count("1")
            if deg == 0:
                return False
            if deg == 1:
                if not (low & last_col) or (target is not None and v != target):
                    return False
                ends += 1
                if ends > 1:
                    return False
            f ^= low
        return True

    def dfs(cur, visited, h, count):
        res.nodes += 1
        if count == cells:
            row = cur % r
            if cur >= (c - 1) * r and (target is None or cur == target):
                if row not in best or h < best[row]:
                    best[row] = h
                if all(x == 1 for x in cuts[1:]):
                    res.gg_shaped.add((row, cuts[0]))
            return
        if target is not None and cur == target:
            return
        col = cur // r
        if horizontal_budget is not None and h + lower_bound(col, visited) > horizontal_budget:
            return
        if prune:
            if not (last_col & ~visited):
                return
            if not stranded_ok(cur, visited) or not connected(cur, visited):
                return
        for v, horiz in nbrs[cur]:
            bit = 1 << v
            if visited & bit:
                continue
            if horiz:
                cut = min(col, v // r)
                cuts[cut] += 1
                dfs(v, visited | bit, h + 1, count + 1)
                cuts[cut] -= 1
            else:
                dfs(v, visited | bit, h, count + 1)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * cells + 100))
    try:
        dfs(0, 1, 0, 1)
    finally:
        sys.setrecursionlimit(limit)
    return res


@dataclass(frozen=True)
class TheoremCheck:
    r: int
    c: int
    row: int
    expected: Optional[int]
    actual: Optional[int]

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> str:
        return json.dumps(
            {"r": self.r, "c": self.c, "row": self.row,
             "expected": self.expected, "actual": self.actual, "ok": self.ok}
        )


def predicted_min_horizontal(row: int, r: int, c: int) -> Optional[int]:
    from .ggpath import min_extra_pairs

    mu = min_extra_pairs(row, r, c)
    return None if mu is None else (c - 1) + 2 * mu


def check_cylinder(r: int, c: int) -> list[TheoremCheck]:
    """Compare exhaustive reachability with the ``A(r, c, m)`` prediction, row by row."""
    reach = cylinder_reachability(r, c, max_cells=max(r * c, CYLINDER_MAX_CELLS))
    return [
        TheoremCheck(r, c, row, predicted_min_horizontal(row, r, c), reach.min_horizontal.get(row))
        for row in range(r)
    ]


def iter_main_theorem_checks(r_max: int, c_max: int, cell_cap: int) -> Iterator[TheoremCheck]:
    for r in range(2, r_max + 1):
        for c in range(2, c_max + 1):
            if r * c <= cell_cap:
                yield from check_cylinder(r, c)


@dataclass
class TheoremReport:
    checks: list[TheoremCheck]

    @property
    def violations(self) -> list[TheoremCheck]:
        return [chk for chk in self.checks if not chk.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_main_theorem(r_max: int, c_max: int, cell_cap: int) -> TheoremReport:
    if min(r_max, c_max, cell_cap) < 1:
        raise ValueError("bounds must be positive")
    return TheoremReport(list(iter_main_theorem_checks(r_max, c_max, cell_cap)))
