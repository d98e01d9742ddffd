"""GG paths on ``r x c`` cylinders and their reachable end-row sets.

A GG path starts at ``(0, 0)``, spends all of its ``2m+1`` horizontal
edges between the first two columns, then crosses every later column cut
exactly once.  ``A(r, c, m)`` is the set of last-column rows such a path
can end in using at most ``(c-1) + 2m`` horizontal edges; it equals
``{c+2m-2i mod r : 0 <= i <= c+2m}``.

Rows grow downward: ``DOWN`` is ``row + 1`` and ``UP`` is ``row - 1``
(the wraparound ``0 -> r-1`` is an up move).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .congruence import smallest_solution_at_least
from .instance import CylinderCoord


class Direction(enum.Enum):
    DOWN = "down"
    UP = "up"


def _check_grid(r, c):
    if r < 2 or c < 2:
        raise ValueError(f"cylinder needs r >= 2 and c >= 2, got {r}x{c}")


def _nearest_reachable_offset(x: int, r: int, c: int) -> Optional[int]:
    """Smallest ``|t|`` over integers ``t = x (mod r)`` with ``t = c (mod 2)``.

    Those ``t`` form one class modulo ``lcm(r, 2)``; ``None`` if the class is
    empty (even ``r`` with mismatched parity).
    """
    if r % 2 == 0:
        if (x - c) % 2:
            return None
        t, period = x % r, r
    else:
        t = x % r
        if (t - c) % 2:
            t += r
        period = 2 * r
    return min(t, period - t)


def a_set_contains(x: int, r: int, c: int, m: int) -> bool:
    """O(1) membership test for ``x in A(r, c, m)``."""
    _check_grid(r, c)
    if m < 0:
        raise ValueError("m must be nonnegative")
    d = _nearest_reachable_offset(x, r, c)
    return d is not None and d <= c + 2 * m


def a_set_enumerate(r: int, c: int, m: int) -> list[int]:
    """Sorted rows of ``A(r, c, m)`` straight from the defining formula."""
    _check_grid(r, c)
    span = c + 2 * m
    return sorted({(span - 2 * i) % r for i in range(span + 1)})


def min_extra_pairs(x: int, r: int, c: int) -> Optional[int]:
    """Least ``m >= 0`` with ``x in A(r, c, m)``; ``None`` if no ``m`` works."""
    _check_grid(r, c)
    d = _nearest_reachable_offset(x, r, c)
    if d is None:
        return None
    # d and c share parity, so the division is exact
    return max(0, (d - c) // 2)


def max_extra_pairs(r: int) -> int:
    return (r - 1) // 2


@dataclass(frozen=True)
class GgParams:
    """Concrete GG path.

    ``second_col_end`` is the row where the path leaves column 1; ``k`` of the
    later columns are swept up-first (the earliest ones), each shifting the
    end row by +1, the rest down-first (-1).
    """

    m: int
    first_col_dir: Direction
    second_col_end: int
    k: int

    def end_row(self, r: int, c: int) -> int:
        return (self.second_col_end + 2 * self.k - (c - 2)) % r

    def validate(self, r: int, c: int) -> None:
        _check_grid(r, c)
        if self.m < 0 or 2 * self.m + 1 > r:
            raise ValueError(f"m={self.m} does not fit in {r} rows")
        if not 0 <= self.k <= c - 2:
            raise ValueError(f"k={self.k} outside [0, {c - 2}]")
        if self.second_col_end not in second_column_ends(r, self.m, self.first_col_dir):
            raise ValueError(
                f"row {self.second_col_end} is not a column-1 exit for "
                f"m={self.m}, {self.first_col_dir.value}"
            )


def second_column_ends(r: int, m: int, first_col_dir: Direction) -> tuple[int, ...]:
    """Rows where a GG path can leave column 1, given its first move."""
    if m == 0:
        far = 2 % r if first_col_dir is Direction.UP else (r - 2) % r
        return (0, far) if far else (0,)
    if first_col_dir is Direction.UP:
        return ((2 * m + 2) % r,)
    return ((r - 2 * m - 2) % r,)


def _first_two_columns_down(r: int, m: int, end: int) -> Iterator[tuple[int, int]]:
    # column 0 straight down to the alternating block
    start = r - 2 * m - 1
    for row in range(start):
        yield row, 0
    # 2m+1 horizontal rungs on rows start..r-1
    for i in range(2 * m + 1):
        row = start + i
        if i % 2 == 0:
            yield row, 0
            yield row, 1
        else:
            yield row, 1
            yield row, 0
    # leftover prefix 0..start-1 of column 1; with m = 0 it may run either way
    if m == 0 and end == 0 and start > 0:
        for row in range(start - 1, -1, -1):
            yield row, 1
    else:
        for row in range(start):
            yield row, 1


def iter_gg_path(r: int, c: int, params: GgParams) -> Iterator[CylinderCoord]:
    """Stream the ``r*c`` cells of a GG path starting at ``(0, 0)``."""
    params.validate(r, c)
    if params.first_col_dir is Direction.DOWN:
        for row, col in _first_two_columns_down(r, params.m, params.second_col_end):
            yield CylinderCoord(row, col)
    else:
        # the up variant mirrors the down variant through row 0
        mirrored = (-params.second_col_end) % r
        for row, col in _first_two_columns_down(r, params.m, mirrored):
            yield CylinderCoord((-row) % r, col)
    row = params.second_col_end
    for col in range(2, c):
        step = -1 if col - 2 < params.k else 1
        for i in range(r):
            yield CylinderCoord((row + step * i) % r, col)
        row = (row - step) % r


def emit_gg_path(r: int, c: int, params: GgParams) -> list[CylinderCoord]:
    return list(iter_gg_path(r, c, params))


class GgParamsError(RuntimeError):
    """No GG variant reaches the requested row; signals an internal inconsistency."""


# m = 0 exits in preference order, each with the first move that produces it
def _param_candidates(r: int, m: int) -> list[tuple[Direction, int]]:
    if m == 0:
        return [(Direction.DOWN, 0), (Direction.UP, 2 % r), (Direction.DOWN, (r - 2) % r)]
    return [(Direction.UP, (2 * m + 2) % r), (Direction.DOWN, (r - 2 * m - 2) % r)]


def gg_tour_params(x: int, r: int, c: int, m: int) -> GgParams:
    """Parameters of a GG path with ``m`` extra pairs ending at ``(x, c-1)``.

    For each candidate column-1 exit ``e`` solve ``2k = x - e + (c-2) (mod r)``
    for the least ``k >= 0`` and take the first candidate with ``k <= c-2``.
    """
    _check_grid(r, c)
    if not 0 <= x < r:
        raise ValueError(f"row {x} outside [0, {r})")
    if m < 0 or 2 * m + 1 > r:
        raise ValueError(f"m={m} does not fit in {r} rows")
    for d, e in _param_candidates(r, m):
        k = smallest_solution_at_least(2, x - e + (c - 2), r, 0)
        if k is not None and k <= c - 2:
            return GgParams(m, d, e, k)
    raise GgParamsError(f"no GG path with m={m} reaches row {x} on a {r}x{c} cylinder")


def gg_variants(r: int, m: int) -> Iterator[tuple[Direction, int]]:
    seen = set()
    for d in (Direction.DOWN, Direction.UP):
        for e in second_column_ends(r, m, d):
            if (d, e) not in seen:
                seen.add((d, e))
                yield d, e


def enumerate_gg_paths(r: int, c: int, max_m: int) -> Iterator[tuple[GgParams, int, int]]:
    """Build every GG path with up to ``max_m`` extra pairs.

    Later-column sweeps are canonicalized to "first ``k`` columns up", since
    only the count of up-first columns moves the end row.  Each path is
    actually walked; the reported end row and horizontal-edge count come
    from the walk, not from the closed form.
    """
    _check_grid(r, c)
    if r * c > 100_000:
        raise ValueError("grid too large to enumerate")
    if not 0 <= max_m <= max_extra_pairs(r):
        raise ValueError(f"max_m must lie in [0, {max_extra_pairs(r)}]")
    for m in range(max_m + 1):
        for d, e in gg_variants(r, m):
            for k in range(c - 1):
                params = GgParams(m, d, e, k)
                cells = emit_gg_path(r, c, params)
                horizontal = sum(
                    1 for p, q in zip(cells, cells[1:]) if p.col != q.col
                )
                yield params, cells[-1].row, horizontal
