import pytest

from twostripe.instance import Triviality, TwoStripeInstance, decompose
from twostripe.materialize import (
    TourError,
    emit_lower_bound_tour_y,
    emit_tour,
    emit_upper_bound_tour,
    iter_tour,
    validate_tour,
)
from twostripe.solver import solve

import brute


def unit(n, a1, a2):
    return TwoStripeInstance(n, a1, a2, 0, 1)


@pytest.mark.parametrize(
    "r, c, expected",
    [
        (4, 2, [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1), (2, 1), (1, 1), (0, 1)]),
        (4, 3, [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1), (2, 1), (1, 1),
                (1, 2), (2, 2), (3, 2), (0, 2), (0, 1)]),
        (2, 2, [(0, 0), (1, 0), (1, 1), (0, 1)]),
    ],
)
def test_upper_bound_examples(r, c, expected):
    assert [tuple(p) for p in emit_upper_bound_tour(r, c)] == expected


def test_upper_bound_is_cycle_with_2c_minus_2_horizontals():
    for r in range(2, 31):
        for c in range(2, 31):
            cells = emit_upper_bound_tour(r, c)
            assert len(set(cells)) == r * c == len(cells)
            closed = cells + cells[:1]
            horizontal = 0
            for p, q in zip(closed, closed[1:]):
                assert brute.cylinder_adjacent(p, q, r, c), (r, c, p, q)
                horizontal += p.col != q.col
            assert horizontal == 2 * (c - 1)


def test_upper_bound_rejects_degenerate():
    with pytest.raises(ValueError):
        emit_upper_bound_tour(1, 3)


def test_lower_bound_tour_example():
    inst = unit(6, 2, 3)
    assert emit_lower_bound_tour_y(inst, 1) == [0, 4, 2, 5, 1, 3]
    with pytest.raises(TourError):
        emit_lower_bound_tour_y(inst, 0)
    with pytest.raises(TourError):
        emit_lower_bound_tour_y(inst, 3)


def test_lower_bound_tours_cost_g1():
    for n in range(4, 80):
        for a1 in range(2, n // 2 + 1):
            for a2 in range(1, n // 2 + 1):
                if a1 == a2:
                    continue
                inst = unit(n, a1, a2)
                d = decompose(inst)
                if d.g2 != 1 or d.g1 == 1:
                    continue
                for y in range(d.g1 + 1):
                    if ((2 * y - d.g1) * a1 + d.g1 * a2) % n:
                        continue
                    chk = validate_tour(inst, emit_lower_bound_tour_y(inst, y))
                    assert chk.hamiltonian and chk.count_a2 == d.g1
                    assert solve(inst).h_star == d.g1


def test_validate_tour_examples():
    inst = unit(6, 2, 3)
    good = validate_tour(inst, [0, 2, 4, 1, 5, 3])
    assert good.hamiltonian and good.count_a1 == 4 and good.count_a2 == 2 and good.cost == 2
    bad = validate_tour(inst, [0, 1, 2, 3, 4, 5])
    assert not bad.hamiltonian and bad.bad_steps == 6
    short = validate_tour(inst, [0, 2, 4])
    assert not short.hamiltonian and short.length == 3
    dup = validate_tour(inst, [0, 2, 0, 2, 4, 1])
    assert not dup.hamiltonian


def test_validate_weighted_cost():
    inst = TwoStripeInstance(12, 3, 4, 2, 7)
    res = solve(inst)
    chk = validate_tour(inst, emit_tour(inst, res))
    assert chk.hamiltonian and chk.cost == res.total_cost == 44


def test_emit_all_cheap_cycle():
    inst = unit(7, 2, 3)
    assert emit_tour(inst, solve(inst)) == [0, 2, 4, 6, 1, 3, 5]


def test_emit_infeasible_raises():
    inst = unit(12, 3, 6)
    with pytest.raises(TourError):
        emit_tour(inst, solve(inst))


def test_emitted_tours_are_optimal_and_balanced():
    for n in range(4, 90):
        for a1 in range(1, n // 2 + 1):
            for a2 in range(1, n // 2 + 1):
                if a1 == a2:
                    continue
                inst = unit(n, a1, a2)
                res = solve(inst)
                if not res.feasible:
                    continue
                chk = validate_tour(inst, iter_tour(inst, res))
                assert chk.hamiltonian, inst
                assert chk.count_a2 == res.h_star and chk.cost == res.total_cost
                if res.triviality is Triviality.NON_TRIVIAL and 2 * a2 != n:
                    # net winding across the a2 cuts is 0 or one full turn
                    g1 = res.decomposition.g1
                    assert chk.plus_a2 - chk.minus_a2 in (0, g1, -g1), inst


def test_equal_cost_tour():
    inst = TwoStripeInstance(45, 5, 2, 3, 3)
    res = solve(inst)
    chk = validate_tour(inst, emit_tour(inst, res))
    assert chk.hamiltonian and chk.cost == 135
