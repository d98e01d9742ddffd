import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twostripe.ggpath import min_extra_pairs
from twostripe.instance import Triviality, TwoStripeInstance, decompose, row_of_minus_a2
from twostripe.oracle import held_karp
from twostripe.solver import (
    AllCheapCycle,
    Branch,
    EqualCostAny,
    GgPlusWrap,
    Infeasible,
    UpperBoundSerpentine,
    compute_m_star,
    decide,
    h_star_from_m_star,
    MStarResult,
    solve,
    solve_via_gg_formula,
    sweep_n,
)

import brute


def unit(n, a1, a2):
    return TwoStripeInstance(n, a1, a2, 0, 1)


@pytest.mark.parametrize(
    "x, r, c, value, branch",
    [(3, 4, 3, -1, Branch.MINUS), (7, 9, 5, 1, Branch.PLUS), (0, 4, 3, None, None)],
)
def test_m_star_examples(x, r, c, value, branch):
    ms = compute_m_star(x, r, c)
    assert ms.value == value and ms.branch == branch


def test_m_star_matches_scan():
    for r in range(2, 45):
        for c in range(2, 25):
            for x in range(r):
                ms = compute_m_star(x, r, c)
                assert ms.value == brute.m_star(x, r, c), (x, r, c)
                if ms.exists:
                    hit_plus = (c + 2 * ms.value - x) % r == 0
                    assert (ms.branch is Branch.PLUS) == hit_plus


def test_m_star_rejects_bad_row():
    with pytest.raises(ValueError):
        compute_m_star(5, 5, 3)


def test_h_star_cases():
    assert h_star_from_m_star(MStarResult(None), 6) == 10
    assert h_star_from_m_star(MStarResult(-2, Branch.PLUS), 6) == 6
    assert h_star_from_m_star(MStarResult(0, Branch.PLUS), 6) == 6
    assert h_star_from_m_star(MStarResult(1, Branch.PLUS), 6) == 8
    assert h_star_from_m_star(MStarResult(2, Branch.PLUS), 6) == 10


@pytest.mark.parametrize(
    "args, h, tag",
    [
        ((12, 3, 1), 3, "gg_plus_wrap"),
        ((12, 3, 2), 4, "upper_bound_serpentine"),
        ((12, 3, 4), 4, "upper_bound_serpentine"),
        ((6, 2, 3), 2, "gg_plus_wrap"),
        ((7, 2, 3), 0, "all_cheap_cycle"),
    ],
)
def test_solve_examples(args, h, tag):
    inst = unit(*args)
    res = solve(inst)
    assert res.h_star == h and res.total_cost == h
    assert res.descriptor.tag == tag
    assert held_karp(inst)[0] == h


def test_solve_45_5_2():
    res = solve(unit(45, 5, 2))
    assert res.x == 7
    assert res.m_star == MStarResult(1, Branch.PLUS)
    assert res.h_star == 7
    assert isinstance(res.descriptor, GgPlusWrap)
    assert res.descriptor.m_eff == 1


def test_solve_infeasible():
    res = solve(unit(12, 3, 6))
    assert not res.feasible
    assert isinstance(res.descriptor, Infeasible)
    assert res.total_cost is None


def test_single_stripe_cost():
    res = solve(TwoStripeInstance(9, 2, 3, 5, 8))
    assert res.triviality is Triviality.SINGLE_STRIPE
    assert isinstance(res.descriptor, AllCheapCycle)
    assert res.total_cost == 45


def test_equal_costs_wrap_general_descriptor():
    res = solve(TwoStripeInstance(12, 3, 4, 5, 5))
    assert res.triviality is Triviality.EQUAL_COSTS
    assert isinstance(res.descriptor, EqualCostAny)
    assert isinstance(res.descriptor.inner, UpperBoundSerpentine)
    assert res.total_cost == 60


def test_weighted_costs_match_held_karp():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(4, 13)
        a1, a2 = rng.sample(range(1, n // 2 + 1), 2) if n >= 6 else (1, 2)
        c1, c2 = sorted(rng.sample(range(0, 20), 2))
        inst = TwoStripeInstance(n, a1, a2, c1, c2)
        hk = held_karp(inst)
        res = solve(inst)
        assert (hk[0] if hk else None) == res.total_cost, inst


def test_decide():
    inst = TwoStripeInstance(12, 3, 4, 2, 7)
    assert solve(inst).total_cost == 44
    assert decide(inst, 44)
    assert not decide(inst, 43)
    assert not decide(unit(12, 3, 6), 10**9)


@pytest.mark.parametrize("args, h", [((45, 5, 2), 7), ((12, 3, 4), 4), ((12, 3, 1), 3)])
def test_gg_formula_examples(args, h):
    assert solve_via_gg_formula(unit(*args)) == h


def test_gg_formula_undefined_on_trivial():
    assert solve_via_gg_formula(unit(12, 3, 6)) is None
    assert solve_via_gg_formula(unit(7, 2, 3)) is None


def test_h_star_agrees_with_reachability_theory():
    # h* = c + 2*mu whenever that beats the serpentine, with mu the least extra pairs
    for n in range(4, 300):
        for a1 in range(2, n // 2 + 1):
            for a2 in range(1, n // 2 + 1):
                if a1 == a2:
                    continue
                inst = unit(n, a1, a2)
                d = decompose(inst)
                if d.g1 == 1 or d.g2 != 1:
                    continue
                res = solve(inst)
                assert d.c <= res.h_star <= 2 * d.c - 2
                x = row_of_minus_a2(inst)
                mu = [min_extra_pairs(t, d.r, d.c) for t in (x, (-x) % d.r)]
                mu = [m for m in mu if m is not None]
                best = min([d.c + 2 * m for m in mu], default=2 * d.c - 2)
                assert res.h_star == min(best, 2 * d.c - 2), inst


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 5000), st.data(), st.integers(2, 50))
def test_scaling_covariance(n, data, k):
    a1 = data.draw(st.integers(1, n // 2))
    a2 = data.draw(st.integers(1, n // 2).filter(lambda v: v != a1))
    base = solve(unit(n, a1, a2))
    scaled = solve(TwoStripeInstance(n, a1, a2, 0, k))
    if base.feasible:
        assert scaled.total_cost == k * base.total_cost
        assert scaled.h_star == base.h_star
    else:
        assert not scaled.feasible


def test_sweep_matches_scalar():
    for n in range(4, 150):
        a1, a2, h_main, h_gg, c = sweep_n(n)
        assert np.array_equal(h_main, h_gg)
        got = {(int(p), int(q)): int(h) for p, q, h in zip(a1, a2, h_main)}
        want = {}
        for p in range(1, n // 2 + 1):
            for q in range(1, n // 2 + 1):
                if p == q:
                    continue
                res = solve(unit(n, p, q))
                if res.triviality is Triviality.NON_TRIVIAL:
                    want[(p, q)] = res.h_star
                    assert solve_via_gg_formula(unit(n, p, q)) == res.h_star
        assert got == want, n


def test_sweep_empty_for_prime():
    assert all(len(col) == 0 for col in sweep_n(13))
