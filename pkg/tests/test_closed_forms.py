from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from thetadp.closed_forms import (
    Case,
    amgm_bound,
    chromatic_poly_cycle,
    chromatic_poly_theta,
    dp_theta3,
    dual_dp_generalized,
    sufficiency_check,
)
from thetadp.optimizer import maximize, minimize
from thetadp.theta import ThetaSpec, canonicalize

from oracles import all_signatures, cycle_colorings, proper_colorings, signature_colorings, theta_graph

COUNTER_1 = ThetaSpec((2, 3, 3, 3, 2))
COUNTER_2 = ThetaSpec((2, 3, 3, 3, 3, 3, 2, 2))


def small_specs(n_max, l_max):
    seen = set()
    for n in range(2, n_max + 1):
        for xs in product(range(1, l_max + 1), repeat=n):
            if xs.count(1) > 1:
                continue
            spec = canonicalize(xs)
            if spec not in seen:
                seen.add(spec)
                yield spec


@pytest.mark.parametrize("n, m, want", [(3, 3, 6), (4, 3, 18), (1, 3, 0), (1, 7, 0)])
def test_cycle_examples(n, m, want):
    assert chromatic_poly_cycle(n, m) == want


@pytest.mark.parametrize("n", range(3, 8))
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_cycle_matches_brute_force(n, m):
    assert chromatic_poly_cycle(n, m) == cycle_colorings(n, m)


@pytest.mark.parametrize("spec, m, want", [(COUNTER_1, 3, 258), (ThetaSpec((1, 2, 2)), 3, 6), (ThetaSpec((2, 2)), 3, 18)])
def test_chromatic_examples(spec, m, want):
    assert chromatic_poly_theta(spec, m) == want


@pytest.mark.parametrize("spec", list(small_specs(3, 3)))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_chromatic_matches_brute_force(spec, m):
    nv, edges, _ = theta_graph(spec.lengths)
    assert chromatic_poly_theta(spec, m) == proper_colorings(nv, edges, m)


@pytest.mark.parametrize(
    "lengths, want, case",
    [((1, 2, 2), 6, Case.THETA3_I), ((1, 2, 3), 15, Case.THETA3_II), ((2, 2, 2), 18, Case.THETA3_III)],
)
def test_dp_theta3_examples(lengths, want, case):
    res = dp_theta3(ThetaSpec(lengths), 3)
    assert (res.value, res.case) == (want, case)
    assert int(res) == want


@pytest.mark.parametrize("lengths", [(1, 2, 2), (1, 2, 3), (2, 2, 2), (2, 3, 2), (1, 3, 3)])
def test_dp_theta3_matches_signature_brute_force(lengths):
    spec = ThetaSpec(lengths)
    want = min(signature_colorings(spec.lengths, 3, sig) for sig in all_signatures(3, 3))
    assert dp_theta3(spec, 3).value == want


def test_dp_theta3_small_m():
    assert dp_theta3(ThetaSpec((2, 2, 2)), 1).value == 0
    assert dp_theta3(ThetaSpec((2, 2, 2)), 2).value == 0
    assert dp_theta3(ThetaSpec((2, 2, 2)), 2).case == Case.ZERO
    with pytest.raises(ValueError):
        dp_theta3(ThetaSpec((2, 2)), 3)


@pytest.mark.parametrize("spec", [s for s in small_specs(3, 5) if s.n == 3])
@pytest.mark.parametrize("m", [2, 3])
def test_dp_theta3_equals_search(spec, m):
    assert dp_theta3(spec, m).value == minimize(spec, m).optimum


@pytest.mark.parametrize("lengths, want", [((2, 2), 18), ((2, 3), 33), ((2, 3, 3, 3, 2), 429)])
def test_dual_examples(lengths, want):
    assert dual_dp_generalized(ThetaSpec(lengths), 3).value == want


def test_dual_t1_is_chromatic():
    for spec in small_specs(4, 4):
        if spec.same_parity:
            res = dual_dp_generalized(spec, 3)
            assert res.case == Case.DUAL_SAME
            assert res.value == chromatic_poly_theta(spec, 3)


@pytest.mark.parametrize("lengths", [(2, 2), (2, 3), (1, 2), (1, 2, 3)])
def test_dual_matches_signature_brute_force(lengths):
    spec = ThetaSpec(lengths)
    want = max(signature_colorings(spec.lengths, 3, sig) for sig in all_signatures(spec.n, 3))
    assert dual_dp_generalized(spec, 3).value == want


def test_dual_at_m2_has_no_division_failure():
    for spec in small_specs(4, 4):
        assert dual_dp_generalized(spec, 2).value == maximize(spec, 2).optimum


def test_amgm_examples():
    assert amgm_bound(COUNTER_1, 3) == 258
    assert amgm_bound(COUNTER_2, 3) == chromatic_poly_theta(COUNTER_2, 3) == 2226
    assert amgm_bound(ThetaSpec((2, 2)), 3) <= 15
    with pytest.raises(ValueError):
        amgm_bound(COUNTER_1, 2)


def test_sufficiency_examples():
    assert sufficiency_check(COUNTER_1, 3)
    assert sufficiency_check(COUNTER_2, 3)
    rep = sufficiency_check(ThetaSpec((2, 2)), 3)
    assert not rep and rep.chromatic == 18


@pytest.mark.parametrize("spec", list(small_specs(4, 4)))
def test_sandwich(spec):
    lo, hi = minimize(spec, 3).optimum, maximize(spec, 3).optimum
    assert amgm_bound(spec, 3) <= lo <= chromatic_poly_theta(spec, 3) <= hi


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=2, max_size=8).filter(lambda xs: xs.count(1) <= 1), st.integers(3, 9))
def test_sufficiency_never_overshoots(xs, m):
    # the bound is a lower bound on P_DP <= P, so it never exceeds P
    spec = canonicalize(xs)
    assert amgm_bound(spec, m) <= chromatic_poly_theta(spec, m) <= dual_dp_generalized(spec, m).value
