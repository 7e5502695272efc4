from fractions import Fraction
import math

import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from fhset.bounds import (
    NEAR_OPTIMAL,
    NOT_OPTIMAL,
    OPTIMAL,
    UNDEFINED,
    ahc_rational_sides,
    ahc_sides,
    ahc_verdict,
    lg_bound,
    lg_verdict,
    mhc_verdict,
    peng_fan_holds,
    peng_fan_sides,
)
from fhset.constructions import gen_cyclotomic_a, gen_kumar, gen_nhz, gen_theorem17
from fhset.core import FhsSet, full_report


def verdicts(s):
    rep = full_report(s)
    N, M, L = s.shape
    return mhc_verdict(rep, N, M, L), ahc_verdict(rep, N, M, L)


@st.composite
def fhs_sets(draw, max_n=20, max_m=6, max_l=5):
    N = draw(st.integers(2, max_n))
    M = draw(st.integers(1, max_m))
    L = draw(st.integers(2, max_l))
    return FhsSet(draw(arrays(np.int64, (L, N), elements=st.integers(0, M - 1))), M)


def test_lg_bound_examples():
    assert lg_bound(13, 13) == 0
    assert lg_bound(13, 4) == 3
    assert lg_bound(9, 3) == 3


@given(st.integers(2, 400), st.integers(1, 60))
def test_lg_bound_is_exact_ceiling(N, M):
    b = N % M
    assert lg_bound(N, M) == math.ceil(Fraction((N - b) * (N + b - M), M * (N - 1)))


def test_lg_bound_attained_by_cyclotomic_a_members():
    rep = full_report(gen_cyclotomic_a(13, 4))
    assert rep.auto_max == (3, 3, 3, 3)
    assert all(lg_verdict(h, 13, 4).verdict == OPTIMAL for h in rep.auto_max)


def test_peng_fan_kumar_pair():
    rep = full_report(gen_kumar(3))
    ha, hc = rep.H_a, rep.H_c
    assert peng_fan_sides(9, 3, 3, ha, hc) == (24 * ha + 54 * hc, 216)
    assert peng_fan_holds(9, 3, 3, ha, hc)
    assert not peng_fan_holds(9, 3, 3, ha - 1, hc - 1)


def test_peng_fan_extremes():
    assert peng_fan_holds(9, 3, 3, 9, 9)
    assert not peng_fan_holds(9, 3, 3, -1, -1)


def test_peng_fan_negative_pairs_evaluated_literally():
    # H_a = 0 with a large H_c: the pair one step below still satisfies the
    # inequality, so the set is not optimal
    s = gen_nhz(2, 6, 2)
    mhc, _ = verdicts(s)
    assert full_report(s).H_a == 0
    assert mhc.verdict == NOT_OPTIMAL


def test_mhc_verdict_examples():
    mhc, _ = verdicts(gen_cyclotomic_a(13, 4))
    assert mhc.verdict == NEAR_OPTIMAL
    assert verdicts(gen_kumar(3))[0].verdict == OPTIMAL
    assert verdicts(gen_theorem17(35, 2))[0].verdict == OPTIMAL


def test_mhc_witnesses_recompute_verdict():
    for s in (gen_cyclotomic_a(13, 4), gen_kumar(5), gen_nhz(3, 7, 2)):
        v = verdicts(s)[0]
        w = v.witnesses
        sides = [peng_fan_sides(w["N"], w["M"], w["L"], w["H_a"] - d, w["H_c"] - d)[0] for d in (0, 1, 2)]
        assert sides == [w["lhs"], w["lhs_minus_1"], w["lhs_minus_2"]]
        ok = [x >= w["rhs"] for x in sides]
        expect = OPTIMAL if ok[0] and not ok[1] else NEAR_OPTIMAL if ok[1] and not ok[2] else NOT_OPTIMAL
        assert v.verdict == expect


def test_ahc_cyclotomic_a_equality():
    s = gen_cyclotomic_a(13, 4)
    rep = full_report(s)
    assert 4 * (rep.S_a + rep.S_c) == 2496
    assert ahc_sides(rep, 13, 4, 4) == (2496, 2496)
    assert verdicts(s)[1].verdict == OPTIMAL


def test_ahc_two_identical_constants():
    N = 5
    s = FhsSet([[0] * N, [0] * N], 2)
    rep = full_report(s)
    assert rep.S_a + rep.S_c == 2 * N * (N - 1) + 2 * N * N
    lhs, rhs = ahc_sides(rep, N, 2, 2)
    assert lhs > rhs
    assert verdicts(s)[1].verdict == NOT_OPTIMAL


def test_undefined_verdicts_for_single_sequence():
    s = FhsSet([[0, 1, 2]], 3)
    rep = full_report(s)
    assert mhc_verdict(rep, 3, 3, 1).verdict == UNDEFINED
    assert ahc_verdict(rep, 3, 3, 1).verdict == UNDEFINED


@settings(max_examples=200, deadline=None)
@given(fhs_sets())
def test_integer_and_rational_ahc_agree(s):
    N, M, L = s.shape
    rep = full_report(s)
    ilhs, irhs = ahc_sides(rep, N, M, L)
    rlhs, rrhs = ahc_rational_sides(rep, N, M, L)
    assert (ilhs == irhs) == (rlhs == rrhs)
    assert (ilhs >= irhs) and (rlhs >= rrhs)


@settings(max_examples=200, deadline=None)
@given(fhs_sets())
def test_bounds_are_never_violated(s):
    N, M, L = s.shape
    rep = full_report(s)
    assert all(h >= lg_bound(N, M) for h in rep.auto_max)
    assert peng_fan_holds(N, M, L, rep.H_a, rep.H_c)
    lhs, rhs = ahc_sides(rep, N, M, L)
    assert lhs >= rhs


@settings(max_examples=100, deadline=None)
@given(fhs_sets(), st.randoms())
def test_verdicts_invariant_under_relabelling(s, rnd):
    perm = list(range(s.M))
    rnd.shuffle(perm)
    a, b = verdicts(s), verdicts(s.relabel(perm))
    assert a[0].verdict == b[0].verdict
    assert a[1].verdict == b[1].verdict


@settings(max_examples=100, deadline=None)
@given(fhs_sets())
def test_uniform_sets_are_ahc_optimal(s):
    counts = np.bincount(s.symbols.ravel(), minlength=s.M)
    if counts.min() == counts.max():
        assert verdicts(s)[1].verdict == OPTIMAL
