import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from equidiff.divisors import rr_dim_genus0
from equidiff.errors import InconsistentProfileError
from equidiff.ramcalc import (
    BranchPoint,
    CyclicPData,
    Prop2Decomposition,
    Prop2Verdict,
    RamificationProfile,
    Verdict,
    as_genus,
    different_exponent_cyclic_p,
    faithfulness_classifier,
    hurwitz_genus,
    invariant_dimension,
    invariant_dimension_cyclic_p,
    prop2_classifier,
    ramification_divisor_tame,
)


def jump_multisets(p, total_max):
    """Nonincreasing tuples of positive jumps prime to p with sum <= total_max."""

    def rec(remaining, largest):
        yield ()
        for N in range(min(remaining, largest), 0, -1):
            if N % p:
                for rest in rec(remaining - N, N):
                    yield (N,) + rest

    return [t for t in rec(total_max, total_max) if t]


# -- tame divisors and Hurwitz


def test_tame_divisor_unramified():
    assert ramification_divisor_tame([1], 4).is_zero()


def test_tame_divisor_two_involution_points():
    R = ramification_divisor_tame([2, 2], 2)
    assert R.degree() == 2
    assert hurwitz_genus(2, 0, R.degree()) == 0
    odd = ramification_divisor_tame([2, 2, 2], 2)
    assert odd.degree() == 3
    with pytest.raises(InconsistentProfileError, match="parity"):
        hurwitz_genus(2, 0, odd.degree())


def test_tame_divisor_order5():
    R = ramification_divisor_tame([5, 5], 5)
    assert R.degree() == 8
    # 2 g_X - 2 = 5 * (-2) + 8
    assert hurwitz_genus(5, 0, 8) == 0
    assert hurwitz_genus(5, 0, ramification_divisor_tame([5, 5, 5], 5).degree()) == 2


def test_tame_divisor_fiber_multiplicity():
    R = ramification_divisor_tame([3], 6)
    assert len(R) == 2 and all(c == 2 for _, c in R.items())
    with pytest.raises(InconsistentProfileError):
        ramification_divisor_tame([4], 6)


def test_different_exponent():
    assert different_exponent_cyclic_p(3, 2) == 4
    assert different_exponent_cyclic_p(1, 2) == 2
    assert different_exponent_cyclic_p(4, 3) == 10
    with pytest.raises(InconsistentProfileError):
        different_exponent_cyclic_p(6, 3)


def test_hurwitz_examples():
    assert hurwitz_genus(2, 0, 4) == 1
    assert hurwitz_genus(1, 7, 0) == 7
    assert hurwitz_genus(3, 0, 10) == 3
    with pytest.raises(InconsistentProfileError, match="negative"):
        hurwitz_genus(3, 0, 2)


# -- cyclic p data


def test_as_genus_examples():
    for r in (1, 3, 5, 7, 9):
        assert as_genus(2, [r]) == (r - 1) // 2
    assert as_genus(3, [2]) == 1
    assert as_genus(3, [4]) == 3


def test_as_genus_matches_hurwitz():
    for p in (2, 3, 5, 7):
        for jumps in jump_multisets(p, 14):
            data = CyclicPData(p, jumps)
            assert as_genus(p, data) == data.profile().g_X


def test_cyclic_data_rejects_p_divisible_jump():
    with pytest.raises(InconsistentProfileError, match="divisible"):
        CyclicPData(3, (3,))
    with pytest.raises(InconsistentProfileError):
        CyclicPData(3, ())
    with pytest.raises(ValueError):
        as_genus(5, CyclicPData(3, (2,)))


def test_invariant_dimension_examples():
    assert invariant_dimension(5, 0) == 5
    assert invariant_dimension(0, 3) == 2
    assert invariant_dimension(0, 1) == 0


def test_invariant_dimension_genus0_is_riemann_roch():
    for k in range(0, 40):
        assert invariant_dimension(0, k) == rr_dim_genus0(-2 + k)


def test_invariant_dimension_cyclic_p_examples():
    assert invariant_dimension_cyclic_p(2, [3]) == 1
    assert invariant_dimension_cyclic_p(3, [2]) == 1
    assert invariant_dimension_cyclic_p(3, [4]) == 2


def test_decomposition():
    dec = Prop2Decomposition.from_jumps(CyclicPData(5, (13, 2, 7)))
    assert dec.pairs == ((2, 3), (0, 2), (1, 2))
    assert (dec.S, dec.T, dec.N, dec.r) == (3, 7, 22, 3)
    with pytest.raises(ValueError):
        Prop2Decomposition(3, ((1, 0),))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prop2_exhaustive(p):
    """Inequality, equality case and the proof's terminal decomposition for
    every multiset of jumps with N <= 30."""
    for jumps in jump_multisets(p, 30):
        data = CyclicPData(p, jumps)
        g = as_genus(p, data)
        fixed = invariant_dimension_cyclic_p(p, data)
        dec = data.decomposition()
        assert fixed == dec.fixed_dimension()
        assert dec.T >= dec.r
        assert fixed <= g
        trivial = prop2_classifier(p, data) is Prop2Verdict.TRIVIAL_ACTION
        assert (fixed == g) == trivial
        if fixed == g and p >= 3:
            assert dec.r == 1 and dec.S == 0 and (dec.T == 1 or p == 3)


def test_prop2_classifier_examples():
    assert prop2_classifier(2, [5]) is Prop2Verdict.TRIVIAL_ACTION
    assert prop2_classifier(3, [2]) is Prop2Verdict.TRIVIAL_ACTION
    assert prop2_classifier(5, [2]) is Prop2Verdict.NONTRIVIAL_ACTION
    assert as_genus(5, [2]) == 2


# -- profiles and the faithfulness classifier


def test_profile_validation():
    with pytest.raises(InconsistentProfileError, match="tame"):
        RamificationProfile(4, 3, 0, (BranchPoint(4, 4),))
    with pytest.raises(InconsistentProfileError, match="wild"):
        RamificationProfile(2, 2, 0, (BranchPoint(2, 1),))
    with pytest.raises(InconsistentProfileError):
        RamificationProfile(6, 0, 0, (BranchPoint(4, 3),))
    with pytest.raises(InconsistentProfileError):
        RamificationProfile(2, 4, 0)


def test_profile_json_round_trip():
    data = {"n": 2, "p": 2, "gY": 0, "branch": [{"e": 2, "d": 4}]}
    prof = RamificationProfile.from_dict(data)
    assert prof.to_dict() == data
    assert CyclicPData.from_dict({"p": 3, "jumps": [4]}).to_dict() == {"p": 3, "jumps": [4]}
    with pytest.raises(InconsistentProfileError, match="malformed"):
        RamificationProfile.from_dict({"p": 2})


def test_classifier_tame_genus2():
    prof = RamificationProfile(5, 0, 0, (BranchPoint(5, 4),) * 3)
    assert prof.g_X == 2
    assert prof.deg_floor == 0
    assert faithfulness_classifier(prof, 2) is Verdict.FAITHFUL_GUARANTEED


def test_classifier_genus0():
    prof = RamificationProfile(2, 0, 0, (BranchPoint(2, 1),) * 2)
    assert prof.g_X == 0
    assert faithfulness_classifier(prof) is Verdict.POSSIBLY_UNFAITHFUL


def test_classifier_exceptional_case():
    prof = CyclicPData(2, (11,)).profile()
    assert prof.g_X == 5 and prof.wild
    assert faithfulness_classifier(prof, 5) is Verdict.POSSIBLY_UNFAITHFUL


def test_classifier_rejects_wrong_genus():
    prof = RamificationProfile(5, 0, 0, (BranchPoint(5, 4),) * 3)
    with pytest.raises(InconsistentProfileError):
        faithfulness_classifier(prof, 3)


@st.composite
def profiles(draw, tame_only=False):
    n = draw(st.integers(2, 24))
    p = draw(st.sampled_from([0, 2, 3, 5, 7]))
    g_Y = draw(st.integers(0, 3))
    idx = [e for e in range(2, n + 1) if n % e == 0]
    branch = []
    if idx:
        for e in draw(st.lists(st.sampled_from(idx), max_size=6)):
            if p and e % p == 0:
                if tame_only:
                    continue
                branch.append(BranchPoint(e, e + draw(st.integers(0, 3 * e))))
            else:
                branch.append(BranchPoint(e, e - 1))
    prof = RamificationProfile(n, p, g_Y, tuple(branch))
    try:
        prof.g_X
    except InconsistentProfileError:
        assume(False)
    return prof


@settings(max_examples=400, deadline=None)
@given(profiles(tame_only=True))
def test_tame_profiles_fix_only_base_genus(prof):
    assert prof.deg_floor == 0
    assert prof.invariant_dimension == prof.g_Y
    if prof.g_X >= 2:
        assert prof.g_X > prof.g_Y
        assert faithfulness_classifier(prof) is Verdict.FAITHFUL_GUARANTEED


@settings(max_examples=400, deadline=None)
@given(profiles())
def test_trivial_action_on_differentials_forces_wild_rational_base(prof):
    """If the predicted fixed dimension equals g_X >= 2 the cover is wild and
    g_Y = 0; the bound (2n - 2) g_Y <= 2(n - 2) is tested whenever the floor
    divisor is nonzero."""
    g, n = prof.g_X, prof.n
    if prof.deg_floor > 0 and prof.invariant_dimension == g:
        assert (2 * n - 2) * prof.g_Y <= 2 * (n - 2)
    if g >= 2 and prof.invariant_dimension == g:
        assert prof.wild and prof.g_Y == 0
