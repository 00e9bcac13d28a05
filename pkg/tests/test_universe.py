import pytest
from hypothesis import given, settings, strategies as st

from nf_forge.universe import BudgetExceeded, LevelOverflow, SetVal, Universe


def test_level_sizes():
    assert Universe(3, 2).level_sizes == (3, 8, 256)
    assert Universe(4, 2).level_sizes == (4, 16, 65536)
    assert Universe(0, 2).level_sizes == (0, 1, 2)


def test_budget_and_overflow_errors(U3):
    with pytest.raises(BudgetExceeded):
        Universe(5, 2)
    with pytest.raises(BudgetExceeded):
        Universe(3, 3)
    with pytest.raises(ValueError):
        U3.check(SetVal(1, 8))
    with pytest.raises(LevelOverflow):
        list(U3.elements(3))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 255))
def test_format_parse_round_trip(bits):
    U = Universe(3, 2)
    x = SetVal(2, bits)
    assert U.parse(U.format(x)) == x


def test_format_examples(U3):
    assert U3.format(SetVal(1, 5)) == "1:{0,2}"
    assert U3.format(SetVal(2, 0b10110)) == "2:{ {0}, {1}, {2} }"


def test_ordered_pair_is_two_levels_up_and_decodes(U3):
    for a in U3.elements(0):
        for b in U3.elements(0):
            p = U3.mk_opair(a, b)
            assert p.level == 2
            assert U3.decode_pair(p) == (a, b)


def test_usc_ssc_shapes(U3):
    for a in U3.elements(1):
        usc, ssc = U3.usc(a), U3.ssc(a)
        assert usc.level == ssc.level == 2
        assert len(usc) == len(a)
        assert len(ssc) == 2 ** len(a)          # classical: every subset separable
        assert U3.subset(usc, ssc)


def test_similarity_witness_is_a_bijection(U3):
    for a in U3.elements(1):
        for b in U3.elements(1):
            w = U3.similar(a, b, witness=True)
            if len(a) == len(b):
                assert U3.is_similarity(w, a, b)
            else:
                assert w is None
                assert not U3.similar(a, b)


def test_everything_is_finite_and_dedekind_finite(U3):
    for a in U3.elements(1):
        assert U3.is_finite(a) and U3.has_dec_eq(a)
        assert not U3.is_dedekind_infinite(a)


def test_boolean_algebra(U3):
    xs = list(U3.elements(1))
    for a in xs:
        for b in xs:
            assert U3.union(a, b).bits == a.bits | b.bits
            assert U3.inter(a, b).bits == a.bits & b.bits
            assert U3.subset(U3.diff(a, b), a)
            assert U3.separable_in(U3.inter(a, b), a)
