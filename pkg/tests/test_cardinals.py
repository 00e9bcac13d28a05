import itertools

import pytest

from nf_forge.cardinals import (OVERFLOW, Arithmetic, NotACardinal, SymCardinal, capacity,
                                sym_add, sym_exp2, sym_mul, sym_succ, sym_t)
from nf_forge.universe import LevelOverflow, SetVal, Universe


def test_overflow_examples_at_level_two(U3, A3):
    c2, c3 = A3.numeral("two", 2), A3.numeral("three", 2)
    lam = SetVal(2, 0)
    assert A3.add(c2, c2) == lam
    assert A3.succ(c3) == lam
    assert A3.mul(c2, c2) == lam


def test_F_and_SF_at_level_two(A3):
    sizes = [A3.sym_size(k).size for k in A3.F(2)]
    assert sizes == [0, 1, 2, 3]
    assert len(A3.SF(2)) == 5                 # SF also contains the overflow Λ
    assert capacity(A3.U, 2) == 3


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_size_oracle_agrees_with_extensional_engine(n):
    U = Universe(n, 2)
    A = Arithmetic(U)
    Fl = A.F_and_lambda(2)
    for a in Fl:
        assert A.sym_size(A.succ(a)) == sym_succ(U, A.sym_size(a))
        for b in Fl:
            assert A.sym_size(A.add(a, b)) == sym_add(U, A.sym_size(a), A.sym_size(b))
            assert A.sym_size(A.mul(a, b)) == sym_mul(U, A.sym_size(a), A.sym_size(b))


def test_exp_and_t_oracles(A3):
    U = A3.U
    for k in A3.F(3):
        s = A3.sym_size(k)
        assert A3.sym_size(A3.exp2(k)) == sym_exp2(U, s)
    for k in A3.F(2):
        assert A3.sym_size(A3.t_op(k)) == sym_t(U, A3.sym_size(k))


def test_exp_needs_level_three(A3):
    with pytest.raises(LevelOverflow):
        A3.exp2(A3.numeral("two", 2))
    assert A3.describe(A3.exp2(A3.numeral("one", 3))) == "C(level=3, size=2)"


def test_level_four_representatives(A3):
    assert str(A3.t_rep(A3.numeral("two", 3))) == "C(level=4, size=2)"
    assert str(A3.exp2_rep(A3.numeral("two", 3))) == "C(level=3, size=4)"


def test_sym_overflow_is_absorbing(U3):
    lam = SymCardinal(2, OVERFLOW)
    one = SymCardinal(2, 1)
    assert sym_succ(U3, lam).overflow
    assert sym_add(U3, lam, one).overflow
    assert sym_mul(U3, one, lam).overflow


def test_not_a_cardinal(A3):
    # {{0}} is not closed under similarity
    with pytest.raises(NotACardinal):
        A3.sym_size(SetVal(2, 0b10))
    assert not A3.is_cardinal(SetVal(2, 0b10))


def test_order(A3):
    F = A3.F(2)
    for a, b in itertools.product(F, F):
        sa, sb = A3.sym_size(a).size, A3.sym_size(b).size
        assert A3.card_le(a, b) == (sa <= sb)
        assert A3.card_lt(a, b) == (sa < sb)


def test_multiplication_graph_triples(A3):
    G = A3.mul_graph(2)
    assert len(G) > 0
    for x, y in itertools.product(A3.F(2), repeat=2):
        z = A3.mul(x, y)
        if z.bits:
            assert A3.in_G(x, y, z)
