from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosetalg.core import GroupElem
from cosetalg.instances import Config, LamplighterSystem, lamp_bichar, shift_act

L2 = LamplighterSystem(2)
L3 = LamplighterSystem(3)


def configs(m, lo=-4, hi=5):
    pair = st.tuples(st.integers(lo, hi), st.integers(0, m - 1))
    return st.lists(pair, max_size=4).map(lambda ps: Config.make(ps, m))


def delta(p, v=1):
    return Config.delta(p, v)


def test_shift_examples():
    assert shift_act(2, delta(0)) == delta(2)
    f = Config.make([(0, 1), (3, 1)], 2)
    assert shift_act(0, f) == f
    assert shift_act(-1, f) == Config.make([(-1, 1), (2, 1)], 2)


def test_quotient_example():
    assert len(L2.quotient_reps(L2.M, L2.subgroup(2))) == 4


@pytest.mark.parametrize("sys", [L2, L3], ids=["Z2", "Z3"])
@pytest.mark.parametrize("c", [0, 1, 2, 3])
def test_quotient_law(sys, c):
    reps = sys.quotient_reps(sys.M, sys.subgroup(c))
    assert len(reps) == sys.modulus ** c
    # representatives live on [0, c), one per configuration there
    assert all(set(r.rep.support()) <= set(range(c)) for r in reps)


def test_hplus_examples():
    assert not L2.is_in_H_plus(-1)
    assert L2.is_in_H_plus(0) and L2.is_in_H_plus(3)


@given(st.integers(-10, 10))
def test_hplus_is_nonnegative(a):
    assert L2.is_in_H_plus(a) == (a >= 0)


def test_contraction_example():
    c = L2.coset(Config(), L2.M)
    g = L2.contraction_witness(c)
    assert g == GroupElem(Config(), 1)
    assert L2.act(g, c).sub == L2.subgroup(1)


def test_effectiveness_example():
    assert L2.effectiveness_witness(1) == delta(0)


def test_bichar_examples():
    assert lamp_bichar(delta(0), delta(0), 2).value == Fr(1, 2)
    assert lamp_bichar(delta(1), delta(0), 2).is_trivial()
    for f in L2.config.n:
        assert lamp_bichar(f, Config(), 2).is_trivial()


@pytest.mark.parametrize("offset", [0, 1])
@given(a=st.integers(-5, 5), f=configs(3), g=configs(3))
def test_bichar_symmetry(offset, a, f, g):
    assert lamp_bichar(shift_act(a, f), g, 3, offset) == lamp_bichar(f, shift_act(a, g), 3, offset)


@given(f=configs(2, -3, 3))
def test_selfdual_shadow_with_offset_one(f):
    k = 3
    annihilates = all(lamp_bichar(f, delta(j), 2, 1).is_trivial() for j in range(0, 2 * k + 1))
    assert annihilates == all(p >= 0 for p in f.support())


def test_literal_pairing_is_not_selfdual():
    # delta_0 is in M but pairs nontrivially with itself under i <-> -i
    assert L2.contains(L2.M, delta(0))
    assert not lamp_bichar(delta(0), delta(0), 2, 0).is_trivial()


@given(f=configs(3), g=configs(3))
def test_config_group_law(f, g):
    assert L3.n_add(f, L3.n_neg(f)) == Config()
    assert L3.n_add(f, g) == L3.n_add(g, f)


def test_hecke_index_formula():
    assert [L2.hecke_index_formula(a) for a in (-2, 0, 1, 3)] == [1, 1, 2, 8]


def test_json_round_trip():
    f = Config.make([(-2, 1), (4, 2)], 3)
    assert L3.n_from_json(L3.n_to_json(f)) == f
