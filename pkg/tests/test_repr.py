import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosetalg.crossed import corner_unit, gen_s
from cosetalg.d0 import D0Elem
from cosetalg.repr_oracle import (
    T,
    TSTAR,
    FinVec,
    S,
    U,
    _p_tilde,
    apply,
    apply_symbolic,
    basis_sample,
    intertwining_check,
    mult,
    operator_laws_check,
    oracle_check,
    random_corner_word,
    word_from_json,
    word_operator,
    word_symbolic,
    word_to_json,
)


def d(sys, y):
    return FinVec.delta(sys, Fr(y) if sys.name == "rational" else y)


def test_operator_examples(rat):
    assert apply(rat, [S(Fr(2))], d(rat, Fr(1, 3))) == d(rat, Fr(2, 3))
    assert apply(rat, [U(Fr(1))], d(rat, 0)) == d(rat, 1)
    chi2 = D0Elem.indicator(rat, rat.coset(0, rat.subgroup(2)))
    word = [TSTAR, mult(chi2), T]
    assert apply(rat, word, d(rat, 1)) == FinVec(rat)
    assert apply(rat, word, d(rat, 2)) == d(rat, 2)


def test_t_rejects_vectors_off_m(rat):
    with pytest.raises(ValueError):
        apply(rat, [T], d(rat, Fr(1, 2)))


def test_oracle_word_example(rat):
    word = [("u", Fr(1)), ("s", Fr(2)), ("s*", Fr(2)), ("u", Fr(-1))]
    rep = oracle_check(rat, [word], basis=[Fr(0), Fr(1), Fr(2)])
    assert rep.passed and rep.checked == 3
    # the operator is multiplication by chi_{1+2Z} on M
    z = word_symbolic(rat, word)
    for y in (0, 1, 2, 3):
        assert apply_symbolic(z, d(rat, y)) == (d(rat, y) if y % 2 else FinVec(rat))


def test_u_consistent_on_operators(rat):
    words = [[("u", Fr(r)), ("s", Fr(2)), ("s*", Fr(2)), ("u*", Fr(r))] for r in (0, 1)]
    for y in range(4):
        v = d(rat, y)
        total = apply(rat, word_operator(rat, words[0]), v) + apply(rat, word_operator(rat, words[1]), v)
        assert total == v


def test_empty_word_is_identity(sysx):
    assert word_symbolic(sysx, []) == corner_unit(sysx)
    for y in basis_sample(sysx):
        assert apply(sysx, word_operator(sysx, []), FinVec.delta(sysx, y)) == FinVec.delta(sysx, y)


def test_basis_sample_is_large_enough(sysx):
    pts = basis_sample(sysx)
    assert len(pts) >= 10 and all(sysx.contains(sysx.M, y) for y in pts)


@given(seed=st.integers(0, 10**6))
def test_random_words_agree(sysx, seed):
    rng = random.Random(seed)
    words = [random_corner_word(sysx, rng, 4) for _ in range(3)]
    assert oracle_check(sysx, words, basis_sample(sysx)).passed


def test_intertwining_example(rat):
    rep = intertwining_check(rat, basis=[Fr(0), Fr(1), Fr(2)])
    assert rep.passed, rep.first_failure()
    ids = {r.id for r in rep.results}
    assert {"ST = TS", "TP", "UT", "sun", "pnh consistent", "h orthogonal"} <= ids


def test_intertwining_all_instances(sysx):
    rep = intertwining_check(sysx)
    assert rep.passed, rep.first_failure()


def test_corrupted_s_breaks_sun(sysx):
    rep = intertwining_check(sysx, corrupt=True)
    bad = {r.id for r in rep.results if not r.passed}
    assert "sun" in bad
    assert next(r for r in rep.results if r.id == "sun").witness is not None


def test_operator_laws(sysx):
    rep = operator_laws_check(sysx, vectors=30, seed=5)
    assert rep.passed, rep.first_failure()


def test_pnh_operator_example(rat):
    # h = 1/2, n = 0: multiplication by chi_{(1/2)Z} equals the dilated sum via b = 2
    half = Fr(1, 2)
    chi = D0Elem.indicator(rat, rat.coset(0, rat.subgroup(half)))
    terms = [_p_tilde(rat, Fr(1), half * r) for r in (0, 1)]
    for k in range(-6, 7):
        v = d(rat, Fr(k, 2))
        total = apply(rat, terms[0], v) + apply(rat, terms[1], v)
        assert total == apply(rat, [mult(chi)], v)


def test_symbolic_isometry_matches_operator(sysx):
    for a in sysx.config.hplus:
        s = gen_s(sysx, a)
        for y in basis_sample(sysx):
            v = FinVec.delta(sysx, y)
            assert apply_symbolic(s.star() * s, v) == v


def test_word_json_round_trip(sysx):
    rng = random.Random(0)
    for _ in range(5):
        w = random_corner_word(sysx, rng, 5)
        assert word_from_json(sysx, word_to_json(sysx, w)) == w


def test_finvec_inner_and_json(rat):
    v = FinVec(rat, [(Fr(0), 1), (Fr(1, 2), 2)])
    assert v.inner(v) == 5
    assert FinVec.from_json(rat, v.to_json()) == v
