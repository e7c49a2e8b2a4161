import math
from collections import Counter
from fractions import Fraction as Fr

from hypothesis import given
from hypothesis import strategies as st

from cosetalg.core import GroupElem
from cosetalg.hecke import (
    HeckeElem,
    basis_product,
    basis_product_oracle,
    double_coset,
    hecke_index,
    hecke_pair_check,
    left_coset_decomposition,
    reducedness_witness,
)
from cosetalg.instances import RationalSystem
from cosetalg.scalars import I, Scalar

from conftest import g_elems

RAT = RationalSystem()


def G(x, a):
    return GroupElem(Fr(x), Fr(a))


# ---- an independent model of the rational pair, in plain Fractions ----------

def _mod(t: Fr, q: Fr) -> Fr:
    q = abs(q)
    return t - q * math.floor(t / q)


def _gcd1(a: Fr) -> Fr:
    return Fr(math.gcd(1, a.numerator), a.denominator)


def brute_left_cosets(x, a, span=12):
    """Left M-cosets inside M(x, a)M found by sweeping (m + x + a k, a)."""
    x, a = Fr(x), Fr(a)
    seen = set()
    for m in range(-span, span + 1):
        for k in range(-span, span + 1):
            seen.add(_mod(m + x + a * k, a))
    return sorted(seen)


def brute_double(x, a):
    x, a = Fr(x), Fr(a)
    return (_mod(x, _gcd1(a)), a)


def brute_product(g, h):
    """[MgM][MhM] by pairing left-coset representatives of plain tuples."""
    gs = [(t, g[1]) for t in brute_left_cosets(*g)]
    hs = [(t, h[1]) for t in brute_left_cosets(*h)]
    # the product g_i h_j = (x_i + a_i y_j, a_i b_j), bucketed by left coset
    left = Counter()
    for xi, ai in gs:
        for yj, bj in hs:
            p = ai * bj
            left[(_mod(xi + ai * yj, p), p)] += 1
    out = {}
    for (t, p), k in left.items():
        d = brute_double(t, p)
        assert out.setdefault(d, k) == k, "multiplicity not constant on a double coset"
    return out


def as_tuples(prod):
    return {(d.n, d.h): c for d, c in prod.items()}


def test_index_examples(rat):
    assert hecke_pair_check(rat, G(0, 2)) == 2
    assert hecke_pair_check(rat, rat.e) == 1
    assert hecke_pair_check(rat, G(Fr(1, 2), 1)) == 1


def test_decomposition_examples(rat):
    assert left_coset_decomposition(rat, G(0, 2)) == [G(0, 2), G(1, 2)]
    assert left_coset_decomposition(rat, rat.e) == [rat.e]
    assert len(left_coset_decomposition(rat, G(0, 3))) == 3


rat_g = st.builds(
    lambda x, a: G(x, a),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.sampled_from([Fr(k) for k in ("1", "2", "3", "-2", "4", "6", "1/2", "2/3", "3/2", "1/3", "5/6")]),
)


@given(rat_g)
def test_decomposition_matches_brute_force(g):
    sys = RAT
    reps = left_coset_decomposition(sys, g)
    assert [r.n for r in reps] == brute_left_cosets(g.n, g.h)
    assert double_coset(sys, g) == G(*brute_double(g.n, g.h))


@given(rat_g, rat_g)
def test_convolution_matches_brute_force(g, h):
    sys = RAT
    assert as_tuples(basis_product(sys, g, h)) == brute_product((g.n, g.h), (h.n, h.h))


@given(data=st.data())
def test_count_consistency(sysx, data):
    g = data.draw(g_elems(sysx))
    reps = left_coset_decomposition(sysx, g)
    assert len(reps) == hecke_pair_check(sysx, g) == hecke_index(sysx, g)
    assert len(set(reps)) == len(reps)
    assert all(double_coset(sysx, r) == double_coset(sysx, g) for r in reps)


@given(data=st.data())
def test_coverage(sysx, data):
    g = data.draw(g_elems(sysx))
    reps = left_coset_decomposition(sysx, g)
    for m in sysx.config.m[:5]:
        for k in sysx.config.m[:5]:
            x = sysx.compose(sysx.compose(sysx.from_n(m), g), sysx.from_n(k))
            assert sum(sysx.contains(sysx.subgroup(r.h), sysx.n_sub(x.n, r.n)) and r.h == x.h for r in reps) == 1


@given(data=st.data())
def test_product_matches_oracle(sysx, data):
    g, h = data.draw(g_elems(sysx)), data.draw(g_elems(sysx))
    if hecke_index(sysx, g) * hecke_index(sysx, h) > 256:
        return
    assert basis_product(sysx, g, h) == basis_product_oracle(sysx, g, h)


def hecke_elems(sys):
    term = st.tuples(g_elems(sys), st.builds(Scalar, st.integers(-2, 2), st.integers(-1, 1)))
    return st.lists(term, min_size=1, max_size=2).map(lambda ts: HeckeElem(sys, ts))


def _small(sys, x):
    return all(hecke_index(sys, g) <= 8 for g in x.terms)


@given(data=st.data())
def test_algebra_laws(sysx, data):
    x, y, z = (data.draw(hecke_elems(sysx).filter(lambda e: _small(sysx, e))) for _ in range(3))
    one = HeckeElem.one(sysx)
    assert one * x == x == x * one
    assert (x * y) * z == x * (y * z)
    assert x.star().star() == x
    assert (x * y).star() == y.star() * x.star()


def test_mul_examples(rat):
    b = lambda x, a: HeckeElem.basis(rat, G(x, a))  # noqa: E731
    prod = b(0, 2) * b(0, 3)
    assert [g for g, _ in prod.items()] == [G(0, 6)]
    half = b(Fr(1, 2), 1)
    assert half * half == HeckeElem.one(rat)
    assert half == b(Fr(-1, 2), 1)


def test_coprime_products(rat):
    for m, n in ((2, 3), (2, 5), (3, 4)):
        prod = HeckeElem.basis(rat, G(0, m)) * HeckeElem.basis(rat, G(0, n))
        assert prod == HeckeElem.basis(rat, G(0, m * n))


def test_star_examples(rat):
    one = HeckeElem.one(rat)
    assert one.star() == one
    assert HeckeElem.basis(rat, G(0, 2)).star() == HeckeElem.basis(rat, G(0, Fr(1, 2)))
    x = HeckeElem.basis(rat, G(0, 2), I)
    assert x.star() == HeckeElem.basis(rat, G(0, Fr(1, 2)), Scalar(0, -1))


def test_star_antimultiplicative_on_unbalanced_pair(rat):
    x, y = HeckeElem.basis(rat, G(0, 2)), HeckeElem.basis(rat, G(0, Fr(1, 2)))
    assert (x * y).star() == y.star() * x.star()


def test_reducedness(sysx):
    for m in sysx.config.m:
        if m != sysx.n_zero:
            g = reducedness_witness(sysx, m)
            assert g is not None and not sysx.contains(sysx.subgroup(g.h), m)


def test_json_round_trip(rat):
    x = HeckeElem(rat, [(G(0, 2), Scalar(1, 2)), (G(Fr(1, 3), 3), 4)])
    assert HeckeElem.from_json(rat, x.to_json()) == x
