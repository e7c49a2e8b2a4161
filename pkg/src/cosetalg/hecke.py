"""The Hecke pair (G, M): double cosets, left-coset decompositions, convolution.

With N abelian, conjugating M by g = (x, a) gives aMa^-1, so

    M g M = (x + M + aMa^-1, a)      and      g M = (x + aMa^-1, a).

A double coset is therefore named by its h-part together with x reduced
modulo M + aMa^-1; a left coset by x reduced modulo aMa^-1.

Basis elements are unnormalized indicators [MgM] and the product is
left-coset convolution, (f1 * f2)(x) = sum_{yM} f1(y) f2(y^-1 x), so all
structure constants are nonnegative integers.
"""

from __future__ import annotations

from collections import Counter

from .core import CosetSystem, GroupElem
from .scalars import ONE, Scalar


def double_coset(sys: CosetSystem, g: GroupElem) -> GroupElem:
    """Canonical representative of MgM."""
    return GroupElem(sys.double_coset_reduce(g.n, g.h), g.h)


def left_coset(sys: CosetSystem, g: GroupElem) -> GroupElem:
    """Canonical representative of gM."""
    return GroupElem(sys.reduce(g.n, sys.subgroup(g.h)), g.h)


def same_double_coset(sys, g1, g2) -> bool:
    return double_coset(sys, g1) == double_coset(sys, g2)


def left_coset_decomposition(sys: CosetSystem, g: GroupElem) -> list:
    """Representatives g_i with MgM the disjoint union of the g_i M.

    The translates x + m for m in M/W (W inside M n aMa^-1) cover MgM;
    deduplicating them modulo aMa^-1 leaves one per left coset.
    """
    d = double_coset(sys, g)
    au = sys.subgroup(d.h)
    w = sys.meet(sys.M, au)
    reps = {left_coset(sys, GroupElem(sys.n_add(r.rep, d.n), d.h)) for r in sys.quotient_reps(sys.M, w)}
    return sorted(reps, key=sys.g_key)


def hecke_pair_check(sys: CosetSystem, g: GroupElem) -> int:
    """L(g) = [M : M n gMg^-1], counted as the distinct aMa^-1 classes among M/W."""
    au = sys.subgroup(g.h)
    w = sys.meet(sys.M, au)
    return len({sys.coset(r.rep, au) for r in sys.quotient_reps(sys.M, w)})


def hecke_index(sys: CosetSystem, g: GroupElem) -> int:
    """Closed-form [M + aMa^-1 : aMa^-1] supplied by the instance."""
    return sys.hecke_index_formula(g.h)


class HeckeElem:
    __slots__ = ("sys", "terms")

    def __init__(self, sys: CosetSystem, terms=None):
        self.sys = sys
        acc = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for g, a in items:
            d = double_coset(sys, g)
            acc[d] = acc.get(d, Scalar(0)) + Scalar.of(a)
        self.terms = {d: a for d, a in acc.items() if a}

    @classmethod
    def basis(cls, sys, g: GroupElem, coeff=ONE):
        return cls(sys, {g: coeff})

    @classmethod
    def one(cls, sys):
        return cls.basis(sys, sys.e)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: self.sys.g_key(kv[0]))

    def __add__(self, other):
        return HeckeElem(self.sys, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Scalar.of(k)
        return HeckeElem(self.sys, {d: k * a for d, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return hecke_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def star(self):
        return hecke_star(self)

    def __eq__(self, other):
        return isinstance(other, HeckeElem) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return "Hecke(" + " + ".join(f"{a!r}[{g!r}]" for g, a in self.items()) + ")"

    def to_json(self):
        return [{"coeff": a.to_json(), "g": self.sys.g_to_json(g)} for g, a in self.items()]

    @classmethod
    def from_json(cls, sys, obj):
        return cls(sys, [(sys.g_from_json(t["g"]), Scalar.from_json(t.get("coeff", "1/1"))) for t in obj])


def basis_product(sys: CosetSystem, g: GroupElem, h: GroupElem) -> dict:
    """Structure constants of [MgM] * [MhM]: c_D = #{i : g_i^-1 d in MhM}."""
    gs = left_coset_decomposition(sys, g)
    hs = left_coset_decomposition(sys, h)
    dh = double_coset(sys, h)
    targets = sorted({double_coset(sys, sys.compose(gi, hj)) for gi in gs for hj in hs}, key=sys.g_key)
    out = {}
    for d in targets:
        c = sum(1 for gi in gs if double_coset(sys, sys.compose(sys.inverse(gi), d)) == dh)
        if c:
            out[d] = c
    return out


def basis_product_oracle(sys: CosetSystem, g: GroupElem, h: GroupElem) -> dict:
    """Count every pair g_i h_j by its double coset, then divide by the number
    of left cosets in that double coset."""
    gs = left_coset_decomposition(sys, g)
    hs = left_coset_decomposition(sys, h)
    hits = Counter(double_coset(sys, sys.compose(gi, hj)) for gi in gs for hj in hs)
    out = {}
    for d, k in hits.items():
        size = len(left_coset_decomposition(sys, d))
        q, r = divmod(k, size)
        assert r == 0, f"pair count {k} not divisible by {size}"
        out[d] = q
    return out


def hecke_mul(x: HeckeElem, y: HeckeElem) -> HeckeElem:
    sys = x.sys
    acc = []
    for g, a in x.terms.items():
        for h, b in y.terms.items():
            ab = a * b
            for d, c in basis_product(sys, g, h).items():
                acc.append((d, ab * c))
    return HeckeElem(sys, acc)


def hecke_star(x: HeckeElem) -> HeckeElem:
    sys = x.sys
    return HeckeElem(sys, [(sys.inverse(g), a.conj()) for g, a in x.terms.items()])


def reducedness_witness(sys: CosetSystem, n):
    """Some sampled g with n outside gMg^-1, for n in M nonzero, or None."""
    for g in sys.sample_g():
        if not sys.contains(sys.subgroup(g.h), n):
            return g
    return None
