"""The algebraic crossed product A0 = span G.D0 and its corner pA0p.

An element is a finite sum  sum_g g.f_g  stored as a map GroupElem -> D0Elem.
Multiplication is forced by covariance, g f g^-1 = alpha_g(f):

    (g1 f1)(g2 f2) = (g1 g2) . alpha_{g2^-1}(f1) f2,     (g f)* = g^-1 . alpha_g(f*).

Group elements carry the formal unit of D0 as their coefficient; after
cutting down by p = e.chi_M everything has honest indicator coefficients.
"""

from __future__ import annotations

import itertools

from .core import Coset, CosetSystem, GroupElem, NoFactorization, NotInHPlus, NotInM, NotWellDefined
from .d0 import D0Elem, d0_eq
from .scalars import ONE, Scalar


class A0Elem:
    __slots__ = ("sys", "terms")

    def __init__(self, sys: CosetSystem, terms=None):
        self.sys = sys
        acc = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for g, f in items:
            acc[g] = acc[g] + f if g in acc else f
        self.terms = {g: f for g, f in acc.items() if not f.is_structurally_zero()}

    @classmethod
    def group(cls, sys, g: GroupElem, coeff=ONE):
        return cls(sys, {g: D0Elem(sys, unit=coeff)})

    @classmethod
    def from_d0(cls, f: D0Elem):
        return cls(f.sys, {f.sys.e: f})

    @classmethod
    def zero(cls, sys):
        return cls(sys)

    def _like(self, other, terms):
        if type(self) is CornerElem and type(other) is CornerElem:
            return CornerElem(self.sys, terms)
        return A0Elem(self.sys, terms)

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: self.sys.g_key(kv[0]))

    def coefficient(self, g: GroupElem) -> D0Elem:
        return self.terms.get(g, D0Elem(self.sys))

    def has_formal_unit(self) -> bool:
        return any(f.has_unit() for f in self.terms.values())

    def __add__(self, other):
        if not isinstance(other, A0Elem):
            return NotImplemented
        return self._like(other, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self._like(self, {g: -f for g, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = Scalar.of(k)
        return self._like(self, {g: f.scale(k) for g, f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, A0Elem):
            return self._like(other, a0_mul(self, other).terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self):
        return self._like(self, a0_star(self).terms)

    def __eq__(self, other):
        if not isinstance(other, A0Elem):
            return NotImplemented
        return a0_eq(self, other)

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{g!r}.{f!r}" for g, f in self.items())
        return f"{type(self).__name__}({body or '0'})"

    def to_json(self):
        return [{"g": self.sys.g_to_json(g), "f": f.to_json()} for g, f in self.items()]

    @classmethod
    def from_json(cls, sys, obj):
        return cls(sys, [(sys.g_from_json(t["g"]), D0Elem.from_json(sys, t["f"])) for t in obj])


class CornerElem(A0Elem):
    """An element z of A0 with p z p = z.  Build these with corner_cut."""

    __slots__ = ()


def a0_mul(x: A0Elem, y: A0Elem) -> A0Elem:
    sys = x.sys
    acc = []
    for g2, f2 in y.terms.items():
        g2inv = sys.inverse(g2)
        for g1, f1 in x.terms.items():
            acc.append((sys.compose(g1, g2), f1.act(g2inv) * f2))
    return A0Elem(sys, acc)


def a0_star(x: A0Elem) -> A0Elem:
    sys = x.sys
    return A0Elem(sys, [(sys.inverse(g), f.star().act(g)) for g, f in x.terms.items()])


def a0_eq(x: A0Elem, y: A0Elem) -> bool:
    sys = x.sys
    for g in set(x.terms) | set(y.terms):
        if not d0_eq(x.coefficient(g), y.coefficient(g)):
            return False
    return True


def corner_unit(sys: CosetSystem) -> CornerElem:
    """p = e.chi_M, the unit of the corner."""
    return CornerElem(sys, {sys.e: D0Elem.indicator(sys, sys.coset(sys.n_zero, sys.M))})


def corner_cut(z: A0Elem) -> CornerElem:
    if isinstance(z, CornerElem):
        return z
    p = corner_unit(z.sys)
    return CornerElem(z.sys, a0_mul(a0_mul(p, z), p).terms)


def gen_s(sys: CosetSystem, a) -> CornerElem:
    """s_a = p a p, which equals a.p for a in H^+."""
    if not sys.is_in_H_plus(a):
        raise NotInHPlus(f"{a!r} is not in H^+")
    return corner_cut(A0Elem.group(sys, sys.from_h(a)))


def gen_u(sys: CosetSystem, m) -> CornerElem:
    """u(m) = p m p = m.p for m in M."""
    if not sys.contains(sys.M, m):
        raise NotInM(f"{m!r} is not in M")
    return corner_cut(A0Elem.group(sys, sys.from_n(m)))


def chi(sys: CosetSystem, x, a) -> D0Elem:
    """The indicator of x + aMa^-1."""
    return D0Elem.indicator(sys, sys.coset(x, sys.subgroup(a)))


def gen_p(sys: CosetSystem, a, m) -> CornerElem:
    """p(a, m) = chi_{m + aMa^-1}, viewed in the corner."""
    if not sys.is_in_H_plus(a):
        raise NotInHPlus(f"{a!r} is not in H^+")
    if not sys.contains(sys.M, m):
        raise NotInM(f"{m!r} is not in M")
    return CornerElem(sys, {sys.e: chi(sys, m, a)})


def as_d0(z: A0Elem) -> D0Elem:
    """The D0 coefficient of an element supported on the identity only."""
    sys = z.sys
    extra = [g for g in z.terms if g != sys.e]
    if extra:
        raise ValueError(f"element has group support beyond e: {extra[0]!r}")
    return z.coefficient(sys.e)


# ---- extensions ------------------------------------------------------------

def hplus_candidates(sys: CosetSystem) -> list:
    """Sampled H^+ elements and their pairwise products, deduplicated, in order."""
    base = list(sys.config.hplus)
    out = list(base)
    for a, b in itertools.combinations_with_replacement(base, 2):
        out.append(sys.h_mul(a, b))
    seen, uniq = set(), []
    for c in out:
        k = sys.h_key(c)
        if k not in seen and c != sys.h_one:
            seen.add(k)
            uniq.append(c)
    return uniq


def _pn_via(sys, a, n, c) -> D0Elem:
    # c acts through its unitary in A0, not the corner isometry s_c:
    # s_c* P s_c would also cut down by p and lose everything outside M
    w = A0Elem.group(sys, sys.from_h(c))
    z = w.star() * gen_p(sys, sys.h_mul(c, a), sys.h_act(c, n)) * w
    return as_d0(z)


def extend_pn(sys: CosetSystem, a, n, *, choices: int = 2) -> D0Elem:
    """P(a, n) for n in N, as c^-1 P(ca, c.n) c with c in H^+ and c.n in M.

    Computed with ``choices`` different c and checked to agree.
    """
    if not sys.is_in_H_plus(a):
        raise NotInHPlus(f"{a!r} is not in H^+")
    cs = [c for c in hplus_candidates(sys) if sys.contains(sys.M, sys.h_act(c, n))][:choices]
    if len(cs) < choices:
        raise NoFactorization(f"fewer than {choices} sampled c in H^+ move {n!r} into M")
    vals = [_pn_via(sys, a, n, c) for c in cs]
    for c, v in zip(cs[1:], vals[1:]):
        if not d0_eq(vals[0], v):
            raise NotWellDefined(f"extend_pn({a!r}, {n!r}) depends on the choice c = {c!r}")
    return vals[0]


def _pnh_via(sys, h, n, b, pn) -> D0Elem:
    hb = sys.h_mul(h, b)
    total = D0Elem(sys)
    for r in sys.quotient_reps(sys.M, sys.subgroup(b)):
        total = total + pn(hb, sys.n_add(n, sys.h_act(h, r.rep)))
    return total


def extend_pnh(sys: CosetSystem, h, n, *, choices: int = 2, pn=None) -> D0Elem:
    """P(h, n) for h in H as sum over M/bMb^-1 of P(hb, n + h.m), with hb in H^+."""
    if pn is None:
        pn = lambda a, x: chi(sys, x, a)  # noqa: E731
    bs = [b for b in hplus_candidates(sys) if sys.is_in_H_plus(sys.h_mul(h, b))][:choices]
    if len(bs) < choices:
        raise NoFactorization(f"fewer than {choices} sampled b with {h!r} b in H^+")
    vals = [_pnh_via(sys, h, n, b, pn) for b in bs]
    for b, v in zip(bs[1:], vals[1:]):
        if not d0_eq(vals[0], v):
            raise NotWellDefined(f"extend_pnh({h!r}, {n!r}) depends on the choice b = {b!r}")
    return vals[0]


# ---- fullness --------------------------------------------------------------

def corner_factorization(sys: CosetSystem, c: Coset) -> list:
    """Pairs (l, r) with sum l p r = p_c.

    With V inside both c.sub and M, each piece x + V of c gives
    p_{x+V} = (x.p_V) p (p_V x^-1).
    """
    v = sys.meet(c.sub, sys.M)
    p_v = D0Elem.indicator(sys, sys.coset(sys.n_zero, v))
    pairs = []
    for d in sys.refine(c, v):
        gx = sys.from_n(d.rep)
        left = A0Elem(sys, {gx: p_v})
        right = A0Elem(sys, {sys.inverse(gx): D0Elem.indicator(sys, d)})
        pairs.append((left, right))
    return pairs


def factorization_product(sys: CosetSystem, pairs) -> A0Elem:
    p = corner_unit(sys)
    total = A0Elem(sys)
    for left, right in pairs:
        total = total + left * p * right
    return total
