"""D0: finite linear combinations of coset indicators, with exact coefficients.

Elements are stored lazily, as given (duplicate cosets merged, zero
coefficients dropped).  Two elements that are equal as functions on N may
have different stored forms; ``d0_eq`` decides equality by refining both to
one common subgroup.

A formal unit can be carried alongside the indicators.  It never arises
from products of indicators and exists so that group elements can act as
multipliers in the crossed product.
"""

from __future__ import annotations

from .core import Coset, CosetSystem, RefinementBlowup
from .scalars import ONE, ZERO, Scalar


class D0Elem:
    __slots__ = ("sys", "terms", "unit")

    def __init__(self, sys: CosetSystem, terms=None, unit=ZERO):
        self.sys = sys
        self.unit = Scalar.of(unit)
        acc = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for c, a in items:
                a = Scalar.of(a)
                if a:
                    s = acc.get(c, ZERO) + a
                    if s:
                        acc[c] = s
                    else:
                        acc.pop(c, None)
        self.terms = acc

    # ---- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, sys):
        return cls(sys)

    @classmethod
    def one(cls, sys):
        """The formal unit (not an element of D0 proper)."""
        return cls(sys, unit=ONE)

    @classmethod
    def indicator(cls, sys, c: Coset, coeff=ONE):
        return cls(sys, {c: coeff})

    # ---- inspection ------------------------------------------------------
    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: self.sys.coset_key(kv[0]))

    def is_structurally_zero(self) -> bool:
        return not self.terms and not self.unit

    def has_unit(self) -> bool:
        return bool(self.unit)

    def levels(self) -> list:
        return sorted({c.sub for c in self.terms}, key=self.sys.sub_sort_key)

    def __call__(self, x) -> Scalar:
        """Evaluate as a function on N."""
        total = self.unit
        for c, a in self.terms.items():
            if self.sys.in_coset(c, x):
                total = total + a
        return total

    def normalize(self) -> "D0Elem":
        return D0Elem(self.sys, dict(self.items()), self.unit)

    # ---- linear structure ------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, D0Elem):
            return NotImplemented
        return D0Elem(self.sys, list(self.terms.items()) + list(other.terms.items()), self.unit + other.unit)

    def __neg__(self):
        return D0Elem(self.sys, {c: -a for c, a in self.terms.items()}, -self.unit)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "D0Elem":
        k = Scalar.of(k)
        return D0Elem(self.sys, {c: k * a for c, a in self.terms.items()}, k * self.unit)

    def __mul__(self, other):
        if isinstance(other, D0Elem):
            return d0_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "D0Elem":
        return d0_star(self)

    def act(self, g) -> "D0Elem":
        """alpha_g(f) = f o beta_g^-1, i.e. chi_c -> chi_{beta_g(c)}."""
        return D0Elem(self.sys, {self.sys.act(g, c): a for c, a in self.terms.items()}, self.unit)

    def __eq__(self, other):
        if not isinstance(other, D0Elem):
            return NotImplemented
        return d0_eq(self, other)

    __hash__ = None

    def is_zero(self) -> bool:
        return d0_eq(self, D0Elem(self.sys))

    def refined(self, w) -> "D0Elem":
        """Rewrite every indicator at level w (w must lie inside each level)."""
        acc = []
        for c, a in self.terms.items():
            for d in self.sys.refine(c, w):
                acc.append((d, a))
        return D0Elem(self.sys, acc, self.unit)

    def __repr__(self):
        parts = [f"{a!r}*chi[{c.rep!r} + {c.sub.key!r}]" for c, a in self.items()]
        if self.unit:
            parts.insert(0, f"{self.unit!r}*1")
        return "D0(" + " + ".join(parts) + ")" if parts else "D0(0)"

    def to_json(self):
        out = []
        if self.unit:
            out.append({"coeff": self.unit.to_json(), "coset": None})
        for c, a in self.items():
            out.append({"coeff": a.to_json(), "coset": self.sys.coset_to_json(c)})
        return out

    @classmethod
    def from_json(cls, sys, obj):
        terms, unit = [], ZERO
        for t in obj:
            a = Scalar.from_json(t.get("coeff", "1/1"))
            if t.get("coset") is None:
                unit = unit + a
            else:
                terms.append((sys.coset_from_json(t["coset"]), a))
        return cls(sys, terms, unit)


def p_c(sys: CosetSystem, c: Coset) -> D0Elem:
    return D0Elem.indicator(sys, c)


def d0_mul(x: D0Elem, y: D0Elem) -> D0Elem:
    """Bilinear extension of chi_{xU} chi_{yV} = sum of chi_{zW} over (xU n yV)/W."""
    sys = x.sys
    acc = []
    if y.unit:
        acc.extend((c, a * y.unit) for c, a in x.terms.items())
    if x.unit:
        acc.extend((c, x.unit * b) for c, b in y.terms.items())
    for c1, a in x.terms.items():
        for c2, b in y.terms.items():
            ab = a * b
            for d in sys.intersect(c1, c2):
                acc.append((d, ab))
    return D0Elem(sys, acc, x.unit * y.unit)


def d0_star(x: D0Elem) -> D0Elem:
    return D0Elem(x.sys, {c: a.conj() for c, a in x.terms.items()}, x.unit.conj())


def d0_eq(x: D0Elem, y: D0Elem) -> bool:
    """Equality as functions on N, decided at a single common level."""
    sys = x.sys
    if x.unit != y.unit:
        return False
    if x.terms == y.terms:
        return True
    z = x - y
    if not z.terms:
        return True
    w = sys.meet_all(c.sub for c in z.terms)
    cost = sum(sys.index(c.sub, w) for c in z.terms)
    if cost > sys.budget:
        raise RefinementBlowup(cost, 1, sys.budget)
    acc = {}
    for c, a in z.terms.items():
        for d in sys.refine(c, w):
            acc[d] = acc.get(d, ZERO) + a
    return not any(acc.values())
