"""Coset systems: a semidirect product G = N x| H with a distinguished subgroup M.

A concrete instance supplies exact arithmetic in N (written additively) and
H (written multiplicatively, acting on N by automorphisms), a canonical key
for every subgroup hMh^-1, and canonical coset representatives.  Everything
else here (the ax+b action on cosets, refinement, intersections, witnesses)
is derived generically from those primitives.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Any, Sequence


class CosetAlgError(Exception):
    """Base class for the errors raised by this package."""


class NotNested(CosetAlgError):
    pass


class NoContraction(CosetAlgError):
    pass


class NoWitness(CosetAlgError):
    pass


class NotInRing(CosetAlgError):
    pass


class NotInHPlus(CosetAlgError):
    pass


class NotInM(CosetAlgError):
    pass


class NoFactorization(CosetAlgError):
    pass


class NotWellDefined(CosetAlgError):
    """Two factorizations of one extension gave different results."""


class NonAbelianF(CosetAlgError):
    pass


class DegenerateInstance(CosetAlgError):
    pass


class RefinementBlowup(CosetAlgError):
    def __init__(self, index_u, index_v, budget):
        super().__init__(
            f"common refinement needs [U:W]*[V:W] = {index_u}*{index_v} cosets, budget {budget}"
        )
        self.index_u = index_u
        self.index_v = index_v
        self.budget = budget


@dataclass(frozen=True)
class GroupElem:
    """g = (n, h), meaning g = n*h in N x| H."""

    n: Any
    h: Any


@dataclass(frozen=True)
class SubgroupU:
    """The subgroup gen*M*gen^-1; equality is equality of the canonical key."""

    key: Any
    gen: Any = field(compare=False, hash=False)


@dataclass(frozen=True)
class Coset:
    rep: Any
    sub: SubgroupU


@dataclass
class InstanceConfig:
    name: str
    hplus: list          # sampled elements of H^+
    m: list              # sampled elements of M
    n: list              # sampled elements of N
    h: list              # sampled elements of H, including some outside H^+
    g: list = field(default_factory=list)  # sampled elements of G
    max_index: int = 10**6
    max_denominator: int = 10**6


class CosetSystem:
    """Base class for instances.  Subclasses fill in the primitive hooks."""

    name = "abstract"

    def __init__(self, config: InstanceConfig | None = None):
        self.config = config if config is not None else self.default_config()
        self.budget = self.config.max_index
        self.M = self.subgroup(self.h_one)
        self.e = GroupElem(self.n_zero, self.h_one)
        self._validate()

    # ---- primitives supplied by instances -------------------------------
    n_zero: Any = None
    h_one: Any = None

    def n_add(self, x, y): raise NotImplementedError
    def n_neg(self, x): raise NotImplementedError
    def n_key(self, x): raise NotImplementedError
    def h_mul(self, a, b): raise NotImplementedError
    def h_inv(self, a): raise NotImplementedError
    def h_act(self, a, x): raise NotImplementedError
    def h_key(self, a): raise NotImplementedError
    def subgroup(self, a) -> SubgroupU: raise NotImplementedError
    def contains(self, u: SubgroupU, x) -> bool: raise NotImplementedError
    def _le(self, w: SubgroupU, u: SubgroupU) -> bool: raise NotImplementedError
    def reduce(self, x, u: SubgroupU): raise NotImplementedError
    def _meet_rule(self, u: SubgroupU, v: SubgroupU) -> SubgroupU: raise NotImplementedError
    def _index(self, u: SubgroupU, w: SubgroupU) -> int: raise NotImplementedError
    def _quotient_elems(self, u: SubgroupU, w: SubgroupU) -> list: raise NotImplementedError
    def double_coset_reduce(self, x, a): raise NotImplementedError
    def hecke_index_formula(self, a) -> int: raise NotImplementedError
    def default_config(self) -> InstanceConfig: raise NotImplementedError

    # JSON hooks
    def n_to_json(self, x): raise NotImplementedError
    def n_from_json(self, obj): raise NotImplementedError
    def h_to_json(self, a): raise NotImplementedError
    def h_from_json(self, obj): raise NotImplementedError
    def sub_to_json(self, u: SubgroupU): raise NotImplementedError
    def sub_from_json(self, obj) -> SubgroupU: raise NotImplementedError

    def _validate(self):
        c = self.config
        if all(self.contains(self.M, x) for x in c.n):
            raise DegenerateInstance("every sampled element of N lies in M; need M != N")
        bad = [a for a in c.hplus if not self.is_in_H_plus(a)]
        if bad:
            raise ValueError(f"sampled H^+ elements fail the H^+ test: {bad!r}")

    # ---- group law -------------------------------------------------------
    def n_sub(self, x, y):
        return self.n_add(x, self.n_neg(y))

    def compose(self, g1: GroupElem, g2: GroupElem) -> GroupElem:
        return GroupElem(self.n_add(g1.n, self.h_act(g1.h, g2.n)), self.h_mul(g1.h, g2.h))

    def inverse(self, g: GroupElem) -> GroupElem:
        ai = self.h_inv(g.h)
        return GroupElem(self.n_neg(self.h_act(ai, g.n)), ai)

    def from_n(self, x) -> GroupElem:
        return GroupElem(x, self.h_one)

    def from_h(self, a) -> GroupElem:
        return GroupElem(self.n_zero, a)

    def beta(self, g: GroupElem, y):
        """The ax+b action on points of N: y -> x + a.y for g = (x, a)."""
        return self.n_add(g.n, self.h_act(g.h, y))

    def g_key(self, g: GroupElem):
        return (self.h_key(g.h), self.n_key(g.n))

    # ---- subgroups and cosets -------------------------------------------
    def coset(self, x, u: SubgroupU) -> Coset:
        return Coset(self.reduce(x, u), u)

    def coset_key(self, c: Coset):
        return (self.sub_sort_key(c.sub), self.n_key(c.rep))

    def in_coset(self, c: Coset, x) -> bool:
        return self.contains(c.sub, self.n_sub(x, c.rep))

    @functools.lru_cache(maxsize=None)
    def le(self, w: SubgroupU, u: SubgroupU) -> bool:
        """w is contained in u."""
        return w == u or self._le(w, u)

    @functools.lru_cache(maxsize=None)
    def conjugate(self, a, u: SubgroupU) -> SubgroupU:
        """a u a^-1."""
        return self.subgroup(self.h_mul(a, u.gen))

    @functools.lru_cache(maxsize=None)
    def meet(self, u: SubgroupU, v: SubgroupU) -> SubgroupU:
        """Some W in the family with W inside both u and v."""
        if self.le(u, v):
            return u
        if self.le(v, u):
            return v
        if self.sub_sort_key(v) < self.sub_sort_key(u):
            u, v = v, u
        return self._meet_rule(u, v)

    def sub_sort_key(self, u: SubgroupU):
        return u.key

    def meet_all(self, subs) -> SubgroupU:
        subs = sorted(set(subs), key=self.sub_sort_key)
        return functools.reduce(self.meet, subs)

    def index(self, u: SubgroupU, w: SubgroupU) -> int:
        if not self.le(w, u):
            raise NotNested(f"{w!r} is not contained in {u!r}")
        return self._index(u, w)

    @functools.lru_cache(maxsize=None)
    def quotient_reps(self, u: SubgroupU, w: SubgroupU) -> tuple:
        """The [u:w] cosets of w inside u, in sorted canonical order."""
        if not self.le(w, u):
            raise NotNested(f"{w!r} is not contained in {u!r}")
        cosets = {self.coset(x, w) for x in self._quotient_elems(u, w)}
        return tuple(sorted(cosets, key=self.coset_key))

    def refine(self, c: Coset, w: SubgroupU) -> list:
        """Split c into cosets of a subgroup w of c.sub."""
        return [self.coset(self.n_add(c.rep, d.rep), w) for d in self.quotient_reps(c.sub, w)]

    def coset_le(self, c1: Coset, c2: Coset) -> bool:
        return self.le(c1.sub, c2.sub) and self.in_coset(c2, c1.rep)

    @functools.lru_cache(maxsize=None)
    def intersect(self, c1: Coset, c2: Coset) -> tuple:
        """c1 n c2 as a disjoint tuple of cosets of a common refinement."""
        u, v = c1.sub, c2.sub
        if self.le(u, v):
            return (c1,) if self.in_coset(c2, c1.rep) else ()
        if self.le(v, u):
            return (c2,) if self.in_coset(c1, c2.rep) else ()
        w = self.meet(u, v)
        iu, iv = self._index(u, w), self._index(v, w)
        if iu * iv > self.budget:
            raise RefinementBlowup(iu, iv, self.budget)
        return tuple(d for d in self.refine(c1, w) if self.in_coset(c2, d.rep))

    # ---- the action on cosets ------------------------------------------
    def act(self, g: GroupElem, c: Coset) -> Coset:
        """beta_g(y U) = (x + a.y)(a U a^-1) for g = (x, a)."""
        sub = self.conjugate(g.h, c.sub)
        return self.coset(self.beta(g, c.rep), sub)

    def is_in_H_plus(self, a) -> bool:
        return self.le(self.subgroup(a), self.M)

    def contraction_witness(self, c: Coset) -> GroupElem:
        """Some g with beta_g(c) a proper subcoset of c.

        Pick d with M not inside dMd^-1, take c' with c'Mc'^-1 inside
        M n dMd^-1, conjugate it over to c.sub, then translate so that
        the representative is fixed.
        """
        cprime = None
        for d in list(self.config.hplus) + list(self.config.h):
            du = self.subgroup(d)
            if du == self.M:
                continue
            if self.le(self.M, du):
                d, du = self.h_inv(d), self.subgroup(self.h_inv(d))
            cprime = self.meet(self.M, du).gen
            break
        if cprime is None:
            raise NoContraction("no sampled d in H with dMd^-1 != M")
        b = c.sub.gen
        a = self.h_mul(self.h_mul(b, cprime), self.h_inv(b))
        y = c.rep
        x = self.n_add(y, self.h_act(a, self.n_neg(y)))
        g = GroupElem(x, a)
        image = self.act(g, c)
        if not self.coset_le(image, c) or self.index(c.sub, image.sub) < 2:
            raise NoContraction(f"construction did not contract {c!r}")
        return g

    def effectiveness_witness(self, a):
        """Some s in M (from the sample) moved by conjugation with a."""
        if a == self.h_one:
            raise ValueError("the identity acts trivially; need a != e")
        for s in self.config.m:
            if self.h_act(a, s) != s:
                return s
        raise NoWitness(f"no sampled s in M with a s a^-1 != s for a = {a!r}")

    # ---- convenience -----------------------------------------------------
    def sample_subgroups(self) -> list:
        subs = {self.subgroup(h) for h in list(self.config.h) + list(self.config.hplus)}
        subs.add(self.M)
        return sorted(subs, key=self.sub_sort_key)

    def g_to_json(self, g: GroupElem):
        return {"n": self.n_to_json(g.n), "h": self.h_to_json(g.h)}

    def g_from_json(self, obj) -> GroupElem:
        return GroupElem(self.n_from_json(obj["n"]), self.h_from_json(obj["h"]))

    def coset_to_json(self, c: Coset):
        return {"rep": self.n_to_json(c.rep), "sub": self.sub_to_json(c.sub)}

    def coset_from_json(self, obj) -> Coset:
        return self.coset(self.n_from_json(obj["rep"]), self.sub_from_json(obj["sub"]))

    def sample_g(self) -> list:
        if self.config.g:
            return list(self.config.g)
        hs = list(self.config.h) + list(self.config.hplus)
        out = []
        for i, h in enumerate(hs):
            x = self.config.n[(3 * i + 1) % len(self.config.n)]
            out.append(GroupElem(x, h))
        return out

    def describe(self) -> dict:
        return {"name": self.name}


def sorted_unique(items: Sequence, key) -> list:
    seen = {}
    for it in items:
        seen.setdefault(it, None)
    return sorted(seen, key=key)
