"""Generator families and exhaustive relation audits over the sample sets.

Every check is an exact identity in the corner algebra (SP, SU) or in D0
(PN, PNH).  An audit records, per relation id, how many instances were
checked, how many failed, and the first failing tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import CosetSystem, NoContraction, NoWitness, RefinementBlowup
from .crossed import chi, corner_unit, gen_p, gen_s, gen_u
from .d0 import D0Elem


@dataclass
class RelationResult:
    id: str
    checked: int = 0
    failed: int = 0
    witness: dict | None = None
    error: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.error is None

    def to_json(self) -> dict:
        out = {"id": self.id, "checked": self.checked, "failed": self.failed, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class AuditReport:
    family: str
    instance: dict
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def checked(self) -> int:
        return sum(r.checked for r in self.results)

    def first_failure(self) -> RelationResult | None:
        return next((r for r in self.results if not r.passed), None)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "instance": self.instance,
            "pass": self.passed,
            "checked": self.checked,
            "relations": [r.to_json() for r in self.results],
        }


class Auditor:
    def __init__(self, sys: CosetSystem, family: str):
        self.sys = sys
        self.report = AuditReport(family, sys.describe())
        self._by_id = {}

    def check(self, rid: str, fn: Callable[[], bool], **tup):
        res = self._by_id.get(rid)
        if res is None:
            res = self._by_id[rid] = RelationResult(rid)
            self.report.results.append(res)
        res.checked += 1
        try:
            ok = fn()
        except RefinementBlowup as exc:
            res.failed += 1
            if res.error is None:
                res.error = {
                    "type": "RefinementBlowup",
                    "index_u": exc.index_u,
                    "index_v": exc.index_v,
                    "budget": exc.budget,
                    "tuple": self._fmt(tup),
                }
            return
        if not ok:
            res.failed += 1
            if res.witness is None:
                res.witness = self._fmt(tup)

    def _fmt(self, tup):
        out = {}
        for k, (kind, v) in sorted(tup.items()):
            if kind == "h":
                out[k] = self.sys.h_to_json(v)
            elif kind == "n":
                out[k] = self.sys.n_to_json(v)
            else:
                out[k] = v
        return out


def _h(x):
    return ("h", x)


def _n(x):
    return ("n", x)


# ---- families --------------------------------------------------------------

@dataclass
class SPFamily:
    S: Callable
    P: Callable


@dataclass
class SUFamily:
    S: Callable
    U: Callable


@dataclass
class PNFamily:
    P: Callable  # (a in H^+, n in N) -> D0Elem


@dataclass
class PNHFamily:
    P: Callable  # (h in H, n in N) -> D0Elem


def sp_family(sys) -> SPFamily:
    return SPFamily(S=lambda a: gen_s(sys, a), P=lambda a, m: gen_p(sys, a, m))


def su_family(sys) -> SUFamily:
    return SUFamily(S=lambda a: gen_s(sys, a), U=lambda m: gen_u(sys, m))


def pn_family(sys) -> PNFamily:
    return PNFamily(P=lambda a, n: chi(sys, n, a))


def pnh_family(sys) -> PNHFamily:
    return PNHFamily(P=lambda h, n: chi(sys, n, h))


def _shift_element(sys):
    """A fixed nonzero element of M used by the corrupted families."""
    return next(m for m in sys.config.m if m != sys.n_zero)


def corrupt_sp(sys) -> SPFamily:
    """P(a, m) replaced by the wrong coset m + m0 + aMa^-1."""
    m0 = _shift_element(sys)
    return SPFamily(S=lambda a: gen_s(sys, a), P=lambda a, m: gen_p(sys, a, sys.n_add(m, m0)))


def corrupt_su(sys) -> SUFamily:
    """S_a replaced by u(m0) s_a: still isometries, but (s rep) breaks."""
    m0 = _shift_element(sys)
    return SUFamily(S=lambda a: gen_u(sys, m0) * gen_s(sys, a), U=lambda m: gen_u(sys, m))


def corrupt_pn(sys) -> PNFamily:
    """P(a, n) ignoring a."""
    return PNFamily(P=lambda a, n: chi(sys, n, sys.h_one))


def corrupt_pnh(sys) -> PNHFamily:
    return PNHFamily(P=lambda h, n: chi(sys, n, sys.h_one))


# ---- audits ----------------------------------------------------------------

def _reps(sys, b):
    return [c.rep for c in sys.quotient_reps(sys.M, sys.subgroup(b))]


def audit_sp(sys: CosetSystem, fam: SPFamily | None = None) -> AuditReport:
    fam = fam or sp_family(sys)
    A, Ms = sys.config.hplus, sys.config.m
    one = corner_unit(sys)
    au = Auditor(sys, "SP")
    S, P = fam.S, fam.P
    for a in A:
        au.check("isometry", lambda: S(a).star() * S(a) == one, a=_h(a))
    for a in A:
        for b in A:
            au.check("s rep", lambda: S(a) * S(b) == S(sys.h_mul(a, b)), a=_h(a), b=_h(b))
    au.check("p e", lambda: P(sys.h_one, sys.n_zero) == one)
    for a in A:
        for m in Ms:
            au.check("projection", lambda: P(a, m).star() == P(a, m) and P(a, m) * P(a, m) == P(a, m),
                     a=_h(a), m=_n(m))
    for a in A:
        for b in A:
            for m in Ms:
                au.check("s p",
                         lambda: S(a) * P(b, m) * S(a).star() == P(sys.h_mul(a, b), sys.h_act(a, m)),
                         a=_h(a), b=_h(b), m=_n(m))
    for a in A:
        for b in A:
            for k in Ms:
                def rhs():
                    ab = sys.h_mul(a, b)
                    total = None
                    for r in _reps(sys, b):
                        t = P(ab, sys.n_add(k, sys.h_act(a, r)))
                        total = t if total is None else total + t
                    return total
                au.check("p consistent", lambda: P(a, k) == rhs(), a=_h(a), b=_h(b), k=_n(k))
    return au.report


def audit_su(sys: CosetSystem, fam: SUFamily | None = None) -> AuditReport:
    fam = fam or su_family(sys)
    A, Ms = sys.config.hplus, sys.config.m
    one = corner_unit(sys)
    au = Auditor(sys, "SU")
    S, U = fam.S, fam.U
    for a in A:
        au.check("isometry", lambda: S(a).star() * S(a) == one, a=_h(a))
    for m in Ms:
        au.check("unitary", lambda: U(m).star() * U(m) == one and U(m) * U(m).star() == one, m=_n(m))
    for a in A:
        for b in A:
            au.check("s rep", lambda: S(a) * S(b) == S(sys.h_mul(a, b)), a=_h(a), b=_h(b))
    for a in A:
        for m in Ms:
            au.check("s u", lambda: S(a) * U(m) == U(sys.h_act(a, m)) * S(a), a=_h(a), m=_n(m))
    for a in A:
        def total():
            acc = None
            for r in _reps(sys, a):
                t = U(r) * S(a) * S(a).star() * U(sys.n_neg(r))
                acc = t if acc is None else acc + t
            return acc
        au.check("u consistent", lambda: total() == one, a=_h(a))
    for m in Ms:
        for k in Ms:
            au.check("u rep", lambda: U(m) * U(k) == U(sys.n_add(m, k)), m=_n(m), k=_n(k))
    return au.report


def audit_pn(sys: CosetSystem, fam: PNFamily | None = None, *, ns=None) -> AuditReport:
    fam = fam or pn_family(sys)
    A = sys.config.hplus
    ns = list(sys.config.n) if ns is None else list(ns)
    au = Auditor(sys, "PN")
    P = fam.P
    for a in A:
        for n in ns:
            au.check("projection", lambda: P(a, n).star() == P(a, n) and P(a, n) * P(a, n) == P(a, n),
                     a=_h(a), n=_n(n))
    for a in A:
        u = sys.subgroup(a)
        for i, n in enumerate(ns):
            for k in ns[i + 1:]:
                if sys.contains(u, sys.n_sub(n, k)):
                    continue
                au.check("orthogonal", lambda: (P(a, n) * P(a, k)).is_zero(), a=_h(a), n=_n(n), k=_n(k))
    for a in A:
        for n in ns:
            for b in A:
                def rhs():
                    ab = sys.h_mul(a, b)
                    acc = D0Elem(sys)
                    for r in _reps(sys, b):
                        acc = acc + P(ab, sys.n_add(n, sys.h_act(a, r)))
                    return acc
                au.check("pn consistent", lambda: P(a, n) == rhs(), a=_h(a), n=_n(n), b=_h(b))
    return au.report


def audit_pnh(sys: CosetSystem, fam: PNHFamily | None = None, *, hs=None, ns=None) -> AuditReport:
    fam = fam or pnh_family(sys)
    hs = list(sys.config.h) + list(sys.config.hplus) if hs is None else list(hs)
    ns = list(sys.config.n) if ns is None else list(ns)
    B = sys.config.hplus
    au = Auditor(sys, "PNH")
    P = fam.P
    for h in hs:
        for n in ns:
            au.check("projection", lambda: P(h, n).star() == P(h, n) and P(h, n) * P(h, n) == P(h, n),
                     h=_h(h), n=_n(n))
    for h in hs:
        u = sys.subgroup(h)
        for i, n in enumerate(ns):
            for k in ns[i + 1:]:
                if sys.contains(u, sys.n_sub(n, k)):
                    continue
                au.check("h orthogonal", lambda: (P(h, n) * P(h, k)).is_zero(), h=_h(h), n=_n(n), k=_n(k))
    for h in hs:
        for n in ns:
            for b in B:
                def rhs():
                    hb = sys.h_mul(h, b)
                    acc = D0Elem(sys)
                    for r in _reps(sys, b):
                        acc = acc + P(hb, sys.n_add(n, sys.h_act(h, r)))
                    return acc
                au.check("pnh consistent", lambda: P(h, n) == rhs(), h=_h(h), n=_n(n), b=_h(b))
    return au.report


AUDITS = {"SP": audit_sp, "SU": audit_su, "PN": audit_pn, "PNH": audit_pnh}
CORRUPT = {"SP": corrupt_sp, "SU": corrupt_su, "PN": corrupt_pn, "PNH": corrupt_pnh}


def audit_relations(sys: CosetSystem, family: str, *, corrupt: bool = False) -> AuditReport:
    fam = CORRUPT[family](sys) if corrupt else None
    rep = AUDITS[family](sys, fam)
    if corrupt:
        rep.family = family + " (corrupted)"
    return rep


# ---- standing conditions ---------------------------------------------------

def audit_standing(sys: CosetSystem, *, max_chain_index: int = 512) -> AuditReport:
    """Finite shadows of the standing hypotheses on the instance samples."""
    cfg = sys.config
    subs = sys.sample_subgroups()
    au = Auditor(sys, "standing")

    for i, u in enumerate(subs):
        for v in subs[i:]:
            def filt():
                w = sys.meet(u, v)
                return sys.le(w, u) and sys.le(w, v) and w == sys.subgroup(w.gen)
            au.check("filter base", filt, u=("raw", sys.sub_to_json(u)), v=("raw", sys.sub_to_json(v)))

    for n in cfg.n:
        if n == sys.n_zero:
            continue
        au.check("separating", lambda: any(not sys.contains(u, n) for u in subs), n=_n(n))

    nested = [(u, w) for u in subs for w in subs
              if u != w and sys.le(w, u) and sys.index(u, w) <= max_chain_index]
    for u, w in nested:
        def finite():
            reps = sys.quotient_reps(u, w)
            if len(reps) != sys.index(u, w):
                return False
            if not all(sys.contains(u, c.rep) for c in reps):
                return False
            # every sampled point of u lies in exactly one listed coset
            for x in cfg.n + cfg.m:
                if sys.contains(u, x) and sum(sys.in_coset(c, x) for c in reps) != 1:
                    return False
            return True
        au.check("finite", finite, u=("raw", sys.sub_to_json(u)), w=("raw", sys.sub_to_json(w)))
    for u, w in nested:
        for x in subs:
            if x in (u, w) or not sys.le(x, w) or sys.index(u, x) > max_chain_index:
                continue
            au.check("quotient chain",
                     lambda: len(sys.quotient_reps(u, w)) * len(sys.quotient_reps(w, x))
                     == len(sys.quotient_reps(u, x)),
                     u=("raw", sys.sub_to_json(u)), w=("raw", sys.sub_to_json(w)), x=("raw", sys.sub_to_json(x)))

    for a in list(cfg.hplus) + list(cfg.h):
        if a == sys.h_one:
            continue

        def eff():
            try:
                s = sys.effectiveness_witness(a)
            except NoWitness:
                return False
            return sys.contains(sys.M, s) and sys.h_act(a, s) != s
        au.check("effective", eff, a=_h(a))

    for h in list(cfg.h) + list(cfg.hplus):
        hi = sys.h_inv(h)
        au.check("directed", lambda: any(sys.is_in_H_plus(sys.h_mul(hi, a)) for a in cfg.hplus), h=_h(h))

    for n in cfg.n:
        au.check("abelian hyp", lambda: any(sys.contains(sys.subgroup(sys.h_inv(a)), n) for a in cfg.hplus),
                 n=_n(n))

    au.check("M != N", lambda: any(not sys.contains(sys.M, x) for x in cfg.n))
    au.check("H+ sample", lambda: all(sys.is_in_H_plus(a) for a in cfg.hplus))

    for x in cfg.n[:12]:
        for u in subs[:6]:
            c = sys.coset(x, u)

            def contr():
                try:
                    g = sys.contraction_witness(c)
                except NoContraction:
                    return False
                img = sys.act(g, c)
                return sys.coset_le(img, c) and sys.index(c.sub, img.sub) >= 2
            au.check("contraction", contr, x=_n(x), u=("raw", sys.sub_to_json(u)))
    return au.report
