"""Operator model on finitely supported functions on N.

The dilated operators act by permuting or scaling basis vectors:

    S~_h d_y = d_{h.y},   U~(n) d_y = d_{n+y},   mult(f) d_y = f(y) d_y,

with T the inclusion of M-supported vectors and T* the restriction to M.
Corner generators are realized as T* X T.  The symbolic side evaluates an
element  sum_g g.f_g  of A0 as  d_y -> sum_g f_g(y) d_{beta_g(y)}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import CosetSystem
from .crossed import A0Elem, corner_unit, gen_p, gen_s, gen_u
from .d0 import D0Elem
from .relations import Auditor, AuditReport
from .scalars import ONE, ZERO, Scalar


class FinVec:
    __slots__ = ("sys", "entries")

    def __init__(self, sys: CosetSystem, entries=None):
        self.sys = sys
        acc = {}
        items = entries.items() if isinstance(entries, dict) else (entries or ())
        for y, a in items:
            acc[y] = acc.get(y, ZERO) + Scalar.of(a)
        self.entries = {y: a for y, a in acc.items() if a}

    @classmethod
    def delta(cls, sys, y, coeff=ONE):
        return cls(sys, {y: coeff})

    def __add__(self, other):
        return FinVec(self.sys, list(self.entries.items()) + list(other.entries.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        k = Scalar.of(k)
        return FinVec(self.sys, {y: k * a for y, a in self.entries.items()})

    def __eq__(self, other):
        return isinstance(other, FinVec) and self.entries == other.entries

    __hash__ = None

    def inner(self, other) -> Scalar:
        return sum((a.conj() * other.entries[y] for y, a in self.entries.items() if y in other.entries), ZERO)

    def support(self) -> list:
        return sorted(self.entries, key=self.sys.n_key)

    def items(self):
        return [(y, self.entries[y]) for y in self.support()]

    def __repr__(self):
        return "FinVec(" + ", ".join(f"{y!r}: {a!r}" for y, a in self.items()) + ")"

    def to_json(self):
        return [[self.sys.n_to_json(y), a.to_json()] for y, a in self.items()]

    @classmethod
    def from_json(cls, sys, obj):
        return cls(sys, [(sys.n_from_json(y), Scalar.from_json(a)) for y, a in obj])


# ---- operator words ------------------------------------------------------------

@dataclass(frozen=True)
class Op:
    """One symbol of an operator word: kind in {S, U, mult, T, Tstar}."""

    kind: str
    arg: object = None


def S(h): return Op("S", h)
def U(n): return Op("U", n)
def mult(f): return Op("mult", f)


T = Op("T")
TSTAR = Op("Tstar")


def _apply_op(sys, op: Op, v: FinVec, *, corrupt_s: bool = False) -> FinVec:
    if op.kind == "S":
        if corrupt_s:
            return v
        return FinVec(sys, [(sys.h_act(op.arg, y), a) for y, a in v.entries.items()])
    if op.kind == "U":
        return FinVec(sys, [(sys.n_add(op.arg, y), a) for y, a in v.entries.items()])
    if op.kind == "mult":
        return FinVec(sys, [(y, op.arg(y) * a) for y, a in v.entries.items()])
    if op.kind == "T":
        if any(not sys.contains(sys.M, y) for y in v.entries):
            raise ValueError("T is only defined on vectors supported in M")
        return v
    if op.kind == "Tstar":
        return FinVec(sys, [(y, a) for y, a in v.entries.items() if sys.contains(sys.M, y)])
    raise ValueError(f"unknown operator symbol {op.kind!r}")


def apply(sys: CosetSystem, word, v: FinVec, *, corrupt_s: bool = False) -> FinVec:
    """Apply the composition word[0] o word[1] o ... to v (rightmost first)."""
    for op in reversed(list(word)):
        v = _apply_op(sys, op, v, corrupt_s=corrupt_s)
    return v


def apply_symbolic(z: A0Elem, v: FinVec) -> FinVec:
    """The regular representation: (g.f) d_y = f(y) d_{beta_g(y)}."""
    sys = z.sys
    out = []
    for y, c in v.entries.items():
        for g, f in z.terms.items():
            val = f(y)
            if val:
                out.append((sys.beta(g, y), c * val))
    return FinVec(sys, out)


# ---- corner words ------------------------------------------------------------

def letter_symbolic(sys, letter):
    kind = letter[0]
    if kind == "s":
        return gen_s(sys, letter[1])
    if kind == "s*":
        return gen_s(sys, letter[1]).star()
    if kind == "u":
        return gen_u(sys, letter[1])
    if kind == "u*":
        return gen_u(sys, letter[1]).star()
    if kind == "p":
        return gen_p(sys, letter[1], letter[2])
    raise ValueError(f"unknown corner generator {kind!r}")


def letter_operator(sys, letter) -> list:
    kind = letter[0]
    if kind == "s":
        mid = [S(letter[1])]
    elif kind == "s*":
        mid = [S(sys.h_inv(letter[1]))]
    elif kind == "u":
        mid = [U(letter[1])]
    elif kind == "u*":
        mid = [U(sys.n_neg(letter[1]))]
    elif kind == "p":
        f = D0Elem.indicator(sys, sys.coset(letter[2], sys.subgroup(letter[1])))
        mid = [mult(f)]
    else:
        raise ValueError(f"unknown corner generator {kind!r}")
    return [TSTAR] + mid + [T]


def word_symbolic(sys, word):
    z = corner_unit(sys)
    for letter in word:
        z = z * letter_symbolic(sys, letter)
    return z


def word_operator(sys, word) -> list:
    ops = []
    for letter in word:
        ops.extend(letter_operator(sys, letter))
    return ops


def random_corner_word(sys, rng: random.Random, max_len: int = 5) -> list:
    A, Ms = sys.config.hplus, sys.config.m
    word = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choice(["s", "s*", "u", "u*", "p"])
        if kind in ("s", "s*"):
            word.append((kind, rng.choice(A)))
        elif kind in ("u", "u*"):
            word.append((kind, rng.choice(Ms)))
        else:
            word.append((kind, rng.choice(A), rng.choice(Ms)))
    return word


def basis_sample(sys, k: int = 12) -> list:
    """At least k points of M: sampled points of M and of N in M, then their
    images under H^+ and pairwise sums."""
    pts = {x for x in list(sys.config.m) + list(sys.config.n) if sys.contains(sys.M, x)}
    ms = sorted(pts, key=sys.n_key)
    grow = [sys.h_act(a, x) for a in sys.config.hplus for x in ms]
    grow += [sys.n_add(x, y) for x in ms for y in ms]
    for x in grow:
        if len(pts) >= k:
            break
        pts.add(x)
    return sorted(pts, key=sys.n_key)


def word_to_json(sys, word):
    out = []
    for letter in word:
        d = {"gen": letter[0]}
        if letter[0] in ("s", "s*"):
            d["a"] = sys.h_to_json(letter[1])
        elif letter[0] in ("u", "u*"):
            d["m"] = sys.n_to_json(letter[1])
        else:
            d["a"], d["m"] = sys.h_to_json(letter[1]), sys.n_to_json(letter[2])
        out.append(d)
    return out


def word_from_json(sys, obj):
    word = []
    for d in obj:
        g = d["gen"]
        if g in ("s", "s*"):
            word.append((g, sys.h_from_json(d["a"])))
        elif g in ("u", "u*"):
            word.append((g, sys.n_from_json(d["m"])))
        elif g == "p":
            word.append((g, sys.h_from_json(d["a"]), sys.n_from_json(d["m"])))
        else:
            raise ValueError(f"unknown corner generator {g!r}")
    return word


def ops_from_json(sys, obj) -> list:
    ops = []
    for d in obj:
        k = d["op"]
        if k == "S":
            ops.append(S(sys.h_from_json(d["h"])))
        elif k == "U":
            ops.append(U(sys.n_from_json(d["n"])))
        elif k == "mult":
            ops.append(mult(D0Elem.from_json(sys, d["f"])))
        elif k == "T":
            ops.append(T)
        elif k in ("Tstar", "T*"):
            ops.append(TSTAR)
        else:
            raise ValueError(f"unknown operator symbol {k!r}")
    return ops


# ---- checks ----------------------------------------------------------------

def oracle_check(sys, words, basis=None, *, report: AuditReport | None = None) -> AuditReport:
    """Symbolic product of each corner word against direct operator composition."""
    basis = basis_sample(sys) if basis is None else basis
    au = Auditor(sys, "oracle")
    if report is not None:
        au.report = report
    for i, word in enumerate(words):
        z = word_symbolic(sys, word)
        ops = word_operator(sys, word)
        for y in basis:
            v = FinVec.delta(sys, y)
            au.check("word", lambda: apply_symbolic(z, v) == apply(sys, ops, v),
                     word=("raw", i), y=("n", y))
    return au.report


def _p_tilde(sys, a, x):
    """U~(x) S~_a mult(chi_M) S~_a^-1 U~(-x): the dilated range projection."""
    chi_m = D0Elem.indicator(sys, sys.coset(sys.n_zero, sys.M))
    return [U(x), S(a), mult(chi_m), S(sys.h_inv(a)), U(sys.n_neg(x))]


def intertwining_check(sys, *, corrupt: bool = False, basis=None, ns=None) -> AuditReport:
    cfg = sys.config
    basis = basis_sample(sys) if basis is None else basis
    ns = list(cfg.n) if ns is None else ns
    au = Auditor(sys, "intertwining" + (" (corrupted)" if corrupt else ""))
    ap = lambda ops, v: apply(sys, ops, v, corrupt_s=corrupt)  # noqa: E731

    for a in cfg.hplus:
        sa = gen_s(sys, a)
        for y in basis:
            v = FinVec.delta(sys, y)
            au.check("ST = TS", lambda: ap([S(a), T], v) == ap([T], apply_symbolic(sa, v)), a=("h", a), y=("n", y))
    for a in cfg.hplus:
        for m in cfg.m:
            pam = gen_p(sys, a, m)
            for y in basis:
                v = FinVec.delta(sys, y)
                au.check("TP", lambda: ap(_p_tilde(sys, a, m) + [T], v) == ap([T], apply_symbolic(pam, v)),
                         a=("h", a), m=("n", m), y=("n", y))
    for m in cfg.m:
        um = gen_u(sys, m)
        for y in basis:
            v = FinVec.delta(sys, y)
            au.check("UT", lambda: ap([U(m), T], v) == ap([T], apply_symbolic(um, v)), m=("n", m), y=("n", y))
    hs = list(cfg.h) + list(cfg.hplus)
    for h in hs:
        for n in ns[:: max(1, len(ns) // 12)]:
            for y in ns[:: max(1, len(ns) // 6)]:
                v = FinVec.delta(sys, y)
                au.check("sun", lambda: ap([S(h), U(n), S(sys.h_inv(h))], v) == ap([U(sys.h_act(h, n))], v),
                         h=("h", h), n=("n", n), y=("n", y))

    outside = [h for h in cfg.h if not sys.is_in_H_plus(h)]
    pts = ns[:: max(1, len(ns) // 10)]
    for h in outside:
        u = sys.subgroup(h)
        bs = [b for b in cfg.hplus if sys.is_in_H_plus(sys.h_mul(h, b))][:1]
        for n in pts:
            target = [mult(D0Elem.indicator(sys, sys.coset(n, u)))]
            for b in bs:
                hb = sys.h_mul(h, b)
                terms = [_p_tilde(sys, hb, sys.n_add(n, sys.h_act(h, r.rep)))
                         for r in sys.quotient_reps(sys.M, sys.subgroup(b))]
                for y in ns:
                    v = FinVec.delta(sys, y)

                    def lhs():
                        acc = FinVec(sys)
                        for ops in terms:
                            acc = acc + ap(ops, v)
                        return acc
                    au.check("pnh consistent", lambda: lhs() == ap(target, v),
                             h=("h", h), n=("n", n), b=("h", b), y=("n", y))
            for k in pts:
                if sys.contains(u, sys.n_sub(n, k)):
                    continue
                pn = D0Elem.indicator(sys, sys.coset(n, u))
                pk = D0Elem.indicator(sys, sys.coset(k, u))
                for y in ns:
                    v = FinVec.delta(sys, y)
                    au.check("h orthogonal", lambda: not ap([mult(pn), mult(pk)], v).entries,
                             h=("h", h), n=("n", n), k=("n", k), y=("n", y))
    return au.report


def operator_laws_check(sys, *, vectors: int = 20, seed: int = 0) -> AuditReport:
    """Unitarity, the representation law for G and covariance, on sampled vectors."""
    rng = random.Random(seed)
    cfg = sys.config
    au = Auditor(sys, "operator laws")
    pts = list(cfg.n)

    def rvec():
        return FinVec(sys, [(rng.choice(pts), Scalar(rng.randint(-3, 3), rng.randint(-2, 2))) for _ in range(3)])

    gs = sys.sample_g()
    for _ in range(vectors):
        xi, eta = rvec(), rvec()
        h = rng.choice(list(cfg.h) + list(cfg.hplus))
        n = rng.choice(pts)
        au.check("unitary S", lambda: apply(sys, [S(h)], xi).inner(apply(sys, [S(h)], eta)) == xi.inner(eta), h=("h", h))
        au.check("unitary U", lambda: apply(sys, [U(n)], xi).inner(apply(sys, [U(n)], eta)) == xi.inner(eta), n=("n", n))
        g1, g2 = rng.choice(gs), rng.choice(gs)
        rep = lambda g: [U(g.n), S(g.h)]  # noqa: E731
        au.check("representation", lambda: apply(sys, rep(sys.compose(g1, g2)), xi) == apply(sys, rep(g1) + rep(g2), xi))
        c = sys.coset(rng.choice(pts), sys.subgroup(rng.choice(cfg.hplus)))
        f = D0Elem.indicator(sys, c)
        gi = sys.inverse(g1)
        au.check("covariance",
                 lambda: apply(sys, rep(g1) + [mult(f)] + rep(gi), xi) == apply(sys, [mult(f.act(g1))], xi))
    for a in cfg.hplus:
        for y in basis_sample(sys):
            v = FinVec.delta(sys, y)
            au.check("isometry", lambda: apply(sys, [TSTAR, S(sys.h_inv(a)), T, TSTAR, S(a), T], v) == v, a=("h", a))
    return au.report
