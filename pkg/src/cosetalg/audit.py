"""Seeded sample-driven checks, and the combined audit report.

Each check returns an AuditReport.  ``full_audit`` runs all of them for a
list of instances and returns a plain dict whose JSON dump (sorted keys) is
reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass

from .core import CosetAlgError, CosetSystem, GroupElem
from .crossed import (
    A0Elem,
    chi,
    corner_factorization,
    extend_pn,
    extend_pnh,
    factorization_product,
    hplus_candidates,
)
from .d0 import D0Elem, d0_mul
from .hecke import (
    HeckeElem,
    basis_product,
    basis_product_oracle,
    double_coset,
    hecke_index,
    hecke_pair_check,
    left_coset,
    left_coset_decomposition,
    reducedness_witness,
)
from .relations import Auditor, AuditReport, audit_relations, audit_standing


@dataclass
class AuditConfig:
    seed: int = 20240501
    d0_products: int = 50
    d0_points: int = 100
    covariance_pairs: int = 200
    extension_pairs: int = 100
    fullness_cosets: int = 50
    hecke_classes: int = 30
    hecke_products: int = 30
    hecke_triples: int = 20
    hecke_max_index: int = 16
    oracle_words: int = 100
    oracle_word_len: int = 5
    oracle_basis: int = 12
    duality_samples: int = 200


# ---- random sampling ---------------------------------------------------------

def random_m(sys: CosetSystem, rng):
    x = sys.n_zero
    for _ in range(rng.randint(1, 3)):
        x = sys.n_add(x, rng.choice(sys.config.m))
    if rng.random() < 0.5:
        x = sys.h_act(rng.choice(sys.config.hplus), x)
    return x


def random_n(sys: CosetSystem, rng):
    x = rng.choice(sys.config.n)
    if rng.random() < 0.5:
        x = sys.n_add(x, sys.h_act(rng.choice(sys.config.h), random_m(sys, rng)))
    return x


def random_h(sys, rng):
    return rng.choice(list(sys.config.h) + list(sys.config.hplus))


def random_coset(sys, rng):
    return sys.coset(random_n(sys, rng), sys.subgroup(random_h(sys, rng)))


def random_point_in(sys, rng, c):
    return sys.n_add(c.rep, sys.h_act(c.sub.gen, random_m(sys, rng)))


def random_g(sys, rng):
    return GroupElem(random_n(sys, rng), random_h(sys, rng))


# ---- checks ------------------------------------------------------------------

def d0_pointwise_check(sys, cfg: AuditConfig) -> AuditReport:
    """chi_{xU} chi_{yV} = sum chi_{zW}, evaluated pointwise."""
    rng = random.Random(cfg.seed)
    au = Auditor(sys, "d0 pointwise")
    for i in range(cfg.d0_products):
        c1 = random_coset(sys, rng)
        # half the time make c2 meet c1, so products are not all empty
        if rng.random() < 0.5:
            c2 = sys.coset(random_point_in(sys, rng, c1), sys.subgroup(random_h(sys, rng)))
        else:
            c2 = random_coset(sys, rng)
        x, y = D0Elem.indicator(sys, c1), D0Elem.indicator(sys, c2)
        xy = d0_mul(x, y)
        pts = []
        for _ in range(cfg.d0_points):
            r = rng.random()
            pts.append(random_point_in(sys, rng, c1 if r < 0.4 else c2) if r < 0.8 else random_n(sys, rng))
        au.check("product",
                 lambda: all(xy(t) == x(t) * y(t) for t in pts) and len(xy.terms) == len(sys.intersect(c1, c2)),
                 product=("raw", i))
    return au.report


def covariance_check(sys, cfg: AuditConfig) -> AuditReport:
    """g p_c g^-1 = p_{beta_g(c)} in A0."""
    rng = random.Random(cfg.seed + 1)
    au = Auditor(sys, "covariance")
    for i in range(cfg.covariance_pairs):
        g, c = random_g(sys, rng), random_coset(sys, rng)
        w = A0Elem.group(sys, g)
        lhs = lambda: w * A0Elem.from_d0(D0Elem.indicator(sys, c)) * w.star()  # noqa: E731
        rhs = A0Elem.from_d0(D0Elem.indicator(sys, sys.act(g, c)))
        au.check("covariance", lambda: lhs() == rhs, pair=("raw", i))
    return au.report


def _guard(fn):
    try:
        return fn()
    except (CosetAlgError, AssertionError):
        return False


def extension_check(sys, cfg: AuditConfig) -> AuditReport:
    au = Auditor(sys, "extensions")
    hs = list(sys.config.h) + list(sys.config.hplus)
    ns = list(sys.config.n)
    pairs = list(itertools.product(hs, ns))
    step = max(1, len(pairs) // cfg.extension_pairs)
    for h, n in pairs[::step]:
        au.check("pnh", lambda: _guard(lambda: extend_pnh(sys, h, n) == chi(sys, n, h)), h=("h", h), n=("n", n))
    pairs = list(itertools.product(hplus_candidates(sys)[:6], ns))
    step = max(1, len(pairs) // cfg.extension_pairs)
    for a, n in pairs[::step]:
        au.check("pn", lambda: _guard(lambda: extend_pn(sys, a, n) == chi(sys, n, a)), a=("h", a), n=("n", n))
    return au.report


def fullness_cosets(sys, k: int) -> list:
    hs = list(sys.config.hplus) + list(sys.config.h)
    out, seen = [], set()
    for x, h in zip(itertools.cycle(sys.config.n), itertools.islice(itertools.cycle(hs), 4 * k)):
        c = sys.coset(x, sys.subgroup(h))
        if c not in seen:
            seen.add(c)
            out.append(c)
        if len(out) >= k:
            break
    for x in sys.config.n:
        if len(out) >= k:
            break
        for h in hs:
            c = sys.coset(x, sys.subgroup(h))
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out[:max(k, 0)]


def fullness_check(sys, cfg: AuditConfig) -> AuditReport:
    au = Auditor(sys, "fullness")
    for c in fullness_cosets(sys, cfg.fullness_cosets):
        au.check("factorization",
                 lambda: factorization_product(sys, corner_factorization(sys, c))
                 == A0Elem.from_d0(D0Elem.indicator(sys, c)),
                 c=("raw", sys.coset_to_json(c)))
    return au.report


def hecke_samples(sys, k: int, max_index: int | None = None) -> list:
    hs = [sys.h_one] + list(sys.config.hplus) + list(sys.config.h)
    xs = list(sys.config.n) + [sys.h_act(h, x) for h in sys.config.h for x in sys.config.n]
    out, seen = [], set()
    for x in xs:
        for h in hs:
            d = double_coset(sys, GroupElem(x, h))
            if d in seen:
                continue
            if max_index is not None and hecke_index(sys, d) > max_index:
                continue
            seen.add(d)
            out.append(d)
    # interleave h-parts so the first k are varied
    by_h = {}
    for d in out:
        by_h.setdefault(sys.h_key(d.h), []).append(d)
    mixed = [d for group in itertools.zip_longest(*by_h.values()) for d in group if d is not None]
    return mixed[:k]


def hecke_check(sys, cfg: AuditConfig) -> AuditReport:
    rng = random.Random(cfg.seed + 2)
    au = Auditor(sys, "hecke")
    gj = lambda g: ("raw", sys.g_to_json(g))  # noqa: E731
    classes = hecke_samples(sys, max(cfg.hecke_classes, 40))
    for d in classes[: max(cfg.hecke_classes, 40)]:
        def count():
            reps = left_coset_decomposition(sys, d)
            return len(reps) == hecke_index(sys, d) == hecke_pair_check(sys, d)

        def cover():
            reps = left_coset_decomposition(sys, d)
            if len({left_coset(sys, r) for r in reps}) != len(reps):
                return False
            if any(double_coset(sys, r) != d for r in reps):
                return False
            keys = {left_coset(sys, r) for r in reps}
            ms = sys.config.m
            for m1, m2 in itertools.product(ms[:5], ms[:5]):
                g = sys.compose(sys.compose(sys.from_n(m1), d), sys.from_n(m2))
                if left_coset(sys, g) not in keys:
                    return False
            return True
        au.check("count", count, g=gj(d))
        au.check("decomposition", cover, g=gj(d))

    small = hecke_samples(sys, 60, cfg.hecke_max_index)
    pairs = []
    for i in range(len(small)):
        for j in range(len(small)):
            pairs.append((small[i], small[(i * 7 + j * 3) % len(small)]))
            if len(pairs) >= cfg.hecke_products:
                break
        if len(pairs) >= cfg.hecke_products:
            break
    for g, h in pairs:
        au.check("oracle", lambda: basis_product(sys, g, h) == basis_product_oracle(sys, g, h), g=gj(g), h=gj(h))

    def elem():
        x = HeckeElem(sys)
        for _ in range(rng.randint(1, 2)):
            x = x + HeckeElem.basis(sys, rng.choice(small), rng.randint(1, 3))
        return x

    one = HeckeElem.one(sys)
    for i in range(cfg.hecke_triples):
        x, y, z = elem(), elem(), elem()
        au.check("associativity", lambda: (x * y) * z == x * (y * z), triple=("raw", i))
        au.check("unit", lambda: one * x == x and x * one == x, triple=("raw", i))
        au.check("star", lambda: x.star().star() == x and (x * y).star() == y.star() * x.star(), triple=("raw", i))

    if sys.name == "rational":
        from fractions import Fraction

        for m, n in ((2, 3), (2, 5), (3, 4)):
            gm, gn = sys.from_h(Fraction(m)), sys.from_h(Fraction(n))
            au.check("coprime product",
                     lambda: basis_product(sys, gm, gn) == {double_coset(sys, sys.from_h(Fraction(m * n))): 1},
                     m=("raw", m), n=("raw", n))

    for n in sys.config.m:
        if n != sys.n_zero:
            au.check("reduced", lambda: reducedness_witness(sys, n) is not None, n=("n", n))
    return au.report


def oracle_suite(sys, cfg: AuditConfig) -> AuditReport:
    from .repr_oracle import basis_sample, oracle_check, random_corner_word

    rng = random.Random(cfg.seed + 3)
    words = [random_corner_word(sys, rng, cfg.oracle_word_len) for _ in range(cfg.oracle_words)]
    return oracle_check(sys, words, basis_sample(sys, cfg.oracle_basis))


# ---- the combined report ------------------------------------------------------

def instance_audit(sys, cfg: AuditConfig | None = None, *, include_pnh: bool = True) -> dict:
    from .duality import duality_check
    from .repr_oracle import intertwining_check, operator_laws_check

    cfg = cfg or AuditConfig()
    reports = [audit_standing(sys), d0_pointwise_check(sys, cfg), covariance_check(sys, cfg)]
    families = ["SP", "SU", "PN"] + (["PNH"] if include_pnh else [])
    controls = []
    for fam in families:
        reports.append(audit_relations(sys, fam))
        bad = audit_relations(sys, fam, corrupt=True)
        ff = bad.first_failure()
        controls.append({"family": fam, "detected": not bad.passed, "witness": ff.to_json() if ff else None})
    reports += [extension_check(sys, cfg), fullness_check(sys, cfg), hecke_check(sys, cfg)]
    if sys.name in ("numberfield", "lamplighter"):
        reports.append(duality_check(sys, samples=cfg.duality_samples, seed=cfg.seed))
    reports += [oracle_suite(sys, cfg), intertwining_check(sys), operator_laws_check(sys, seed=cfg.seed)]
    bad_sun = intertwining_check(sys, corrupt=True)
    sun = next(r for r in bad_sun.results if r.id == "sun")
    controls.append({"family": "intertwining", "detected": not sun.passed, "witness": sun.to_json()})
    ok = all(r.passed for r in reports) and all(c["detected"] for c in controls)
    return {
        "instance": sys.describe(),
        "pass": ok,
        "checks": [r.to_json() for r in reports],
        "negative_controls": controls,
    }


def full_audit(systems, cfg: AuditConfig | None = None) -> dict:
    cfg = cfg or AuditConfig()
    parts = [instance_audit(s, cfg) for s in systems]
    return {"config": asdict(cfg), "pass": all(p["pass"] for p in parts), "instances": parts}


def dump_report(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
