"""N = Q, H = Q^x, M = Z: the ax+b group of the rationals."""

from __future__ import annotations

import math
from fractions import Fraction

from ..core import CosetSystem, InstanceConfig, NotInRing, SubgroupU
from ..scalars import fmt_frac, frac


def rat_gcd(x: Fraction, y: Fraction) -> Fraction:
    """Generator of xZ + yZ (nonnegative)."""
    x, y = Fraction(x), Fraction(y)
    return Fraction(math.gcd(x.numerator, y.numerator), math.lcm(x.denominator, y.denominator))


def rat_lcm(x: Fraction, y: Fraction) -> Fraction:
    """Generator of xZ n yZ (nonnegative)."""
    x, y = Fraction(x), Fraction(y)
    return Fraction(math.lcm(x.numerator, y.numerator), math.gcd(x.denominator, y.denominator))


def ring_quotient_size(a) -> int:
    """|Z / aZ|."""
    a = frac(a)
    if a.denominator != 1 or a == 0:
        raise NotInRing(f"{a} is not a nonzero integer")
    return abs(a.numerator)


def cofinality_check(a) -> Fraction:
    """For a = s/t in lowest terms return s; then sZ is inside aZ."""
    a = frac(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return Fraction(a.numerator)


def default_rational_config() -> InstanceConfig:
    n = sorted({Fraction(k, q) for q in (1, 2, 3) for k in range(-6, 7)})
    m = [Fraction(k) for k in (0, 1, -1, 2, -2, 3, -3)]
    hplus = [Fraction(k) for k in (2, 3, 4, 5, 6)]
    h = [Fraction(x) for x in ("1/2", "1/3", "2/3", "3/2", "-1", "-2", "1/6", "5/6", "3/4", "-1/2")]
    return InstanceConfig("rational", hplus=hplus, m=m, n=n, h=h)


class RationalSystem(CosetSystem):
    name = "rational"
    n_zero = Fraction(0)
    h_one = Fraction(1)

    def default_config(self):
        return default_rational_config()

    def n_add(self, x, y):
        return x + y

    def n_neg(self, x):
        return -x

    def n_key(self, x):
        return x

    def h_mul(self, a, b):
        return a * b

    def h_inv(self, a):
        return 1 / frac(a)

    def h_act(self, a, x):
        return a * x

    def h_key(self, a):
        return (abs(a), a < 0)

    def subgroup(self, a) -> SubgroupU:
        a = abs(frac(a))
        if a == 0:
            raise ValueError("0 is not in Q^x")
        return SubgroupU(a, a)

    def contains(self, u, x):
        return (x / u.key).denominator == 1

    def _le(self, w, u):
        return (w.key / u.key).denominator == 1

    def reduce(self, x, u):
        x = frac(x)
        return x - u.key * math.floor(x / u.key)

    def _meet_rule(self, u, v):
        g = rat_lcm(u.key, v.key)
        return SubgroupU(g, g)

    def _index(self, u, w):
        return int(w.key / u.key)

    def _quotient_elems(self, u, w):
        return [k * u.key for k in range(self._index(u, w))]

    def double_coset_reduce(self, x, a):
        # M + aM = gcd(1, a) Z
        return self.reduce(x, self.subgroup(rat_gcd(1, a)))

    def hecke_index_formula(self, a) -> int:
        # [M : M n aM] = [M + aM : aM] = |a| / gcd(1, a)
        r = abs(frac(a)) / rat_gcd(1, a)
        assert r.denominator == 1
        return int(r)

    # JSON
    def n_to_json(self, x):
        return fmt_frac(x)

    def n_from_json(self, obj):
        return frac(obj)

    h_to_json = n_to_json

    def h_from_json(self, obj):
        a = frac(obj)
        if a == 0:
            raise ValueError("0 is not in Q^x")
        return a

    def sub_to_json(self, u):
        return fmt_frac(u.key)

    def sub_from_json(self, obj):
        return self.subgroup(frac(obj))

    def describe(self):
        return {"name": self.name}
