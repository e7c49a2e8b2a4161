"""The lamplighter group (sum_Z F) x| Z with F = Z/m and the shift action.

H = Z is written additively here: the "product" of shifts a, b is a + b and
the identity is 0.  M is the configurations supported in H^+ = {0, 1, 2, ...},
and the conjugate aMa^-1 is the configurations supported in [a, oo).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..core import CosetSystem, InstanceConfig, NonAbelianF, SubgroupU
from ..scalars import QmodZ


@dataclass(frozen=True)
class Config:
    """A finitely supported map Z -> Z/m, as sorted (position, value) pairs."""

    items: tuple = ()

    @classmethod
    def make(cls, pairs, modulus: int) -> "Config":
        acc = {}
        for pos, val in pairs:
            acc[int(pos)] = (acc.get(int(pos), 0) + int(val)) % modulus
        return cls(tuple(sorted((p, v) for p, v in acc.items() if v)))

    @classmethod
    def delta(cls, pos: int, value: int = 1) -> "Config":
        return cls(((pos, value),)) if value else cls()

    def get(self, pos: int) -> int:
        for p, v in self.items:
            if p == pos:
                return v
        return 0

    def support(self) -> list:
        return [p for p, _ in self.items]

    def __repr__(self):
        if not self.items:
            return "Config()"
        return "Config(" + " + ".join(f"{v}*d{p}" for p, v in self.items) + ")"


def shift_act(a: int, f: Config) -> Config:
    """(a.f)(x) = f(x - a): the support moves right by a."""
    return Config(tuple((p + a, v) for p, v in f.items))


def lamp_bichar(f: Config, g: Config, modulus: int, offset: int = 0) -> QmodZ:
    """sum_i f(i) g(-i - offset) / m  mod 1.

    offset=0 is the literal pairing of position i with i^-1 = -i.  That
    pairing is symmetric for the shift but does not make M its own
    annihilator (B(d0, d0) = 1/m != 0); offset=1 pairs i with -1-i,
    which does.
    """
    gv = dict(g.items)
    total = 0
    for i, v in f.items:
        w = gv.get(-i - offset)
        if w:
            total += v * w
    return QmodZ(Fraction(total % modulus, modulus))


def default_lamplighter_config(modulus: int = 2) -> InstanceConfig:
    vals = range(modulus)
    m_sample = []
    # zero, then single lamps, then the rest of the configurations on [0, 3)
    m_sample.append(Config())
    for p in range(3):
        m_sample.append(Config.delta(p, 1))
    for combo in itertools.product(vals, repeat=3):
        c = Config.make(enumerate(combo), modulus)
        if c not in m_sample:
            m_sample.append(c)
    n_sample = []
    for combo in itertools.product(vals, repeat=5):
        c = Config.make(zip(range(-2, 3), combo), modulus)
        if modulus > 2 and sum(1 for v in combo if v) > 2:
            continue
        n_sample.append(c)
    return InstanceConfig(
        "lamplighter",
        hplus=[1, 2, 3],
        m=m_sample,
        n=n_sample,
        h=[-1, -2, -3, 1, 2],
    )


class LamplighterSystem(CosetSystem):
    name = "lamplighter"
    n_zero = Config()
    h_one = 0

    def __init__(self, modulus: int = 2, config: InstanceConfig | None = None, abelian: bool = True):
        if modulus < 2:
            raise ValueError("need a nontrivial finite group F = Z/m, m >= 2")
        if not abelian:
            raise NonAbelianF("only cyclic F = Z/m is implemented")
        self.modulus = modulus
        super().__init__(config)

    def default_config(self):
        return default_lamplighter_config(self.modulus)

    def n_add(self, x, y):
        return Config.make(itertools.chain(x.items, y.items), self.modulus)

    def n_neg(self, x):
        return Config(tuple((p, (-v) % self.modulus) for p, v in x.items))

    def n_key(self, x):
        return x.items

    def h_mul(self, a, b):
        return a + b

    def h_inv(self, a):
        return -a

    def h_act(self, a, x):
        return shift_act(a, x)

    def h_key(self, a):
        return a

    def subgroup(self, a) -> SubgroupU:
        return SubgroupU(int(a), int(a))

    def contains(self, u, x):
        return all(p >= u.key for p, _ in x.items)

    def _le(self, w, u):
        return w.key >= u.key

    def reduce(self, x, u):
        return Config(tuple((p, v) for p, v in x.items if p < u.key))

    def _meet_rule(self, u, v):
        k = max(u.key, v.key)
        return SubgroupU(k, k)

    def _index(self, u, w):
        return self.modulus ** (w.key - u.key)

    def _quotient_elems(self, u, w):
        positions = range(u.key, w.key)
        return [
            Config.make(zip(positions, combo), self.modulus)
            for combo in itertools.product(range(self.modulus), repeat=len(positions))
        ]

    def double_coset_reduce(self, x, a):
        # M + aMa^-1 is supported in [min(0, a), oo)
        return self.reduce(x, self.subgroup(min(0, a)))

    def hecke_index_formula(self, a) -> int:
        return self.modulus ** max(a, 0)

    def bichar(self, f, g, offset: int = 0) -> QmodZ:
        return lamp_bichar(f, g, self.modulus, offset)

    # JSON
    def n_to_json(self, x):
        return [[p, v] for p, v in x.items]

    def n_from_json(self, obj):
        return Config.make(((int(p), int(v)) for p, v in obj), self.modulus)

    def h_to_json(self, a):
        return int(a)

    def h_from_json(self, obj):
        return int(obj)

    def sub_to_json(self, u):
        return u.key

    def sub_from_json(self, obj):
        return self.subgroup(int(obj))

    def describe(self):
        return {"name": self.name, "modulus": self.modulus}
