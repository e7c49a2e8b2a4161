"""K = Q(theta) for an algebraic integer theta, with M = Z[theta].

Elements are coordinate vectors over the power basis 1, theta, ..., theta^(n-1).
Subgroups aM are lattices in those coordinates, keyed by their HNF basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction

from ..core import CosetSystem, InstanceConfig, SubgroupU
from ..scalars import QmodZ, fmt_frac, frac
from .lattice import Lattice


@dataclass(frozen=True, eq=False)
class FieldElem:
    coords: tuple
    field: "NumberField" = dc_field(compare=False, hash=False, repr=False)
    _hash: int | None = dc_field(init=False, compare=False, repr=False, default=None)

    def __eq__(self, other):
        return isinstance(other, FieldElem) and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coords))
        return self._hash

    def __add__(self, other):
        other = self.field.coerce(other)
        return FieldElem(tuple(a + b for a, b in zip(self.coords, other.coords)), self.field)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(tuple(-a for a in self.coords), self.field)

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __mul__(self, other):
        return self.field.mul(self, self.field.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.field.inv(self.field.coerce(other))

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.field.inv(self)

    def __pow__(self, k: int):
        out = self.field.one
        base = self if k >= 0 else self.field.inv(self)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self):
        return any(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*t^{i}")
        return "(" + (" + ".join(terms) or "0") + ")"


class NumberField:
    """Q[x]/(p) for a monic irreducible integer polynomial p.

    ``minpoly`` lists the coefficients from the constant term up to the
    leading 1, e.g. [-2, 0, 1] for x^2 - 2.
    """

    def __init__(self, minpoly):
        coeffs = [int(c) for c in minpoly]
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        _check_irreducible(coeffs)
        self.minpoly = tuple(coeffs)
        self.n = len(coeffs) - 1
        # theta^n = alpha_0 + alpha_1 theta + ... + alpha_{n-1} theta^{n-1}
        self.alphas = tuple(-c for c in coeffs[:-1])
        self._powers = self._power_table()
        self.zero = FieldElem((Fraction(0),) * self.n, self)
        self.one = self.from_list([1])
        self.theta = self.from_list([0, 1]) if self.n > 1 else self.from_list([self.alphas[0]])

    def _power_table(self):
        n = self.n
        rows = []
        for k in range(2 * n - 1):
            if k < n:
                rows.append(tuple(Fraction(int(i == k)) for i in range(n)))
            else:
                prev = rows[-1]
                top = prev[-1]
                shifted = (Fraction(0),) + prev[:-1]
                rows.append(tuple(s + top * a for s, a in zip(shifted, self.alphas)))
        return rows

    def from_list(self, coords) -> FieldElem:
        c = [frac(x) for x in coords]
        if len(c) > self.n:
            out = self.zero
            for k, ck in enumerate(c):
                if ck:
                    out = out + self.theta_power(k) * ck
            return out
        c += [Fraction(0)] * (self.n - len(c))
        return FieldElem(tuple(c), self)

    def theta_power(self, k: int) -> FieldElem:
        if k < len(self._powers):
            return FieldElem(self._powers[k], self)
        return self.theta ** k

    def coerce(self, x) -> FieldElem:
        if isinstance(x, FieldElem):
            return x
        return self.from_list([x])

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        n = self.n
        acc = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(x.coords):
            if a:
                for j, b in enumerate(y.coords):
                    if b:
                        acc[i + j] += a * b
        out = list(acc[:n])
        for k in range(n, 2 * n - 1):
            if acc[k]:
                for i, t in enumerate(self._powers[k]):
                    out[i] += acc[k] * t
        return FieldElem(tuple(out), self)

    def mult_matrix(self, x: FieldElem):
        """Columns are the coordinates of x * theta^j."""
        return [self.mul(x, self.theta_power(j)).coords for j in range(self.n)]

    def inv(self, x: FieldElem) -> FieldElem:
        if not x:
            raise ZeroDivisionError("0 has no inverse in K")
        cols = self.mult_matrix(x)
        rhs = [Fraction(int(i == 0)) for i in range(self.n)]
        return FieldElem(tuple(_solve(cols, rhs)), self)

    def norm(self, x: FieldElem) -> Fraction:
        return _det(self.mult_matrix(x))

    def phi(self, x: FieldElem) -> Fraction:
        """The top coordinate a_{n-1}: a Q-linear functional."""
        return x.coords[-1]

    def bichar(self, x: FieldElem, y: FieldElem) -> QmodZ:
        """B(x, y) = phi(xy) mod 1."""
        return QmodZ(self.phi(self.mul(x, y)))

    def selfdual_membership(self, x: FieldElem) -> bool:
        """phi(x theta^i) integral for i < n; equivalent to x in Z[theta]."""
        return all(self.phi(self.mul(x, self.theta_power(i))).denominator == 1 for i in range(self.n))

    def __repr__(self):
        return f"NumberField({list(self.minpoly)})"


def _check_irreducible(coeffs):
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")
    if not poly.is_irreducible:
        raise ValueError(f"{poly.as_expr()} is reducible over Q")


def _solve(cols, rhs):
    """Solve A k = rhs for square A given by columns, over Q."""
    n = len(rhs)
    a = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c])
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [t / pv for t in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [s - f * t for s, t in zip(a[r], a[c])]
    return [a[i][n] for i in range(n)]


def _det(cols):
    n = len(cols)
    a = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [s - f * t for s, t in zip(a[r], a[c])]
    return det


def _denominator(x: FieldElem) -> int:
    d = 1
    for c in x.coords:
        d = math.lcm(d, c.denominator)
    return d


def default_numberfield_config(K: NumberField) -> InstanceConfig:
    t = K.theta
    one = K.one

    def keep(xs):
        out = []
        for x in xs:
            if x and x not in out:
                out.append(x)
        return out

    hplus = [a for a in keep([t, 2 * one, 1 + t, 3 * one, 2 + t]) if K.norm(a) != 0]
    m = [K.zero] + keep([one, -one, t, -t, 1 + t, 1 - t, 2 * one, 2 * t])
    n = []
    for q in (1, 2):
        for a in range(-2, 3):
            for b in range(-2, 3):
                x = (a + b * t) / q
                if x not in n:
                    n.append(x)
    h = keep([1 / t, one / 2, -one, (2 * one) / 3, t / 3, -t, 1 / (1 + t)])
    return InstanceConfig("numberfield", hplus=hplus, m=m, n=n, h=h)


class NumberFieldSystem(CosetSystem):
    name = "numberfield"

    def __init__(self, minpoly=(-2, 0, 1), config: InstanceConfig | None = None):
        self.K = NumberField(minpoly)
        self.n_zero = self.K.zero
        self.h_one = self.K.one
        self._std = Lattice.standard(self.K.n)
        self._lattices = {}
        super().__init__(config)

    def default_config(self):
        return default_numberfield_config(self.K)

    def elem(self, *coords) -> FieldElem:
        return self.K.from_list(coords)

    def n_add(self, x, y):
        return x + y

    def n_neg(self, x):
        return -x

    def n_key(self, x):
        return x.coords

    def h_mul(self, a, b):
        return self.K.mul(a, b)

    def h_inv(self, a):
        return self.K.inv(a)

    def h_act(self, a, x):
        return self.K.mul(a, x)

    def h_key(self, a):
        return a.coords

    def lattice_of(self, a: FieldElem) -> Lattice:
        return Lattice.from_generators(self.K.mult_matrix(a))

    def subgroup(self, a) -> SubgroupU:
        a = self.K.coerce(a)
        lat = self._lattices.get(a)
        if lat is None:
            lat = self._lattices[a] = self.lattice_of(a)
        return SubgroupU(lat, a)

    def sub_sort_key(self, u):
        return u.key.basis

    def contains(self, u, x):
        return u.key.contains(x.coords)

    def _le(self, w, u):
        return u.key.contains_lattice(w.key)

    def reduce(self, x, u):
        return FieldElem(u.key.reduce(x.coords), self.K)

    def _meet_rule(self, u, v):
        # a = a'/s, b = b'/t with a', b' in M: then (a b s t) M lies in aM n bM
        a, b = u.gen, v.gen
        s, t = _denominator(a), _denominator(b)
        return self.subgroup(self.K.mul(a, b) * (s * t))

    def _index(self, u, w):
        r = w.key.det() / u.key.det()
        assert r.denominator == 1
        return int(r)

    def _quotient_elems(self, u, w):
        return [FieldElem(v, self.K) for v in u.key.quotient_elems(w.key)]

    def sum_lattice(self, a) -> Lattice:
        """M + aM."""
        return Lattice.from_generators(list(self._std.basis) + self.K.mult_matrix(self.K.coerce(a)))

    def double_coset_reduce(self, x, a):
        return FieldElem(self.sum_lattice(a).reduce(x.coords), self.K)

    def hecke_index_formula(self, a) -> int:
        # [M : M n aM] = [M + aM : aM] = det(aM) / det(M + aM)
        r = abs(self.K.norm(self.K.coerce(a))) / self.sum_lattice(a).det()
        assert r.denominator == 1
        return int(r)

    def ring_index(self, a) -> int:
        """[M : aM] for a in M, as |det| of the multiplication matrix."""
        return int(abs(self.K.norm(self.K.coerce(a))))

    # duality data
    def phi(self, x):
        return self.K.phi(x)

    def bichar(self, x, y):
        return self.K.bichar(x, y)

    def selfdual_membership(self, x):
        return self.K.selfdual_membership(x)

    # JSON
    def n_to_json(self, x):
        return [fmt_frac(c) for c in x.coords]

    def n_from_json(self, obj):
        if isinstance(obj, (int, str)):
            obj = [obj]
        return self.K.from_list(obj)

    h_to_json = n_to_json

    def h_from_json(self, obj):
        a = self.n_from_json(obj)
        if not a:
            raise ValueError("0 is not in K^x")
        return a

    def sub_to_json(self, u):
        return {
            "gen": self.n_to_json(u.gen),
            "hnf": [[fmt_frac(t) for t in col] for col in u.key.basis],
        }

    def sub_from_json(self, obj):
        if isinstance(obj, dict):
            u = self.subgroup(self.h_from_json(obj["gen"]))
            if "hnf" in obj:
                given = tuple(tuple(frac(t) for t in col) for col in obj["hnf"])
                if given != u.key.basis:
                    raise ValueError("hnf does not match the generator")
            return u
        return self.subgroup(self.h_from_json(obj))

    def describe(self):
        return {"name": self.name, "minpoly": list(self.K.minpoly)}
