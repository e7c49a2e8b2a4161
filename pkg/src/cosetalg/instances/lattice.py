"""Full-rank lattices in Q^n with a canonical (Hermite normal form) basis.

Bases are stored as columns, upper triangular: column j is nonzero only in
rows 0..j, the diagonal is positive, and the entries to the right of each
diagonal entry are reduced into [0, diagonal).  That form is unique for the
lattice, so the basis tuple is a valid dictionary key.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def xgcd(a: int, b: int):
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def int_hnf(vectors, n: int) -> list:
    """Canonical upper-triangular column basis of the Z-span of integer vectors."""
    pool = [list(v) for v in vectors if any(v)]
    basis = [None] * n
    for i in range(n - 1, -1, -1):
        nz = [v for v in pool if v[i]]
        rest = [v for v in pool if not v[i]]
        if not nz:
            raise ValueError("generators do not span a full-rank lattice")
        piv = nz[0]
        for v in nz[1:]:
            a, b = piv[i], v[i]
            g, x, y = xgcd(a, b)
            new_piv = [x * p + y * q for p, q in zip(piv, v)]
            other = [(b // g) * p - (a // g) * q for p, q in zip(piv, v)]
            piv = new_piv
            if any(other):
                rest.append(other)
        if piv[i] < 0:
            piv = [-t for t in piv]
        basis[i] = piv
        pool = rest
    for j in range(n):
        for i in range(j - 1, -1, -1):
            q = basis[j][i] // basis[i][i]
            if q:
                basis[j] = [s - q * t for s, t in zip(basis[j], basis[i])]
    return basis


class Lattice:
    """A full-rank Z-lattice in Q^n."""

    __slots__ = ("basis", "n", "_hash")

    def __init__(self, basis):
        self.basis = tuple(tuple(Fraction(t) for t in col) for col in basis)
        self.n = len(self.basis)
        self._hash = hash(self.basis)

    @classmethod
    def from_generators(cls, vectors) -> "Lattice":
        vectors = [tuple(Fraction(t) for t in v) for v in vectors]
        n = len(vectors[0])
        d = 1
        for v in vectors:
            for t in v:
                d = math.lcm(d, t.denominator)
        ints = [[int(t * d) for t in v] for v in vectors]
        basis = int_hnf(ints, n)
        return cls([[Fraction(t, d) for t in col] for col in basis])

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls([[1 if i == j else 0 for i in range(n)] for j in range(n)])

    @property
    def key(self):
        return self.basis

    def diagonal(self) -> list:
        return [self.basis[i][i] for i in range(self.n)]

    def det(self) -> Fraction:
        return math.prod(self.diagonal(), start=Fraction(1))

    def reduce(self, v) -> tuple:
        """The representative of v + L in the fundamental box."""
        v = [Fraction(t) for t in v]
        for i in range(self.n - 1, -1, -1):
            col = self.basis[i]
            q = math.floor(v[i] / col[i])
            if q:
                for r in range(i + 1):
                    v[r] -= q * col[r]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(col) for col in other.basis)

    def coords(self, v) -> list:
        """k with sum_j k_j basis[j] = v (rational in general)."""
        k = [Fraction(0)] * self.n
        for i in range(self.n - 1, -1, -1):
            acc = Fraction(v[i])
            for j in range(i + 1, self.n):
                acc -= self.basis[j][i] * k[j]
            k[i] = acc / self.basis[i][i]
        return k

    def combine(self, k) -> tuple:
        out = [Fraction(0)] * self.n
        for j, kj in enumerate(k):
            if kj:
                for r in range(j + 1):
                    out[r] += kj * self.basis[j][r]
        return tuple(out)

    def quotient_elems(self, sub: "Lattice") -> list:
        """One element of self per coset of the sublattice sub."""
        rel = []
        for col in sub.basis:
            k = self.coords(col)
            if any(t.denominator != 1 for t in k):
                raise ValueError("not a sublattice")
            rel.append([int(t) for t in k])
        diag = [col[i] for i, col in enumerate(int_hnf(rel, self.n))]
        return [self.combine(k) for k in itertools.product(*(range(d) for d in diag))]

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cols = ", ".join("(" + ", ".join(str(t) for t in c) + ")" for c in self.basis)
        return f"Lattice[{cols}]"
