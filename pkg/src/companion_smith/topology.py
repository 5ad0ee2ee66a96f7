"""Abelianization of relation matrices and Brieskorn-manifold homology."""

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime, OutOfRange
from .exactmat import circulant
from .smith import diagonal_chain, smith_form
from .structured import torus_circulant_smith

__all__ = [
    "AbelianGroup",
    "CyclicPresentationData",
    "abelianization",
    "representer_circulant",
    "brieskorn_homology",
    "corollary_homology",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{t_1} + ... + Z_{t_k} + Z^betti with t_i | t_{i+1} and every t_i >= 2.

    Two instances are equal exactly when the groups are isomorphic.
    """

    torsion: tuple = ()
    betti: int = 0

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.betti < 0:
            raise ValueError("betti number must be non-negative")
        if any(x < 2 for x in t):
            raise ValueError(f"torsion entries must be >= 2: {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion is not a divisor chain: {t}")

    @classmethod
    def from_cyclic_orders(cls, orders):
        """Direct sum of cyclic groups Z_k (k = 0 meaning Z), canonicalized."""
        chain = diagonal_chain(orders)
        return cls(tuple(x for x in chain if x > 1), sum(1 for x in chain if x == 0))

    @property
    def is_trivial(self):
        return not self.torsion and self.betti == 0

    @property
    def order(self):
        """Order of the torsion subgroup."""
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def to_json(self):
        return {"torsion": list(self.torsion), "betti": self.betti}

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        i = 0
        while i < len(self.torsion):
            j = i
            while j < len(self.torsion) and self.torsion[j] == self.torsion[i]:
                j += 1
            k = j - i
            parts.append(f"Z_{self.torsion[i]}" + (f"^{k}" if k > 1 else ""))
            i = j
        if self.betti:
            parts.append("Z" + (f"^{self.betti}" if self.betti > 1 else ""))
        return " + ".join(parts)


@dataclass(frozen=True)
class CyclicPresentationData:
    """Exponent sums (a_0, ..., a_{n-1}) of the relator word of a cyclic presentation."""

    exponent_sums: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponent_sums", tuple(int(a) for a in self.exponent_sums))
        if not self.exponent_sums:
            raise OutOfRange("a cyclic presentation needs n >= 1 generators")

    @property
    def n(self):
        return len(self.exponent_sums)


def abelianization(m):
    """Abelianized group of the presentation with generators x relators matrix ``m``."""
    dec = smith_form(m)
    return AbelianGroup(tuple(s for s in dec.factors if s > 1), m.rows - dec.rank)


def representer_circulant(data):
    return circulant(data.exponent_sums)


def _check_brieskorn(r, s, n):
    if min(r, s, n) < 2:
        raise OutOfRange(f"need r, s, n >= 2, got ({r}, {s}, {n})")
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) = {gcd(r, s)}; torus links are not supported")


def brieskorn_homology(r, s, n):
    """H_1 of the Brieskorn manifold M(r, s, n) for coprime r, s."""
    _check_brieskorn(r, s, n)
    return AbelianGroup.from_cyclic_orders(torus_circulant_smith(r, s, n).factors)


def corollary_homology(r, s, n):
    """The same group assembled from its primary-style summands, case-split on x <= y."""
    _check_brieskorn(r, s, n)
    x, y = gcd(r, n), gcd(s, n)
    if x <= y:
        orders = [r // x] * (y - x) + [r * s // (x * y)] * (x - 1)
    else:
        orders = [s // y] * (x - y) + [r * s // (x * y)] * (y - 1)
    return AbelianGroup.from_cyclic_orders(orders + [0] * ((x - 1) * (y - 1)))
