"""Smith normal form over the integers.

The engine is the classical pivoting reduction: bring the smallest nonzero
entry to the pivot, clear its row and column by Euclidean steps, and repair
divisibility by folding an offending row into the pivot row. A brute-force
determinantal-divisor oracle is provided for small matrices.
"""

import os
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from ._linalg import bareiss_det
from .errors import InvalidDivisorChain, TooLarge
from .exactmat import IntMatrix

__all__ = [
    "SmithDecomposition",
    "smith_form",
    "determinantal_divisors",
    "invariant_factors_from_divisors",
    "is_divisor_chain",
    "diagonal_chain",
    "minor_cap",
]

DEFAULT_MINOR_CAP = 8


def minor_cap():
    """Largest min-dimension the minor oracle accepts (env-overridable)."""
    raw = os.environ.get("COMPANION_SMITH_MINOR_CAP")
    return int(raw) if raw else DEFAULT_MINOR_CAP


def is_divisor_chain(factors):
    """True if each factor divides the next (0 divides only 0) and all are >= 0."""
    for a, b in zip(factors, factors[1:]):
        if a < 0 or b < 0:
            return False
        if a == 0:
            if b != 0:
                return False
        elif b % a:
            return False
    return all(x >= 0 for x in factors)


def diagonal_chain(values):
    """Invariant factors of diag(values), via pairwise (gcd, lcm) replacement."""
    d = [abs(v) for v in values]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            g = gcd(a, b)
            if g == a:
                continue
            d[i], d[j] = g, (a // g) * b if g else 0
    return d


@dataclass(frozen=True)
class SmithDecomposition:
    """Invariant factors of a matrix, optionally with unimodular transforms.

    When present, ``left @ M @ right`` equals the rows x cols diagonal
    matrix carrying ``invariant_factors``.
    """

    invariant_factors: tuple
    rank: int
    left: Optional[IntMatrix] = None
    right: Optional[IntMatrix] = None

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if not is_divisor_chain(self.invariant_factors):
            raise InvalidDivisorChain(f"not a divisor chain: {self.invariant_factors}")

    @classmethod
    def from_factors(cls, factors):
        factors = tuple(factors)
        return cls(factors, sum(1 for s in factors if s != 0))

    @property
    def factors(self):
        return self.invariant_factors

    def diagonal_matrix(self, rows, cols):
        return IntMatrix.diagonal(self.invariant_factors, rows, cols)

    def to_json(self):
        out = {"invariant_factors": list(self.invariant_factors), "rank": self.rank}
        if self.left is not None:
            out["left"] = self.left.to_lists()
            out["right"] = self.right.to_lists()
        return out


def _identity_lists(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _Reducer:
    """Mutable working state for one reduction; row ops mirror into L, column ops into R."""

    def __init__(self, m, track):
        self.a = m.to_lists()
        self.m, self.n = m.rows, m.cols
        self.L = _identity_lists(self.m) if track else None
        self.R = _identity_lists(self.n) if track else None

    def swap_rows(self, i, j):
        if i == j:
            return
        a = self.a
        a[i], a[j] = a[j], a[i]
        if self.L is not None:
            self.L[i], self.L[j] = self.L[j], self.L[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.R is not None:
            for row in self.R:
                row[i], row[j] = row[j], row[i]

    def add_row(self, dst, src, c):
        # row[dst] += c * row[src]
        rd, rs = self.a[dst], self.a[src]
        for k in range(self.n):
            if rs[k]:
                rd[k] += c * rs[k]
        if self.L is not None:
            ld, ls = self.L[dst], self.L[src]
            for k in range(self.m):
                if ls[k]:
                    ld[k] += c * ls[k]

    def add_col(self, dst, src, c):
        for row in self.a:
            if row[src]:
                row[dst] += c * row[src]
        if self.R is not None:
            for row in self.R:
                if row[src]:
                    row[dst] += c * row[src]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.L is not None:
            self.L[i] = [-x for x in self.L[i]]

    def min_pivot(self, t):
        best = None
        best_abs = 0
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                v = row[j]
                if v and (best is None or abs(v) < best_abs):
                    best, best_abs = (i, j), abs(v)
                    if best_abs == 1:
                        return best
        return best

    def reduce_at(self, t):
        a = self.a
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, self.m):
                if a[i][t]:
                    self.add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, self.n):
                if a[t][j]:
                    self.add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        clean = False
            if not clean:
                self._smallest_to_pivot(t)
                continue
            bad = self._non_divisible(t, p)
            if bad is None:
                return
            self.add_row(t, bad, 1)

    def _smallest_to_pivot(self, t):
        a = self.a
        best, where = abs(a[t][t]), None
        for i in range(t + 1, self.m):
            v = abs(a[i][t])
            if v and v < best:
                best, where = v, ("r", i)
        for j in range(t + 1, self.n):
            v = abs(a[t][j])
            if v and v < best:
                best, where = v, ("c", j)
        if where is None:
            return
        kind, k = where
        if kind == "r":
            self.swap_rows(t, k)
        else:
            self.swap_cols(t, k)

    def _non_divisible(self, t, p):
        for i in range(t + 1, self.m):
            row = self.a[i]
            for j in range(t + 1, self.n):
                if row[j] % p:
                    return i
        return None


def smith_form(m, want_transforms=False):
    """Smith normal form of an integer matrix.

    Pivots are chosen by smallest absolute value, ties broken by lowest
    (row, col), so the output (transforms included) is deterministic.
    """
    red = _Reducer(m, want_transforms)
    k = min(m.rows, m.cols)
    r = 0
    for t in range(k):
        piv = red.min_pivot(t)
        if piv is None:
            break
        red.swap_rows(t, piv[0])
        red.swap_cols(t, piv[1])
        red.reduce_at(t)
        if red.a[t][t] < 0:
            red.negate_row(t)
        r += 1
    factors = [red.a[i][i] for i in range(r)] + [0] * (k - r)
    left = right = None
    if want_transforms:
        left = IntMatrix.from_rows(red.L, m.rows)
        right = IntMatrix.from_rows(red.R, m.cols)
    return SmithDecomposition(tuple(factors), r, left, right)


def determinantal_divisors(m, up_to=None, cap=None):
    """gamma_1 .. gamma_up_to: the gcd of all i x i minors, by enumeration."""
    k = min(m.rows, m.cols)
    if up_to is None:
        up_to = k
    if up_to > k or up_to < 0:
        raise ValueError(f"up_to={up_to} exceeds min dimension {k}")
    cap = minor_cap() if cap is None else cap
    if k > cap:
        raise TooLarge(f"minor enumeration capped at min dimension {cap}, got {k}")
    a = m.to_lists()
    gammas = []
    for order in range(1, up_to + 1):
        if gammas and gammas[-1] == 0:
            gammas.append(0)
            continue
        g = 0
        for rows in combinations(range(m.rows), order):
            sub_rows = [a[i] for i in rows]
            for cols in combinations(range(m.cols), order):
                g = gcd(g, bareiss_det([[r[j] for j in cols] for r in sub_rows]))
                if g == 1:
                    break
            if g == 1:
                break
        gammas.append(g)
    return tuple(gammas)


def invariant_factors_from_divisors(gammas: Sequence[int]):
    """s_i = gamma_i / gamma_{i-1} with gamma_0 = 1; zero once gamma_i is zero."""
    out = []
    prev = 1
    for i, g in enumerate(gammas):
        if g < 0:
            raise InvalidDivisorChain(f"negative determinantal divisor at position {i + 1}")
        if prev == 0:
            if g != 0:
                raise InvalidDivisorChain(f"nonzero gamma_{i + 1} after a zero")
            out.append(0)
            continue
        if g == 0:
            out.append(0)
        else:
            if g % prev:
                raise InvalidDivisorChain(f"gamma_{i} = {prev} does not divide gamma_{i + 1} = {g}")
            out.append(g // prev)
        prev = g
    if not is_divisor_chain(out):
        raise InvalidDivisorChain(f"ratios {tuple(out)} do not form a divisor chain")
    return tuple(out)
