"""Dense integer matrices and the companion-ring matrix constructions.

``poly_of_companion(f, g)`` builds f(C_g) row by row from the residues
[t^j f] mod g, so it never forms a matrix power. The naive Horner evaluation
is kept as :func:`poly_of_companion_naive` for cross-checking.
"""

import re
from dataclasses import dataclass

from ._linalg import bareiss_det, bareiss_rank
from .errors import NonMonicDivisor, NotSquare, OutOfRange, ParseError
from .intpoly import IntPolynomial, divmod_monic

__all__ = [
    "IntMatrix",
    "CompanionRingElement",
    "companion",
    "poly_of_companion",
    "poly_of_companion_naive",
    "circulant",
    "skew_circulant",
    "lower_toeplitz",
    "determinant",
    "is_unimodular",
    "rank",
    "flip",
    "block_diag",
    "parse_matrix",
    "format_matrix",
]


class IntMatrix:
    """Immutable rows x cols matrix of Python ints, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise OutOfRange("matrix dimensions must be non-negative")
        if entries is None:
            entries = (0,) * (rows * cols)
        entries = tuple(int(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ValueError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls.diagonal([1] * n)

    @classmethod
    def zeros(cls, rows, cols=None):
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = rows if cols is None else cols
        e = [0] * (rows * cols)
        for i, v in enumerate(values):
            e[i * cols + i] = v
        return cls(rows, cols, e)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(
            self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    T = property(transpose)

    def submatrix(self, r0, r1, c0, c1):
        return IntMatrix.from_rows([self.row(i)[c0:c1] for i in range(r0, r1)], c1 - c0)

    def is_diagonal(self):
        return all(
            x == 0 for k, x in enumerate(self.entries) if k // self.cols != k % self.cols
        )

    def diagonal_entries(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_lists()!r}, {self.cols})"

    def __str__(self):
        return format_matrix(self)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        return IntMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [0] * (n * m)
        for i in range(n):
            base = i * m
            for t in range(k):
                x = a[i * k + t]
                if x:
                    brow = t * m
                    for j in range(m):
                        out[base + j] += x * b[brow + j]
        return IntMatrix(n, m, out)

    def __pow__(self, k):
        if not self.is_square:
            raise NotSquare("matrix power of a non-square matrix")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def block_diag(*blocks):
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(rows, cols, [x for r in out for x in r])


def flip(n):
    """The n x n exchange matrix (ones on the antidiagonal)."""
    e = [0] * (n * n)
    for i in range(n):
        e[i * n + (n - 1 - i)] = 1
    return IntMatrix(n, n, e)


def _check_modulus(g):
    if g.is_zero() or g.leading != 1:
        raise NonMonicDivisor(f"{g} is not monic")
    if g.degree < 1:
        raise OutOfRange(f"modulus must have degree >= 1, got {g}")


def _companion_rows(g):
    n = g.degree
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[0][j] = -g[n - 1 - j]
    for i in range(1, n):
        rows[i][i - 1] = 1
    return rows


def companion(g):
    """C_g: first row -g_{n-1} .. -g_0, ones on the subdiagonal."""
    _check_modulus(g)
    return IntMatrix.from_rows(_companion_rows(g), g.degree)


def _companion_any(g):
    # accepts deg g == 0, giving the empty matrix
    if g.degree == 0:
        return IntMatrix(0, 0)
    return companion(g)


def poly_of_companion(f, g):
    """f(C_g) by the residue-row scheme: row n-1-j holds [t^j f] mod g, high powers first."""
    _check_modulus(g)
    n = g.degree
    gc = g.coeffs
    h = list(divmod_monic(f, g)[1].coeffs)
    h += [0] * (n - len(h))
    rows = [None] * n
    for j in range(n):
        rows[n - 1 - j] = h[::-1]
        top = h[-1]
        h = [0] + h[:-1]
        if top:
            for i in range(n):
                h[i] -= top * gc[i]
    return IntMatrix.from_rows(rows, n)


def poly_of_companion_naive(f, g):
    """Horner evaluation sum_k f_k C_g^k (oracle only)."""
    c = companion(g)
    n = g.degree
    acc = IntMatrix.zeros(n)
    for coef in reversed(f.coeffs):
        acc = acc @ c + IntMatrix.identity(n).scale(coef)
    return acc


def _structured(first, modulus_tail):
    first = list(first)
    if not first:
        raise OutOfRange("empty coefficient sequence")
    n = len(first)
    g = IntPolynomial([modulus_tail] + [0] * (n - 1) + [1])
    return poly_of_companion(IntPolynomial(first), g)


def circulant(coeffs):
    """f(C_{t^n - 1}) for f = sum coeffs[i] t^i, n = len(coeffs).

    Each row is the cyclic right shift of the one above; the last row is
    ``coeffs`` reversed.
    """
    return _structured(coeffs, -1)


def skew_circulant(coeffs):
    """f(C_{t^n + 1}), laid out as :func:`circulant`."""
    return _structured(coeffs, 1)


def lower_toeplitz(coeffs):
    """f(C_{t^n}): lower triangular Toeplitz with first column ``coeffs``."""
    return _structured(coeffs, 0)


def determinant(m):
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return bareiss_det(m.to_lists())


def is_unimodular(m):
    return determinant(m) in (1, -1)


def rank(m):
    """Rank over Q by fraction-free elimination."""
    return bareiss_rank(m.to_lists(), m.cols)


@dataclass(frozen=True)
class CompanionRingElement:
    """The class [f] in Z[t]/<g>, held by its reduced representative."""

    modulus: IntPolynomial
    representative: IntPolynomial

    def __post_init__(self):
        _check_modulus(self.modulus)
        if self.representative.degree >= self.modulus.degree:
            raise ValueError("representative is not reduced")

    @classmethod
    def of(cls, f, g):
        return cls(g, divmod_monic(f, g)[1])

    def _same_ring(self, other):
        if isinstance(other, (int, IntPolynomial)):
            return CompanionRingElement.of(IntPolynomial.constant(other) if isinstance(other, int) else other, self.modulus)
        if other.modulus != self.modulus:
            raise ValueError("elements of different companion rings")
        return other

    def __add__(self, other):
        other = self._same_ring(other)
        return CompanionRingElement.of(self.representative + other.representative, self.modulus)

    def __mul__(self, other):
        other = self._same_ring(other)
        return CompanionRingElement.of(self.representative * other.representative, self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return CompanionRingElement(self.modulus, -self.representative)

    def matrix(self):
        return poly_of_companion(self.representative, self.modulus)


def parse_matrix(text):
    """Read ``rows cols`` then one whitespace-separated row per line."""
    lines = text.splitlines()
    # skip leading blank lines
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise ParseError("missing 'rows cols' header", line=1, column=1)
    header = lines[idx].split()
    if len(header) != 2:
        raise ParseError("header must be 'rows cols'", line=idx + 1, column=1)
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must hold two integers", line=idx + 1, column=1) from None
    if rows < 0 or cols < 0:
        raise ParseError("negative dimension", line=idx + 1, column=1)
    entries = []
    body = lines[idx + 1:]
    for i in range(rows):
        lineno = idx + 2 + i
        if i >= len(body):
            raise ParseError(f"expected {rows} rows, got {i}", line=lineno, column=1)
        line = body[i]
        toks = [(mt.start() + 1, mt.group()) for mt in re.finditer(r"\S+", line)]
        if len(toks) != cols:
            col = toks[cols][0] if len(toks) > cols else len(line) + 1
            raise ParseError(f"expected {cols} entries, got {len(toks)}", line=lineno, column=col)
        for col, tok in toks:
            try:
                entries.append(int(tok))
            except ValueError:
                raise ParseError(f"bad integer {tok!r}", line=lineno, column=col) from None
    for j, extra in enumerate(body[rows:]):
        if extra.strip():
            raise ParseError("trailing data after matrix", line=idx + 2 + rows + j, column=1)
    return IntMatrix(rows, cols, entries)


def format_matrix(m):
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(str(x) for x in m.row(i)))
    return "\n".join(lines) + "\n"
