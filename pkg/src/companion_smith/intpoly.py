"""Exact univariate polynomials over the integers.

Polynomials are immutable and stored densely, lowest degree first::

    >>> p = IntPolynomial([-1, 0, 0, 1])
    >>> str(p)
    't^3 - 1'
    >>> divmod_monic(p, parse_poly("t - 1"))[0]
    IntPolynomial('t^2 + t + 1')
"""

import re
from functools import lru_cache
from math import gcd

from ._linalg import bareiss_det
from .errors import DivisionByZeroPolynomial, NonMonicDivisor, OutOfRange, ParseError

__all__ = [
    "NEG_INF",
    "IntPolynomial",
    "add",
    "sub",
    "mul",
    "divmod_monic",
    "exact_div_monic",
    "content",
    "primitive_part",
    "gcd_with_monic",
    "resultant",
    "sylvester_matrix",
    "cyclotomic",
    "compose_power",
    "monomial",
    "parse_poly",
    "format_poly",
]

# Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")


class IntPolynomial:
    """Element of Z[t]; ``coeffs[i]`` is the coefficient of t^i."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def leading(self):
        return self._c[-1] if self._c else 0

    def is_zero(self):
        return not self._c

    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"IntPolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return IntPolynomial(-c for c in self._c)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise OutOfRange("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _coerce(p):
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial.constant(p)
    return IntPolynomial(p)


def monomial(k, c=1):
    """c * t^k."""
    return IntPolynomial([0] * k + [c])


def add(p, q):
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(out)


def sub(p, q):
    return add(p, -q)


def mul(p, q):
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return IntPolynomial(out)


def _require_monic(g):
    if g.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    if g.leading != 1:
        raise NonMonicDivisor(f"divisor {g} is not monic")


def divmod_monic(p, g):
    """Quotient and remainder of ``p`` by the monic polynomial ``g``."""
    _require_monic(g)
    n = g.degree
    r = list(p.coeffs)
    if len(r) <= n:
        return IntPolynomial(), p
    gc = g.coeffs
    q = [0] * (len(r) - n)
    for k in range(len(r) - 1, n - 1, -1):
        c = r[k]
        if c:
            q[k - n] = c
            base = k - n
            for i in range(n):
                r[base + i] -= c * gc[i]
            r[k] = 0
    return IntPolynomial(q), IntPolynomial(r[:n])


def exact_div_monic(p, g):
    """``p / g`` for monic ``g``; raises ArithmeticError if g does not divide p."""
    q, r = divmod_monic(p, g)
    if not r.is_zero():
        raise ArithmeticError(f"{g} does not divide {p}")
    return q


def content(p):
    """Non-negative gcd of the coefficients; 0 for the zero polynomial."""
    c = 0
    for x in p.coeffs:
        c = gcd(c, x)
        if c == 1:
            break
    return c


def primitive_part(p):
    c = content(p)
    if c == 0:
        return p
    if p.leading < 0:
        c = -c
    return IntPolynomial(x // c for x in p.coeffs)


def _prem(a, b):
    """Pseudo-remainder of a by b (b nonzero)."""
    r = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lb = bc[-1]
    e = len(r) - len(bc) + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i in range(db + 1):
            r[shift + i] -= c * bc[i]
        e -= 1
        while r and r[-1] == 0:
            r.pop()
    if e > 0:
        scale = lb**e
        r = [scale * x for x in r]
    return IntPolynomial(r)


def _subresultant_gcd(a, b):
    """Primitive gcd of two nonzero polynomials via the subresultant PRS."""
    if a.degree < b.degree:
        a, b = b, a
    a, b = primitive_part(a), primitive_part(b)
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = _prem(a, b)
        if r.is_zero():
            break
        if r.degree == 0:
            return IntPolynomial((1,))
        a, b = b, IntPolynomial(x // (g * h**delta) for x in r.coeffs)
        g = a.leading
        if delta:
            h = g**delta // h ** (delta - 1)
    return primitive_part(b)


def gcd_with_monic(f, g):
    """Monic gcd of ``f`` and the monic polynomial ``g`` (``gcd(0, g) = g``)."""
    _require_monic(g)
    if f.is_zero():
        return g
    if f.degree == 0 or g.degree == 0:
        return IntPolynomial((1,))
    z = _subresultant_gcd(f, g)
    # z is primitive and divides the monic g, so its leading coefficient is a unit
    if z.leading == -1:
        z = -z
    if z.leading != 1:
        raise ArithmeticError(f"gcd {z} of {f} and {g} is not monic")
    return z


def sylvester_matrix(a, b):
    """Sylvester matrix of (a, b): deg b shifted rows of a, then deg a rows of b."""
    n, k = a.degree, b.degree
    size = n + k
    ad = list(reversed(a.coeffs))
    bd = list(reversed(b.coeffs))
    rows = []
    for i in range(k):
        rows.append([0] * i + ad + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + bd + [0] * (size - k - 1 - i))
    return rows


def resultant(f, g):
    """The product of ``f(theta)`` over the roots ``theta`` of the monic ``g``.

    Computed as the Sylvester determinant Res(g, f), which carries exactly
    this normalization when ``g`` is monic.
    """
    _require_monic(g)
    if g.degree < 1:
        raise OutOfRange("resultant needs deg g >= 1")
    if f.is_zero():
        return 0
    return bareiss_det(sylvester_matrix(g, f))


@lru_cache(maxsize=None)
def _cyclotomic(n):
    q = monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            q = exact_div_monic(q, _cyclotomic(d))
    return q


def cyclotomic(n):
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise OutOfRange(f"cyclotomic index must be >= 1, got {n}")
    return _cyclotomic(n)


def compose_power(p, k):
    """p(t^k)."""
    if k < 1:
        raise OutOfRange(f"substitution exponent must be >= 1, got {k}")
    if k == 1 or p.is_zero():
        return p
    out = [0] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p.coeffs):
        out[i * k] = c
    return IntPolynomial(out)


def format_poly(p):
    """Human form with descending powers, e.g. ``-t^2 + 3t - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*t(?:\s*\^\s*(\d+))?)?\s*")


def parse_poly(text):
    """Parse ``'-1,0,0,1'`` (low to high) or ``'t^3 - 1'``."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", line=1, column=1)
    if "," in s:
        coeffs = []
        col = 1
        for item in text.split(","):
            tok = item.strip()
            try:
                coeffs.append(int(tok))
            except ValueError:
                raise ParseError(f"bad coefficient {tok!r}", line=1, column=col) from None
            col += len(item) + 1
        return IntPolynomial(coeffs)

    out = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, digits, tpart, exp = m.group(1), m.group(2), m.group(3), m.group(4)
        if m.end() == pos or (digits is None and tpart is None):
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected input {text[pos:]!r}", line=1, column=pos + 1)
        if sign is None and not first:
            raise ParseError("missing '+' or '-' between terms", line=1, column=pos + 1)
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        k = 0
        if tpart is not None:
            k = int(exp) if exp is not None else 1
        out[k] = out.get(k, 0) + c
        pos = m.end()
        first = False
    if first:
        raise ParseError("empty polynomial", line=1, column=1)
    top = max(out)
    return IntPolynomial(out.get(k, 0) for k in range(top + 1))
