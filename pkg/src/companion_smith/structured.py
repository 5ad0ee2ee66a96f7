"""Closed forms and structural reductions for Smith forms of f(C_g).

Everything here has a slow counterpart (build f(C_g), run :func:`smith_form`);
the test-suite and the ``verify`` sweeps compare the two.
"""

from dataclasses import dataclass
from math import gcd

from .errors import AllZeroMatrix, NotCoprime, OutOfRange, ResultantsNotCoprime
from .exactmat import (
    IntMatrix,
    _check_modulus,
    _companion_any,
    flip,
    poly_of_companion,
)
from .intpoly import (
    IntPolynomial,
    content,
    cyclotomic,
    divmod_monic,
    exact_div_monic,
    gcd_with_monic,
    monomial,
    resultant,
)
from .smith import SmithDecomposition, diagonal_chain, smith_form

__all__ = [
    "SimilarityWitness",
    "TheoremCReduction",
    "theorem_c_reduce",
    "theorem_c_reduce_with",
    "smith_via_theorem_c",
    "last_nonzero_determinantal_divisor",
    "first_determinantal_divisor",
    "smith_product_split",
    "smith_direct_sum_split",
    "cyclotomic_companion_smith",
    "alexander_polynomial",
    "torus_circulant_smith",
    "similarity_witness",
    "prime_power_base",
    "totient",
]


def totient(n):
    result, k, p = n, n, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def prime_power_base(q):
    """p if q = p^k with p prime and k >= 1, else None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
        p += 1
    return q


@dataclass(frozen=True)
class TheoremCReduction:
    """f = z F and g = z G with z a monic common divisor; ``zero_block_size`` = deg z."""

    z: IntPolynomial
    f_quot: IntPolynomial
    g_quot: IntPolynomial
    zero_block_size: int


def theorem_c_reduce_with(f, g, z):
    """Split off an arbitrary monic common divisor ``z`` of f and g."""
    _check_modulus(g)
    if z.is_zero() or z.leading != 1:
        raise ValueError(f"common divisor {z} must be monic")
    if f.is_zero():
        F = IntPolynomial()
    else:
        F = exact_div_monic(f, z)
    G = exact_div_monic(g, z)
    return TheoremCReduction(z, F, G, z.degree)


def theorem_c_reduce(f, g):
    """Reduction by the full monic gcd of f and g."""
    _check_modulus(g)
    return theorem_c_reduce_with(f, g, gcd_with_monic(f, g))


def smith_via_theorem_c(f, g, z=None):
    """Smith form of f(C_g) as that of F(C_G) followed by deg z zeros."""
    red = theorem_c_reduce(f, g) if z is None else theorem_c_reduce_with(f, g, z)
    if red.g_quot.degree == 0:
        head = ()
    else:
        head = smith_form(poly_of_companion(red.f_quot, red.g_quot)).factors
    return SmithDecomposition.from_factors(tuple(head) + (0,) * red.zero_block_size)


def last_nonzero_determinantal_divisor(f, g):
    """|res(F, G)| for the gcd reduction f = zF, g = zG."""
    red = theorem_c_reduce(f, g)
    if red.g_quot.degree == 0:
        raise AllZeroMatrix(f"{g} divides {f}: f(C_g) is the zero matrix")
    return abs(resultant(red.f_quot, red.g_quot))


def first_determinantal_divisor(f, g):
    """Content of f mod g, the gcd of all entries of f(C_g)."""
    _check_modulus(g)
    return content(divmod_monic(f, g)[1])


def _abs_res(f, g):
    # res(f, 1) is the empty product
    return 1 if g.degree == 0 else abs(resultant(f, g))


def smith_product_split(f1, f2, g):
    """Smith factors of (f1 f2)(C_g) as the entrywise product of those of f1(C_g), f2(C_g)."""
    _check_modulus(g)
    r1, r2 = _abs_res(f1, g), _abs_res(f2, g)
    if gcd(r1, r2) != 1:
        raise ResultantsNotCoprime(f"|res(f1, g)| = {r1} and |res(f2, g)| = {r2} share a factor")
    s1 = smith_form(poly_of_companion(f1, g)).factors
    s2 = smith_form(poly_of_companion(f2, g)).factors
    return SmithDecomposition.from_factors(a * b for a, b in zip(s1, s2))


def _smith_of(f, g):
    if g.degree == 0:
        return ()
    return smith_form(poly_of_companion(f, g)).factors


def smith_direct_sum_split(f, g1, g2):
    """Smith factors of f(C_{g1 g2}) from those of f(C_{g1}) and f(C_{g2})."""
    for g in (g1, g2):
        if g.is_zero() or g.leading != 1:
            _check_modulus(g)
    if g1.degree + g2.degree < 1:
        raise OutOfRange("g1 g2 must have degree >= 1")
    r1, r2 = _abs_res(f, g1), _abs_res(f, g2)
    if gcd(r1, r2) != 1:
        raise ResultantsNotCoprime(f"|res(f, g1)| = {r1} and |res(f, g2)| = {r2} share a factor")
    merged = diagonal_chain(_smith_of(f, g1) + _smith_of(f, g2))
    return SmithDecomposition.from_factors(merged)


def cyclotomic_companion_smith(m, n):
    """Closed-form Smith factors of Phi_m(C_{Phi_n}) for m >= n >= 1."""
    if n < 1 or m < n:
        raise OutOfRange(f"need m >= n >= 1, got m={m}, n={n}")
    size = totient(n)
    if m == n:
        value = 0
    elif m % n == 0 and prime_power_base(m // n) is not None:
        value = prime_power_base(m // n)
    else:
        value = 1
    return SmithDecomposition.from_factors((value,) * size)


def alexander_polynomial(r, s):
    """Alexander polynomial of the (r, s) torus knot."""
    if r < 2 or s < 2:
        raise OutOfRange(f"need r, s >= 2, got r={r}, s={s}")
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) = {gcd(r, s)}")
    one = IntPolynomial((1,))
    num = (monomial(r * s) - one) * (monomial(1) - one)
    den = (monomial(s) - one) * (monomial(r) - one)
    return exact_div_monic(num, den)


def torus_circulant_smith(r, s, n):
    """Closed-form Smith factors of the n x n circulant of the (r, s) torus-knot Alexander polynomial."""
    if r < 2 or s < 2:
        raise OutOfRange(f"need r, s >= 2, got r={r}, s={s}")
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) = {gcd(r, s)}")
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    x, y = gcd(r, n), gcd(s, n)
    if x > y:
        r, s, x, y = s, r, y, x
    values = (
        [r // x] * (y - x)
        + [r * s // (x * y)] * (x - 1)
        + [0] * ((x - 1) * (y - 1))
    )
    ones = n - len(values)
    assert ones >= 0, (r, s, n)
    chain = diagonal_chain([1] * ones + values)
    assert len(chain) == n
    return SmithDecomposition.from_factors(chain)


@dataclass(frozen=True)
class SimilarityWitness:
    """U_a C_{ab} = X_{a,b} U_a with U_a unimodular upper-triangular Toeplitz."""

    a: IntPolynomial
    b: IntPolynomial
    u_a: IntMatrix
    x_ab: IntMatrix

    def check(self):
        g = self.a * self.b
        c = poly_of_companion(monomial(1), g)
        return self.u_a @ c == self.x_ab @ self.u_a


def similarity_witness(a, b):
    """Build U_a and the block matrix X_{a,b} = [[C_b, 0], [e_1 e_r^T, L C_a^T L]]."""
    for p in (a, b):
        if p.is_zero() or p.leading != 1:
            _check_modulus(p)
    m, r = a.degree, b.degree
    n = m + r
    if n < 1:
        raise OutOfRange("a b must have degree >= 1")
    band = list(reversed(a.coeffs))  # 1, a_{m-1}, ..., a_0
    u = [[0] * n for _ in range(n)]
    for i in range(n):
        for k, c in enumerate(band):
            if i + k < n:
                u[i][i + k] = c
    x = [[0] * n for _ in range(n)]
    cb = _companion_any(b)
    for i in range(r):
        x[i][:r] = cb.row(i)
    if m:
        lower = flip(m) @ _companion_any(a).transpose() @ flip(m)
        for i in range(m):
            x[r + i][r:] = lower.row(i)
        if r:
            x[r][r - 1] = 1
    return SimilarityWitness(a, b, IntMatrix.from_rows(u, n), IntMatrix.from_rows(x, n))
