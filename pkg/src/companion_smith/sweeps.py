"""Seeded verification sweeps: each structured fast path against the general engine.

A sweep is a deterministic list of instances plus a module-level check
function, so instances can be fanned out to worker processes and the
results merged back in input order.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .errors import AllZeroMatrix, ResultantsNotCoprime
from .exactmat import determinant, poly_of_companion
from .intpoly import (
    IntPolynomial,
    cyclotomic,
    gcd_with_monic,
    monomial,
    resultant,
)
from .smith import determinantal_divisors, smith_form
from .structured import (
    alexander_polynomial,
    cyclotomic_companion_smith,
    first_determinantal_divisor,
    last_nonzero_determinantal_divisor,
    smith_direct_sum_split,
    smith_product_split,
    smith_via_theorem_c,
    torus_circulant_smith,
)

COEFF_BOUND = 9

SUITES = (
    "theorem-c",
    "corollary-d",
    "cyclotomic",
    "dunwoody",
    "eq1-resultant",
    "factor-splits",
    "lemma-gamma1",
)

# default --max per suite: a count for random suites, an upper bound otherwise
DEFAULT_SCALE = {
    "theorem-c": 500,
    "corollary-d": 500,
    "cyclotomic": 36,
    "dunwoody": 9,
    "eq1-resultant": 500,
    "factor-splits": 100,
    "lemma-gamma1": 200,
}

DUNWOODY_MAX_N = 12


def random_poly(rng, max_deg, bound=COEFF_BOUND):
    deg = rng.randint(0, max_deg)
    return IntPolynomial([rng.randint(-bound, bound) for _ in range(deg + 1)])


def random_monic(rng, min_deg, max_deg, bound=COEFF_BOUND):
    deg = rng.randint(min_deg, max_deg)
    return IntPolynomial([rng.randint(-bound, bound) for _ in range(deg)] + [1])


def _bounded(p, bound=COEFF_BOUND):
    return all(abs(c) <= bound for c in p.coeffs)


def random_pair(rng, max_deg_g, max_deg_f, bound=COEFF_BOUND):
    """(f, g) with g monic; about half the pairs share a planted common factor."""
    if rng.random() < 0.5:
        return random_poly(rng, max_deg_f, bound), random_monic(rng, 1, max_deg_g, bound)
    while True:
        z = random_monic(rng, 1, min(3, max_deg_g), 3)
        G = random_monic(rng, 0, max_deg_g - z.degree, 3)
        F = random_poly(rng, max(0, max_deg_f - z.degree), 3)
        f, g = z * F, z * G
        if _bounded(f, bound) and _bounded(g, bound):
            return f, g


def _coeffs(*polys):
    return tuple(p.coeffs for p in polys)


def _polys(data):
    return [IntPolynomial(c) for c in data]


@dataclass(frozen=True)
class Outcome:
    label: str
    ok: bool
    detail: str = ""


def check_theorem_c(data):
    f, g = _polys(data)
    fast = smith_via_theorem_c(f, g)
    slow = smith_form(poly_of_companion(f, g))
    z = gcd_with_monic(f, g)
    ok = fast.factors == slow.factors and slow.rank == g.degree - z.degree
    return Outcome(f"f={f}; g={g}", ok, f"{fast.factors} vs {slow.factors}")


def check_corollary_d(data):
    f, g = _polys(data)
    m = poly_of_companion(f, g)
    r = smith_form(m).rank
    if r == 0:
        try:
            last_nonzero_determinantal_divisor(f, g)
        except AllZeroMatrix:
            return Outcome(f"f={f}; g={g}", True, "zero matrix")
        return Outcome(f"f={f}; g={g}", False, "expected AllZeroMatrix")
    oracle = determinantal_divisors(m, r)[r - 1]
    fast = last_nonzero_determinantal_divisor(f, g)
    return Outcome(f"f={f}; g={g}", oracle == fast, f"{fast} vs {oracle}")


def check_cyclotomic(data):
    m, n = data
    fast = cyclotomic_companion_smith(m, n).factors
    slow = smith_form(poly_of_companion(cyclotomic(m), cyclotomic(n))).factors
    return Outcome(f"m={m}; n={n}", fast == slow, f"{fast} vs {slow}")


def check_dunwoody(data):
    r, s, n = data
    fast = torus_circulant_smith(r, s, n).factors
    slow = smith_form(poly_of_companion(alexander_polynomial(r, s), monomial(n) - 1)).factors
    return Outcome(f"r={r}; s={s}; n={n}", fast == slow, f"{fast} vs {slow}")


def check_eq1(data):
    f, g = _polys(data)
    d, res = determinant(poly_of_companion(f, g)), resultant(f, g)
    return Outcome(f"f={f}; g={g}", d == res, f"det={d} res={res}")


def check_gamma1(data):
    f, g = _polys(data)
    fast = first_determinantal_divisor(f, g)
    oracle = determinantal_divisors(poly_of_companion(f, g), 1)[0]
    return Outcome(f"f={f}; g={g}", fast == oracle, f"{fast} vs {oracle}")


def check_split(data):
    kind, expect_raise, polys = data
    a, b, c = _polys(polys)
    label = f"{kind}: {a}; {b}; {c}"
    split = smith_product_split if kind == "product" else smith_direct_sum_split
    try:
        fast = split(a, b, c)
    except ResultantsNotCoprime:
        return Outcome(label, expect_raise, "raised ResultantsNotCoprime")
    if expect_raise:
        return Outcome(label, False, "did not raise")
    if kind == "product":
        slow = smith_form(poly_of_companion(a * b, c))
    else:
        slow = smith_form(poly_of_companion(a, b * c))
    return Outcome(label, fast.factors == slow.factors, f"{fast.factors} vs {slow.factors}")


def _abs_res(f, g):
    return abs(resultant(f, g))


def split_instances(count, seed, max_negative=None):
    """``count`` coprime instances (alternating product / direct-sum) plus rejected ones."""
    rng = random.Random(seed)
    if max_negative is None:
        max_negative = count
    good, bad = [], []
    while len(good) < count:
        kind = "product" if len(good) % 2 == 0 else "direct-sum"
        if kind == "product":
            f1, f2 = random_poly(rng, 3, 5), random_poly(rng, 3, 5)
            g = random_monic(rng, 1, 5, 5)
            coprime = gcd(_abs_res(f1, g), _abs_res(f2, g)) == 1
            polys = _coeffs(f1, f2, g)
        else:
            f = random_poly(rng, 3, 5)
            g1, g2 = random_monic(rng, 1, 3, 5), random_monic(rng, 1, 3, 5)
            coprime = gcd(_abs_res(f, g1), _abs_res(f, g2)) == 1
            polys = _coeffs(f, g1, g2)
        if coprime:
            good.append((kind, False, polys))
        elif len(bad) < max_negative:
            bad.append((kind, True, polys))
    return good + bad


def instances(suite, scale=None, seed=0):
    scale = DEFAULT_SCALE[suite] if scale is None else scale
    rng = random.Random(seed)
    if suite == "theorem-c":
        return [_coeffs(*random_pair(rng, 8, 12)) for _ in range(scale)]
    if suite == "corollary-d":
        return [_coeffs(*random_pair(rng, 6, 12)) for _ in range(scale)]
    if suite == "eq1-resultant":
        return [_coeffs(*random_pair(rng, 7, 12)) for _ in range(scale)]
    if suite == "lemma-gamma1":
        return [_coeffs(*random_pair(rng, 6, 12)) for _ in range(scale)]
    if suite == "cyclotomic":
        return [(m, n) for n in range(1, scale + 1) for m in range(n, scale + 1)]
    if suite == "dunwoody":
        return [
            (r, s, n)
            for r in range(2, scale + 1)
            for s in range(r + 1, scale + 1)
            if gcd(r, s) == 1
            for n in range(2, DUNWOODY_MAX_N + 1)
        ]
    if suite == "factor-splits":
        return split_instances(scale, seed)
    raise KeyError(suite)


CHECKS = {
    "theorem-c": check_theorem_c,
    "corollary-d": check_corollary_d,
    "cyclotomic": check_cyclotomic,
    "dunwoody": check_dunwoody,
    "eq1-resultant": check_eq1,
    "factor-splits": check_split,
    "lemma-gamma1": check_gamma1,
}


def run_suite(suite, scale=None, seed=0, jobs=1):
    """Outcomes for every instance of ``suite``, in instance order."""
    items = instances(suite, scale, seed)
    check = CHECKS[suite]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(check, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [check(item) for item in items]
