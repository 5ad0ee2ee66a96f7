import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from companion_smith.errors import DivisionByZeroPolynomial, NonMonicDivisor, OutOfRange, ParseError
from companion_smith.intpoly import (
    NEG_INF,
    IntPolynomial,
    add,
    compose_power,
    content,
    cyclotomic,
    divmod_monic,
    format_poly,
    gcd_with_monic,
    monomial,
    mul,
    parse_poly,
    resultant,
)

from conftest import monics, polys

P = parse_poly
T = sympy.Symbol("t")


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], T)


def test_canonical_form_and_zero_degree():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).coeffs == ()
    assert IntPolynomial().degree == NEG_INF
    assert IntPolynomial().degree < -(10**9)
    assert P("t^3 - 1").degree == 3


@pytest.mark.parametrize(
    "p, q, expected",
    [("t + 1", "t - 1", "2t"), ("t^2 + 3", "0", "t^2 + 3"), ("t^2 - 1", "1", "t^2")],
)
def test_add_examples(p, q, expected):
    assert add(P(p), P(q)) == P(expected)


@pytest.mark.parametrize(
    "p, q, expected",
    [("t - 1", "t + 1", "t^2 - 1"), ("t^2 + 5", "0", "0"), ("t^2 + t + 1", "t - 1", "t^3 - 1")],
)
def test_mul_examples(p, q, expected):
    assert mul(P(p), P(q)) == P(expected)


def test_divmod_examples():
    assert divmod_monic(P("t^3"), P("t^2 - 1")) == (P("t"), P("t"))
    assert divmod_monic(P("t^2 - 1"), P("t^2 - 1")) == (P("1"), P("0"))
    assert divmod_monic(P("2t + 2"), P("t^2 - 1")) == (P("0"), P("2t + 2"))


def test_divmod_errors():
    with pytest.raises(NonMonicDivisor):
        divmod_monic(P("t^3"), P("2t - 1"))
    with pytest.raises(DivisionByZeroPolynomial):
        divmod_monic(P("t^3"), IntPolynomial())


def test_content_examples():
    assert content(P("6t^2 + 4t + 2")) == 2
    assert content(IntPolynomial()) == 0
    assert content(P("t^3 - 1")) == 1
    assert content(P("-4t - 6")) == 2


def test_gcd_examples():
    assert gcd_with_monic(P("t^2 - 1"), P("t^3 - 1")) == P("t - 1")
    assert gcd_with_monic(P("5"), P("t^3 - 1")) == P("1")
    assert gcd_with_monic(IntPolynomial(), P("t^2 + 1")) == P("t^2 + 1")
    with pytest.raises(NonMonicDivisor):
        gcd_with_monic(P("t"), P("3t^2 + 1"))


def test_resultant_examples():
    # roots of t^2 - 1 are +1 and -1: (1 - 2)(-1 - 2) = 3
    f = P("t - 2")
    assert f(1) * f(-1) == 3
    assert resultant(f, P("t^2 - 1")) == 3
    assert resultant(P("1"), P("t^5 + 3t - 7")) == 1
    with pytest.raises(NonMonicDivisor):
        resultant(f, P("2t + 1"))


def test_resultant_over_integer_roots():
    # g with known integer roots: the product definition is directly computable
    roots = [2, -3, 5, 0]
    g = IntPolynomial((1,))
    for r in roots:
        g = g * P(f"t - {r}") if r >= 0 else g * P(f"t + {-r}")
    f = P("t^3 - 4t + 7")
    expected = 1
    for r in roots:
        expected *= f(r)
    assert resultant(f, g) == expected


@given(polys(8), monics(1, 7))
def test_resultant_magnitude_matches_sympy(f, g):
    # sympy's sign convention differs for some degree combinations; compare |res|
    expected = 0 if f.is_zero() else abs(int(sympy.resultant(to_sympy(g), to_sympy(f))))
    assert abs(resultant(f, g)) == expected


@given(polys(4, st.integers(-4, 4)), monics(1, 5, st.integers(-4, 4)))
def test_resultant_matches_root_product(f, g):
    roots = np.roots(list(reversed(g.coeffs)))
    approx = np.prod([f(complex(r)) for r in roots]) if len(roots) else 1
    res = resultant(f, g)
    assert abs(approx.imag) < 1e-6 * max(1, abs(res))
    assert abs(approx.real - res) < 1e-6 * max(1, abs(res))


@pytest.mark.parametrize(
    "m, n, p",
    [(2, 1, 2), (4, 1, 2), (9, 3, 3), (12, 3, 2), (20, 5, 2), (50, 2, 5), (18, 6, 3), (24, 3, 2)],
)
def test_cyclotomic_resultant_prime_power(m, n, p):
    phi_n = cyclotomic(n).degree
    assert abs(resultant(cyclotomic(m), cyclotomic(n))) == p**phi_n


@pytest.mark.parametrize("m, n", [(6, 5), (15, 3 * 5), (10, 3), (30, 5)])
def test_cyclotomic_resultant_other_cases(m, n):
    expected = 0 if m == n else 1
    assert abs(resultant(cyclotomic(m), cyclotomic(n))) == expected


def test_cyclotomic_examples():
    assert cyclotomic(1) == P("t - 1")
    for p in (2, 3, 5, 7, 11):
        assert cyclotomic(p) == IntPolynomial([1] * p)
    # Phi_6 = (t^6 - 1) / (Phi_1 Phi_2 Phi_3), each divided out exactly
    q = monomial(6) - 1
    for d in (P("t - 1"), P("t + 1"), P("t^2 + t + 1")):
        q, r = divmod_monic(q, d)
        assert r.is_zero()
    assert cyclotomic(6) == q == P("t^2 - t + 1")
    with pytest.raises(OutOfRange):
        cyclotomic(0)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_reconstruction(n):
    prod = IntPolynomial((1,))
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == monomial(n) - 1


@pytest.mark.parametrize("n", [1, 2, 7, 12, 30, 60, 97])
def test_cyclotomic_matches_sympy(n):
    assert to_sympy(cyclotomic(n)) == sympy.Poly(sympy.cyclotomic_poly(n, T), T)


def test_compose_power_examples():
    assert compose_power(P("t - 1"), 3) == P("t^3 - 1")
    assert compose_power(P("3t^2 - t + 4"), 1) == P("3t^2 - t + 4")
    assert compose_power(P("t^2 + 1"), 2) == P("t^4 + 1")
    with pytest.raises(OutOfRange):
        compose_power(P("t"), 0)


@given(polys(12, st.integers(-50, 50)), monics(1, 6))
def test_division_identity(p, g):
    q, r = divmod_monic(p, g)
    assert q * g + r == p
    assert r.degree < g.degree


@given(polys(6), monics(0, 3), monics(1, 4))
def test_gcd_soundness(f0, a, b):
    # plant a common factor a so nontrivial gcds occur
    f, g = f0 * a, a * b
    z = gcd_with_monic(f, g)
    assert z.is_monic()
    assert divmod_monic(f, z)[1].is_zero()
    G, r = divmod_monic(g, z)
    assert r.is_zero() and z * G == g
    # a is a common divisor, so it must divide the gcd
    assert divmod_monic(z, a)[1].is_zero()


@given(polys(8), monics(1, 6))
def test_gcd_matches_sympy(f, g):
    z = gcd_with_monic(f, g)
    expected = sympy.gcd(to_sympy(f), to_sympy(g)).monic()
    assert to_sympy(z).as_expr() == expected.as_expr()


@given(polys(8), monics(1, 6), monics(0, 2))
def test_resultant_gcd_link(f0, g0, z):
    f, g = f0 * z, g0 * z
    assert (resultant(f, g) == 0) == (gcd_with_monic(f, g).degree >= 1)


@given(polys(5), st.sampled_from([2, 3, 5]), st.sampled_from([1, 2]))
def test_frobenius_congruence(f, p, k):
    q = p**k
    diff = f**q - compose_power(f, q) if not f.is_zero() else IntPolynomial()
    assert all(c % p == 0 for c in diff.coeffs)


@given(polys(10, st.integers(-30, 30)), monics(1, 6))
def test_content_divides_remainder_content(f, g):
    h = divmod_monic(f, g)[1]
    cf, ch = content(f), content(h)
    if cf == 0:
        assert ch == 0
    else:
        assert ch % cf == 0


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("-1,0,0,1", (-1, 0, 0, 1)),
        ("t^3 - 1", (-1, 0, 0, 1)),
        ("  t ^ 3-1 ", (-1, 0, 0, 1)),
        ("-t^2 + 2t - 3", (-3, 2, -1)),
        ("2*t + t", (0, 3)),
        ("7", (7,)),
        ("-7", (-7,)),
        ("t", (0, 1)),
        ("0", ()),
        ("1, 2 ,3", (1, 2, 3)),
    ],
)
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


@pytest.mark.parametrize("text", ["", "t^", "3x", "t t", "1,,2", "t^2 + + 1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_format():
    assert format_poly(P("-1,0,0,1")) == "t^3 - 1"
    assert format_poly(P("-3,2,-1")) == "-t^2 + 2t - 3"
    assert format_poly(IntPolynomial()) == "0"
    assert format_poly(P("0,-1")) == "-t"


@given(polys(8, st.integers(-1000, 1000)))
def test_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p)) == p
