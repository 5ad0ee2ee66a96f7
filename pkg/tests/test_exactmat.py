import pytest
from hypothesis import given
from hypothesis import strategies as st

from companion_smith.errors import NonMonicDivisor, NotSquare, OutOfRange, ParseError
from companion_smith.exactmat import (
    CompanionRingElement,
    IntMatrix,
    circulant,
    companion,
    determinant,
    format_matrix,
    is_unimodular,
    lower_toeplitz,
    parse_matrix,
    poly_of_companion,
    poly_of_companion_naive,
    rank,
    skew_circulant,
)
from companion_smith.intpoly import divmod_monic, parse_poly, resultant
from companion_smith.structured import similarity_witness

from conftest import matrices, monics, polys, square_matrices

P = parse_poly
M = IntMatrix.from_rows


def cofactor_det(rows):
    if not rows:
        return 1
    return sum(
        (-1) ** j * rows[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(len(rows))
        if rows[0][j]
    )


def eval_on_matrix(f, a):
    """Horner evaluation of f at an arbitrary square matrix."""
    n = a.rows
    acc = IntMatrix.zeros(n)
    for c in reversed(f.coeffs):
        acc = acc @ a + IntMatrix.identity(n).scale(c)
    return acc


def test_companion_examples():
    assert companion(P("t - 1")) == M([[1]])
    assert companion(P("t^3 - 1")) == M([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert companion(P("t^2 + 1")) == M([[0, -1], [1, 0]])
    assert companion(P("t^3 + 2t^2 - 5t + 7")) == M([[-2, 5, -7], [1, 0, 0], [0, 1, 0]])


def test_companion_errors():
    with pytest.raises(NonMonicDivisor):
        companion(P("2t + 1"))
    with pytest.raises(OutOfRange):
        companion(P("1"))


def test_poly_of_companion_examples():
    g = P("t^4 - 3t + 2")
    assert poly_of_companion(P("1"), g) == IntMatrix.identity(4)
    assert poly_of_companion(P("t"), g) == companion(g)
    m = poly_of_companion(P("t + 1"), P("t^3 - 1"))
    assert m == M([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    assert m.row(2) == (0, 1, 1)


def test_last_row_holds_reduced_coefficients():
    f, g = P("5t^6 - t^3 + 2t + 4"), P("t^4 + t - 1")
    h = divmod_monic(f, g)[1]
    last = poly_of_companion(f, g).row(3)
    assert last == tuple(h[k] for k in (3, 2, 1, 0))


def test_circulant_examples():
    assert circulant([7]) == M([[7]])
    assert circulant([0, 1, 0]) == companion(P("t^3 - 1"))
    assert circulant([1, 1, 0]) == poly_of_companion(P("1 + t"), P("t^3 - 1"))
    c = circulant([1, 2, 3, 4])
    for i in range(1, 4):
        assert c.row(i) == c.row(i - 1)[-1:] + c.row(i - 1)[:-1]
    with pytest.raises(OutOfRange):
        circulant([])


def test_skew_and_toeplitz_examples():
    assert skew_circulant([0, 1]) == M([[0, -1], [1, 0]])
    assert lower_toeplitz([1, 2]) == M([[1, 0], [2, 1]])
    assert lower_toeplitz([5]) == M([[5]])
    assert lower_toeplitz([1, 2, 3]) == M([[1, 0, 0], [2, 1, 0], [3, 2, 1]])
    with pytest.raises(OutOfRange):
        skew_circulant([])
    with pytest.raises(OutOfRange):
        lower_toeplitz([])


def test_determinant_examples():
    assert determinant(IntMatrix.identity(5)) == 1
    c = companion(P("t^3 - 1"))
    assert cofactor_det(c.to_lists()) == 1
    assert determinant(c) == 1
    m = poly_of_companion(P("t - 2"), P("t^2 - 1"))
    a, b, c2, d = m.entries
    assert a * d - b * c2 == 3
    assert determinant(m) == 3
    assert determinant(IntMatrix(0, 0)) == 1
    with pytest.raises(NotSquare):
        determinant(IntMatrix(2, 3))


@given(square_matrices(5))
def test_determinant_matches_cofactor_expansion(m):
    assert determinant(m) == cofactor_det(m.to_lists())


def test_is_unimodular_examples():
    assert is_unimodular(IntMatrix.identity(4))
    assert not is_unimodular(IntMatrix.identity(2).scale(2))
    with pytest.raises(NotSquare):
        is_unimodular(IntMatrix(1, 2))


@given(monics(0, 4), monics(0, 4))
def test_u_a_is_unimodular(a, b):
    if a.degree + b.degree < 1:
        return
    assert is_unimodular(similarity_witness(a, b).u_a)


@given(polys(6), polys(6), monics(1, 6))
def test_ring_homomorphism(f1, f2, g):
    m1, m2 = poly_of_companion(f1, g), poly_of_companion(f2, g)
    assert poly_of_companion(f1 * f2, g) == m1 @ m2
    assert poly_of_companion(f1 + f2, g) == m1 + m2


@given(monics(1, 7))
def test_cayley_hamilton(g):
    assert poly_of_companion(g, g) == IntMatrix.zeros(g.degree)
    assert eval_on_matrix(g, companion(g)) == IntMatrix.zeros(g.degree)


@given(polys(12), monics(1, 6))
def test_horner_agreement(f, g):
    assert poly_of_companion(f, g) == poly_of_companion_naive(f, g)


@given(st.data(), polys(5))
def test_block_lower_triangular_evaluation(data, f):
    p = data.draw(st.integers(1, 3))
    q = data.draw(st.integers(1, 3))
    ints = st.integers(-3, 3)
    a = IntMatrix(p, p, data.draw(st.lists(ints, min_size=p * p, max_size=p * p)))
    b = IntMatrix(q, q, data.draw(st.lists(ints, min_size=q * q, max_size=q * q)))
    x = IntMatrix(q, p, data.draw(st.lists(ints, min_size=p * q, max_size=p * q)))
    rows = [list(a.row(i)) + [0] * q for i in range(p)]
    rows += [list(x.row(i)) + list(b.row(i)) for i in range(q)]
    ft = eval_on_matrix(f, M(rows))
    assert ft.submatrix(0, p, p, p + q) == IntMatrix.zeros(p, q)
    assert ft.submatrix(0, p, 0, p) == eval_on_matrix(f, a)
    assert ft.submatrix(p, p + q, p, p + q) == eval_on_matrix(f, b)


@given(polys(8), monics(1, 7))
def test_determinant_is_resultant(f, g):
    assert determinant(poly_of_companion(f, g)) == resultant(f, g)


@given(matrices(6))
def test_rank_bounds(m):
    r = rank(m)
    assert 0 <= r <= min(m.rows, m.cols)
    assert rank(m.transpose()) == r


def test_companion_ring_element():
    g = P("t^3 - 2")
    x = CompanionRingElement.of(P("t^4 + 1"), g)
    assert x.representative == P("2t + 1")
    y = CompanionRingElement.of(P("t^2"), g)
    assert (x * y).matrix() == x.matrix() @ y.matrix()
    assert (x + y).matrix() == x.matrix() + y.matrix()
    with pytest.raises(ValueError):
        CompanionRingElement(g, P("t^3"))
    with pytest.raises(ValueError):
        x * CompanionRingElement.of(P("t"), P("t^2 + 1"))


def test_matrix_text_roundtrip():
    text = "2 3\n1 -2 3\n40 5 -6\n"
    m = parse_matrix(text)
    assert m == M([[1, -2, 3], [40, 5, -6]])
    assert format_matrix(m) == text
    assert format_matrix(parse_matrix("0 0\n")) == "0 0\n"
    assert parse_matrix("  2   2 \n 1\t2\n3 4  \n\n") == M([[1, 2], [3, 4]])


@given(matrices(5, entries=st.integers(-10**30, 10**30)))
def test_matrix_format_parse_roundtrip(m):
    assert parse_matrix(format_matrix(m)) == m


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("2\n", 1, 1),
        ("2 2\n1 2\n", 3, 1),
        ("2 2\n1 2\n3 x\n", 3, 3),
        ("2 2\n1 2 3\n3 4\n", 2, 5),
        ("1 1\n5\n6\n", 3, 1),
    ],
)
def test_matrix_parse_errors(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_matrix(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_immutable():
    m = IntMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3
