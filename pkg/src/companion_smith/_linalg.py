"""Fraction-free elimination kernels on list-of-lists integer matrices.

Kept free of package types so that both the polynomial and the matrix
modules can use them without an import cycle.
"""


def bareiss_det(a):
    """Exact determinant of a square integer matrix (rows are copied)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def bareiss_rank(a, ncols=None):
    """Rank over the rationals by fraction-free row reduction."""
    m = [list(row) for row in a]
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            lead = m[i][col]
            row_i = m[i]
            row_r = m[rank]
            for j in range(col, ncols):
                row_i[j] = (pivot * row_i[j] - lead * row_r[j]) // prev
        prev = pivot
        rank += 1
    return rank
