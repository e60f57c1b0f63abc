"""Dense exact matrices over CycloNum: products, Kronecker products, ranks.

Matrices are plain lists of rows.  Every loop skips zero entries, since the
representation matrices here are mostly zeros.
"""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import CycloNum

Matrix = list[list[CycloNum]]


def zeros(n: int, rows: int, cols: int) -> Matrix:
    z = CycloNum.zero(n)
    return [[z] * cols for _ in range(rows)]


def identity(n: int, size: int) -> Matrix:
    m = zeros(n, size, size)
    one = CycloNum.one(n)
    for i in range(size):
        m[i][i] = one
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def matmul(a: Matrix, b: Matrix, order: int) -> Matrix:
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if b else 0
    z = CycloNum.zero(order)
    # sparse view of b's rows
    b_rows = [[(j, v) for j, v in enumerate(row) if v] for row in b]
    out = []
    for i in range(rows):
        acc: dict[int, CycloNum] = {}
        for k, a_ik in enumerate(a[i]):
            if a_ik and k < inner:
                for j, v in b_rows[k]:
                    prod = a_ik * v
                    acc[j] = acc[j] + prod if j in acc else prod
        row = [z] * cols
        for j, v in acc.items():
            row[j] = v
        out.append(row)
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y if y else x for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, c) -> Matrix:
    return [[x * c if x else x for x in row] for row in a]


def matpow(a: Matrix, k: int, order: int) -> Matrix:
    result = identity(order, len(a))
    for _ in range(k):
        result = matmul(result, a, order)
    return result


def kron(a: Matrix, b: Matrix, order: int) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = zeros(order, ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if not x:
                continue
            for k in range(rb):
                for m in range(cb):
                    y = b[k][m]
                    if y:
                        out[i * rb + k][j * cb + m] = x * y
    return out


def block_diag(a: Matrix, b: Matrix, order: int) -> Matrix:
    ra, rb = len(a), len(b)
    out = zeros(order, ra + rb, ra + rb)
    for i in range(ra):
        out[i][:ra] = list(a[i])
    for i in range(rb):
        out[ra + i][ra:] = list(b[i])
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def equal(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def row_echelon(rows: Sequence[Sequence[CycloNum]]) -> list[list[CycloNum]]:
    """Division-free (fraction-free) row reduction; returns the nonzero echelon rows.

    Each elimination step replaces ``r`` by ``p*r - c*pivot_row`` so no field
    inverse is ever taken.  Rows are then rescaled by their leading entry's
    inverse only when that entry is rational, which keeps sizes bounded
    without paying for cyclotomic inversion.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    echelon: list[list[CycloNum]] = []
    col = 0
    while work and col < ncols:
        pivot_idx = None
        for idx, r in enumerate(work):
            if r[col]:
                pivot_idx = idx
                break
        if pivot_idx is None:
            col += 1
            continue
        pivot = _normalize(work.pop(pivot_idx), col)
        p = pivot[col]
        rest = []
        for r in work:
            c = r[col]
            if c:
                r = [p * x - c * y if (x or y) else x for x, y in zip(r, pivot)]
                if not any(r):
                    continue
            rest.append(r)
        work = rest
        echelon.append(pivot)
        col += 1
    return echelon


def _normalize(row: list[CycloNum], col: int) -> list[CycloNum]:
    lead = row[col]
    if lead == 1:
        return row
    if lead.is_rational():
        inv = lead.inverse()
        return [x * inv if x else x for x in row]
    return row


def rank(a: Matrix) -> int:
    """Rank of a matrix (row rank via echelon form of the smaller side)."""
    if not a or not a[0]:
        return 0
    if len(a[0]) < len(a):
        a = transpose(a)
    return len(row_echelon(a))


def column_space(a: Matrix) -> Matrix:
    """A matrix whose columns form a basis of the column space of ``a``."""
    if not a or not a[0]:
        return [[] for _ in a]
    basis_rows = row_echelon(transpose(a))
    if not basis_rows:
        return [[] for _ in a]
    return transpose(basis_rows)


def columns(a: Matrix) -> int:
    return len(a[0]) if a else 0
