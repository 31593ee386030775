"""Dense exact linear algebra over a Field, on plain list-of-list matrices.

Products skip zero entries; the permutation-like operators this package
produces (Takesaki/Galois maps, graded solutions) stay cheap even at
dimension n^3 on V (x) V (x) V.
"""

from __future__ import annotations


class SingularMatrixError(ValueError):
    pass


def zeros(field, rows, cols):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field, n):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_eq(a, b):
    return a == b


def mat_add(field, a, b):
    add = field.add
    return [[add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(field, a, b):
    sub = field.sub
    return [[sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_scale(field, c, a):
    mul = field.mul
    return [[mul(c, x) for x in row] for row in a]


def mat_mul(field, a, b):
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    zero, add, mul = field.zero, field.add, field.mul
    out = [[zero] * cols for _ in range(rows)]
    bnz = [[(j, v) for j, v in enumerate(row) if v != zero] for row in b]
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for k in range(inner):
            aik = arow[k]
            if aik == zero:
                continue
            for j, bkj in bnz[k]:
                orow[j] = add(orow[j], mul(aik, bkj))
    return out


def mat_vec(field, a, v):
    zero, add, mul = field.zero, field.add, field.mul
    out = [zero] * len(a)
    for i, row in enumerate(a):
        acc = zero
        for x, y in zip(row, v):
            if x != zero and y != zero:
                acc = add(acc, mul(x, y))
        out[i] = acc
    return out


def kron(field, a, b):
    """Kronecker product; row (i,j) = i*len(b)+j, matching lexicographic bases."""
    zero, mul = field.zero, field.mul
    ra, ca = len(a), len(a[0])
    rb, cb = len(b), len(b[0])
    out = [[zero] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for k in range(ca):
            aik = a[i][k]
            if aik == zero:
                continue
            for j in range(rb):
                brow = b[j]
                orow = out[i * rb + j]
                for l in range(cb):
                    if brow[l] != zero:
                        orow[k * cb + l] = mul(aik, brow[l])
    return out


def row_echelon(field, a):
    """In-place-free reduced row echelon; returns (echelon, rank, pivot cols)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    zero = field.zero
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != zero), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, r, pivots


def rank(field, a):
    return row_echelon(field, a)[1]


def inverse(field, a):
    n = len(a)
    aug = [row[:] + ident_row for row, ident_row in zip(a, identity(field, n))]
    ech, rk, _ = row_echelon(field, aug)
    if rk < n or any(ech[i][i] != field.one for i in range(n)):
        raise SingularMatrixError("matrix is not invertible")
    return [row[n:] for row in ech]


def is_invertible(field, a):
    return len(a) == len(a[0]) and rank(field, a) == len(a)
