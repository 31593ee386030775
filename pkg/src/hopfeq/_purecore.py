"""Pure-Python twin of the compiled mod-p kernel (_fastcore).

Flat row-major int matrices, entries already reduced mod p. Same call
signatures as the Cython module so kernels.py can swap them freely.
"""

from __future__ import annotations

EQ_HOPF = 0
EQ_PENTAGON = 1
EQ_QYBE = 2
EQ_COMMUTATIVE = 3
EQ_COCOMMUTATIVE = 4


def matmul_mod(a, b, dim, p):
    out = [0] * (dim * dim)
    for i in range(dim):
        arow = i * dim
        orow = i * dim
        for k in range(dim):
            aik = a[arow + k]
            if aik:
                brow = k * dim
                for j in range(dim):
                    bkj = b[brow + j]
                    if bkj:
                        out[orow + j] = (out[orow + j] + aik * bkj) % p
    return out


def legs_mod(flat, n, p):
    """R12, R13, R23 of an n^2 x n^2 operator, as flat n^3 x n^3 matrices."""
    d2 = n * n
    d3 = d2 * n
    r12 = [0] * (d3 * d3)
    r13 = [0] * (d3 * d3)
    r23 = [0] * (d3 * d3)
    for i in range(d2):
        for j in range(d2):
            v = flat[i * d2 + j]
            if not v:
                continue
            a, b = divmod(i, n)
            u, w = divmod(j, n)
            for k in range(n):
                # R12 = R (x) I
                r12[(i * n + k) * d3 + (j * n + k)] = v
                # R23 = I (x) R
                r23[(k * d2 + i) * d3 + (k * d2 + j)] = v
                # R13: middle slot untouched
                r13[((a * n + k) * n + b) * d3 + ((u * n + k) * n + w)] = v
    return r12, r13, r23


def equation_holds_mod(flat, n, p, code):
    r12, r13, r23 = legs_mod(flat, n, p)
    d3 = n * n * n
    if code == EQ_HOPF:
        lhs = matmul_mod(matmul_mod(r23, r13, d3, p), r12, d3, p)
        rhs = matmul_mod(r12, r23, d3, p)
    elif code == EQ_PENTAGON:
        lhs = matmul_mod(matmul_mod(r12, r13, d3, p), r23, d3, p)
        rhs = matmul_mod(r23, r12, d3, p)
    elif code == EQ_QYBE:
        lhs = matmul_mod(matmul_mod(r12, r13, d3, p), r23, d3, p)
        rhs = matmul_mod(matmul_mod(r23, r13, d3, p), r12, d3, p)
    elif code == EQ_COMMUTATIVE:
        lhs = matmul_mod(r12, r13, d3, p)
        rhs = matmul_mod(r13, r12, d3, p)
    elif code == EQ_COCOMMUTATIVE:
        lhs = matmul_mod(r13, r23, d3, p)
        rhs = matmul_mod(r23, r13, d3, p)
    else:
        raise ValueError(f"unknown equation code {code}")
    return lhs == rhs


def solutions_in_range_mod(n, p, code, start, stop):
    """Indices in [start, stop) whose base-p digit matrix solves the equation.

    Index digits are the flattened entries, first entry most significant, so
    ascending index is lexicographic order on the entry vector.
    """
    entries = n * n * n * n
    hits = []
    flat = [0] * entries
    for idx in range(start, stop):
        rem = idx
        for k in range(entries - 1, -1, -1):
            flat[k] = rem % p
            rem //= p
        if equation_holds_mod(flat, n, p, code):
            hits.append(idx)
    return hits
