# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernel: flat int matrices, same API as _purecore."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

EQ_HOPF = 0
EQ_PENTAGON = 1
EQ_QYBE = 2
EQ_COMMUTATIVE = 3
EQ_COCOMMUTATIVE = 4


cdef void _mm(long long* a, long long* b, long long* out, int dim, long long p) nogil:
    cdef int i, j, k
    cdef long long aik
    memset(out, 0, dim * dim * sizeof(long long))
    for i in range(dim):
        for k in range(dim):
            aik = a[i * dim + k]
            if aik:
                for j in range(dim):
                    if b[k * dim + j]:
                        out[i * dim + j] = (out[i * dim + j] + aik * b[k * dim + j]) % p


cdef void _legs(long long* flat, long long* r12, long long* r13, long long* r23,
                int n, long long p) nogil:
    cdef int d2 = n * n
    cdef int d3 = d2 * n
    cdef int i, j, k, a, b, u, w
    cdef long long v
    memset(r12, 0, d3 * d3 * sizeof(long long))
    memset(r13, 0, d3 * d3 * sizeof(long long))
    memset(r23, 0, d3 * d3 * sizeof(long long))
    for i in range(d2):
        for j in range(d2):
            v = flat[i * d2 + j]
            if v:
                a = i / n
                b = i % n
                u = j / n
                w = j % n
                for k in range(n):
                    r12[(i * n + k) * d3 + (j * n + k)] = v
                    r23[(k * d2 + i) * d3 + (k * d2 + j)] = v
                    r13[((a * n + k) * n + b) * d3 + ((u * n + k) * n + w)] = v


cdef bint _check(long long* flat, long long* buf, int n, long long p, int code) nogil:
    # buf holds 6 scratch matrices of size d3*d3
    cdef int d3 = n * n * n
    cdef int sz = d3 * d3
    cdef long long* r12 = buf
    cdef long long* r13 = buf + sz
    cdef long long* r23 = buf + 2 * sz
    cdef long long* t1 = buf + 3 * sz
    cdef long long* lhs = buf + 4 * sz
    cdef long long* rhs = buf + 5 * sz
    cdef int i
    _legs(flat, r12, r13, r23, n, p)
    if code == 0:    # hopf: R23 R13 R12 == R12 R23
        _mm(r23, r13, t1, d3, p)
        _mm(t1, r12, lhs, d3, p)
        _mm(r12, r23, rhs, d3, p)
    elif code == 1:  # pentagon: R12 R13 R23 == R23 R12
        _mm(r12, r13, t1, d3, p)
        _mm(t1, r23, lhs, d3, p)
        _mm(r23, r12, rhs, d3, p)
    elif code == 2:  # qybe
        _mm(r12, r13, t1, d3, p)
        _mm(t1, r23, lhs, d3, p)
        _mm(r23, r13, t1, d3, p)
        _mm(t1, r12, rhs, d3, p)
    elif code == 3:  # commutative
        _mm(r12, r13, lhs, d3, p)
        _mm(r13, r12, rhs, d3, p)
    else:            # cocommutative
        _mm(r13, r23, lhs, d3, p)
        _mm(r23, r13, rhs, d3, p)
    for i in range(sz):
        if lhs[i] != rhs[i]:
            return False
    return True


def matmul_mod(a, b, int dim, long long p):
    cdef long long* ca = <long long*> malloc(dim * dim * sizeof(long long))
    cdef long long* cb = <long long*> malloc(dim * dim * sizeof(long long))
    cdef long long* co = <long long*> malloc(dim * dim * sizeof(long long))
    cdef int i
    try:
        for i in range(dim * dim):
            ca[i] = a[i]
            cb[i] = b[i]
        _mm(ca, cb, co, dim, p)
        return [co[i] for i in range(dim * dim)]
    finally:
        free(ca)
        free(cb)
        free(co)


def legs_mod(flat, int n, long long p):
    cdef int d2 = n * n
    cdef int d3 = d2 * n
    cdef int sz = d3 * d3
    cdef long long* cf = <long long*> malloc(d2 * d2 * sizeof(long long))
    cdef long long* r12 = <long long*> malloc(sz * sizeof(long long))
    cdef long long* r13 = <long long*> malloc(sz * sizeof(long long))
    cdef long long* r23 = <long long*> malloc(sz * sizeof(long long))
    cdef int i
    try:
        for i in range(d2 * d2):
            cf[i] = flat[i]
        _legs(cf, r12, r13, r23, n, p)
        return ([r12[i] for i in range(sz)],
                [r13[i] for i in range(sz)],
                [r23[i] for i in range(sz)])
    finally:
        free(cf)
        free(r12)
        free(r13)
        free(r23)


def equation_holds_mod(flat, int n, long long p, int code):
    cdef int d2 = n * n
    cdef int sz = d2 * n * d2 * n
    cdef long long* cf = <long long*> malloc(d2 * d2 * sizeof(long long))
    cdef long long* buf = <long long*> malloc(6 * sz * sizeof(long long))
    cdef int i
    cdef bint ok
    try:
        for i in range(d2 * d2):
            cf[i] = flat[i]
        ok = _check(cf, buf, n, p, code)
        return bool(ok)
    finally:
        free(cf)
        free(buf)


def solutions_in_range_mod(int n, long long p, int code, long long start, long long stop):
    cdef int entries = n * n * n * n
    cdef int d3 = n * n * n
    cdef int sz = d3 * d3
    cdef long long* flat = <long long*> malloc(entries * sizeof(long long))
    cdef long long* buf = <long long*> malloc(6 * sz * sizeof(long long))
    cdef long long idx, rem
    cdef int k
    hits = []
    try:
        for idx in range(start, stop):
            rem = idx
            for k in range(entries - 1, -1, -1):
                flat[k] = rem % p
                rem = rem / p
            if _check(flat, buf, n, p, code):
                hits.append(idx)
        return hits
    finally:
        free(flat)
        free(buf)
