# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled modular elimination kernels (hot path).

Same contract as ``_purecore``: rank / det / prefix_ranks / nullspace over
F_p for p below 2^63.  Products of two residues need 128-bit intermediates,
hence the unsigned __int128 arithmetic.
"""

import numpy as np

cimport numpy as cnp

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64


cdef inline u64 mulmod(u64 a, u64 b, u64 p) noexcept:
    return <u64>((<u128>a * b) % p)


cdef u64 powmod(u64 a, u64 e, u64 p) noexcept:
    cdef u64 r = 1
    a %= p
    while e:
        if e & 1:
            r = mulmod(r, a, p)
        a = mulmod(a, a, p)
        e >>= 1
    return r


cdef inline u64 invmod(u64 a, u64 p) noexcept:
    return powmod(a, p - 2, p)


def _as_matrix(rows, u64 p):
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] m
    if isinstance(rows, np.ndarray):
        m = np.ascontiguousarray(rows, dtype=np.uint64) % p
    elif len(rows) == 0:
        m = np.zeros((0, 0), dtype=np.uint64)
    else:
        m = np.array([[int(x) % p for x in r] for r in rows], dtype=np.uint64)
    return m


def rank(rows, p):
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] m = _as_matrix(rows, p)
    cdef u64 pp = p
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rk = 0, col, r, c, piv
    cdef u64 inv, f
    cdef u64[:, ::1] a = m
    if nrows == 0 or ncols == 0:
        return 0
    for col in range(ncols):
        piv = -1
        for r in range(rk, nrows):
            if a[r, col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rk:
            for c in range(ncols):
                a[rk, c], a[piv, c] = a[piv, c], a[rk, c]
        inv = invmod(a[rk, col], pp)
        for c in range(col, ncols):
            a[rk, c] = mulmod(a[rk, c], inv, pp)
        for r in range(rk + 1, nrows):
            f = a[r, col]
            if f:
                for c in range(col, ncols):
                    a[r, c] = (a[r, c] + pp - mulmod(f, a[rk, c], pp)) % pp
        rk += 1
        if rk == nrows:
            break
    return rk


def det(rows, p):
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] m = _as_matrix(rows, p)
    cdef u64 pp = p
    cdef Py_ssize_t n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("determinant needs a square matrix")
    cdef u64[:, ::1] a = m
    cdef Py_ssize_t col, r, c, piv
    cdef u64 d = 1, inv, f, pv
    cdef int sign = 1
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if a[r, col]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            for c in range(n):
                a[col, c], a[piv, c] = a[piv, c], a[col, c]
            sign = -sign
        pv = a[col, col]
        d = mulmod(d, pv, pp)
        inv = invmod(pv, pp)
        for r in range(col + 1, n):
            f = mulmod(a[r, col], inv, pp)
            if f:
                for c in range(col, n):
                    a[r, c] = (a[r, c] + pp - mulmod(f, a[col, c], pp)) % pp
    if sign < 0 and d:
        d = pp - d
    return int(d)


def prefix_ranks(rows, p):
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] m = _as_matrix(rows, p)
    cdef u64 pp = p
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    # reduced pivot rows accumulate here, one per pivot column
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] basis = np.zeros(
        (min(nrows, ncols), ncols), dtype=np.uint64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] lead_of = np.full(ncols, -1, dtype=np.int64)
    cdef u64[:, ::1] a = m
    cdef u64[:, ::1] b = basis
    cdef long long[::1] lead = lead_of
    cdef Py_ssize_t rk = 0, i, c, col
    cdef long long bi
    cdef u64 f, inv
    out = []
    for i in range(nrows):
        for col in range(ncols):
            bi = lead[col]
            if bi >= 0:
                f = a[i, col]
                if f:
                    for c in range(col, ncols):
                        a[i, c] = (a[i, c] + pp - mulmod(f, b[bi, c], pp)) % pp
        col = -1
        for c in range(ncols):
            if a[i, c]:
                col = c
                break
        if col >= 0:
            inv = invmod(a[i, col], pp)
            for c in range(col, ncols):
                b[rk, c] = mulmod(a[i, c], inv, pp)
            lead[col] = rk
            rk += 1
        out.append(rk)
    return out


def nullspace(rows, p):
    cdef cnp.ndarray[cnp.uint64_t, ndim=2] m = _as_matrix(rows, p)
    cdef u64 pp = p
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef u64[:, ::1] a = m
    cdef Py_ssize_t rk = 0, col, r, c, piv
    cdef u64 inv, f
    piv_cols = []
    for col in range(ncols):
        piv = -1
        for r in range(rk, nrows):
            if a[r, col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rk:
            for c in range(ncols):
                a[rk, c], a[piv, c] = a[piv, c], a[rk, c]
        inv = invmod(a[rk, col], pp)
        for c in range(col, ncols):
            a[rk, c] = mulmod(a[rk, c], inv, pp)
        for r in range(nrows):
            if r != rk and a[r, col]:
                f = a[r, col]
                for c in range(col, ncols):
                    a[r, c] = (a[r, c] + pp - mulmod(f, a[rk, c], pp)) % pp
        piv_cols.append(col)
        rk += 1
        if rk == nrows:
            break
    piv_set = set(piv_cols)
    basis = []
    for fc in range(ncols):
        if fc in piv_set:
            continue
        v = [0] * ncols
        v[fc] = 1
        for r in range(rk):
            v[piv_cols[r]] = int((pp - a[r, fc]) % pp)
        basis.append(v)
    return basis
