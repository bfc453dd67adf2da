"""Pure-Python modular elimination kernels.

Same contract as the compiled module ``_modcore``; one of the two is selected
at import time by :mod:`fatlocus.linalg`.  Matrices are lists of rows of ints,
reduced mod p on entry.
"""

from __future__ import annotations


def rank(rows, p) -> int:
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][col], p - 2, p)
        prow = m[rk]
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(rk + 1, nrows):
            f = m[r][col]
            if f:
                row = m[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rk += 1
        if rk == nrows:
            break
    return rk


def det(rows, p) -> int:
    n = len(rows)
    m = [[x % p for x in r] for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    d = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pv = m[col][col]
        d = d * pv % p
        inv = pow(pv, p - 2, p)
        prow = m[col]
        for r in range(col + 1, n):
            f = m[r][col] * inv % p
            if f:
                row = m[r]
                for c in range(col, n):
                    row[c] = (row[c] - f * prow[c]) % p
    return d if sign == 1 else (p - d) % p


def prefix_ranks(rows, p) -> list[int]:
    """rank(rows[:k]) for k = 1..len(rows), in one incremental pass."""
    pivots = {}  # leading column -> reduced pivot row
    out = []
    rk = 0
    for r in rows:
        row = [x % p for x in r]
        for col in sorted(pivots):
            f = row[col]
            if f:
                prow = pivots[col]
                for c in range(col, len(row)):
                    row[c] = (row[c] - f * prow[c]) % p
        lead = next((c for c, x in enumerate(row) if x), None)
        if lead is not None:
            inv = pow(row[lead], p - 2, p)
            for c in range(lead, len(row)):
                row[c] = row[c] * inv % p
            pivots[lead] = row
            rk += 1
        out.append(rk)
    return out


def nullspace(rows, p) -> list[list[int]]:
    """Basis of the right kernel, one vector per free column (RREF read-off)."""
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    piv_cols = []
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][col], p - 2, p)
        prow = m[rk]
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(nrows):
            if r != rk and m[r][col]:
                f = m[r][col]
                row = m[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        piv_cols.append(col)
        rk += 1
        if rk == nrows:
            break
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(piv_cols):
            v[pc] = (-m[r][fc]) % p
        basis.append(v)
    return basis
