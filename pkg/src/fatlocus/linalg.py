"""Exact linear algebra over prime fields and the rationals.

Prime-field elimination dispatches to the compiled kernel ``_modcore`` when it
was built, falling back to ``_purecore`` otherwise; set FATLOCUS_PURE=1 to
force the fallback.  Rational elimination (fractions.Fraction) is kept for
small cross-checks of the modular results: a rank over Q can only exceed the
rank over F_p, and agreement over two primes is the library's standard
evidence that no unlucky modulus was hit.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import _purecore

if os.environ.get("FATLOCUS_PURE"):
    _core = _purecore
else:
    try:
        from . import _modcore as _core  # type: ignore[no-redef]
    except ImportError:
        _core = _purecore

BACKEND = "compiled" if _core is not _purecore else "pure"


def rank_mod(rows, p: int) -> int:
    return _core.rank(rows, p)


def det_mod(rows, p: int) -> int:
    return _core.det(rows, p)


def prefix_ranks_mod(rows, p: int) -> list[int]:
    """rank(rows[:k]) for every prefix length k."""
    return list(_core.prefix_ranks(rows, p))


def nullspace_mod(rows, p: int) -> list[list[int]]:
    return [list(map(int, v)) for v in _core.nullspace(rows, p)]


def rank_rational(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        prow = m[rk]
        for r in range(rk + 1, nrows):
            if m[r][col]:
                f = m[r][col] / prow[col]
                row = m[r]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        rk += 1
        if rk == nrows:
            break
    return rk


def det_rational(rows) -> Fraction:
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        d *= m[col][col]
        prow = m[col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / prow[col]
                row = m[r]
                for c in range(col, n):
                    row[c] -= f * prow[c]
    return d * sign


def nullspace_rational(rows) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    piv_cols = []
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        prow = m[rk]
        inv = 1 / prow[col]
        for c in range(col, ncols):
            prow[c] *= inv
        for r in range(nrows):
            if r != rk and m[r][col]:
                f = m[r][col]
                row = m[r]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        piv_cols.append(col)
        rk += 1
        if rk == nrows:
            break
    basis = []
    for fc in (c for c in range(ncols) if c not in piv_cols):
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv_cols):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def rank(rows, field) -> int:
    """Exact rank over the given field object."""
    if field.kind == "Prime":
        return rank_mod(rows, field.p)
    return rank_rational(rows)


def det(rows, field):
    if field.kind == "Prime":
        return det_mod(rows, field.p)
    return det_rational(rows)


def nullspace(rows, field):
    if field.kind == "Prime":
        return nullspace_mod(rows, field.p)
    return nullspace_rational(rows)


def prefix_ranks(rows, field) -> list[int]:
    if field.kind == "Prime":
        return prefix_ranks_mod(rows, field.p)
    # incremental rational variant, used only at desk scale
    out = []
    for k in range(1, len(rows) + 1):
        out.append(rank_rational(rows[:k]))
    return out
