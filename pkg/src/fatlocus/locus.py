"""Symbolic determinant locus: det M as a polynomial in the coordinates of B.

The expansion runs along the binom(m+N-1, N) derivative rows (generalized
Laplace): every entry of those rows is a single monomial in a_0..a_N with an
integer coefficient, so the symbolic side stays inside r x r minors, while the
complementary s x s point minors are plain field constants.  Both minor
families are computed by a last-row expansion recursion memoized on the column
subset, so the total work is one multiply-add per (subset, column) pair rather
than per permutation.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, gcd

from .errors import BudgetExceededError, NotSquareError
from .interpolation import degree_of_F, square_size
from .monomials import derivative_indices, differentiate_monomial, monomial_basis
from .polynomials import HomogeneousPoly
from .projective import PointConfiguration


def _integer_scaled_points(config: PointConfiguration, d: int) -> tuple[list, object]:
    """Scale rational points to integer vectors; returns (points, det factor).

    Scaling a point by L scales its degree-d evaluation row by L^d, so det M
    picks up the product of the L^d; the caller divides that out at the end,
    recovering the determinant of the matrix built from the stored normalized
    points.
    """
    field = config.field
    if field.kind != "Rational":
        return list(config.points), field.one
    pts = []
    factor = field.one
    for q in config.points:
        lcm = 1
        for c in q:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        pts.append(tuple(int(c * lcm) for c in q))
        factor = factor * field.coerce(lcm) ** d
    return pts, factor


class _MinorCache:
    """All q x q leading-row minors of a fixed row block, keyed by column subset."""

    def __init__(self, rows, add, mul, zero, one):
        self.rows = rows
        self.add = add
        self.mul = mul
        self.zero = zero
        self.cache = {(): one}

    def minor(self, cols: tuple) -> object:
        """Determinant of rows[0:len(cols)] on the given columns."""
        hit = self.cache.get(cols)
        if hit is not None:
            return hit
        q = len(cols)
        row = self.rows[q - 1]
        acc = self.zero
        for i in range(q):
            entry = row[cols[i]]
            if entry is None or entry == 0:
                continue
            # expansion along the last row: entry i carries sign (-1)^((q-1)+i)
            term = self.mul(entry, self.minor(cols[:i] + cols[i + 1 :]))
            if (q - 1 + i) % 2:
                term = self._neg(term)
            acc = self.add(acc, term)
        self.cache[cols] = acc
        return acc

    def _neg(self, x):
        raise NotImplementedError


class _ScalarMinors(_MinorCache):
    def __init__(self, rows, field):
        super().__init__(rows, field.add, field.mul, field.zero, field.one)
        self.field = field

    def _neg(self, x):
        return self.field.neg(x)


class _PolyMinors(_MinorCache):
    """Minors of the symbolic derivative rows; values are term dicts."""

    def __init__(self, rows, field, nvars):
        self.field = field
        one = {(0,) * nvars: field.one}
        super().__init__(rows, self._padd, self._pmul, {}, one)

    def _padd(self, a, b):
        out = dict(a)
        f = self.field
        for e, c in b.items():
            v = f.add(out.get(e, f.zero), c)
            if f.is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return out

    def _pmul(self, entry, poly):
        # entry is a single monomial (coeff, exponents); shift-and-scale
        coeff, exps = entry
        f = self.field
        out = {}
        for e, c in poly.items():
            ee = tuple(a + b for a, b in zip(e, exps))
            out[ee] = f.mul(c, coeff)
        return out

    def _neg(self, poly):
        f = self.field
        return {e: f.neg(c) for e, c in poly.items()}


def symbolic_locus(
    config: PointConfiguration, d: int, m: int, budget: int = 10**6
) -> HomogeneousPoly:
    """det M as an explicit homogeneous polynomial of degree
    binom(m+N-1, N) * (d-m+1) in the coordinates of B.

    Requires the square bookkeeping and refuses when the number of column
    subsets binom(ncols, r) exceeds ``budget`` (random evaluation via
    zero_locus_test is the fallback at that scale).
    """
    field = config.field
    N = config.N
    s = square_size(N, d, m)
    if len(config) != s:
        raise NotSquareError(f"|Z| = {len(config)} but the square size is {s}")
    basis = monomial_basis(N, d)
    ncols = basis.size
    r = comb(m + N - 1, N)
    n_subsets = comb(ncols, r)
    if n_subsets > budget:
        raise BudgetExceededError(
            f"binom({ncols},{r}) = {n_subsets} column subsets exceed the budget "
            f"{budget}; use zero_locus_test (random evaluation) at this scale"
        )

    pts, factor = _integer_scaled_points(config, d)
    if field.kind == "Prime":
        p = field.p
        prow = [[_eval_mono_mod(q, e, p) for e in basis.entries] for q in pts]
    else:
        prow = [[_eval_mono_int(q, e) for e in basis.entries] for q in pts]

    # symbolic derivative rows: entry = (integer coefficient, shifted exponents)
    deriv = []
    for idx in derivative_indices(N + 1, m - 1):
        row = []
        for e in basis.entries:
            coeff, rest = differentiate_monomial(e, idx)
            if coeff == 0:
                row.append(None)
            else:
                row.append((field.coerce(coeff), rest))
        deriv.append(row)

    num = _ScalarMinors(prow, field) if field.kind == "Prime" else _IntMinors(prow)
    sym = _PolyMinors(deriv, field, N + 1)

    row_sum = sum(range(s, s + r))
    acc = {}
    f = field
    for S in combinations(range(ncols), r):
        spoly = sym.minor(S)
        if not spoly:
            continue
        compl = tuple(c for c in range(ncols) if c not in set(S))
        nval = num.minor(compl)
        if _is_zero_val(nval, field):
            continue
        scale = f.coerce(nval)
        if (row_sum + sum(S)) % 2:
            scale = f.neg(scale)
        for e, c in spoly.items():
            v = f.add(acc.get(e, f.zero), f.mul(c, scale))
            if f.is_zero(v):
                acc.pop(e, None)
            else:
                acc[e] = v

    if factor != f.one:
        inv = f.inv(factor)
        acc = {e: f.mul(c, inv) for e, c in acc.items()}
    return HomogeneousPoly(N, degree_of_F(N, d, m), acc, field)


class _IntMinors(_MinorCache):
    """Integer minor cache for rational configurations scaled to integers."""

    def __init__(self, rows):
        super().__init__(rows, lambda a, b: a + b, lambda a, b: a * b, 0, 1)

    def _neg(self, x):
        return -x


def _eval_mono_mod(q, e, p):
    v = 1
    for c, ei in zip(q, e):
        if ei:
            v = v * pow(c, ei, p) % p
    return v


def _eval_mono_int(q, e):
    v = 1
    for c, ei in zip(q, e):
        if ei:
            v *= c**ei
    return v


def _is_zero_val(v, field):
    if isinstance(v, int):
        return v == 0
    return field.is_zero(v)


def multiplicity_at(poly: HomogeneousPoly, B) -> int:
    """Least order t with some order-t partial of ``poly`` nonzero at B."""
    return poly.multiplicity_at(B)
