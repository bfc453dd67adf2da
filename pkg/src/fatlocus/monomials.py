"""Ordered monomial bases, formal partial derivatives, and evaluated rows.

Monomials of fixed degree d in a_0..a_N are listed in descending lexicographic
order with a_0 heaviest: a_0^d, a_0^{d-1}a_1, a_0^{d-1}a_2, ..., a_{N-1}a_N^{d-1},
a_N^d.  The order is fixed globally so serialized matrices and locus
polynomials are bit-exact across runs.  Dehomogenizing at a_0 = 1 maps this
listing bijectively onto the monomials of degree <= d in a_1..a_N, grouped by
total degree: 1, a_1, a_2, a_1^2, a_1 a_2, a_2^2, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


def exponent_vectors(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree exactly ``degree`` over ``nvars``
    variables, in descending lexicographic order."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        out.extend((e,) + tail for tail in exponent_vectors(nvars - 1, degree - e))
    return out


def derivative_indices(nvars: int, order: int) -> list[tuple[int, ...]]:
    """Multi-indices of total order exactly ``order``; binom(order+nvars-1, nvars-1)
    of them, in descending lexicographic order."""
    return exponent_vectors(nvars, order)


def derivative_indices_upto(nvars: int, order: int) -> list[tuple[int, ...]]:
    """Multi-indices of order 0..order ascending by order; binom(order+nvars, nvars)
    in total."""
    out = []
    for t in range(order + 1):
        out.extend(exponent_vectors(nvars, t))
    return out


@dataclass(frozen=True)
class MonomialBasis:
    """The monomial vector for degree-d forms in N+1 homogeneous variables."""

    N: int
    d: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def affine_entries(self) -> tuple[tuple[int, ...], ...]:
        """Exponents with a_0 dropped: the dehomogenization at a_0 = 1."""
        return tuple(e[1:] for e in self.entries)


@lru_cache(maxsize=None)
def monomial_basis(N: int, d: int) -> MonomialBasis:
    if N < 1 or d < 0:
        raise ValueError("need N >= 1 and d >= 0")
    entries = tuple(exponent_vectors(N + 1, d))
    assert len(entries) == comb(d + N, N)
    return MonomialBasis(N, d, entries)


def differentiate_monomial(
    exponents: tuple[int, ...], idx: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    """Apply the partial derivative with multi-index ``idx`` to a monomial.

    Returns (coefficient, result exponents); the coefficient is the product of
    falling factorials e_i (e_i-1) ... (e_i-idx_i+1) and is 0 whenever some
    idx_i exceeds e_i.  Plain derivatives only: over F_p the caller guarantees
    p > d so no coefficient vanishes mod p.
    """
    if len(exponents) != len(idx):
        raise ValueError("multi-index arity mismatch")
    coeff = 1
    out = []
    for e, t in zip(exponents, idx):
        if t > e:
            return 0, None
        for j in range(t):
            coeff *= e - j
        out.append(e - t)
    return coeff, tuple(out)


def evaluate_row(basis: MonomialBasis, idx: tuple[int, ...], point, field) -> list:
    """One row of the interpolation matrix: the ``idx``-derivative of the
    monomial vector evaluated at ``point``.

    A multi-index of length N+1 differentiates the homogeneous entries and
    expects N+1 coordinates; length N differentiates the dehomogenized entries
    (chart a_0 = 1) and expects the N affine coordinates.  The zero index gives
    the plain evaluation row.
    """
    if len(idx) == basis.N + 1:
        entries = basis.entries
    elif len(idx) == basis.N:
        entries = basis.affine_entries
    else:
        raise ValueError("multi-index arity must be N or N+1")
    if len(point) != len(idx):
        raise ValueError("point arity must match the multi-index")
    coords = [field.coerce(c) for c in point]
    # cache powers of each coordinate up to degree d
    pows = [[field.one] for _ in coords]
    for ci, c in enumerate(coords):
        row = pows[ci]
        for _ in range(basis.d):
            row.append(field.mul(row[-1], c))
    out = []
    for e in entries:
        coeff, rest = differentiate_monomial(e, idx)
        if coeff == 0:
            out.append(field.zero)
            continue
        v = field.coerce(coeff)
        for ci, r in enumerate(rest):
            if r:
                v = field.mul(v, pows[ci][r])
        out.append(v)
    return out
