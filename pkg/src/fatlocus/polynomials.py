"""Sparse homogeneous polynomials as exponent-vector -> coefficient maps."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroPolynomialError
from .monomials import differentiate_monomial, exponent_vectors


@dataclass(frozen=True)
class HomogeneousPoly:
    """A homogeneous polynomial in a_0..a_N over an exact field.

    ``terms`` maps exponent tuples (length N+1, entries summing to ``degree``)
    to nonzero coefficients.  The zero polynomial is the empty map.
    """

    N: int
    degree: int
    terms: dict
    field: object

    def __post_init__(self):
        for e in self.terms:
            if sum(e) != self.degree:
                raise ValueError(f"term {e} has degree {sum(e)} != {self.degree}")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point):
        coords = [self.field.coerce(c) for c in point]
        f = self.field
        acc = f.zero
        for e, c in self.terms.items():
            v = c
            for ci, ei in zip(coords, e):
                for _ in range(ei):
                    v = f.mul(v, ci)
            acc = f.add(acc, v)
        return acc

    def partial_at(self, idx: tuple[int, ...], point):
        """Value of the ``idx`` partial derivative at ``point`` (no
        materialization of the derivative polynomial)."""
        coords = [self.field.coerce(c) for c in point]
        f = self.field
        acc = f.zero
        for e, c in self.terms.items():
            coeff, rest = differentiate_monomial(e, idx)
            if coeff == 0:
                continue
            v = f.mul(c, f.coerce(coeff))
            for ci, ei in zip(coords, rest):
                for _ in range(ei):
                    v = f.mul(v, ci)
            acc = f.add(acc, v)
        return acc

    def multiplicity_at(self, point) -> int:
        """Least t such that some order-t partial is nonzero at ``point``."""
        if self.is_zero:
            raise ZeroPolynomialError("multiplicity of the zero polynomial")
        for t in range(self.degree + 1):
            for idx in exponent_vectors(self.N + 1, t):
                if not self.field.is_zero(self.partial_at(idx, point)):
                    return t
        # a nonzero homogeneous polynomial has a nonzero order-(degree) partial
        raise AssertionError("unreachable: no nonvanishing partial found")

    def scaled(self, c) -> "HomogeneousPoly":
        f = self.field
        if f.is_zero(c):
            return HomogeneousPoly(self.N, self.degree, {}, f)
        return HomogeneousPoly(
            self.N, self.degree, {e: f.mul(v, c) for e, v in self.terms.items()}, f
        )

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), reverse=True)
        return {
            "variables": self.N + 1,
            "degree": self.degree,
            "zero": self.is_zero,
            "terms": [
                {"exponents": list(e), "coeff": self.field.to_str(c)}
                for e, c in items
            ],
        }

    @classmethod
    def from_json(cls, d: dict, field) -> "HomogeneousPoly":
        terms = {}
        for t in d["terms"]:
            c = field.coerce(t["coeff"])
            if not field.is_zero(c):
                terms[tuple(t["exponents"])] = c
        return cls(d["variables"] - 1, d["degree"], terms, field)


#: The determinant locus F = det M, as a polynomial in the coordinates of B.
LocusPolynomial = HomogeneousPoly
