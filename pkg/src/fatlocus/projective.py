"""Point configurations in P^N over an exact field."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, DuplicatePointError


def normalize_point(coords, field) -> tuple:
    """Scale so the first nonzero coordinate is 1; rejects the zero vector."""
    vals = [field.coerce(c) for c in coords]
    lead = next((v for v in vals if not field.is_zero(v)), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    inv = field.inv(lead)
    return tuple(field.mul(v, inv) for v in vals)


@dataclass(frozen=True)
class PointConfiguration:
    """A finite set Z of pairwise distinct points of P^N.

    Points are stored normalized (first nonzero coordinate 1), which makes
    equality of projective points plain tuple equality.
    """

    N: int
    field: object
    points: tuple[tuple, ...]
    name: str = ""

    @classmethod
    def from_coords(cls, N, field, coords, name="") -> "PointConfiguration":
        pts = []
        seen = set()
        for c in coords:
            if len(c) != N + 1:
                raise DimensionMismatchError(
                    f"point arity {len(c)} != N+1 = {N + 1}"
                )
            q = normalize_point(c, field)
            if q in seen:
                raise DuplicatePointError(f"duplicate point {q}")
            seen.add(q)
            pts.append(q)
        return cls(N=N, field=field, points=tuple(pts), name=name)

    def __len__(self):
        return len(self.points)

    @property
    def s(self) -> int:
        return len(self.points)

    def subset(self, indices, name="") -> "PointConfiguration":
        pts = tuple(self.points[i] for i in indices)
        return PointConfiguration(self.N, self.field, pts, name or self.name)

    def without(self, indices, name="") -> "PointConfiguration":
        drop = set(indices)
        keep = [i for i in range(len(self.points)) if i not in drop]
        return self.subset(keep, name)

    def shifted(self, k: int) -> "PointConfiguration":
        """Cyclic coordinate shift by k places; an invertible projective map."""
        n = self.N + 1
        pts = tuple(
            normalize_point(tuple(q[(i + k) % n] for i in range(n)), self.field)
            for q in self.points
        )
        return PointConfiguration(self.N, self.field, pts, self.name)
