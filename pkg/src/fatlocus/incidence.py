"""Hyperplanes through many points of a configuration, and the weak
combinatorics (member-count table) they generate.

Detection is exact: a point is on a line or plane iff the corresponding
determinant vanishes in the field, with no tolerance anywhere.  Structures can
also be declared abstractly (member index lists without coordinates); the
certificate engine only consumes member counts, so declared structures drive
it just as well, and the two flavors are tagged apart in reports.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DuplicateLineError, DuplicatePointError, ValidationFailedError
from .projective import PointConfiguration, normalize_point


@dataclass(frozen=True)
class Hyperplane:
    """A hyperplane meeting the configuration, with its full member set.

    ``coefficients`` is normalized like a point (first nonzero entry 1), or
    None for declared incidence data.  ``members`` is maximal by construction:
    detection scans every point of Z.
    """

    coefficients: tuple | None
    members: frozenset

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class IncidenceStructure:
    N: int
    npoints: int
    hyperplanes: tuple
    config: PointConfiguration | None = None
    degenerate: bool = False

    @property
    def coordinate_backed(self) -> bool:
        return self.config is not None

    def pencils(self) -> list[list[int]]:
        """For each point, the indices of the hyperplanes through it."""
        out = [[] for _ in range(self.npoints)]
        for hi, h in enumerate(self.hyperplanes):
            for i in h.members:
                out[i].append(hi)
        return out

    @classmethod
    def from_member_lists(cls, member_lists, npoints: int, N: int) -> "IncidenceStructure":
        planes = []
        seen = set()
        for mem in member_lists:
            ms = frozenset(mem)
            if len(ms) != len(mem):
                raise ValidationFailedError(f"repeated index in member list {mem}")
            if any(not 0 <= i < npoints for i in ms):
                raise ValidationFailedError(f"member index out of range in {mem}")
            if ms in seen:
                raise ValidationFailedError(f"duplicate hyperplane {sorted(ms)}")
            seen.add(ms)
            planes.append(Hyperplane(coefficients=None, members=ms))
        if N == 2:
            for a, b in combinations(planes, 2):
                if len(a.members & b.members) > 1:
                    raise ValidationFailedError("two declared lines share two points")
        return cls(N=N, npoints=npoints, hyperplanes=tuple(planes))


def _line_through(a, b, field):
    cf = (
        field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
        field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
        field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0])),
    )
    if all(field.is_zero(c) for c in cf):
        return None
    return normalize_point(cf, field)


def _plane_through(a, b, c, field):
    rows = (a, b, c)

    def minor(i, j, k):
        return field.add(
            field.sub(
                field.mul(rows[0][i], field.sub(field.mul(rows[1][j], rows[2][k]),
                                                field.mul(rows[1][k], rows[2][j]))),
                field.mul(rows[0][j], field.sub(field.mul(rows[1][i], rows[2][k]),
                                                field.mul(rows[1][k], rows[2][i]))),
            ),
            field.mul(rows[0][k], field.sub(field.mul(rows[1][i], rows[2][j]),
                                            field.mul(rows[1][j], rows[2][i]))),
        )

    cf = (minor(1, 2, 3), field.neg(minor(0, 2, 3)), minor(0, 1, 3), field.neg(minor(0, 1, 2)))
    if all(field.is_zero(c) for c in cf):
        return None  # collinear triple
    return normalize_point(cf, field)


def _evaluate(coeffs, point, field) -> bool:
    acc = field.zero
    for c, x in zip(coeffs, point):
        acc = field.add(acc, field.mul(c, x))
    return field.is_zero(acc)


def detect_hyperplanes(config: PointConfiguration, min_members: int | None = None) -> IncidenceStructure:
    """Exact enumeration of all lines (P^2) or planes (P^3) through at least
    ``min_members`` points of Z.

    P^2 spans point pairs; P^3 spans non-collinear triples (O(|Z|^3), guarded
    to |Z| <= 64).  A plane through three points is always there, so the P^3
    threshold starts at 4.
    """
    field = config.field
    n = len(config)
    if config.N == 2:
        if min_members is None:
            min_members = 3
        if min_members < 3:
            raise ValueError("min_members must be >= 3 in the plane")
        spans = combinations(range(n), 2)
        through = _line_through
    elif config.N == 3:
        if min_members is None:
            min_members = 4
        if min_members < 4:
            raise ValueError("min_members must be >= 4 in P^3")
        if n > 64:
            raise ValueError("plane enumeration is limited to 64 points")
        spans = combinations(range(n), 3)
        through = _plane_through
    else:
        raise ValueError("hyperplane detection supports N = 2 and N = 3 only")

    seen = {}
    for tup in spans:
        cf = through(*(config.points[i] for i in tup), field)
        if cf is None or cf in seen:
            continue
        members = frozenset(
            i for i, q in enumerate(config.points) if _evaluate(cf, q, field)
        )
        seen[cf] = members
    planes = tuple(
        Hyperplane(coefficients=cf, members=mem)
        for cf, mem in sorted(seen.items(), key=lambda kv: (-len(kv[1]), sorted(kv[1])))
        if len(mem) >= min_members
    )
    degenerate = any(h.size == n for h in planes)
    return IncidenceStructure(
        N=config.N, npoints=n, hyperplanes=planes, config=config, degenerate=degenerate
    )


@dataclass(frozen=True)
class WeakCombinatorics:
    """The t-vector: how many hyperplanes contain exactly i points of Z."""

    table: dict
    npoints: int
    N: int

    def check_pair_count(self) -> bool:
        """In P^2 each point pair lies on at most one line, so
        sum_i table[i] * binom(i, 2) <= binom(|Z|, 2)."""
        if self.N != 2:
            return True
        pairs = sum(cnt * comb(i, 2) for i, cnt in self.table.items())
        return pairs <= comb(self.npoints, 2)

    def to_json(self) -> dict:
        return {str(i): self.table[i] for i in sorted(self.table)}

    @classmethod
    def from_json(cls, d: dict, npoints: int, N: int) -> "WeakCombinatorics":
        return cls({int(i): c for i, c in d.items()}, npoints, N)


def weak_table(incidence: IncidenceStructure) -> WeakCombinatorics:
    tab = Counter(h.size for h in incidence.hyperplanes)
    return WeakCombinatorics(dict(tab), incidence.npoints, incidence.N)


def dualize(lines, field, name: str = "") -> PointConfiguration:
    """Swap line coefficients and point coordinates (P^2 duality)."""
    try:
        return PointConfiguration.from_coords(2, field, lines, name)
    except DuplicatePointError as exc:
        raise DuplicateLineError(str(exc)) from exc


def lines_through(incidence: IncidenceStructure, B) -> list[tuple[Hyperplane, int]]:
    """Hyperplanes through B with their member counts.

    B is either a point index of Z, or external coordinates (then the
    structure must be coordinate-backed so membership can be evaluated).
    """
    if isinstance(B, int):
        return [(h, h.size) for h in incidence.hyperplanes if B in h.members]
    if incidence.config is None:
        raise ValidationFailedError("external-point queries need coordinates")
    field = incidence.config.field
    Bv = normalize_point(B, field)
    return [
        (h, h.size)
        for h in incidence.hyperplanes
        if _evaluate(h.coefficients, Bv, field)
    ]
