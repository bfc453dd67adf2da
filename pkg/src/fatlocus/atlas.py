"""Catalog of point configurations: generation, ingestion, validation, and
JSON persistence.

Arrangements whose real coordinates are irrational (regular polygons, the
icosahedral arrangement, Fermat grids) are realized over prime fields carrying
the needed roots of unity; every certificate in the engine depends only on
member counts, so the choice of field is immaterial to the verdicts.  Entries
sourced from outside references (D4, the Penrose subconfiguration) ship as
data files whose correctness is established purely by the combinatorial
validators run on every load: the validators, not the provenance, are the
contract.  Some catalog entries carry no coordinates at all, only a point
count and the member-count table; those drive the certificate engine but no
rank computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field, replace
from fractions import Fraction
from importlib import resources

from .errors import NoSuchRootError, ParseError, ValidationFailedError
from .fields import DEFAULT_PRIME, FieldSpec, PrimeField, RationalField, find_prime_with_unity
from .incidence import IncidenceStructure, WeakCombinatorics, detect_hyperplanes, weak_table
from .projective import PointConfiguration

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ConfigurationRecord:
    """A persisted configuration: coordinates and/or declared incidence data.

    ``points`` may be None for table-only entries; then ``npoints`` carries the
    size.  ``expected_weak_table`` is revalidated against detection whenever
    coordinates are present.
    """

    name: str
    N: int
    field: FieldSpec | None
    points: tuple | None
    npoints: int
    declared_incidence: tuple | None = None
    expected_weak_table: dict | None = None
    metadata: dict = dc_field(default_factory=dict)
    validation_notes: tuple = ()

    @property
    def coordinate_backed(self) -> bool:
        return self.points is not None

    def configuration(self, prime: int | None = None) -> PointConfiguration:
        """Materialize the point set; optionally reduce rational coordinates
        into F_prime (prime-field records cannot be re-reduced)."""
        if self.points is None:
            raise ValidationFailedError(
                f"record {self.name!r} declares incidence only; no coordinates"
            )
        fld = self.field.field()
        if prime is not None:
            if fld.kind == "Prime":
                if fld.p != prime:
                    raise ValidationFailedError(
                        "cannot move prime-field coordinates to another prime"
                    )
            else:
                fld = PrimeField(prime)
        pts = [tuple(fld.coerce(c) for c in q) for q in self.points]
        return PointConfiguration.from_coords(self.N, fld, pts, self.name)

    def incidence(self, min_members: int | None = None) -> IncidenceStructure:
        """Coordinate-backed detection when possible, declared members otherwise."""
        if self.points is not None:
            return detect_hyperplanes(self.configuration(), min_members=min_members)
        if self.declared_incidence is not None:
            return IncidenceStructure.from_member_lists(
                [list(m) for m in self.declared_incidence], self.npoints, self.N
            )
        raise ValidationFailedError(f"record {self.name!r} has no incidence data")

    def weak(self) -> WeakCombinatorics:
        if self.points is not None or self.declared_incidence is not None:
            return weak_table(self.incidence())
        if self.expected_weak_table is not None:
            return WeakCombinatorics(dict(self.expected_weak_table), self.npoints, self.N)
        raise ValidationFailedError(f"record {self.name!r} has no combinatorial data")

    def to_json(self) -> dict:
        fld = self.field.field() if self.field else None
        return {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "N": self.N,
            "field": self.field.to_json() if self.field else None,
            "points": [[fld.to_str(c) for c in q] for q in self.points]
            if self.points is not None
            else None,
            "npoints": self.npoints,
            "declared_incidence": [sorted(m) for m in self.declared_incidence]
            if self.declared_incidence is not None
            else None,
            "expected_weak_table": {str(i): c for i, c in sorted(self.expected_weak_table.items())}
            if self.expected_weak_table is not None
            else None,
            "metadata": dict(self.metadata),
        }


def _record_from_json(data: dict) -> ConfigurationRecord:
    if data.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {data.get('schema')!r}")
    fspec = FieldSpec.from_json(data["field"]) if data.get("field") else None
    points = None
    if data.get("points") is not None:
        if fspec is None:
            raise ParseError("coordinate records need a field block")
        fld = fspec.field()
        points = tuple(tuple(fld.coerce(c) for c in q) for q in data["points"])
    npoints = data.get("npoints", len(points) if points is not None else None)
    if npoints is None:
        raise ParseError("record carries neither points nor npoints")
    declared = (
        tuple(frozenset(m) for m in data["declared_incidence"])
        if data.get("declared_incidence")
        else None
    )
    table = (
        {int(i): c for i, c in data["expected_weak_table"].items()}
        if data.get("expected_weak_table")
        else None
    )
    return ConfigurationRecord(
        name=data["name"],
        N=data["N"],
        field=fspec,
        points=points,
        npoints=npoints,
        declared_incidence=declared,
        expected_weak_table=table,
        metadata=data.get("metadata", {}),
    )


def validate_record(record: ConfigurationRecord) -> ConfigurationRecord:
    """Run every applicable validator; returns the record annotated with notes."""
    notes = []
    if record.points is not None:
        if len(record.points) != record.npoints:
            raise ValidationFailedError(
                f"{record.name}: npoints {record.npoints} != {len(record.points)} points"
            )
        config = record.configuration()  # raises on duplicates / bad arity
        notes.append(f"{len(config)} distinct points over {config.field!r}")
        if record.expected_weak_table is not None:
            found = weak_table(detect_hyperplanes(config)).table
            if found != record.expected_weak_table:
                raise ValidationFailedError(
                    f"{record.name}: detected weak table {found} != expected "
                    f"{record.expected_weak_table}"
                )
            notes.append("weak table matches expectation")
    if record.declared_incidence is not None:
        inc = IncidenceStructure.from_member_lists(
            [list(m) for m in record.declared_incidence], record.npoints, record.N
        )
        notes.append(f"declared incidence with {len(inc.hyperplanes)} hyperplanes is consistent")
        if record.points is not None:
            detected = {h.members for h in detect_hyperplanes(record.configuration()).hyperplanes}
            if not all(h.members in detected for h in inc.hyperplanes):
                raise ValidationFailedError(
                    f"{record.name}: declared incidence disagrees with coordinates"
                )
            notes.append("declared incidence confirmed by coordinates")
    if record.expected_weak_table is not None and record.points is None:
        wt = WeakCombinatorics(dict(record.expected_weak_table), record.npoints, record.N)
        if not wt.check_pair_count():
            raise ValidationFailedError(f"{record.name}: weak table violates the pair count")
        notes.append("weak table satisfies the pair-count inequality")
    return replace(record, validation_notes=tuple(notes))


def save(record: ConfigurationRecord, path) -> None:
    with open(path, "w") as f:
        json.dump(record.to_json(), f, indent=2, sort_keys=True)
        f.write("\n")


def load(path) -> ConfigurationRecord:
    """Parse, validate, and annotate a configuration file."""
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return validate_record(_record_from_json(data))


def _data_json(name: str) -> dict:
    with resources.files("fatlocus.data").joinpath(name).open() as f:
        return json.load(f)


def _trig(field, order: int):
    """cos/sin tables from a primitive root of unity of the given order."""
    z = field.root_of_unity(order)
    i_unit = field.pow(z, order // 4)  # a primitive 4th root; needs 4 | order
    inv2 = field.inv(field.coerce(2))

    def cos(j):
        return field.mul(field.add(field.pow(z, j % order), field.pow(z, (-j) % order)), inv2)

    def sin(j):
        val = field.mul(field.sub(field.pow(z, j % order), field.pow(z, (-j) % order)), inv2)
        return field.div(val, i_unit)

    return cos, sin


def gen_a4k1(k: int, field: PrimeField | None = None) -> ConfigurationRecord:
    """Dual points of the 4k+1 line family: the 2k sides of a regular 2k-gon,
    its 2k symmetry axes, and the line at infinity.

    Validated weak table: 2k(k-1) three-point lines, k four-point lines, one
    2k-point line (for k = 2 the four-point entries merge to {3: 4, 4: 3}).
    """
    if k < 2:
        raise ValueError("the polygon construction needs 2k >= 4, i.e. k >= 2")
    if field is None:
        field = PrimeField(find_prime_with_unity(4 * k, 61))
    if (field.p - 1) % (4 * k) != 0:
        raise NoSuchRootError(f"field lacks a primitive {4 * k}-th root of unity")
    cos, sin = _trig(field, 4 * k)
    lines = []
    for t in range(2 * k):  # sides: tangent lines at the odd half-angles
        lines.append((cos(2 * t + 1), sin(2 * t + 1), field.neg(cos(1))))
    for t in range(2 * k):  # axes through vertices and edge midpoints
        lines.append((field.neg(sin(t)), cos(t), field.zero))
    lines.append((field.zero, field.zero, field.one))  # line at infinity
    expected = {}
    for size, cnt in ((3, 2 * k * (k - 1)), (4, k), (2 * k, 1)):
        if cnt:
            expected[size] = expected.get(size, 0) + cnt
    record = ConfigurationRecord(
        name=f"a4k1-k{k}",
        N=2,
        field=field.spec,
        points=tuple(
            PointConfiguration.from_coords(2, field, lines).points
        ),
        npoints=4 * k + 1,
        expected_weak_table=expected,
        metadata={
            "source": "generated",
            "citation": f"dual of the A({4 * k + 1},1) simplicial arrangement "
            f"(regular {2 * k}-gon construction)",
        },
    )
    return validate_record(record)


@dataclass(frozen=True)
class FermatSets:
    """The degree-3 and degree-6 Fermat grids and the derived point sets."""

    f3: ConfigurationRecord
    f6: ConfigurationRecord
    t: ConfigurationRecord
    z: ConfigurationRecord
    z1: tuple  # one 20-point record per grid point of F3 minus T


def gen_fermat_sets(field: PrimeField | None = None) -> FermatSets:
    """Intersection points of (x^m - y^m)(y^m - z^m)(z^m - x^m) = 0 plus the
    three fundamental points, for m = 3 and 6, and the derived sets:
    Z = (F6 minus F3) plus T (30 points), and for each grid point P of F3 the
    20-point set Z1(P) = F6 minus the three degree-3 lines through P."""
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    if (field.p - 1) % 6 != 0:
        raise NoSuchRootError("field lacks a primitive 6th root of unity")
    z6 = field.root_of_unity(6)
    z3 = field.pow(z6, 2)
    T = [(field.one, field.zero, field.zero),
         (field.zero, field.one, field.zero),
         (field.zero, field.zero, field.one)]

    def grid(zeta, m):
        pts = []
        for a in range(m):
            for b in range(m):
                pts.append((field.pow(zeta, (a + b) % m), field.pow(zeta, b), field.one))
        return pts

    g3 = grid(z3, 3)
    g6 = grid(z6, 6)
    set3, set6 = set(g3), set(g6)
    if not set3 <= set6:
        raise ValidationFailedError("degree-3 grid is not inside the degree-6 grid")
    z_pts = sorted(set6 - set3) + T

    def record(name, pts, expected=None, citation=""):
        rec = ConfigurationRecord(
            name=name,
            N=2,
            field=field.spec,
            points=tuple(PointConfiguration.from_coords(2, field, pts).points),
            npoints=len(pts),
            expected_weak_table=expected,
            metadata={"source": "generated", "citation": citation},
        )
        return validate_record(rec)

    f3 = record("fermat-f3", g3 + T, citation="degree-3 Fermat grid with the fundamental triangle")
    f6 = record("fermat-f6", g6 + T, citation="degree-6 Fermat grid with the fundamental triangle")
    t = record("fermat-t", T, citation="the fundamental triangle")
    z = record(
        "fermat-z",
        z_pts,
        expected={4: 9, 7: 9},
        citation="30 points: the degree-6 grid minus the degree-3 grid, plus the triangle",
    )
    if len(z.points) != 30:
        raise ValidationFailedError(f"|Z| = {len(z.points)} != 30")

    # the nine 7-point lines (odd pencils) and nine 4-point lines (even pencils)
    # are re-derived per grid point of F3 for the Z1 sets
    z1_records = []
    cfg6 = f6.configuration()
    inc6 = detect_hyperplanes(cfg6)
    from .projective import normalize_point

    for pi, P in enumerate(g3):
        p_idx = cfg6.points.index(normalize_point(P, field))
        through = [h for h in inc6.hyperplanes if h.size == 7 and p_idx in h.members]
        if len(through) != 3:
            raise ValidationFailedError(
                f"grid point {pi} lies on {len(through)} heavy lines, expected 3"
            )
        drop = set()
        for h in through:
            drop |= h.members
        keep = [q for i, q in enumerate(cfg6.points) if i not in drop]
        rec = record(
            f"fermat-z1-{pi}",
            keep,
            citation="20 points: the degree-6 Fermat set minus the three degree-3 lines "
            f"through grid point #{pi}",
        )
        if len(rec.points) != 20:
            raise ValidationFailedError(f"|Z1({pi})| = {len(rec.points)} != 20")
        z1_records.append(rec)
    if len(z1_records) != 9:
        raise ValidationFailedError("expected nine Z1 sets")
    return FermatSets(f3=f3, f6=f6, t=t, z=z, z1=tuple(z1_records))


def gen_d4() -> ConfigurationRecord:
    """The 12-point P^3 configuration with twelve 6-point planes and six
    planes through every point, loaded from the shipped data file."""
    record = validate_record(_record_from_json(_data_json("d4.json")))
    config = record.configuration()
    inc = detect_hyperplanes(config, min_members=4)
    sizes = [h.size for h in inc.hyperplanes]
    if len(sizes) != 12 or set(sizes) != {6}:
        raise ValidationFailedError(f"d4: expected twelve 6-point planes, found {sizes}")
    pencil_sizes = {len(p) for p in inc.pencils()}
    if pencil_sizes != {6}:
        raise ValidationFailedError(f"d4: pencil sizes {pencil_sizes} != {{6}}")
    return record


def gen_penrose20(field: PrimeField | None = None) -> ConfigurationRecord:
    """The 20-point subconfiguration on twenty 8-point planes with eight
    planes through every point; coordinates are built from the shipped
    sign-and-exponent patterns over any field with a primitive cube root."""
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    if (field.p - 1) % 3 != 0:
        raise NoSuchRootError("field lacks a primitive cube root of unity")
    data = _data_json("penrose20.json")
    w = field.root_of_unity(3)
    lut = {
        "0": field.zero,
        "1": field.one,
        "-1": field.neg(field.one),
        "w": w,
        "-w": field.neg(w),
        "w2": field.pow(w, 2),
        "-w2": field.neg(field.pow(w, 2)),
    }
    pts = [tuple(lut[tok] for tok in pat) for pat in data["patterns"]]
    record = ConfigurationRecord(
        name="penrose20",
        N=3,
        field=field.spec,
        points=tuple(PointConfiguration.from_coords(3, field, pts).points),
        npoints=20,
        metadata=data["metadata"],
    )
    record = validate_record(record)
    inc = detect_hyperplanes(record.configuration(), min_members=4)
    heavy = [h for h in inc.hyperplanes if h.size == 8]
    if len(heavy) != 20:
        raise ValidationFailedError(f"penrose20: {len(heavy)} eight-point planes, expected 20")
    pencil = [0] * 20
    for h in heavy:
        for i in h.members:
            pencil[i] += 1
    if set(pencil) != {8}:
        raise ValidationFailedError(f"penrose20: pencil counts {sorted(set(pencil))} != {{8}}")
    return record


def gen_dk_points(variant: str) -> ConfigurationRecord:
    """The classical general-position examples over Q: seven listed points, or
    nine (the seven plus two more)."""
    seven = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (2, -2, 1), (-1, -3, 1), (3, 5, 1), (4, 1, 1)]
    extra = [(-3, 5, 1), (-5, 2, 1)]
    if variant == "seven":
        pts = seven
    elif variant == "nine":
        pts = seven + extra
    else:
        raise ValueError("variant must be 'seven' or 'nine'")
    field = RationalField()
    record = ConfigurationRecord(
        name=f"dk-{variant}",
        N=2,
        field=field.spec,
        points=tuple(
            PointConfiguration.from_coords(2, field, [tuple(map(Fraction, q)) for q in pts]).points
        ),
        npoints=len(pts),
        expected_weak_table={},  # general position: no 3-point lines
        metadata={"source": "paper-figure", "citation": "general-position sample points"},
    )
    return validate_record(record)


# the 24 affine dual points of the sporadic 30-line arrangement, as
# (x, y / sqrt(3)) pairs, plus six directions (angles in degrees)
_A30_AFFINE = [
    (Fraction(0), Fraction(0)),
    (Fraction(1, 6), Fraction(1, 6)), (Fraction(-1, 6), Fraction(1, 6)),
    (Fraction(1, 6), Fraction(-1, 6)), (Fraction(-1, 6), Fraction(-1, 6)),
    (Fraction(1, 6), Fraction(1, 18)), (Fraction(-1, 6), Fraction(1, 18)),
    (Fraction(1, 6), Fraction(-1, 18)), (Fraction(-1, 6), Fraction(-1, 18)),
    (Fraction(1, 3), Fraction(0)), (Fraction(-1, 3), Fraction(0)),
    (Fraction(0), Fraction(1, 9)), (Fraction(0), Fraction(-1, 9)),
    (Fraction(1, 3), Fraction(1, 9)), (Fraction(-1, 3), Fraction(1, 9)),
    (Fraction(1, 3), Fraction(-1, 9)), (Fraction(-1, 3), Fraction(-1, 9)),
    (Fraction(0), Fraction(1, 18)), (Fraction(0), Fraction(-1, 18)),
    (Fraction(1, 12), Fraction(1, 36)), (Fraction(-1, 12), Fraction(1, 36)),
    (Fraction(1, 12), Fraction(-1, 36)), (Fraction(-1, 12), Fraction(-1, 36)),
    (Fraction(0), Fraction(-2, 9)),
]
_A30_DIRECTIONS = [0, 90, 60, -60, -30, 30]  # the 30-degree direction is the marked point

#: Index of the marked point (last): removing it yields the 29-point table.
A30_MARKED_INDEX = 29


def gen_a30_dual(field: PrimeField | None = None) -> ConfigurationRecord:
    """The 30 dual points of the sporadic 30-line simplicial arrangement:
    24 affine points with coordinates in Q(sqrt 3) and six directions at
    multiples of 30 degrees; the marked direction sits at index 29.

    Validated tables: {3:44, 4:17, 5:6, 6:1, 7:1, 8:2} for all 30 points and
    {3:42, 4:18, 5:5, 7:2, 8:1} once the marked point is removed.
    """
    if field is None:
        field = PrimeField(find_prime_with_unity(12, 61))
    if (field.p - 1) % 12 != 0:
        raise NoSuchRootError("field lacks a primitive 12th root of unity")
    z12 = field.root_of_unity(12)
    sqrt3 = field.add(z12, field.inv(z12))  # 2 cos(30 deg)
    pts = [
        (field.coerce(x), field.mul(field.coerce(yq), sqrt3), field.one)
        for x, yq in _A30_AFFINE
    ]
    cos, sin = _trig(field, 12)
    for ang in _A30_DIRECTIONS:
        j = ang // 30
        pts.append((cos(j), sin(j), field.zero))
    record = ConfigurationRecord(
        name="a30_3-dual",
        N=2,
        field=field.spec,
        points=tuple(PointConfiguration.from_coords(2, field, pts).points),
        npoints=30,
        expected_weak_table={3: 44, 4: 17, 5: 6, 6: 1, 7: 1, 8: 2},
        metadata={
            "source": "paper-figure",
            "citation": "dual of the sporadic simplicial arrangement A(30,3) "
            "(Gruenbaum catalog), coordinates over Q(sqrt 3)",
        },
    )
    record = validate_record(record)
    reduced = record.configuration().without([A30_MARKED_INDEX])
    found = weak_table(detect_hyperplanes(reduced)).table
    if found != {3: 42, 4: 18, 5: 5, 7: 2, 8: 1}:
        raise ValidationFailedError(f"a30_3 minus the marked point: table {found}")
    return record


def gen_a15_dual(field: PrimeField | None = None) -> ConfigurationRecord:
    """The 15 dual points of the icosahedral arrangement (the fifteen planes of
    symmetry of the icosahedron): the fifteen 2-fold axis directions.

    Validated table: {3: 10, 5: 6}, with every point on exactly two 5-point
    and two 3-point lines.
    """
    if field is None:
        field = PrimeField(find_prime_with_unity(5, 61))
    if (field.p - 1) % 5 != 0:
        raise NoSuchRootError("field lacks a primitive 5th root of unity")
    z5 = field.root_of_unity(5)
    sqrt5 = field.add(field.mul(field.coerce(2), field.add(z5, field.inv(z5))), field.one)
    phi = field.div(field.add(field.one, sqrt5), field.coerce(2))
    verts = []
    for a in (field.one, field.neg(field.one)):
        for b in (phi, field.neg(phi)):
            verts += [
                (field.zero, a, b),
                (b, field.zero, a),
                (a, b, field.zero),
            ]

    def dist2(u, v):
        acc = field.zero
        for x, y in zip(u, v):
            t = field.sub(x, y)
            acc = field.add(acc, field.mul(t, t))
        return acc

    four = field.coerce(4)
    mids = set()
    for i in range(12):
        for j in range(i + 1, 12):
            if dist2(verts[i], verts[j]) == four:
                mid = tuple(field.add(a, b) for a, b in zip(verts[i], verts[j]))
                mids.add(PointConfiguration.from_coords(2, field, [mid]).points[0])
    if len(mids) != 15:
        raise ValidationFailedError(f"icosahedral construction found {len(mids)} axes")
    record = ConfigurationRecord(
        name="a15_1-dual",
        N=2,
        field=field.spec,
        points=tuple(sorted(mids)),
        npoints=15,
        expected_weak_table={3: 10, 5: 6},
        metadata={
            "source": "generated",
            "citation": "dual of the icosahedral arrangement A(15,1) (Gruenbaum catalog): "
            "edge-midpoint directions of the icosahedron over Q(sqrt 5)",
        },
    )
    record = validate_record(record)
    inc = detect_hyperplanes(record.configuration())
    for pencil in inc.pencils():
        sizes = sorted(inc.hyperplanes[h].size for h in pencil)
        if sizes != [3, 3, 5, 5]:
            raise ValidationFailedError(f"a15_1: point pencil {sizes} != [3, 3, 5, 5]")
    return record


def load_table_record(stem: str) -> ConfigurationRecord:
    """One of the shipped table-only records (no coordinates)."""
    return validate_record(_record_from_json(_data_json(f"{stem}.json")))


def fermat_partial_report(sets: FermatSets, d: int, m: int) -> dict:
    """Partial certificate for the 30-point Fermat-derived set Z at (7, 3) or
    (8, 5): line totals, fixed-point bounds at the fundamental points, and the
    supporting kernel facts (a quartic through each Z1 and a 4-dimensional
    family of quintics).

    The totals alone stay below deg F, and the concluding step, pushing a
    residual curve through the fundamental triangle to a contradiction, is a
    geometric argument this engine does not replay, so the report is flagged
    not machine-verified.
    """
    from .certificates import fixed_point_bound, line_multiplicity_bound
    from .interpolation import degree_of_F, ideal_dimension

    wt = weak_table(detect_hyperplanes(sets.z.configuration()))
    line_total = sum(
        cnt * line_multiplicity_bound(n, d, m, 2).total for n, cnt in wt.table.items()
    )
    # a fundamental point sits on three 7-point lines; the B-in-Z bound is
    # valid for m >= j >= d - 7 + 3
    fixed = {}
    for j in range(max(1, d - 4), m + 1):
        fixed[f"h_{j}"] = fixed_point_bound(3, (7, 7, 7), j, d, True)
    quartics = [ideal_dimension(rec.configuration(), 4) for rec in sets.z1]
    quintics = [ideal_dimension(rec.configuration(), 5) for rec in sets.z1]
    return {
        "d": d,
        "m": m,
        "deg_F": degree_of_F(2, d, m),
        "weak_table": dict(wt.table),
        "line_total": line_total,
        "fixed_point": fixed,
        "quartics_through_z1": quartics,
        "quintic_family_dims": quintics,
        "machine_verified": False,
        "note": "line and fixed-point totals stay below deg F; the conclusion "
        "rests on a residual-curve argument through the fundamental triangle "
        "that is not machine-verified",
    }


GENERATORS = {
    "a4k1": gen_a4k1,
    "fermat": gen_fermat_sets,
    "d4": gen_d4,
    "penrose20": gen_penrose20,
    "dk": gen_dk_points,
    "a30_3": gen_a30_dual,
    "a15_1": gen_a15_dual,
}

TABLE_RECORDS = (
    "a13_3_table",
    "a30_3_table",
    "a30_3_29_table",
    "a15_1_table",
    "a15_1_14_table",
)
