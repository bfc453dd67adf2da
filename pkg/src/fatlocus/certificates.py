"""Combinatorial lower bounds on multiplicities in the determinant locus, and
the summation certificates that conclude F == 0 from them.

The engine works from weak combinatorics alone: a hyperplane through n points
of Z forces itself into the locus with a computable multiplicity, and when the
multiplicities of all hyperplanes add up beyond deg F, the determinant has no
room left and vanishes identically.  Certificates are self-checking: their
serialized form carries the inputs, and deserialization recomputes every
number before trusting the verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import SizeMismatchError, ValidationFailedError
from .incidence import IncidenceStructure, WeakCombinatorics, weak_table
from .interpolation import degree_of_F, square_size
from .projective import PointConfiguration

PROVEN = "Proven"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LineBound:
    """Total multiplicity a hyperplane through n points forces on the locus.

    Per level j in 1..m the contribution is
    max(0, n + binom(j+N-2, N-1) - binom(d+N-1, N-1)); for N = 2 this sums to
    binom(n+m-d, 2), and for N = 3, d = m = 3 to max(0, n-4).  ``generalized``
    flags ambient dimension above 2, where the count extrapolates the planar
    argument and is validated only on the d = m = 3 instance.
    """

    n: int
    d: int
    m: int
    N: int
    per_j: tuple
    total: int
    generalized: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "N": self.N,
            "per_j": [list(x) for x in self.per_j],
            "total": self.total,
            "generalized": self.generalized,
        }


def line_multiplicity_bound(n: int, d: int, m: int, N: int = 2) -> LineBound:
    if n < 2:
        raise ValueError("a hyperplane bound needs n >= 2 points")
    if not d >= m >= 1:
        raise ValueError("need d >= m >= 1")
    per_j = []
    for j in range(1, m + 1):
        c = n + comb(j + N - 2, N - 1) - comb(d + N - 1, N - 1)
        if c > 0:
            per_j.append((j, c))
    return LineBound(
        n=n, d=d, m=m, N=N,
        per_j=tuple(per_j),
        total=sum(c for _, c in per_j),
        generalized=N > 2,
    )


def fixed_point_bound(k: int, member_counts, j: int, d: int, b_in_z: bool) -> int:
    """Lower bound for h_{j,B} at a fixed B lying on k distinct hyperplanes
    with the given member counts.

    k(j-d-1) + sum of counts for B outside Z; k(j-d-2) + sum + 1 for B in Z.
    The k lines must be pairwise distinct members of the pencil at B; the
    caller is responsible for the per-line ranges of j.
    """
    counts = list(member_counts)
    if k != len(counts) or k < 1:
        raise ValueError("k must equal the number of member counts and be >= 1")
    total = sum(counts)
    if b_in_z:
        return k * (j - d - 2) + total + 1
    return k * (j - d - 1) + total


@dataclass(frozen=True)
class Certificate:
    """A machine-checkable derivation that F == 0 (verdict Proven), or the
    record of a bound that fell short (Inconclusive)."""

    kind: str  # SquareCase | PlusOneCase | FamilyA4k1 | PlaneCount | RemovalAudit
    N: int
    d: int
    m: int
    s: int
    weak_table: dict
    line_bounds: tuple
    extra_terms: tuple
    total: int
    deg_F: int
    verdict: str
    derivation: tuple
    notes: tuple = ()

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "N": self.N,
            "d": self.d,
            "m": self.m,
            "s": self.s,
            "weak_table": {str(i): c for i, c in sorted(self.weak_table.items())},
            "line_bounds": [lb.to_json() for lb in self.line_bounds],
            "extra_terms": [list(t) for t in self.extra_terms],
            "total": self.total,
            "deg_F": self.deg_F,
            "verdict": self.verdict,
            "derivation": list(self.derivation),
            "notes": list(self.notes),
        }


def _sum_table(table: dict, d: int, m: int, N: int):
    bounds = []
    lines = []
    for i in sorted(table):
        lb = line_multiplicity_bound(i, d, m, N)
        bounds.append(lb)
        lines.append(f"{table[i]} x bound({i} points) = {table[i]} * {lb.total}")
    total = sum(table[i] * lb.total for i, lb in zip(sorted(table), bounds))
    return bounds, lines, total


def square_certificate(weak: WeakCombinatorics, d: int, m: int) -> Certificate:
    """Sum of hyperplane multiplicity bounds against deg F, for the square case
    |Z| = binom(d+N, N) - binom(m+N-1, N)."""
    N = weak.N
    s = square_size(N, d, m)
    if weak.npoints != s:
        raise SizeMismatchError(
            f"square case needs |Z| = {s}, got {weak.npoints}"
        )
    deg = degree_of_F(N, d, m)
    bounds, lines, total = _sum_table(weak.table, d, m, N)
    verdict = PROVEN if total > deg else INCONCLUSIVE
    closing = (
        f"{total} > {deg}  =>  F == 0"
        if verdict == PROVEN
        else f"{total} <= {deg}: Inconclusive"
    )
    return Certificate(
        kind="SquareCase",
        N=N, d=d, m=m, s=s,
        weak_table=dict(weak.table),
        line_bounds=tuple(bounds),
        extra_terms=(),
        total=total,
        deg_F=deg,
        verdict=verdict,
        derivation=tuple(lines) + (f"total multiplicity of hyperplanes = {total}", closing),
    )


def plus_one_certificate(weak: WeakCombinatorics, d: int) -> Certificate:
    """One-point-surplus criterion in the plane, m = d-1:
    sum over lines of binom(|L|-1, 2) + d - s + 2 > 2 binom(d, 2) proves an
    unexpected curve of type (d, d-1) for |Z| = s = binom(d+2,2)-binom(d,2)+1.

    Removing any single point reduces to the square case; the d - s + 2 term
    is what the removed point recovers at level j = d.
    """
    if weak.N != 2:
        raise SizeMismatchError("the plus-one criterion lives in the plane")
    m = d - 1
    s = square_size(2, d, m) + 1
    if weak.npoints != s:
        raise SizeMismatchError(f"plus-one case needs |Z| = {s}, got {weak.npoints}")
    deg = degree_of_F(2, d, m)
    table = {i: c for i, c in weak.table.items() if i >= 3}
    line_sum = sum(c * comb(i - 1, 2) for i, c in table.items())
    lhs = line_sum + d - s + 2
    lhs_removed = line_sum + d - (s - 1) + 2
    verdict = PROVEN if lhs > deg else INCONCLUSIVE
    lines = [
        f"{c} x C({i}-1, 2) = {c} * {comb(i - 1, 2)}" for i, c in sorted(table.items())
    ]
    lines.append(f"sum over lines = {line_sum}")
    lines.append(f"LHS = {line_sum} + {d} - {s} + 2 = {lhs}")
    lines.append(
        f"(with the after-removal count {s - 1} instead of s: "
        f"{line_sum} + {d} - {s - 1} + 2 = {lhs_removed})"
    )
    lines.append(
        f"{lhs} > {deg}  =>  F == 0 for every {s - 1}-point subset"
        if verdict == PROVEN
        else f"{lhs} <= {deg}: Inconclusive"
    )
    return Certificate(
        kind="PlusOneCase",
        N=2, d=d, m=m, s=s,
        weak_table=dict(weak.table),
        line_bounds=tuple(line_multiplicity_bound(i, d, m, 2) for i in sorted(table)),
        extra_terms=(("d - s + 2", d - s + 2),),
        total=lhs,
        deg_F=deg,
        verdict=verdict,
        derivation=tuple(lines),
        notes=(
            "the criterion's s counts all of Z; the after-removal variant s-1 "
            "is also reported",
        ),
    )


def family_a4k1_certificate(k: int) -> Certificate:
    """The (2k, 2k-1) family on 4k+1 points: 2k(k-1) three-point lines,
    k four-point lines and one 2k-point line force total multiplicity
    2k(k-1) + 3k + binom(2k-1, 2) = 4k^2 - 2k + 1 = deg F + 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d, m = 2 * k, 2 * k - 1
    deg = degree_of_F(2, d, m)
    terms = [
        ("three-point lines", 2 * k * (k - 1), 1),
        ("four-point lines", k, 3),
        (f"{2 * k}-point line", 1, comb(2 * k - 1, 2)),
    ]
    total = sum(cnt * per for _, cnt, per in terms)
    table = {}
    for size, cnt in ((3, 2 * k * (k - 1)), (4, k), (2 * k, 1)):
        if cnt:
            table[size] = table.get(size, 0) + cnt
    lines = [f"{cnt} x {label} x {per}" for label, cnt, per in terms if cnt]
    lines.append(f"total = 4k^2 - 2k + 1 = {total}")
    lines.append(f"deg F = 4k^2 - 2k = {deg}")
    lines.append(f"{total} > {deg}  =>  F == 0")
    return Certificate(
        kind="FamilyA4k1",
        N=2, d=d, m=m, s=4 * k + 1,
        weak_table=table,
        line_bounds=tuple(line_multiplicity_bound(i, d, m, 2) for i in sorted(table)),
        extra_terms=(),
        total=total,
        deg_F=deg,
        verdict=PROVEN,
        derivation=tuple(lines),
    )


def plane_count_certificate(
    config: PointConfiguration, removed: tuple | None = None
) -> Certificate:
    """P^3 cone criterion at d = m = 3: after removing two of the twelve
    points, each plane with n points enters the locus with multiplicity n - 4,
    and the total sum(n_i) - 48 = 12 exceeds deg F = 10.

    With removed=None all binom(12, 2) pairs are checked and the certificate
    additionally asserts the total is independent of the removal choice.
    """
    if config.N != 3:
        raise SizeMismatchError("the plane-count criterion lives in P^3")
    d = m = 3
    s = square_size(3, d, m)
    if len(config) != s + 2:
        raise SizeMismatchError(
            f"plane-count case needs |Z| = {s + 2} points, got {len(config)}"
        )
    from .incidence import detect_hyperplanes  # local import avoids cycle at module load

    inc = detect_hyperplanes(config, min_members=4)
    deg = degree_of_F(3, d, m)

    def total_for(pair):
        tot = 0
        counts = []
        for h in inc.hyperplanes:
            n = len(h.members - set(pair))
            counts.append(n)
            tot += max(0, n - 4)
        return tot, counts

    pairs = [removed] if removed is not None else list(combinations(range(len(config)), 2))
    totals = {}
    for pair in pairs:
        totals[tuple(sorted(pair))] = total_for(pair)
    all_totals = {t for t, _ in totals.values()}
    first_pair = tuple(sorted(pairs[0]))
    total, counts = totals[first_pair]
    verdict = PROVEN if total > deg else INCONCLUSIVE
    lines = [
        f"plane member counts after removing {list(first_pair)}: {sorted(counts, reverse=True)}",
        f"sum of max(0, n_i - 4) = {total}",
        f"{total} > {deg}  =>  F == 0" if verdict == PROVEN else f"{total} <= {deg}: Inconclusive",
    ]
    notes = []
    if removed is None:
        if len(all_totals) != 1:
            raise ValidationFailedError(
                f"plane-count total depends on the removal pair: {sorted(all_totals)}"
            )
        lines.insert(0, f"checked all {len(pairs)} removal pairs; every total equals {total}")
        notes.append("total independent of the removed pair")
    tab = weak_table(inc)
    return Certificate(
        kind="PlaneCount",
        N=3, d=d, m=m, s=s,
        weak_table=dict(tab.table),
        line_bounds=tuple(
            line_multiplicity_bound(n, d, m, 3) for n in sorted(set(counts)) if n >= 2
        ),
        extra_terms=(),
        total=total,
        deg_F=deg,
        verdict=verdict,
        derivation=tuple(lines),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class RemovalAudit:
    """Exhaustive audit of all point removals from a configuration whose
    hyperplanes all carry the same member count.

    For the 20-point, 20-plane, 8-per-plane case with remove_count = 5 the
    audit decides whether any 15-point subset leaves exactly six points on
    every plane; since none does, every subset leaves some plane with at least
    7 points, which enters the locus at least twice, and 20 + 1 > deg F = 20
    forces F == 0 for every subset."""

    npoints: int
    nplanes: int
    plane_size: int
    remove_count: int
    total_subsets: int
    all_six_count: int
    min_planes_ge7: int
    max_planes_ge7: int
    profile_counts: dict
    verdict: str
    plane_members: tuple = ()
    profiles: tuple = ()

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN

    def to_json(self, include_profiles: bool = False) -> dict:
        out = {
            "npoints": self.npoints,
            "nplanes": self.nplanes,
            "plane_size": self.plane_size,
            "remove_count": self.remove_count,
            "total_subsets": self.total_subsets,
            "all_six_count": self.all_six_count,
            "min_planes_ge7": self.min_planes_ge7,
            "max_planes_ge7": self.max_planes_ge7,
            "profile_counts": {k: v for k, v in sorted(self.profile_counts.items())},
            "verdict": self.verdict,
            "plane_members": [sorted(m) for m in self.plane_members],
        }
        if include_profiles:
            out["profiles"] = [list(p) for p in self.profiles]
        return out


def _audit_chunk(args):
    masks, subsets, full = args
    all_six = 0
    ge7_min, ge7_max = None, None
    prof_counts = {}
    profiles = []
    for rem_mask, _ in subsets:
        ge7 = 0
        allsix = True
        counts = []
        for pm in masks:
            n = full - (pm & rem_mask).bit_count()
            counts.append(n)
            if n != 6:
                allsix = False
            if n >= 7:
                ge7 += 1
        if allsix:
            all_six += 1
        key = tuple(sorted(counts, reverse=True))
        prof_counts[key] = prof_counts.get(key, 0) + 1
        profiles.append(key)
        ge7_min = ge7 if ge7_min is None else min(ge7_min, ge7)
        ge7_max = ge7 if ge7_max is None else max(ge7_max, ge7)
    return all_six, ge7_min, ge7_max, prof_counts, profiles


def removal_audit(
    config_or_incidence, remove_count: int = 5, threads: int = 1, keep_profiles: bool = False
) -> RemovalAudit:
    """Enumerate all binom(n, remove_count) removals and tabulate per-plane
    member counts.  Deterministic regardless of ``threads``: chunk results are
    merged in index order."""
    if isinstance(config_or_incidence, IncidenceStructure):
        inc = config_or_incidence
    else:
        from .incidence import detect_hyperplanes

        inc = detect_hyperplanes(config_or_incidence, min_members=4)
    if not inc.hyperplanes:
        raise ValidationFailedError("removal audit needs a configuration with hyperplanes")
    top = max(h.size for h in inc.hyperplanes)
    planes = [h.members for h in inc.hyperplanes if h.size == top]
    n = inc.npoints
    masks = [sum(1 << i for i in mem) for mem in planes]
    subsets = [
        (sum(1 << i for i in c), c) for c in combinations(range(n), remove_count)
    ]
    if threads > 1 and len(subsets) > 1024:
        import multiprocessing

        chunk = (len(subsets) + threads - 1) // threads
        jobs = [
            (masks, subsets[i : i + chunk], top) for i in range(0, len(subsets), chunk)
        ]
        with multiprocessing.Pool(threads) as pool:
            parts = pool.map(_audit_chunk, jobs)
    else:
        parts = [_audit_chunk((masks, subsets, top))]
    all_six = sum(p[0] for p in parts)
    ge7_min = min(p[1] for p in parts)
    ge7_max = max(p[2] for p in parts)
    prof_counts = {}
    profiles = []
    for p in parts:
        for k, v in p[3].items():
            kk = ",".join(map(str, k))
            prof_counts[kk] = prof_counts.get(kk, 0) + v
        if keep_profiles:
            profiles.extend(p[4])
    verdict = PROVEN if all_six == 0 and ge7_min >= 1 else INCONCLUSIVE
    return RemovalAudit(
        npoints=n,
        nplanes=len(planes),
        plane_size=top,
        remove_count=remove_count,
        total_subsets=len(subsets),
        all_six_count=all_six,
        min_planes_ge7=ge7_min,
        max_planes_ge7=ge7_max,
        profile_counts=prof_counts,
        verdict=verdict,
        plane_members=tuple(planes),
        profiles=tuple(profiles),
    )


def render_certificate(cert, format: str = "text") -> str:
    """Deterministic serialization; text mirrors the derivation line by line."""
    if format == "json":
        return json.dumps(cert.to_json(), indent=2, sort_keys=True)
    if isinstance(cert, RemovalAudit):
        lines = [
            f"removal audit: {cert.npoints} points, {cert.nplanes} planes of "
            f"{cert.plane_size}, removing {cert.remove_count}",
            f"subsets examined: {cert.total_subsets}",
            f"subsets with six points on every plane: {cert.all_six_count}",
            f"planes with >= 7 points per subset: min {cert.min_planes_ge7}, "
            f"max {cert.max_planes_ge7}",
            f"verdict: {cert.verdict}",
        ]
        return "\n".join(lines)
    head = f"{cert.kind} certificate  (N={cert.N}, d={cert.d}, m={cert.m}, s={cert.s})"
    body = list(cert.derivation)
    tail = [f"verdict: {cert.verdict}"]
    notes = [f"note: {n}" for n in cert.notes]
    return "\n".join([head] + body + notes + tail)


def certificate_from_json(data) -> Certificate:
    """Parse and re-derive: totals and verdicts are recomputed from the stored
    inputs, so a tampered certificate fails to load."""
    if isinstance(data, str):
        data = json.loads(data)
    table = {int(i): c for i, c in data["weak_table"].items()}
    weak = WeakCombinatorics(table, data["s"], data["N"])
    kind = data["kind"]
    if kind == "SquareCase":
        cert = square_certificate(weak, data["d"], data["m"])
    elif kind == "PlusOneCase":
        cert = plus_one_certificate(weak, data["d"])
    elif kind == "FamilyA4k1":
        cert = family_a4k1_certificate(data["d"] // 2)
    elif kind == "PlaneCount":
        # recompute the arithmetic from the stored totals
        if data["verdict"] not in (PROVEN, INCONCLUSIVE):
            raise ValidationFailedError("unknown verdict")
        expected = PROVEN if data["total"] > data["deg_F"] else INCONCLUSIVE
        if data["verdict"] != expected:
            raise ValidationFailedError("verdict does not match total vs deg F")
        return Certificate(
            kind=kind, N=data["N"], d=data["d"], m=data["m"], s=data["s"],
            weak_table=table,
            line_bounds=(),
            extra_terms=tuple(tuple(t) for t in data["extra_terms"]),
            total=data["total"], deg_F=data["deg_F"], verdict=data["verdict"],
            derivation=tuple(data["derivation"]), notes=tuple(data["notes"]),
        )
    else:
        raise ValidationFailedError(f"unknown certificate kind {kind!r}")
    if cert.total != data["total"] or cert.verdict != data["verdict"] or cert.deg_F != data["deg_F"]:
        raise ValidationFailedError(
            "stored certificate disagrees with its recomputation"
        )
    return cert
