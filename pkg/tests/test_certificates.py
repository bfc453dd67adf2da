import json
from itertools import combinations
from math import comb

import pytest

from fatlocus import atlas
from fatlocus.certificates import (
    INCONCLUSIVE,
    PROVEN,
    certificate_from_json,
    family_a4k1_certificate,
    fixed_point_bound,
    line_multiplicity_bound,
    plane_count_certificate,
    plus_one_certificate,
    removal_audit,
    render_certificate,
    square_certificate,
)
from fatlocus.errors import SizeMismatchError, ValidationFailedError
from fatlocus.incidence import WeakCombinatorics


def test_line_bound_planar_values():
    assert line_multiplicity_bound(4, 4, 3, 2).total == 3
    assert line_multiplicity_bound(7, 7, 3, 2).total == 3
    assert line_multiplicity_bound(3, 7, 3, 2).total == 0  # n + m <= d + 1
    for k in (2, 3, 5):
        assert line_multiplicity_bound(2 * k, 2 * k, 2 * k - 1, 2).total == comb(
            2 * k - 1, 2
        )


def test_line_bound_closed_form_in_the_plane():
    for n in range(2, 9):
        for d in range(1, 10):
            for m in range(1, d + 1):
                if n > d + 1:
                    continue  # the per-level window starts above j = 1
                got = line_multiplicity_bound(n, d, m, 2).total
                want = comb(n + m - d, 2) if n + m - d >= 2 else 0
                assert got == want, (n, d, m)


def test_line_bound_space_values():
    assert line_multiplicity_bound(6, 3, 3, 3).total == 2
    assert line_multiplicity_bound(5, 3, 3, 3).total == 1
    assert line_multiplicity_bound(4, 3, 3, 3).total == 0
    assert line_multiplicity_bound(6, 3, 3, 3).generalized
    assert not line_multiplicity_bound(4, 4, 3, 2).generalized


def test_fixed_point_bound_values():
    assert fixed_point_bound(3, (7, 7, 7), 3, 7, True) == 4
    assert fixed_point_bound(3, (7, 7, 7), 5, 8, True) == 7
    assert fixed_point_bound(3, (7, 7, 7), 4, 8, True) == 4
    with pytest.raises(ValueError):
        fixed_point_bound(2, (7, 7, 7), 3, 7, True)


def test_fixed_point_matches_line_bound_for_single_line():
    # summing the k = 1 bound over its valid levels reproduces the line bound
    for n in range(3, 8):
        for d in range(2, 9):
            for m in range(1, d + 1):
                if n > d + 1:
                    continue
                total = 0
                for j in range(max(1, d - n + 2), m + 1):
                    total += max(0, fixed_point_bound(1, (n,), j, d, False))
                assert total == line_multiplicity_bound(n, d, m, 2).total


def test_square_certificates_from_the_catalog_tables():
    cases = [
        ({3: 10, 4: 3, 5: 2}, 13, 6, 5, 31, 30, PROVEN),
        ({3: 10, 5: 6}, 15, 7, 6, 46, 42, PROVEN),
        ({3: 4, 4: 3}, 9, 4, 3, 13, 12, PROVEN),
        ({3: 42, 4: 18, 5: 5, 7: 2, 8: 1}, 29, 14, 13, 177, 182, INCONCLUSIVE),
        ({}, 13, 6, 5, 0, 30, INCONCLUSIVE),
    ]
    for table, s, d, m, total, deg, verdict in cases:
        cert = square_certificate(WeakCombinatorics(table, s, 2), d, m)
        assert (cert.total, cert.deg_F, cert.verdict) == (total, deg, verdict)


def test_square_certificate_size_mismatch():
    with pytest.raises(SizeMismatchError):
        square_certificate(WeakCombinatorics({3: 1}, 12, 2), 6, 5)


def test_square_total_depends_only_on_the_table():
    # same table, different origins: identical certificate numbers
    t = {3: 4, 4: 3}
    a = square_certificate(WeakCombinatorics(t, 9, 2), 4, 3)
    b = square_certificate(WeakCombinatorics(dict(t), 9, 2), 4, 3)
    assert a.total == b.total == 13 and a.derivation == b.derivation


def test_plus_one_certificates():
    c = plus_one_certificate(WeakCombinatorics({3: 44, 4: 17, 5: 6, 6: 1, 7: 1, 8: 2}, 30, 2), 14)
    assert c.total == 184 and c.deg_F == 182 and c.proven
    assert any("198" in line for line in c.derivation)
    assert any("185" in line for line in c.derivation)  # the s-1 variant
    c = plus_one_certificate(WeakCombinatorics({3: 8, 4: 2, 5: 4}, 14, 2), 6)
    assert c.total == 32 and c.deg_F == 30 and c.proven
    # no heavy lines: LHS = d - s + 2 is far below
    c = plus_one_certificate(WeakCombinatorics({}, 14, 2), 6)
    assert c.verdict == INCONCLUSIVE
    with pytest.raises(SizeMismatchError):
        plus_one_certificate(WeakCombinatorics({}, 15, 2), 6)


def test_family_certificate_identity():
    for k in range(1, 51):
        c = family_a4k1_certificate(k)
        assert c.total - c.deg_F == 1
        assert c.proven
    assert family_a4k1_certificate(2).total == 13
    assert family_a4k1_certificate(3).total == 31
    assert family_a4k1_certificate(10).total == 381
    with pytest.raises(ValueError):
        family_a4k1_certificate(0)


def test_family_matches_square_certificate_on_generated_duals():
    from fatlocus.incidence import detect_hyperplanes, weak_table

    for k in (2, 3):
        cfg = atlas.gen_a4k1(k).configuration()
        wt = weak_table(detect_hyperplanes(cfg))
        sq = square_certificate(wt, 2 * k, 2 * k - 1)
        fam = family_a4k1_certificate(k)
        assert sq.total == fam.total and sq.proven


def test_plane_count_certificate_all_pairs():
    cfg = atlas.gen_d4().configuration()
    cert = plane_count_certificate(cfg)  # audits all 66 pairs
    assert cert.total == 12 and cert.deg_F == 10 and cert.proven
    one = plane_count_certificate(cfg, removed=(4, 9))
    assert one.total == 12 and one.proven
    with pytest.raises(SizeMismatchError):
        plane_count_certificate(cfg.without([0]), removed=(0, 1))


def test_plane_count_totals_for_every_pair_individually():
    cfg = atlas.gen_d4().configuration()
    for pair in combinations(range(12), 2):
        assert plane_count_certificate(cfg, removed=pair).total == 12


def test_removal_audit_small_counts():
    cfg = atlas.gen_penrose20().configuration()
    audit0 = removal_audit(cfg, remove_count=0)
    assert audit0.total_subsets == 1
    assert list(audit0.profile_counts) == [",".join(["8"] * 20)]
    audit1 = removal_audit(cfg, remove_count=1)
    assert audit1.total_subsets == 20
    # each removed point kills one on each of its 8 planes
    assert set(audit1.profile_counts) == {",".join(["8"] * 12 + ["7"] * 8)}


def test_removal_audit_double_counting():
    cfg = atlas.gen_penrose20().configuration()
    audit = removal_audit(cfg, remove_count=5, keep_profiles=True)
    assert audit.total_subsets == comb(20, 5) == 15504
    for prof in audit.profiles[:200]:
        assert sum(prof) == 160 - 5 * 8
    assert audit.all_six_count == 0
    assert audit.min_planes_ge7 >= 1
    assert audit.proven


def test_removal_audit_threads_deterministic():
    cfg = atlas.gen_penrose20().configuration()
    a = removal_audit(cfg, remove_count=4, threads=1)
    b = removal_audit(cfg, remove_count=4, threads=3)
    assert a.profile_counts == b.profile_counts
    assert (a.all_six_count, a.min_planes_ge7, a.max_planes_ge7) == (
        b.all_six_count, b.min_planes_ge7, b.max_planes_ge7,
    )


def test_render_and_parse_round_trip():
    c = square_certificate(WeakCombinatorics({3: 10, 4: 3, 5: 2}, 13, 2), 6, 5)
    text = render_certificate(c)
    assert "31 > 30" in text and "F == 0" in text and "Proven" in text
    blob = render_certificate(c, "json")
    back = certificate_from_json(blob)
    assert back.total == c.total and back.verdict == c.verdict

    inconclusive = square_certificate(WeakCombinatorics({}, 13, 2), 6, 5)
    text = render_certificate(inconclusive)
    assert "Inconclusive" in text and "Proven" not in text


def test_tampered_certificate_fails_to_parse():
    c = square_certificate(WeakCombinatorics({3: 10, 4: 3, 5: 2}, 13, 2), 6, 5)
    data = json.loads(render_certificate(c, "json"))
    data["total"] = 99
    with pytest.raises(ValidationFailedError):
        certificate_from_json(json.dumps(data))
    data = json.loads(render_certificate(c, "json"))
    data["verdict"] = INCONCLUSIVE
    with pytest.raises(ValidationFailedError):
        certificate_from_json(json.dumps(data))


def test_certificates_never_claim_proof_below_the_degree():
    for table, s, d, m in [({3: 4}, 9, 4, 3), ({3: 2, 4: 1}, 13, 6, 5)]:
        cert = square_certificate(WeakCombinatorics(table, s, 2), d, m)
        assert cert.total <= cert.deg_F
        assert cert.verdict == INCONCLUSIVE


def test_plane_count_on_generic_space_points_is_inconclusive():
    from fatlocus.fields import CounterRng, PrimeField
    from fatlocus.projective import PointConfiguration

    field = PrimeField()
    rng = CounterRng(606)
    pts = [tuple(rng.split(i).draw_below(field.p, j) for j in range(4)) for i in range(12)]
    cfg = PointConfiguration.from_coords(3, field, pts)
    cert = plane_count_certificate(cfg, removed=(0, 1))
    assert cert.total == 0
    assert cert.verdict == INCONCLUSIVE
