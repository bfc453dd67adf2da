import pytest

from fatlocus import atlas, linalg
from fatlocus.errors import BudgetExceededError, NotSquareError, ZeroPolynomialError
from fatlocus.fields import DEFAULT_PRIME, CounterRng, PrimeField
from fatlocus.interpolation import h_total, square_matrix, square_size
from fatlocus.locus import symbolic_locus
from fatlocus.polynomials import HomogeneousPoly
from fatlocus.projective import PointConfiguration

F = PrimeField()
RNG = CounterRng(777)


def _random_config(N, s, stream):
    pts = [
        tuple(RNG.split(stream, i).draw_below(F.p, j) for j in range(N + 1))
        for i in range(s)
    ]
    return PointConfiguration.from_coords(N, F, pts, f"random-{stream}")


def test_symbolic_locus_equals_determinant_at_fifty_points():
    checked = 0
    for (N, d, m, stream) in [(2, 3, 2, "sl1"), (2, 4, 3, "sl2"), (3, 2, 2, "sl3")]:
        cfg = _random_config(N, d and square_size(N, d, m), stream)
        poly = symbolic_locus(cfg, d, m)
        assert not poly.is_zero
        for t in range(17):
            B = (1,) + RNG.split("slB", stream).affine_point(F, N, t)
            assert poly.evaluate(B) == linalg.det_mod(
                square_matrix(cfg, d, m, B), F.p
            )
            checked += 1
    assert checked >= 50


def test_locus_of_seven_general_points():
    cfg = atlas.gen_dk_points("seven").configuration()
    poly = symbolic_locus(cfg, 3, 2)
    assert not poly.is_zero
    assert poly.degree == 6  # d(d-1) with d = 3
    for q in cfg.points:
        assert poly.multiplicity_at(q) == 2


def test_locus_of_nine_general_points():
    cfg = atlas.gen_dk_points("nine").configuration()
    poly = symbolic_locus(cfg, 4, 3)
    assert not poly.is_zero
    assert poly.degree == 12  # d(d-1) with d = 4
    for q in cfg.points:
        assert poly.multiplicity_at(q) == 3


def test_locus_vanishes_identically_on_the_nine_point_dual():
    cfg = atlas.gen_a4k1(2).configuration()
    poly = symbolic_locus(cfg, 4, 3)
    assert poly.is_zero


def test_multiplicity_generic_point_is_zero():
    cfg = atlas.gen_dk_points("seven").configuration()
    poly = symbolic_locus(cfg, 3, 2)
    assert poly.multiplicity_at((1, 1000003, 998877)) == 0


def test_multiplicity_of_zero_polynomial_raises():
    z = HomogeneousPoly(2, 6, {}, F)
    with pytest.raises(ZeroPolynomialError):
        z.multiplicity_at((1, 2, 3))


def test_budget_guard():
    cfg = _random_config(2, 9, "budget")
    with pytest.raises(BudgetExceededError):
        symbolic_locus(cfg, 4, 3, budget=10)


def test_square_precondition():
    cfg = _random_config(2, 8, "notsq")
    with pytest.raises(NotSquareError):
        symbolic_locus(cfg, 4, 3)


def test_multiplicity_bounds_h_total():
    # the central inequality: mult_B(F) >= h_B wherever F != 0
    for (d, m, stream) in [(3, 2, "mh1"), (4, 3, "mh2"), (3, 3, "mh3")]:
        s = square_size(2, d, m)
        cfg = _random_config(2, s, stream)
        poly = symbolic_locus(cfg, d, m)
        if poly.is_zero:
            continue
        sub = RNG.split("mhB", stream)
        points = [(1,) + sub.affine_point(F, 2, t) for t in range(4)]
        points += list(cfg.points)[:4]
        fld = cfg.field
        a, b = cfg.points[0], cfg.points[1]
        points += [
            tuple(fld.add(x, fld.mul(t, y)) for x, y in zip(a, b))
            for t in (2, 3)
        ]  # structured: on a line through two configuration points
        for B in points:
            assert poly.multiplicity_at(B) >= h_total(cfg, d, m, B)


def test_locus_json_round_trip():
    cfg = atlas.gen_dk_points("seven").configuration()
    poly = symbolic_locus(cfg, 3, 2)
    data = poly.to_json()
    back = HomogeneousPoly.from_json(data, cfg.field)
    assert back.terms == poly.terms and back.degree == poly.degree
    assert all(isinstance(t["coeff"], str) for t in data["terms"])


def test_locus_over_rationals_and_primes_agree():
    # reduce the rational locus mod p and compare with the prime-field locus
    rec = atlas.gen_dk_points("seven")
    cq = rec.configuration()
    cp = rec.configuration(prime=DEFAULT_PRIME)
    pq = symbolic_locus(cq, 3, 2)
    pp = symbolic_locus(cp, 3, 2)
    fld = cp.field
    assert {e: fld.coerce(c) for e, c in pq.terms.items()} == pp.terms


def test_symbolic_locus_matches_sympy_determinant():
    # independent oracle: expand det M over Q with sympy and compare term maps
    import sympy

    from fatlocus.fields import RationalField
    from fatlocus.interpolation import point_rows
    from fatlocus.monomials import derivative_indices, differentiate_monomial, monomial_basis

    field = RationalField()
    pts = [(1, 1, 2), (1, 2, -1), (1, -1, 1), (2, 1, 1), (1, 3, 1), (1, 0, 1), (0, 1, 3)]
    cfg = PointConfiguration.from_coords(2, field, pts)
    d, m = 3, 2
    poly = symbolic_locus(cfg, d, m)

    a = sympy.symbols("a0 a1 a2")
    basis = monomial_basis(2, d)
    rows = [[sympy.Rational(x) for x in r] for r in point_rows(cfg, d)]
    for idx in derivative_indices(3, m - 1):
        row = []
        for e in basis.entries:
            coeff, rest = differentiate_monomial(e, idx)
            row.append(
                0 if coeff == 0 else coeff * a[0] ** rest[0] * a[1] ** rest[1] * a[2] ** rest[2]
            )
        rows.append(row)
    det = sympy.expand(sympy.Matrix(rows).det())
    expected = {}
    for term, coeff in det.as_poly(*a).terms():
        expected[tuple(term)] = sympy.Rational(coeff)
    got = {e: sympy.Rational(c) for e, c in poly.terms.items()}
    assert got == expected
