import random
from math import comb

import pytest

from fatlocus.fields import PrimeField, RationalField
from fatlocus.monomials import (
    derivative_indices,
    derivative_indices_upto,
    differentiate_monomial,
    evaluate_row,
    monomial_basis,
)


def test_basis_n1_d2():
    b = monomial_basis(1, 2)
    assert b.entries == ((2, 0), (1, 1), (0, 2))  # a0^2, a0 a1, a1^2


def test_basis_n2_d3_dehomogenized_listing():
    b = monomial_basis(2, 3)
    assert b.size == 10
    assert b.entries[0] == (3, 0, 0)
    assert b.entries[-1] == (0, 0, 3)
    # chart a_0 = 1: 1, a1, a2, a1^2, a1 a2, a2^2, a1^3, a1^2 a2, a1 a2^2, a2^3
    assert b.affine_entries == (
        (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
    )


def test_basis_sizes():
    assert monomial_basis(3, 4).size == 35
    for N in range(1, 5):
        for d in range(0, 21):
            assert monomial_basis(N, d).size == comb(d + N, N)


def test_derivative_index_counts():
    for nvars in (2, 3, 4):
        for t in (0, 1, 2, 3, 5):
            assert len(derivative_indices(nvars, t)) == comb(t + nvars - 1, nvars - 1)
            assert len(derivative_indices_upto(nvars, t)) == comb(t + nvars, nvars)


def test_differentiate_examples():
    # d^2/da1^2 of a1^3 = 6 a1   (exponents over a1, a2)
    assert differentiate_monomial((3, 0), (2, 0)) == (6, (1, 0))
    # d/da1 d/da2 of a1 a2 = 1
    assert differentiate_monomial((1, 1), (1, 1)) == (1, (0, 0))
    # d/da1 of a2^2 = 0
    coeff, rest = differentiate_monomial((0, 2), (1, 0))
    assert coeff == 0 and rest is None


def test_differentiate_mixed_partials_commute():
    rnd = random.Random(5)
    for _ in range(300):
        e = tuple(rnd.randrange(0, 6) for _ in range(3))
        i1 = tuple(rnd.randrange(0, 3) for _ in range(3))
        i2 = tuple(rnd.randrange(0, 3) for _ in range(3))

        def seq(e, first, second):
            c1, r1 = differentiate_monomial(e, first)
            if c1 == 0:
                return 0, None
            c2, r2 = differentiate_monomial(r1, second)
            return c1 * c2, (r2 if c2 else None)

        assert seq(e, i1, i2) == seq(e, i2, i1)


def test_evaluate_row_plain_is_the_monomial_vector():
    f = PrimeField()
    b = monomial_basis(2, 2)
    P = (1, 2, 3)
    row = evaluate_row(b, (0, 0, 0), P, f)
    assert row == [1, 2, 3, 4, 6, 9]


def test_evaluate_row_matches_displayed_second_order_row():
    # dehomogenized basis (N=2, d=3), idx = d^2/da2^2, point (b1, b2):
    # row = (0,0,0,0,0,2,0,0,2 b1,6 b2)
    f = RationalField()
    b = monomial_basis(2, 3)
    b1, b2 = f.coerce(5), f.coerce(-7)
    row = evaluate_row(b, (0, 2), (b1, b2), f)
    assert row == [0, 0, 0, 0, 0, 2, 0, 0, 2 * b1, 6 * b2]


def test_evaluate_row_first_order_affine_row():
    # d/da1 at (b1, b2) for d=3: (0,1,0,2b1,b2,0,3b1^2,2b1b2,b2^2,0)
    f = RationalField()
    b = monomial_basis(2, 3)
    b1, b2 = f.coerce(2), f.coerce(3)
    row = evaluate_row(b, (1, 0), (b1, b2), f)
    assert row == [0, 1, 0, 2 * b1, b2, 0, 3 * b1**2, 2 * b1 * b2, b2**2, 0]


def test_overdifferentiation_gives_zero_row():
    f = PrimeField()
    b = monomial_basis(2, 3)
    row = evaluate_row(b, (4, 0), (1, 1), f)  # order 4 > d = 3
    assert all(v == 0 for v in row)


def test_evaluate_row_arity_errors():
    f = PrimeField()
    b = monomial_basis(2, 3)
    with pytest.raises(ValueError):
        evaluate_row(b, (0,), (1,), f)
    with pytest.raises(ValueError):
        evaluate_row(b, (0, 0), (1, 2, 3), f)


def test_first_order_taylor_identity_exact():
    # eval(P + h v) - eval(P) - h * sum_i v_i d_i eval(P) has every entry
    # divisible by h^2, checked exactly over the integers
    f = RationalField()
    rnd = random.Random(11)
    b = monomial_basis(2, 4)
    h = 30
    for _ in range(20):
        P = tuple(rnd.randrange(-9, 10) for _ in range(3))
        v = tuple(rnd.randrange(-9, 10) for _ in range(3))
        Ph = tuple(p + h * w for p, w in zip(P, v))
        base = evaluate_row(b, (0, 0, 0), P, f)
        bumped = evaluate_row(b, (0, 0, 0), Ph, f)
        grads = [evaluate_row(b, idx, P, f) for idx in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        for k in range(b.size):
            lin = sum(v[i] * grads[i][k] for i in range(3))
            rem = bumped[k] - base[k] - h * lin
            assert rem % (h * h) == 0
