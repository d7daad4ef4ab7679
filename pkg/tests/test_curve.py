"""Curve group law, point counting, enumeration, Frobenius action."""

import random

import pytest

from ellcode.curve import Curve, Divisor, infinity
from ellcode.errors import GuardExceeded
from ellcode.fields import make_field

F5 = make_field(5, 1)
E0 = Curve(0, 1, F5)  # y^2 = x^3 + 1, supersingular, t = 0


def test_construction_and_trace():
    assert E0.q == 5
    assert E0.t == 0
    assert E0.count_points(1) == 6


def test_singular_rejected():
    with pytest.raises(ValueError):
        Curve(0, 0, F5)


def test_small_characteristic_rejected():
    with pytest.raises(ValueError):
        Curve(0, 1, make_field(3, 1))


def test_base_points_exact_list():
    pts = E0.points(F5)
    affine = {(E0.base.to_int(P.x), E0.base.to_int(P.y)) for P in pts if not P.inf}
    assert affine == {(0, 1), (0, 4), (2, 2), (2, 3), (4, 0)}
    assert pts[-1].inf


def test_group_law_examples():
    P01, P04 = E0.point(0, 1), E0.point(0, 4)
    P22 = E0.point(2, 2)
    assert E0.add(P01, P04).inf  # inverse points share x
    assert E0.add(P01, P22) == E0.point(2, 3)
    assert E0.smul(2, P22) == E0.point(0, 4)
    assert E0.smul(3, P22) == E0.point(4, 0)
    assert E0.smul(6, P22).inf


def test_group_axioms_sampled():
    rng = random.Random(0)
    K2 = E0.level(2)
    pts = E0.points(K2)
    for _ in range(10 ** 4):
        P, Q, R = (pts[rng.randrange(len(pts))] for _ in range(3))
        assert E0.add(P, Q) == E0.add(Q, P)
        assert E0.add(E0.add(P, Q), R) == E0.add(P, E0.add(Q, R))
        assert E0.add(P, E0.neg(P)).inf
        assert E0.add(P, infinity(K2)) == P


def test_counts_match_enumeration():
    for m in (1, 2, 3, 4, 5, 6):
        K = E0.level(m)
        assert len(E0.points(K)) == E0.count_points(m)


def test_count_m3_is_1_plus_q_cubed():
    assert E0.count_points(3) == 1 + 5 ** 3  # cyclic of order 126


def test_hasse_bound():
    for m in range(1, 13):
        s = E0.q ** m + 1 - E0.count_points(m)
        assert s * s <= 4 * E0.q ** m


def test_enumeration_guard():
    with pytest.raises(GuardExceeded):
        E0.points(E0.level(12))


def test_frobenius_fixes_rational_points():
    for P in E0.points(F5):
        assert E0.frobenius(P) == P


def test_frobenius_conjugates_extension_points():
    K2 = E0.level(2)
    moved = 0
    for P in E0.points(K2):
        Q = E0.frobenius(P)
        assert E0.contains(Q)
        assert E0.frobenius(Q) == P  # order 2 on E(k_2)
        if Q != P:
            moved += 1
    assert moved == 36 - 6  # exactly the points outside E(F_5)


def test_frobenius_is_group_homomorphism():
    rng = random.Random(1)
    K3 = E0.level(3)
    pts = E0.points(K3)
    for _ in range(2000):
        P, Q = pts[rng.randrange(len(pts))], pts[rng.randrange(len(pts))]
        assert E0.frobenius(E0.add(P, Q)) == E0.add(E0.frobenius(P), E0.frobenius(Q))


def test_characteristic_polynomial_of_frobenius():
    # F^2 - [t]F + [q] = 0 on E(k_m)
    rng = random.Random(2)
    for m in (2, 3):
        K = E0.level(m)
        pts = E0.points(K)
        for _ in range(500):
            P = pts[rng.randrange(len(pts))]
            lhs = E0.frobenius(P, 2)
            lhs = E0.sub(lhs, E0.smul(E0.t, E0.frobenius(P)))
            lhs = E0.add(lhs, E0.smul(E0.q, P))
            assert lhs.inf


def test_random_point_deterministic_and_on_curve():
    K = E0.level(2)
    a = E0.random_point(K, random.Random(7))
    b = E0.random_point(K, random.Random(7))
    assert a == b and E0.contains(a)
    rng = random.Random(8)
    for _ in range(10 ** 3):
        assert E0.contains(E0.random_point(K, rng))


def test_group_sum():
    P01, P04, P22 = E0.point(0, 1), E0.point(0, 4), E0.point(2, 2)
    assert E0.group_sum(Divisor.from_points([P01, P04], F5)).inf
    assert E0.group_sum(Divisor({P22: 2}, F5)) == E0.point(0, 4)
    assert E0.group_sum(Divisor({}, F5)).inf


def test_divisor_basics():
    P22 = E0.point(2, 2)
    D = Divisor({P22: 2, E0.point(0, 1): 1}, F5)
    assert D.degree == 3
    assert D.multiplicity(P22) == 2
    with pytest.raises(ValueError):
        Divisor({P22: -1}, F5)
    K2 = E0.level(2)
    with pytest.raises(ValueError):
        Divisor({P22: 1}, K2)


def test_embed_point_preserves_curve_membership_and_law():
    K2 = E0.level(2)
    P, Q = E0.point(2, 2), E0.point(0, 1)
    Pe, Qe = E0.embed_point(P, K2), E0.embed_point(Q, K2)
    assert E0.contains(Pe) and E0.contains(Qe)
    assert E0.embed_point(E0.add(P, Q), K2) == E0.add(Pe, Qe)


def test_mixed_level_addition_rejected():
    K2 = E0.level(2)
    with pytest.raises(ValueError):
        E0.add(E0.point(2, 2), E0.embed_point(E0.point(0, 1), K2))
