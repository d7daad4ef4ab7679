"""Trace-map kernels: orders, exactness, direct sums, support sets."""

import random

import pytest

from ellcode.curve import Curve, infinity
from ellcode.fields import make_field
from ellcode.kernels import (
    kernel_orders_coprime_to_char,
    product_degree,
    product_kernel,
    product_trace_map,
    support_set,
    trace_kernel,
    trace_map,
)

F5 = make_field(5, 1)
E0 = Curve(0, 1, F5)
K6 = E0.level(6)


def test_trace_map_identity():
    P = E0.point(2, 2)
    assert trace_map(E0, P, 1) == P


def test_trace_map_is_multiplication_on_rational_points():
    for P in E0.points(F5):
        for m in (2, 3, 5, 6):
            assert trace_map(E0, P, m) == E0.smul(m, P)
    assert trace_map(E0, E0.point(2, 2), 3) == E0.point(4, 0)


def test_kernel_orders():
    assert trace_kernel(E0, 1, K6).order == 1
    G2 = trace_kernel(E0, 2, K6)
    G3 = trace_kernel(E0, 3, K6)
    assert G2.order == 6 == E0.count_points(2) // E0.count_points(1)
    assert G3.order == 21 == E0.count_points(3) // E0.count_points(1)
    # (-q)_3 = ((-5)^3 - 1)/(-5 - 1)
    assert G3.order == ((-5) ** 3 - 1) // (-5 - 1)


def test_kernels_are_subgroups():
    for r in (2, 3):
        G = trace_kernel(E0, r, K6)
        pts = set(G.points)
        assert infinity(K6) in pts
        for P in pts:
            assert E0.neg(P) in pts
            for Q in pts:
                assert E0.add(P, Q) in pts


def test_trace_exact_sequence_fibers():
    # the trace maps E(k_r) onto E(k) with fibers of kernel size
    for r in (2, 3):
        kr = E0.level(r)
        fibers = {}
        for P in E0.points(kr):
            img = trace_map(E0, P, r)
            key = E0.embed_point(img, kr) if img.level != kr else img
            fibers.setdefault(key.key(), 0)
            fibers[key.key()] += 1
        base_count = E0.count_points(1)
        kernel_size = E0.count_points(r) // base_count
        assert len(fibers) == base_count
        assert set(fibers.values()) == {kernel_size}


def test_trace_factorization():
    # trace over mn equals trace-with-step composed with the plain trace
    rng = random.Random(0)
    pts = E0.points(K6)
    for _ in range(200):
        P = pts[rng.randrange(len(pts))]
        for m, n in ((2, 3), (3, 2), (1, 6)):
            lhs = trace_map(E0, P, m * n)
            rhs = trace_map(E0, trace_map(E0, P, m), n, step=m)
            assert lhs == rhs


def test_prime_kernels_meet_trivially():
    G2 = set(trace_kernel(E0, 2, K6).points)
    G3 = set(trace_kernel(E0, 3, K6).points)
    inter = G2 & G3
    assert inter == {infinity(K6)}


def test_product_kernel_order_and_membership():
    ker = product_kernel(E0, 6, K6)
    assert ker.order == 126 == 6 * 21
    rng = random.Random(1)
    sample = rng.sample(ker.points, 30)
    for P in sample:
        assert product_trace_map(E0, P, 6).inf


def test_product_kernel_equals_filter():
    # oracle: filter E(k_6) by the composed trace
    filtered = {P for P in E0.points(K6) if product_trace_map(E0, P, 6).inf}
    assert filtered == set(product_kernel(E0, 6, K6).points)


def test_product_map_reaches_all_lower_level_points():
    # every point of E(k_3) has an index-2 product-map preimage in E(k_6)
    K3 = E0.level(3)
    targets = {E0.embed_point(P, K6) for P in E0.points(K3)}
    image = {product_trace_map(E0, P, 2) for P in E0.points(K6)}
    assert targets <= image


def test_product_map_sends_support_to_support():
    X6 = support_set(E0, 6, K6)
    X3 = {E0.embed_point(P, K6) for P in support_set(E0, 3, E0.level(3)).points}
    image = {product_trace_map(E0, P, 2) for P in X6.points}
    assert image == X3


def test_support_sets():
    X6 = support_set(E0, 6, K6)
    assert len(X6.points) == 26 == 1 + (6 - 1) + (21 - 1)
    assert X6.divisor.degree == 26
    X2 = support_set(E0, 2, K6)
    assert X2.divisor.degree == 6
    assert set(X2.points) == set(trace_kernel(E0, 2, K6).points)


def test_square_free_required():
    with pytest.raises(ValueError):
        support_set(E0, 4, K6)
    with pytest.raises(ValueError):
        product_kernel(E0, 12, K6)


def test_coprimality_gate():
    assert kernel_orders_coprime_to_char(E0, 6)
    assert kernel_orders_coprime_to_char(E0, 2)
    # an ordinary curve over F_5 with 10 rational points has trace -4 and
    # an index-5 kernel of order 305 = 5 * 61
    found = None
    for na in range(5):
        for nb in range(5):
            try:
                E = Curve(na, nb, F5)
            except ValueError:
                continue
            if E.t == -4:
                found = E
                break
        if found:
            break
    assert found is not None
    assert found.count_points(5) // found.count_points(1) == 305
    assert not kernel_orders_coprime_to_char(found, 5)


def test_product_degree():
    assert product_degree(E0, 6) == 126
    assert product_degree(E0, 2) == 6
    assert product_degree(E0, 3) == 21
