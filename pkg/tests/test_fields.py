"""Field tower: construction, arithmetic axioms, sqrt, embeddings, Frobenius."""

import random

import pytest

from ellcode.fields import (
    FieldElement,
    FiniteField,
    embed_field,
    is_irreducible_poly,
    is_prime,
    make_field,
    smallest_irreducible,
)

F5 = make_field(5, 1)
F25 = make_field(5, 2)
F125 = make_field(5, 3)
F56 = make_field(5, 6)


def test_make_field_prime():
    assert F5.size == 5
    assert F5.modulus == (0, 1)  # x, the degree-1 convention


def test_make_field_rejects_composite_p():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(5, 0)


def test_smallest_quadratic_by_exhaustive_scan():
    # oracle: scan all 25 monic quadratics over F_5 with a naive root check
    found = None
    for n in range(25):
        c0, c1 = n % 5, n // 5
        if all((x * x + c1 * x + c0) % 5 for x in range(5)):
            found = (c0, c1, 1)
            break
    assert found == F25.modulus == (2, 0, 1)


def test_make_field_deterministic():
    assert make_field(5, 6).modulus == make_field(5, 6).modulus
    assert smallest_irreducible(5, 12) == smallest_irreducible(5, 12)


def test_irreducibility_against_root_scan():
    # degree-2/3 polynomials over small primes: irreducible iff no root
    for p in (5, 7):
        for n in range(p * p):
            c0, c1 = n % p, (n // p) % p
            cand = (c0, c1, 1)
            has_root = any((x * x + c1 * x + c0) % p == 0 for x in range(p))
            assert is_irreducible_poly(cand, p) == (not has_root)


def test_prime_field_arithmetic():
    a, b = F5.element(3), F5.element(4)
    assert F5.mul(a, b) == F5.element(2)
    assert F5.inv(F5.element(2)) == F5.element(3)
    with pytest.raises(ZeroDivisionError):
        F5.inv(F5.zero)


def test_multiplicative_order_divides_24():
    for n in range(1, 25):
        g = F25.from_int(n)
        assert F25.pow(g, 24) == F25.one


def test_field_axioms_sampled():
    rng = random.Random(0)
    for K in (F5, F25, F56):
        for _ in range(1000 if K.degree < 6 else 300):
            a = K.random_element(rng)
            b = K.random_element(rng)
            c = K.random_element(rng)
            assert K.add(a, b) == K.add(b, a)
            assert K.mul(a, b) == K.mul(b, a)
            assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
            assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
            if a != K.zero:
                assert K.mul(a, K.inv(a)) == K.one


def test_sqrt_prime_field():
    assert F5.sqrt(F5.element(4)) == F5.element(2)
    assert F5.sqrt(F5.element(2)) is None  # squares mod 5 are {0,1,4}
    assert F5.sqrt(F5.zero) == F5.zero


def test_sqrt_f25_exhaustive_square_table():
    squares = {F25.mul(F25.from_int(n), F25.from_int(n)) for n in range(25)}
    for n in range(25):
        a = F25.from_int(n)
        r = F25.sqrt(a)
        if a in squares:
            assert r is not None and F25.mul(r, r) == a
            # canonical choice: not larger than its negation
            assert F25.to_int(r) <= F25.to_int(F25.neg(r))
        else:
            assert r is None
    # every F_5 element becomes a square in F_25
    emb = embed_field(F5, F25)
    for n in range(5):
        assert F25.sqrt(emb.apply(F5.from_int(n))) is not None


def test_packed_ops_match_tuple_ops():
    rng = random.Random(1)
    for K in (F25, F56, make_field(5, 12)):
        pk = K.packed
        assert pk is not None and pk.ok
        for _ in range(300):
            a, b = K.random_element(rng), K.random_element(rng)
            pa, pb = pk.pack(a), pk.pack(b)
            assert pk.unpack(pk.mul(pa, pb)) == K.mul(a, b)
            assert pk.unpack(pk.add(pa, pb)) == K.add(a, b)
            assert pk.unpack(pk.sub(pa, pb)) == K.sub(a, b)
            assert pk.unpack(pk.neg(pa)) == K.neg(a)
            if a != K.zero:
                assert pk.unpack(pk.inv(pa)) == K.inv(a)


def test_embedding_homomorphic_and_injective():
    rng = random.Random(2)
    for src, tgt in ((F5, F56), (F25, F56), (F125, F56), (F25, make_field(5, 12))):
        emb = embed_field(src, tgt)
        images = set()
        for _ in range(1000 if src.degree == 1 else 400):
            a, b = src.random_element(rng), src.random_element(rng)
            assert emb.apply(src.add(a, b)) == tgt.add(emb.apply(a), emb.apply(b))
            assert emb.apply(src.mul(a, b)) == tgt.mul(emb.apply(a), emb.apply(b))
            images.add(emb.apply(a))
        if src.degree == 1:
            for n in range(5):
                assert emb.apply(src.from_int(n)) == tgt.from_int(n)


def test_embedding_generator_is_root():
    emb = embed_field(F25, F56)
    img = emb.image_of_generator
    acc = F56.zero
    for c in reversed(F25.modulus):
        acc = F56.add(F56.mul(acc, img), F56.element(int(c)))
    assert acc == F56.zero


def test_embedding_tower_compatible_from_prime_field():
    e12 = embed_field(F5, F25)
    e26 = embed_field(F25, F56)
    e16 = embed_field(F5, F56)
    for n in range(5):
        a = F5.from_int(n)
        assert e26.apply(e12.apply(a)) == e16.apply(a)


def test_embedding_rejects_bad_degrees():
    with pytest.raises(ValueError):
        embed_field(F25, F125)


def test_frobenius_power():
    rng = random.Random(3)
    for n in range(5):
        a = F5.from_int(n)
        assert F5.frobenius(a, 5, 1) == a  # Fermat
    for _ in range(200):
        a = F25.random_element(rng)
        assert F25.frobenius(a, 5, 2) == a
        conj = F25.frobenius(a, 5, 1)
        if a[1] != 0:  # outside F_5
            assert conj != a
        assert F25.frobenius(conj, 5, 1) == a
        # q-power map is additive and multiplicative
        b = F25.random_element(rng)
        assert F25.frobenius(F25.add(a, b), 5, 1) == F25.add(conj, F25.frobenius(b, 5, 1))
    with pytest.raises(ValueError):
        F25.frobenius(F25.one, 3, 1)


def test_frobenius_order_divides_degree():
    rng = random.Random(4)
    for K in (F25, F125, F56):
        for _ in range(100):
            a = K.random_element(rng)
            assert K.frobenius(a, 5, K.degree) == a


def test_element_wrapper_operators():
    a = FieldElement(F25, 7)
    b = FieldElement(F25, 3)
    assert (a + b - b) == a
    assert (a * b / b) == a
    assert a ** 24 == FieldElement(F25, 1)
    assert (-a) + a == FieldElement(F25, 0)
    with pytest.raises(ZeroDivisionError):
        a / FieldElement(F25, 0)


def test_is_prime_small():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
