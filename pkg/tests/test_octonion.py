from fractions import Fraction

import pytest

from exactalg import ScalarRingError
from octonion import (
    DIM, OctonionElement, TorusError, bilinear, conjugate, conjugate_end, find_nonassociative_triple,
    gram_matrix, is_g2_isotropic, is_in_V, multiply, norm, product_characters_consistent, symbolic_ring,
    torus_act, trace,
)

U_RING = symbolic_ring("u")
UV_RING = symbolic_ring("u", "v")


def v(i):
    return OctonionElement.basis(i)


@pytest.fixture
def u():
    return OctonionElement.symbolic("u", U_RING)


def test_identity_is_two_sided(u):
    e = OctonionElement.identity(U_RING)
    assert multiply(e, u) == u
    assert multiply(u, e) == u


def test_E_part_multiplies_to_zero():
    zero = OctonionElement((0,) * DIM)
    assert v(1) * v(2) == zero
    assert v(1) * v(1) == zero
    assert v(2) * v(2) == zero


def test_v1_times_v8_is_v5():
    assert v(1) * v(8) == v(5)


def test_norm_examples():
    assert norm(OctonionElement.identity()) == 1
    assert norm(v(1)) == 0
    assert norm(v(4) - v(5)) == -1


def test_norm_is_multiplicative_symbolically():
    a = OctonionElement.symbolic("u", UV_RING)
    b = OctonionElement.symbolic("v", UV_RING)
    assert norm(multiply(a, b)) == norm(a) * norm(b)


def test_bilinear_examples(u):
    assert bilinear(v(1), v(8)) == -1
    assert bilinear(v(4), v(5)) == 1
    assert bilinear(u, u) == 2 * norm(u)


def random_element(rng):
    nums = rng.integers(-9, 10, size=DIM)
    dens = rng.integers(1, 6, size=DIM)
    return OctonionElement(tuple(Fraction(int(n), int(d)) for n, d in zip(nums, dens)))


def test_multiplication_scales_the_bilinear_form(rng):
    for _ in range(100):
        x, y, w = random_element(rng), random_element(rng), random_element(rng)
        assert bilinear(multiply(x, w), multiply(y, w)) == bilinear(x, y) * norm(w)
        assert bilinear(multiply(w, x), multiply(w, y)) == norm(w) * bilinear(x, y)


def test_gram_matrix_matches_bilinear_form():
    g = gram_matrix()
    for p in range(1, DIM + 1):
        for q in range(1, DIM + 1):
            assert bilinear(v(p), v(q)) == g[p - 1, q - 1]


def test_conjugation(u):
    assert conjugate_end(v(4)) == v(5)
    assert conjugate_end(conjugate_end(u)) == u
    e = OctonionElement.identity()
    assert conjugate_end(e) == e
    assert conjugate(e) == e
    assert multiply(u, conjugate(u)) == OctonionElement.identity(U_RING).scale(norm(u))


def test_torus_scales_basis_vectors():
    assert torus_act((2, 3), v(1)) == v(1).scale(2)
    assert torus_act((2, 3), v(8)) == v(8).scale(Fraction(1, 2))
    assert torus_act((2, 3), v(3)) == v(3).scale(Fraction(2, 3))


def test_torus_acts_by_automorphisms():
    a = OctonionElement.symbolic("u", UV_RING)
    b = OctonionElement.symbolic("v", UV_RING)
    z = (2, 3)
    assert multiply(torus_act(z, a), torus_act(z, b)) == torus_act(z, multiply(a, b))


def test_torus_rejects_zero():
    with pytest.raises(TorusError):
        torus_act((0, 1), v(1))


def test_isotropy():
    assert is_g2_isotropic(v(1), v(2))
    assert not is_g2_isotropic(v(1), v(8))
    assert not is_g2_isotropic(OctonionElement.identity(), v(1))


def test_membership_in_V():
    assert is_in_V(v(4) - v(5))
    assert not is_in_V(OctonionElement.identity())
    assert trace(OctonionElement.identity()) == 2


def test_characters_and_nonassociativity():
    assert product_characters_consistent()
    i, j, k = find_nonassociative_triple()
    assert (v(i) * v(j)) * v(k) != v(i) * (v(j) * v(k))


def test_rings_must_agree(u):
    with pytest.raises(ScalarRingError):
        multiply(u, v(1))


def test_from_json():
    assert OctonionElement.from_json(["1", "0", "0", "0", "0", "0", "0", "-1/2"]) == v(1) - v(8).scale(Fraction(1, 2))
    with pytest.raises(ValueError):
        OctonionElement.from_json(["1", "2"])
