from fractions import Fraction

import pytest

from twistkit.pbw import E, F, H, E_MONO, F_MONO, H_MONO, UNIT_MONO, Element, casimir, commutator
from twistkit.tensor import (TensorElement, TensorElement3, cartan_killing,
                             classical_r, coproduct, coproduct_leg, counit_leg,
                             extend_back, extend_front, flip, is_weight_zero,
                             leg_embed, outer, tensor_from_json, tensor_mul,
                             tensor_to_json, weight)

from conftest import random_element, random_tensor


def test_tensor_mul_legwise():
    lhs = tensor_mul(outer(E, F), outer(F, E))
    assert lhs == outer(E * F, E * F - H)


def test_tensor_mul_unit():
    one = TensorElement.one()
    x = outer(E * E, H) - outer(F, F) * Fraction(1, 3)
    assert one * x == x
    assert x * one == x


def test_r_squared_hand_expansion():
    r = classical_r()
    ef = E * F
    expected = (outer(F * F, E * E) + outer(E * E, F * F)
                - outer(ef - H, ef) - outer(ef, ef - H))
    assert r * r == expected


def test_flip_examples():
    assert flip(outer(E, F)) == outer(F, E)
    r = classical_r()
    assert flip(r) == -r
    P = cartan_killing()
    assert flip(P) == P


def test_flip_is_involutive_morphism(rng):
    for _ in range(25):
        x = random_tensor(rng)
        y = random_tensor(rng)
        assert flip(flip(x)) == x
        assert flip(x * y) == flip(x) * flip(y)


def test_coproduct_primitive():
    assert coproduct(H) == leg_embed(H, 1) + leg_embed(H, 2)


def test_coproduct_of_H_squared():
    expected = outer(H * H, Element.one()) + outer(H, H) * 2 + outer(Element.one(), H * H)
    assert coproduct(H * H) == expected


def test_coproduct_of_casimir():
    I = casimir()
    expected = leg_embed(I, 1) + leg_embed(I, 2) + cartan_killing()
    assert coproduct(I) == expected


def test_leg_embed():
    assert leg_embed(E, 1) == outer(E, Element.one())
    assert leg_embed(Element.one(), 2) == TensorElement.one()
    x = E * H
    y = F - H
    assert leg_embed(x, 1) * leg_embed(y, 2) == outer(x, y)
    with pytest.raises(ValueError):
        leg_embed(E, 3)


def test_coproduct_leg_examples():
    h1 = leg_embed(H, 1)
    got = coproduct_leg(h1, 1)
    assert got == TensorElement3({(H_MONO, UNIT_MONO, UNIT_MONO): 1,
                                  (UNIT_MONO, H_MONO, UNIT_MONO): 1})
    h2 = leg_embed(H, 2)
    got = coproduct_leg(h2, 2)
    assert got == TensorElement3({(UNIT_MONO, H_MONO, UNIT_MONO): 1,
                                  (UNIT_MONO, UNIT_MONO, H_MONO): 1})


def test_coproduct_leg_of_r():
    r = classical_r()
    expected = TensorElement3({
        (F_MONO, UNIT_MONO, E_MONO): 1,
        (UNIT_MONO, F_MONO, E_MONO): 1,
        (E_MONO, UNIT_MONO, F_MONO): -1,
        (UNIT_MONO, E_MONO, F_MONO): -1,
    })
    assert coproduct_leg(r, 1) == expected


def test_weight_examples():
    assert weight((E_MONO, F_MONO)) == 0
    assert weight((E_MONO, UNIT_MONO)) == 1
    assert is_weight_zero(classical_r())
    assert is_weight_zero(cartan_killing())


def test_weight_characterizes_dH_commutant(rng):
    dH = coproduct(H)
    for _ in range(100):
        x = random_tensor(rng, max_deg=4)
        commutes = (x * dH - dH * x).is_zero()
        assert commutes == is_weight_zero(x)


def test_counit_leg():
    x = TensorElement.one() + leg_embed(casimir(), 2)
    assert counit_leg(x, 1) == Element.one() + casimir()
    assert counit_leg(x, 2) == Element.one()


def test_coassociativity_randomized(rng):
    for _ in range(50):
        x = random_element(rng, max_deg=3)
        d = coproduct(x)
        assert coproduct_leg(d, 1) == coproduct_leg(d, 2)


def test_coproduct_is_morphism(rng):
    for _ in range(30):
        x = random_element(rng, max_deg=3)
        y = random_element(rng, max_deg=3)
        assert coproduct(x * y) == coproduct(x) * coproduct(y)


def test_kernel_characterization_randomized(rng):
    # polynomials in I1, I2, Delta(I) commute with all three coproducts
    I = casimir()
    gens = [leg_embed(I, 1), leg_embed(I, 2), coproduct(I)]
    deltas = [coproduct(g) for g in (H, E, F)]
    for _ in range(40):
        x = TensorElement.one() * Fraction(rng.randint(-3, 3))
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(gens)
            c = Fraction(rng.randint(-2, 2))
            x = x * g + g * c if rng.random() < 0.5 else x + g * c
        for d in deltas:
            assert (x * d - d * x).is_zero()


def test_triple_product_legwise():
    a = extend_back(outer(E, F))
    b = extend_front(outer(F, E))
    assert a * b == TensorElement3({(E_MONO, F_MONO, UNIT_MONO): 1}) \
        * TensorElement3({(UNIT_MONO, F_MONO, E_MONO): 1})
    got = a * b
    expected = TensorElement3({(m1, m2, m3): c for ((m1, m2), cf) in outer(E, F * F).terms.items()
                               for (m3, c) in [(E_MONO, cf)]})
    # E (x) F*F (x) E with the middle leg in normal form
    assert got == TensorElement3({(E_MONO, (0, 2, 0), E_MONO): 1})


def test_json_round_trip(rng):
    for _ in range(20):
        x = random_tensor(rng, max_deg=3, nterms=4)
        assert tensor_from_json(tensor_to_json(x)) == x


def test_text_rendering():
    r = classical_r()
    assert str(r) == "(F ⊗ E) - (E ⊗ F)"
    assert str(TensorElement.zero()) == "0"
    assert str(cartan_killing()) == ("2 * (H ⊗ H) + 2 * (F ⊗ E) "
                                     "+ 2 * (E ⊗ F)")
