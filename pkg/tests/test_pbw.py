import random
from fractions import Fraction

import pytest

from twistkit.pbw import (CasimirTerm, E, F, H, Element, casimir, commutator,
                          counit, element_from_json, element_to_json,
                          from_casimir_basis, is_hi_polynomial, multiply,
                          shift_h, to_casimir_basis)

from conftest import random_element


def test_fe_rewrite():
    assert F * E == E * F - H


def test_exchange_relation_h2_e2():
    # phi(H) E^n = E^n phi(H+n) with phi = H^2, n = 2
    lhs = H * H * E * E
    rhs = E * E * (H + 2) * (H + 2)
    assert lhs == rhs


def test_unit_law(rng):
    one = Element.one()
    for _ in range(20):
        x = random_element(rng)
        assert one * x == x
        assert x * one == x


def test_casimir_normal_form():
    assert casimir() == Element({(1, 1, 0): 2, (0, 0, 2): 1, (0, 0, 1): -1})


def test_casimir_second_presentation():
    assert casimir() == F * E * 2 + H * (H + 1)


def test_casimir_commutes_with_E():
    assert commutator(casimir(), E).is_zero()


def test_generator_commutators():
    assert commutator(H, E) == E
    assert commutator(H, F) == -F
    assert commutator(E, F) == H


def test_commutator_antisymmetry(rng):
    for _ in range(20):
        x = random_element(rng)
        assert commutator(x, x).is_zero()


def test_counit():
    assert counit(Element.one() + H * 3 + E * F) == 1
    assert counit(E) == 0
    assert counit(casimir()) == 0


def test_casimir_basis_of_2EF():
    decomp = to_casimir_basis(E * F * 2)
    as_dict = {t: c for t, c in decomp}
    assert as_dict == {
        CasimirTerm("pure", 0, 1, 0): Fraction(1),
        CasimirTerm("pure", 2, 0, 0): Fraction(-1),
        CasimirTerm("pure", 1, 0, 0): Fraction(1),
    }


def test_casimir_basis_of_E():
    decomp = to_casimir_basis(E)
    assert decomp == [(CasimirTerm("E", 0, 0, 1), Fraction(1))]


def test_casimir_basis_round_trip_mixed_word():
    x = E * E * F  # normal form of a word with an unmatched E
    assert from_casimir_basis(to_casimir_basis(x)) == x


def test_from_casimir_basis_examples():
    assert from_casimir_basis([(CasimirTerm("pure", 0, 1, 0), Fraction(1))]) == casimir()
    assert from_casimir_basis([(CasimirTerm("pure", 1, 0, 0), Fraction(1))]) == H


def test_casimir_basis_round_trip_randomized(rng):
    for _ in range(100):
        x = random_element(rng, max_deg=4, nterms=4)
        assert from_casimir_basis(to_casimir_basis(x)) == x


def test_associativity_randomized(rng):
    for _ in range(100):
        x = random_element(rng, max_deg=4)
        y = random_element(rng, max_deg=4)
        z = random_element(rng, max_deg=4)
        assert (x * y) * z == x * (y * z)


def test_casimir_centrality_randomized(rng):
    I = casimir()
    for g in (H, E, F):
        assert commutator(I, g).is_zero()
    for _ in range(50):
        x = random_element(rng, max_deg=4)
        assert commutator(I, x).is_zero()


def test_jacobi_identity_on_degree_one(rng):
    for _ in range(30):
        gens = [random_element(rng, max_deg=1) for _ in range(3)]
        x, y, z = gens
        jac = (commutator(x, commutator(y, z))
               + commutator(y, commutator(z, x))
               + commutator(z, commutator(x, y)))
        assert jac.is_zero()


def test_normal_form_confluence(rng):
    # reducing the same word with different association orders agrees
    for _ in range(30):
        word = [rng.choice((E, F, H)) for _ in range(6)]
        left = word[0]
        for w in word[1:]:
            left = left * w
        right = word[-1]
        for w in reversed(word[:-1]):
            right = w * right
        mid = (word[0] * word[1] * word[2]) * (word[3] * word[4] * word[5])
        assert left == right == mid


def test_multiply_alias(rng):
    x = random_element(rng)
    y = random_element(rng)
    assert multiply(x, y) == x * y


def test_is_hi_polynomial():
    assert is_hi_polynomial(casimir() * H + Element.one())
    assert not is_hi_polynomial(E)


def test_shift_h():
    # shift by n realizes the exchange through E^n on H-I polynomials
    x = H * H + casimir() * 3
    assert shift_h(x, 1) == (H + 1) * (H + 1) + casimir() * 3
    with pytest.raises(ValueError):
        shift_h(E, 1)


def test_text_rendering():
    assert str(casimir()) == "2*E*F + H^2 - H"
    assert str(Element.zero()) == "0"
    assert str(-H) == "-H"
    assert str(E * E * F - Element.one() * Fraction(1, 2)) == "E^2*F - 1/2"


def test_json_round_trip(rng):
    for _ in range(20):
        x = random_element(rng, max_deg=4, nterms=4)
        assert element_from_json(element_to_json(x)) == x


def test_json_shape():
    data = element_to_json(casimir())
    assert data == [
        {"e": 1, "f": 1, "d": 0, "num": 2, "den": 1},
        {"e": 0, "f": 0, "d": 2, "num": 1, "den": 1},
        {"e": 0, "f": 0, "d": 1, "num": -1, "den": 1},
    ]
