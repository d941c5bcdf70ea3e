import pytest

from c2charge import decomposition as D
from c2charge import hecke as H
from c2charge import strings as S
from c2charge.laurent import Laurent
from c2charge.roots import Weight

from conftest import dominant_upto


def test_heights():
    assert H.roots_of_height_at_least(1) == ("1", "2", "21", "12")
    assert H.roots_of_height_at_least(3) == ("12",)
    assert H.roots_of_height_at_least(4) == ()


def test_conversion_identities():
    assert H.verify_conversions(5) == []


@pytest.mark.parametrize("lam", dominant_upto(5))
def test_ends_of_the_interpolation(lam):
    # N^1 is the standard basis up to the stabiliser factor on walls
    expected = H.HeckeElement.standard(lam).scale(H.stabilizer_poincare(lam))
    assert H.precanonical(1, lam) == expected
    assert H.precanonical(2, lam) == H.atomic_expected(lam)
    assert H.precanonical(4, lam) == H.kl_basis(lam)
    assert H.n3_tilde(lam).is_positive()


def test_wall_factor():
    assert H.precanonical(1, (0, 1)) == H.HeckeElement.standard((0, 1)).scale(Laurent({0: 1, 2: 1}))
    assert H.precanonical(1, (2, 1)) == H.HeckeElement.standard((2, 1))


def test_third_basis_examples():
    n3 = H.precanonical(3, (0, 2))
    assert n3 == H.kl_basis((0, 2)) + H.kl_basis((0, 1)).scale(H.V2)
    assert H.kl_basis((0, 1)) == H.precanonical(3, (0, 1)) - H.precanonical(3, (0, 0)).scale(H.V2)


@pytest.mark.parametrize("lam", dominant_upto(5))
def test_characters_at_v_equal_one(lam):
    assert dict(D.characters_v1(S.crystal(lam))) == H.kl_basis(lam).at_one()
    assert dict(D.characters_v1(D.principal_preatom(lam))) == H.n3_tilde(lam).at_one()
    for aid, elems in D.atoms(lam).items():
        assert dict(D.characters_v1(elems)) == H.precanonical(2, aid.zeta).at_one()


def test_extension_to_non_dominant_weights():
    assert H.kl_extended((-1, 0)) == H.ZERO
    # s1 . (-2, 1) = (0, 0)
    assert H.kl_extended((-2, 1)) == H.kl_basis((0, 0)).scale(-1)
    with pytest.raises(ValueError):
        H.kl_basis(Weight(1, -1))


def test_element_arithmetic():
    a = H.HeckeElement.standard((1, 0))
    b = H.HeckeElement.standard((0, 1)).scale(H.V2)
    assert (a + b) - b == a
    assert -(-a) == a
    assert (a - a) == H.ZERO
    assert (a + b).coeff((0, 1)) == H.V2


@pytest.mark.parametrize("l2", range(1, 6))
def test_third_basis_on_the_first_wall(l2):
    assert H.precanonical(3, (0, l2)) == H.kl_basis((0, l2)) + H.kl_basis((0, l2 - 1)).scale(H.V2)


def test_kl_basis_values():
    h = H.HeckeElement.standard
    assert H.kl_basis((0, 0)) == h((0, 0))
    assert H.kl_basis((0, 1)) == h((0, 1)) + h((0, 0)).scale(Laurent.monomial(4))
    # (0,1) <= (0,2), with K_{(0,2),(0,1)}(q) = q^2
    expected = h((0, 2)) + h((2, 0)).scale(Laurent.monomial(2)) + h((0, 1)).scale(Laurent.monomial(4)) \
        + h((0, 0)).scale(Laurent({4: 1, 8: 1}))
    assert H.kl_basis((0, 2)) == expected
