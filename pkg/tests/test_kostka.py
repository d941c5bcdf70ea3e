from collections import Counter

import pytest

from c2charge import strings as S
from c2charge.kostka import dominant_below, kostka_foulkes, orbit_size, weight_multiplicity, weyl_dim
from c2charge.laurent import Laurent
from c2charge.roots import dominance_leq, rho2

from conftest import dominant_upto


def test_spot_values():
    assert kostka_foulkes((0, 1), (0, 0)) == Laurent({2: 1})
    assert kostka_foulkes((0, 2), (0, 0)) == Laurent({2: 1, 4: 1})
    assert kostka_foulkes((2, 2), (2, 2)) == Laurent.one()
    with pytest.raises(ValueError):
        kostka_foulkes((-1, 0), (0, 0))


@pytest.mark.parametrize("lam", dominant_upto(6))
def test_specialisation_gives_crystal_multiplicities(lam):
    counts = Counter(S.weight(t) for t in S.crystal(lam))
    for mu in dominant_below(lam):
        assert kostka_foulkes(lam, mu).at_one() == counts.get(mu, 0)
    assert sum(orbit_size(mu) * counts[mu] for mu in counts if mu.is_dominant()) == weyl_dim(lam)


@pytest.mark.parametrize("lam", dominant_upto(6))
def test_shape_of_the_polynomials(lam):
    for mu in dominant_below(lam):
        k = kostka_foulkes(lam, mu)
        assert k.is_nonnegative()
        assert dominance_leq(mu, lam) == (not k.is_zero())
        if not k.is_zero():
            # monic of degree <lam - mu, rho^vee>
            top = rho2((lam[0] - mu[0], lam[1] - mu[1])) // 2
            assert k.degree() == top and k.coeff(top) == 1


def test_multiplicity_of_non_dominant_weight():
    assert weight_multiplicity((0, 1), (2, -1)) == 1
    assert weight_multiplicity((1, 1), (-1, 0)) == 2
