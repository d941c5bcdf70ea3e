from collections import Counter

import hypothesis.strategies as st
import pytest
from hypothesis import given

from c2charge import decomposition as D
from c2charge import strings as S
from c2charge.roots import W1, W2, Weight, weights_below

from conftest import dominant, dominant_upto


@pytest.mark.parametrize("lam", dominant_upto(6))
def test_principal_preatom_is_the_complement_of_phi(lam):
    below = lam - W1.scale(2)
    image = {D.phi_string(t) for t in S.crystal(below)} if below.is_dominant() else set()
    assert image <= set(S.crystal(lam))
    assert set(D.principal_preatom(lam)) == set(S.crystal(lam)) - image


@pytest.mark.parametrize("lam", dominant_upto(5))
def test_principal_preatom_is_stable(lam):
    P = set(D.principal_preatom(lam))
    for t in P:
        assert S.s1(t) in P and S.s2(t) in P
        for op in (S.f2, S.e2):
            u = op(t)
            assert u is None or u in P


@pytest.mark.parametrize("lam", dominant_upto(6))
def test_atoms(lam):
    assert D.check_atom_property(lam) == []
    sizes = sum(len(v) for v in D.atoms(lam).values())
    assert sizes == len(S.crystal(lam))


@pytest.mark.parametrize("lam", dominant_upto(6))
def test_at_formula_matches_tower_depth(lam):
    assert D.decompose(lam) == D.decompose(lam, brute=True)


@pytest.mark.parametrize("k", range(6))
def test_top_atom_sizes(k):
    top = D.atoms((0, k))[D.AtomId(Weight(0, k), 0, 0)]
    assert len(top) == (k + 1) ** 2 + k**2 == D.atom_size((0, k))


def test_census_examples():
    assert [len(v) for v in D.atoms((0, 0)).values()] == [1]
    assert sorted(len(v) for v in D.atoms((0, 2)).values()) == [1, 13]
    assert 25 in [len(v) for v in D.atoms((0, 3)).values()]


@given(dominant(4))
def test_psi_is_injective_and_weight_preserving(lam):
    P = D.principal_preatom(lam)
    images = [D.psi(t) for t in P]
    assert len(set(images)) == len(P)
    assert len({D.psi_bar(t) for t in P}) == len(P)
    for t, u in zip(P, images):
        assert S.weight(u) == S.weight(t)
        assert D.in_principal_preatom(u) and u.lam == lam + W2


def test_psi_rejects_elements_outside_the_preatom():
    outside = [t for t in S.crystal((2, 0)) if not D.in_principal_preatom(t)]
    assert outside
    with pytest.raises(ValueError):
        D.psi(outside[0])


@given(dominant(5))
def test_pat_counts_phi_preimages(lam):
    for t, loc in D.decompose(lam).items():
        u = t
        for _ in range(loc.pat):
            u = D.phi_preimage(u)
        assert u == loc.base and D.phi_preimage(u) is None
        assert D.pat(t) == loc.pat


def test_atom_lookup():
    lam = Weight(1, 2)
    for aid, elems in D.atoms(lam).items():
        for t in elems:
            assert D.atom_element(lam, aid.pat, aid.at, S.weight(t)) == t
            assert t in D.atom_of(t)


@given(dominant(5))
def test_characters_are_sums_of_atoms(lam):
    total = Counter()
    for aid in D.atoms(lam):
        total.update(mu for mu in weights_below(aid.zeta) if mu.is_dominant())
    assert total == D.characters_v1(S.crystal(lam))
