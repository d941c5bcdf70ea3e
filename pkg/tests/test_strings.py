import hypothesis.strategies as st
import pytest
from hypothesis import given

from c2charge import strings as S
from c2charge.roots import Weight, s1 as s1_weight, s2 as s2_weight, weights_below

from conftest import dominant, dominant_upto


@st.composite
def elements(draw, max_total=4):
    lam = draw(dominant(max_total))
    return draw(st.sampled_from(S.crystal(lam)))


@pytest.mark.parametrize("lam", dominant_upto(6))
def test_size_and_axioms(lam):
    assert len(S.crystal(lam)) == S.weyl_dimension(lam)
    assert S.check_axioms(lam) == []


def test_small_crystals():
    assert len(S.crystal((0, 0))) == 1
    assert len(S.crystal((1, 0))) == 4
    assert len(S.crystal((0, 1))) == 5
    with pytest.raises(ValueError):
        S.crystal((0, -1))
    with pytest.raises(ValueError):
        S.element((1, 0), (0, 0, 0, 2))


@pytest.mark.parametrize("lam", dominant_upto(5))
def test_connected_from_the_highest_element(lam):
    seen = {S.highest(lam)}
    frontier = list(seen)
    while frontier:
        t = frontier.pop()
        for i in (1, 2):
            u = S.F[i](t)
            if u is not None and u not in seen:
                seen.add(u)
                frontier.append(u)
    assert seen == set(S.crystal(lam))


@given(elements())
def test_theta_maps_are_inverse(t):
    assert S.theta12(S.theta21(t.s)) == t.s


@given(elements())
def test_weyl_action(t):
    mu = S.weight(t)
    assert S.weight(S.s1(t)) == s1_weight(mu)
    assert S.weight(S.s2(t)) == s2_weight(mu)
    assert S.s1(S.s1(t)) == t and S.s2(S.s2(t)) == t


@given(elements())
def test_modified_colour_12(t):
    u = S.f12(t)
    if u is not None:
        assert S.e12(u) == t
        assert S.weight(u) == S.weight(t) - Weight(2, 0)
    assert (u is None) == (S.phi12(t) == 0)


@given(elements())
def test_weights_stay_in_the_octagon(t):
    assert S.weight(t) in weights_below(t.lam)


def test_eps_phi_of_highest_element():
    t = S.highest((2, 3))
    assert (S.eps1(t), S.eps2(t), S.phi1(t), S.phi2(t)) == (0, 0, 2, 3)
