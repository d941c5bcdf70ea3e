import hypothesis.strategies as st
import pytest
from hypothesis import given

from c2charge import bruhat as G
from c2charge.roots import LESS, ROOT_KINDS, ROOTS, W2, Weight, bruhat_compare, dominance_leq, edge_level, weights_below

from conftest import dominant, dominant_upto


def ell_oracle(m, mu, lam):
    """Count nu <= lam joined to mu by one reflection with nu below mu in
    the order twisted by the first m labels."""
    count = 0
    for kind in ROOT_KINDS:
        a = ROOTS[kind]
        for j in range(-30, 31):
            nu = Weight(mu[0] + j * a[0], mu[1] + j * a[1])
            if j == 0 or not dominance_leq(nu, lam):
                continue
            level = edge_level(mu, nu, kind)
            below = bruhat_compare(mu, level, kind) == LESS
            idx = G.label_index(kind, level)
            if idx is not None and (m is None or idx <= m):
                below = not below
            count += below
    return count


def test_reflection_order():
    names = [str(G.t(k)) for k in range(1, 9)]
    assert names == ["1δ-α21∨", "1δ-α12∨", "2δ-α21∨", "1δ-α2∨",
                     "3δ-α21∨", "2δ-α12∨", "4δ-α21∨", "2δ-α2∨"]
    for k in range(1, 40):
        label = G.t(k)
        assert G.label_index(label.kind, label.level) == k
    assert G.label_index("1", 3) is None and G.label_index("2", 0) is None


@given(dominant(4), st.integers(0, 20))
def test_arrow_counts_match_oracle(lam, m):
    for mu in weights_below(lam):
        assert G.ell_m(m, mu, lam) == ell_oracle(m, mu, lam)
        assert G.ell_m(None, mu, lam) == ell_oracle(None, mu, lam)


@given(dominant(5))
def test_untwisted_graph_counts_smaller_weights(lam):
    # the highest weight sees everything below it on its lines
    total = sum(len(G.line_neighbours(lam, k, lam)) for k in ROOT_KINDS)
    assert G.ell_m(0, lam, lam) == total


@pytest.mark.parametrize("lam", dominant_upto(5))
def test_swappable_closed_form(lam):
    for e in G.indexed_edges(lam):
        assert G.is_swappable(e, lam) == G.is_swappable_brute(e, lam), e


def test_worked_swap_values():
    lam = Weight(2, 2)
    mu = Weight(2, -1)
    nu = G.apply_t(8, mu)
    assert (G.ell_m(7, mu, lam), G.ell_m(7, nu, lam)) == (7, 8)
    assert G.is_swappable(G.upward_edge(8, mu, lam), lam)
    mu = Weight(4, -2)
    nu = G.apply_t(12, mu)
    assert (G.ell_m(11, mu, lam), G.ell_m(11, nu, lam)) == (9, 9)
    assert not G.is_swappable(G.upward_edge(12, mu, lam), lam)


def test_swappable_beyond_the_octagon_edge():
    lam, mu = Weight(3, 2), Weight(1, -1)
    e = G.upward_edge(G.label_index("2", 3), mu, lam)
    assert e.upper[0] > lam[0]
    assert G.is_swappable(e, lam) and G.is_swappable_brute(e, lam)


def test_staircase_flags_in_dot_output():
    mu = "(3,0)"
    assert f'"{mu}" -> "(5,-2)" [label="1δ-α2∨ [S]"]' in G.to_dot((3, 1))
    assert f'"{mu}" -> "(7,-4)" [label="2δ-α2∨ [N]"]' in G.to_dot((3, 2))
    assert f'"{mu}" -> "(9,-6)" [label="3δ-α2∨ [N]"]' in G.to_dot((3, 3))


def test_dot_output():
    assert G.to_dot((0, 0)) == 'digraph "G(0,0)" {\n  "(0,0)";\n}\n'
    assert G.to_dot((2, 1), 5) == G.to_dot(Weight(2, 1), 5)
    # with every label twisted, indexed edges point down
    text = G.to_dot((1, 1), None)
    assert text.count("->") == len(G.edges((1, 1)))


@pytest.mark.parametrize("lam", dominant_upto(4))
def test_ns_counts(lam):
    for mu in weights_below(lam):
        for m in range(G.m_star(lam) + 1):
            assert G.ns_count(m, mu, lam) == G.ns_count_brute(m, mu, lam)
        assert G.ns_infinity(mu, lam) == G.ns_count_brute(None, mu, lam)


def test_raw_infinite_count_goes_negative():
    assert G.ns_infinity_formula((0, 0), (0, 1)) == -1
    assert G.ns_count_brute(None, (0, 0), (0, 1)) == 0


@pytest.mark.parametrize("lam", dominant_upto(4))
def test_ns_edges_correct_the_swap_rule(lam):
    for mu in weights_below(lam):
        for m in range(G.m_star(lam)):
            e = G.upward_edge(m + 1, mu, lam)
            if e is None:
                continue
            n = G.ns_count_brute(m + 1, mu, lam)
            assert G.ell_m(m, mu, lam) - G.ell_m(m, e.upper, lam) + 1 == n
            assert G.ell_m(m + 1, mu, lam) - G.ell_m(m + 1, e.upper, lam) - 1 == n


def test_extended_count_counterexample():
    # mu < t_4 mu with t_4 mu outside the octagon and no NS edge at mu
    lam, mu = Weight(3, 0), Weight(1, 1)
    nu = G.apply_t(4, mu)
    assert not dominance_leq(nu, lam)
    assert (G.ell_m(4, mu, lam), G.ell_hat(4, nu, lam), G.ns_count_brute(4, mu, lam)) == (7, 7, 0)


@pytest.mark.parametrize("lam", dominant_upto(4))
def test_staircase_closed_form(lam):
    for mu in weights_below(lam):
        assert G.staircase_infinity(mu, lam) == G.staircase_brute(None, mu, lam)


def test_staircase_example():
    mu, lam = Weight(3, 0), Weight(3, 1)
    assert G.staircase_brute(None, mu, lam) == 2
    down = Weight(2, -2)
    assert [G.elevation(mu, down, k, lam + W2.scale(k - 1)) for k in (1, 2, 3)] == [0, 1, 2]
    assert G.truncated_staircase(None, mu, lam + W2.scale(1), 1, brute=False) == min(1, G.staircase_infinity(mu, lam))
