from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import given

from c2charge.laurent import Laurent

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(Laurent)
points = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(-2, 5)])


def evaluate(p, x):
    return sum(Fraction(c) * x**e for e, c in p.sorted_terms())


@given(polys, polys, points)
def test_evaluation_is_a_ring_map(p, q, x):
    assert evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x)
    assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)
    assert evaluate(p - q, x) == evaluate(p, x) - evaluate(q, x)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == Laurent()


@given(polys)
def test_substitute_and_specialise(p):
    assert p.substitute_power(2).at_one() == p.at_one()
    assert evaluate(p.substitute_power(2), Fraction(3)) == evaluate(p, Fraction(9))


def test_negative_powers():
    v = Laurent.monomial(1)
    vinv = Laurent.monomial(-1)
    assert v * vinv == Laurent.one()
    assert (v - vinv) * (v + vinv) == Laurent.monomial(2) - Laurent.monomial(-2)


def test_zero_terms_dropped_and_formatting():
    assert Laurent({3: 0}).is_zero()
    assert Laurent({2: 1, 4: 1}).format("q") == "q^4 + q^2"
    assert Laurent.one().format() == "1"
