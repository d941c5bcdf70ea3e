import hypothesis.strategies as st
from hypothesis import settings

from c2charge.roots import Weight

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def dominant(max_total=4):
    """Strategy for dominant weights with l1 + l2 <= max_total."""
    return st.tuples(st.integers(0, max_total), st.integers(0, max_total)).filter(
        lambda p: p[0] + p[1] <= max_total
    ).map(lambda p: Weight(*p))


def dominant_upto(bound):
    return [Weight(l1, n - l1) for n in range(bound + 1) for l1 in range(n + 1)]
