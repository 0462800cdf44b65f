"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from kpq.algebra.mpoly import BETA, MPoly, VarId
from kpq.combinatorics.partitions import StrictPartition

VARS = [BETA, VarId("x", 1), VarId("x", 2), VarId("x", 3), VarId("b", 1), VarId("b", 2)]


@st.composite
def polys(draw, max_terms: int = 4, max_exp: int = 2, variables=None):
    vs = variables or VARS
    terms = draw(
        st.lists(
            st.tuples(
                st.integers(-5, 5).filter(bool),
                st.dictionaries(st.sampled_from(vs), st.integers(1, max_exp), max_size=3),
            ),
            max_size=max_terms,
        )
    )
    return MPoly.from_terms(terms)


def strict_partitions(max_part: int = 4):
    return st.sets(st.integers(1, max_part), max_size=max_part).map(lambda s: StrictPartition(tuple(sorted(s, reverse=True))))
