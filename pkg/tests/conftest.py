from __future__ import annotations

from hypothesis import strategies as st

from wreathgroups.element import random_element
from wreathgroups.word import TRIV, ZED, Prod, Wreath


def words(max_leaves: int = 8, max_arity: int = 5):
    leaves = st.sampled_from([TRIV, ZED])

    def extend(children):
        return st.one_of(
            st.builds(Prod, children, children),
            st.builds(Wreath, children, st.integers(1, max_arity)),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def wreath_words(max_leaves: int = 5, max_arity: int = 4):
    return st.builds(Wreath, words(max_leaves, max_arity), st.integers(1, max_arity))


@st.composite
def word_with_elements(draw, count: int = 2, strategy=None, bound: int = 6):
    w = draw(strategy if strategy is not None else words(6, 4))
    seed = draw(st.integers(0, 2 ** 32))
    xs = [random_element(w, bound, seed + i) for i in range(count)]
    return w, xs
