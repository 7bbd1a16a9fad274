from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import words
from wreathgroups.analysis import abelianize
from wreathgroups.element import (
    commutator, commutator_closed_form, identity, inverse, multiply, random_element,
)
from wreathgroups.packed import PackedGroup
from wreathgroups.word import Wreath, beta1, parse_word


@settings(max_examples=100, deadline=None)
@given(words(6, 4), st.integers(0, 2 ** 32))
def test_packed_matches_symbolic(w, seed):
    g = PackedGroup(w)
    xs = [random_element(w, 9, seed + i) for i in range(4)]
    ys = [random_element(w, 9, seed + 100 + i) for i in range(4)]
    px, py = g.pack(xs), g.pack(ys)
    assert g.unpack(px) == xs
    assert g.unpack(g.mul(px, py)) == [multiply(w, x, y) for x, y in zip(xs, ys)]
    assert g.unpack(g.inv(px)) == [inverse(w, x) for x in xs]
    assert g.unpack(g.comm(px, py)) == [commutator(w, x, y) for x, y in zip(xs, ys)]
    assert [tuple(r) for r in g.abelianize(px).tolist()] == [abelianize(w, x) for x in xs]
    assert g.unpack(g.identity(1)) == [identity(w)]
    assert g.rank == beta1(w)
    if isinstance(w, Wreath):
        assert g.unpack(g.comm_closed(px, py)) == [
            commutator_closed_form(w, x, y) for x, y in zip(xs, ys)]


def test_packed_axioms_batch():
    g = PackedGroup(parse_word("((Z wr2 Z) x Z) wr3 Z wr2 Z"))
    rng = np.random.default_rng(0)
    x, y, z = (g.random(rng, 2000, 8) for _ in range(3))
    assert np.array_equal(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)))
    assert not g.mul(x, g.inv(x)).any()
    assert np.array_equal(g.comm(x, y), g.comm_closed(x, y))


def test_packed_rejects_bad_shape_and_overflow():
    g = PackedGroup(parse_word("Z wr2 Z"))
    with pytest.raises(ValueError):
        g.mul(np.zeros((1, 2)), np.zeros((1, 2)))
    with pytest.raises(OverflowError):
        g.mul(np.full((1, 3), 2 ** 62), np.zeros((1, 3)))
    with pytest.raises(TypeError):
        PackedGroup(parse_word("Z x Z")).comm_closed(np.zeros((1, 2)), np.zeros((1, 2)))
