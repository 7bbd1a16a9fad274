from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathgroups.oracle import (
    WREATH_ORDER_CAP, FiniteGroup, FiniteWreathElement, SizeCapError, WreathAction,
    ball_commutator_check, brute_center, build_finite_wreath, check_configuration,
    cyclic, dihedral4, formula_center, homomorphisms, klein4, orbits, probe_centralizer,
    random_configuration, run_oracle21, shift_action, symmetric3,
)
from wreathgroups.word import parse_word


def trivial_action(group, k):
    return WreathAction(group, k, [list(range(k))] * group.order)


def element_orders(G):
    out = []
    for g in range(G.order):
        x, k = g, 1
        while x != 0:
            x, k = G.mul(x, g), k + 1
        out.append(k)
    return out


def s3_shift():
    return symmetric3(), shift_action(cyclic(4), 2)


def test_catalog_groups():
    assert symmetric3().order == 6 and dihedral4().order == 8 and klein4().order == 4
    assert sorted(element_orders(cyclic(6))) == [1, 2, 3, 3, 6, 6]
    assert sorted(element_orders(klein4())) == [1, 2, 2, 2]


def test_finite_group_validation():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])
    # Latin square with identity 0 that is not associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError, match="associative"):
        FiniteGroup(loop)


def test_build_examples():
    z2 = cyclic(2)
    g = build_finite_wreath(z2, trivial_action(z2, 1))
    assert g.order == 4 and np.array_equal(g.table, g.table.T)
    d = build_finite_wreath(z2, shift_action(z2, 2))
    assert d.order == 8
    assert len(brute_center(d)) == 2
    assert element_orders(d).count(4) == 2
    assert build_finite_wreath(*s3_shift()).order == 144


def test_orbits():
    assert orbits(trivial_action(cyclic(2), 3)) == [(0,), (1,), (2,)]
    assert orbits(shift_action(cyclic(4), 2)) == [(0, 1)]
    swap = WreathAction(cyclic(2), 3, [[0, 1, 2], [1, 0, 2]])
    assert orbits(swap) == [(0, 1), (2,)]


def test_brute_center_examples():
    assert brute_center(cyclic(5)) == set(range(5))
    assert brute_center(symmetric3()) == {0}
    assert len(brute_center(dihedral4())) == 2


def test_formula_center_examples():
    A, act = s3_shift()
    assert len(formula_center(A, act)) == 2
    z3 = cyclic(3)
    assert len(formula_center(z3, shift_action(z3, 3))) == 3
    z2 = cyclic(2)
    assert len(formula_center(z2, trivial_action(z2, 1))) == 4


@pytest.mark.parametrize("A, act, size", [
    (*s3_shift(), 2),
    (cyclic(3), shift_action(cyclic(3), 3), 3),
    (cyclic(2), trivial_action(cyclic(2), 1), 4),
    (dihedral4(), shift_action(cyclic(4), 2), 4),
    (symmetric3(), WreathAction(cyclic(2), 3, [[0, 1, 2], [1, 0, 2]]), 1),
    (cyclic(2), WreathAction(cyclic(2), 3, [[0, 1, 2], [1, 0, 2]]), 4),
])
def test_three_centers_agree(A, act, size):
    G = build_finite_wreath(A, act)
    brute = {G.labels[i] for i in brute_center(G)}
    assert len(brute) == size
    assert formula_center(A, act) == brute
    assert probe_centralizer(A, act, G) == brute
    assert FiniteWreathElement((0,) * act.set_size, 0) in brute


def test_action_validation():
    z2 = cyclic(2)
    with pytest.raises(ValueError, match="homomorphism"):
        WreathAction(cyclic(3), 2, [[0, 1], [1, 0], [1, 0]])
    with pytest.raises(ValueError, match="identity"):
        WreathAction(z2, 2, [[1, 0], [0, 1]])
    with pytest.raises(ValueError, match="permutation"):
        WreathAction(z2, 2, [[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        shift_action(cyclic(3), 2)


def test_size_caps():
    big = WreathAction(cyclic(8), 5, [list(range(5))] * 8)
    assert 8 ** 5 * 8 > 4096
    with pytest.raises(SizeCapError):
        build_finite_wreath(cyclic(8), big)
    with pytest.raises(SizeCapError):
        formula_center(cyclic(8), WreathAction(cyclic(8), 6, [list(range(6))] * 8))
    assert 8 ** 6 * 8 > WREATH_ORDER_CAP
    # the formula side works up to the 10**6 cap without a table
    assert len(formula_center(cyclic(8), big)) == 8 ** 5 * 8


def test_homomorphism_counts():
    # Hom(Z_n, S_k) counts: elements of S_k with order dividing n
    assert len(homomorphisms("Z2", 3)) == 4
    assert len(homomorphisms("Z3", 3)) == 3
    assert len(homomorphisms("Z1", 4)) == 1
    assert len(homomorphisms("Z2xZ2", 2)) == 4


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_random_configurations_agree(seed):
    A, act = random_configuration(random.Random(seed), max_order=512)
    assert A.order <= 8 and act.group.order <= 8 and act.set_size <= 5
    r = check_configuration(A, act)
    assert r["formula_agrees"] and r["probe_agrees"] and r["center_closed"]


def test_run_oracle21_small():
    rep = run_oracle21(12, seed=3, max_order=256)
    assert rep["pass"] and rep["details"]["agreements"] == 12
    assert rep == run_oracle21(12, seed=3, max_order=256)


@pytest.mark.parametrize("text, bound, length", [("Z wr2 Z", 3, 4), ("Z wr3 Z", 2, 3)])
def test_ball_check(text, bound, length):
    rep = ball_commutator_check(parse_word(text), bound, length, trials=500, witness_trials=100)
    assert rep.counterexamples == [] and rep.passed


def test_ball_check_length_zero_and_errors():
    rep = ball_commutator_check(parse_word("Z wr2 Z"), 3, 0)
    assert rep.passed and rep.soundness_trials == 1
    with pytest.raises(ValueError):
        ball_commutator_check(parse_word("Z x Z"), 3, 2)
    with pytest.raises(ValueError):
        ball_commutator_check(parse_word("Z wr2 Z"), 3, 8, trials=10 ** 6)
