"""Acceptance criteria at full scale, one PASS/FAIL line each.

Run alone with ``pytest -v -m acceptance`` (a few minutes), or as a script:
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import time

import pytest

from wreathgroups.analysis import center_generators
from wreathgroups.element import IntE, PairE, WreathE, identity
from wreathgroups.oracle import (
    brute_center, build_finite_wreath, cyclic, formula_center, probe_centralizer,
    shift_action, symmetric3,
)
from wreathgroups.suites import suite_axioms, suite_com, suite_cs, suite_oracle21, suite_parser, suite_zc
from wreathgroups.word import beta1, parse_word

pytestmark = pytest.mark.acceptance

CS_WORDS = ["Z wr2 Z", "Z wr3 Z", "Z wr4 Z", "Z wr5 Z", "(Z wr2 Z) wr3 Z"]


def verdict(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    capman = _CAPTURE.get("capsys")
    if capman is not None:
        with capman.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


_CAPTURE: dict = {}


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    _CAPTURE["capsys"] = capsys
    yield
    _CAPTURE.clear()


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def test_criterion_1_center_rank():
    rep, secs = timed(suite_zc, max_len=6, max_arity=5)
    ok = rep["pass"] and secs < 60
    verdict(1, "center rank = abelianization rank = beta1", ok,
            f"{rep['trials']} words (l<=6, arity<=5), {len(rep['failures'])} failures, "
            f"{secs:.1f}s (limit 60s)")


def test_criterion_2_worked_example():
    w = parse_word("((Z wr3 Z) x (Z wr5 Z)) wr7 Z")
    gens = center_generators(w)
    inner = w.base
    e_left, e_right = identity(inner.left), identity(inner.right)

    def shift_gen(k, side):
        pad = WreathE((IntE(0),) * k, k)
        return PairE(pad, e_right) if side == "left" else PairE(e_left, pad)

    expected = [
        WreathE((shift_gen(3, "left"),) * 7, 0),
        WreathE((shift_gen(5, "right"),) * 7, 0),
        WreathE((identity(inner),) * 7, 7),
    ]
    found = [g in gens for g in expected]
    ok = beta1(w) == 5 and len(gens) == 5 and all(found)
    verdict(2, "beta1 and shift generators of ((Z wr3 Z) x (Z wr5 Z)) wr7 Z", ok,
            f"beta1={beta1(w)}, {len(gens)} generators, multipliers 3/5/7 present={found}")


def test_criterion_3_finite_oracle():
    rep, secs = timed(suite_oracle21, configs=100, seed=7)
    A, act = symmetric3(), shift_action(cyclic(4), 2)
    G = build_finite_wreath(A, act)
    brute = {G.labels[i] for i in brute_center(G)}
    s3_ok = brute == formula_center(A, act) == probe_centralizer(A, act, G) and len(brute) == 2
    secs_total = secs
    d = rep["details"]
    ok = rep["pass"] and rep["trials"] >= 100 and d["non_effective"] > 0 and s3_ok and secs_total < 120
    orders = [c["config"]["order"] for c in d["configs"]]
    verdict(3, "brute center = formula center = probe centralizer", ok,
            f"{d['agreements']}/{rep['trials']} configs agree ({d['non_effective']} non-effective, "
            f"orders {min(orders)}..{max(orders)}), S3/Z2/Z4 center size {len(brute)}, "
            f"{secs_total:.1f}s (limit 120s)")


def test_criterion_4_commutator_subgroup():
    rep, secs = timed(suite_cs, words=CS_WORDS, bound=3, length=8, trials=10 ** 4,
                      witness_trials=10 ** 3, seed=0)
    rows = rep["details"]["words"]
    sizes_ok = all(r["soundness_trials"] == 10 ** 4 and r["completeness_trials"] == 10 ** 3
                   and r["equivalence_trials"] == 10 ** 4 for r in rows)
    ok = rep["pass"] and sizes_ok and secs < 60
    verdict(4, "commutator subgroup characterization and witnesses", ok,
            f"{len(rows)} words, 10^4 sound / 10^3 witness / 10^4 equivalence each, "
            f"{len(rep['failures'])} counterexamples, {secs:.1f}s (limit 60s)")


def test_criterion_5_abelianization_homomorphism():
    rep, secs = timed(suite_com, max_len=5, max_arity=4, trials=10 ** 4, seed=0)
    verdict(5, "abelianize(xy) = abelianize(x) + abelianize(y)", rep["pass"],
            f"{rep['details']['words']} words (l<=5, arity<=4) x 10^4 pairs, "
            f"{len(rep['failures'])} failures, {secs:.1f}s")


def test_criterion_6_group_axioms():
    rep, secs = timed(suite_axioms, max_len=5, max_arity=4, trials=10 ** 4, seed=0,
                      closed_form_trials=10 ** 3)
    d = rep["details"]
    verdict(6, "associativity, identity, inverse; closed-form commutator", rep["pass"],
            f"{d['words']} words x 10^4 triples, closed form on {d['closed_form_words']} wreath "
            f"words x 10^3 pairs, {len(rep['failures'])} failures, {secs:.1f}s")


def test_criterion_7_parser():
    rep, secs = timed(suite_parser, max_len=6, max_arity=5, element_len=4, element_arity=4,
                      trials=10 ** 3, seed=0)
    d = rep["details"]
    verdict(7, "parse(print(x)) = x; normalize idempotent and beta1-preserving", rep["pass"],
            f"{d['words']} words (l<=6), {d['element_words']} words (l<=4) x 10^3 elements, "
            f"{len(rep['failures'])} failures, {secs:.1f}s")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
