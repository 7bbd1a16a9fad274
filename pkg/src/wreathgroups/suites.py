"""Verification suites behind ``grp verify``.

Each suite returns a JSON-ready report::

    {"suite": str, "trials": int, "failures": [{"input", "expected", "got"}],
     "pass": bool, "details": {...}}

Reports hold no timings, so equal arguments give byte-identical JSON.
"""

from __future__ import annotations

import inspect
import random
from collections import Counter
from typing import Callable, Sequence

import numpy as np

from .analysis import (
    abelianize, center_generators, format_vector, integer_rank, is_central,
)
from .element import (
    commutator_closed_form, inverse, multiply, parse_element, print_element, random_element,
)
from .oracle import ball_commutator_check, run_oracle21
from .packed import PackedGroup
from .word import (
    GroupWord, Wreath, beta1, enumerate_words, normalize, parse_word, print_word, word_length,
)

__all__ = [
    "suite_zc", "suite_axioms", "suite_com", "suite_cs", "suite_oracle21",
    "suite_parser", "run_suite", "SUITES", "DEFAULT_CS_WORDS",
]

DEFAULT_CS_WORDS = ["Z wr2 Z", "Z wr3 Z", "Z wr4 Z", "Z wr5 Z", "(Z wr2 Z) wr3 Z", "(Z x Z) wr4 Z"]

# spot checks of the packed engine against the symbolic one, per word
CROSS_SAMPLES = 2


def _report(suite: str, trials: int, failures: list, details: dict) -> dict:
    return {"suite": suite, "trials": trials, "failures": failures,
            "pass": not failures, "details": details}


def _seed_for(seed: int, *parts) -> int:
    # stable across runs and platforms, unlike hash()
    s = f"{seed}:" + ":".join(map(str, parts))
    h = 1469598103934665603
    for ch in s.encode():
        h = ((h ^ ch) * 1099511628211) % 2 ** 64
    return h


def suite_zc(max_len: int = 6, max_arity: int = 5) -> dict:
    """Center rank equals abelianization rank equals beta1, word by word."""
    failures = []
    rows: Counter = Counter()
    words = enumerate_words(max_len, max_arity)
    for w in words:
        b = beta1(w)
        gens = center_generators(w)
        central = all(is_central(w, g) for g in gens)
        rank = integer_rank([abelianize(w, g) for g in gens]) if gens else 0
        rows[(b, len(gens), rank)] += 1
        if not (len(gens) == b == rank and central):
            failures.append({"input": print_word(w), "expected": b,
                             "got": {"generators": len(gens), "rank": rank, "central": central}})
    table = [{"beta1": b, "words": c, "generators": g, "rank": r}
             for (b, g, r), c in sorted(rows.items())]
    return _report("zc", len(words), failures,
                   {"max_len": max_len, "max_arity": max_arity, "rank_table": table})


def _row_failure(g: PackedGroup, what: str, inputs: dict, expected, got) -> dict:
    w = g.word
    show = lambda row: print_element(w, g.unpack(row[None, :])[0])  # noqa: E731
    return {"input": {"word": print_word(w), "law": what, **{k: show(v) for k, v in inputs.items()}},
            "expected": show(expected), "got": show(got)}


def _first_bad(a: np.ndarray, b: np.ndarray) -> int | None:
    bad = np.flatnonzero(np.any(a != b, axis=1))
    return int(bad[0]) if bad.size else None


def _cross_check(w: GroupWord, g: PackedGroup, rng: random.Random, bound: int) -> list:
    """Packed and symbolic arithmetic must agree exactly."""
    failures = []
    xs = [random_element(w, bound, rng) for _ in range(CROSS_SAMPLES)]
    ys = [random_element(w, bound, rng) for _ in range(CROSS_SAMPLES)]
    px, py = g.pack(xs), g.pack(ys)
    checks = [
        ("mul", g.unpack(g.mul(px, py)), [multiply(w, x, y) for x, y in zip(xs, ys)]),
        ("inv", g.unpack(g.inv(px)), [inverse(w, x) for x in xs]),
        ("abelianize", [tuple(r) for r in g.abelianize(px).tolist()], [abelianize(w, x) for x in xs]),
    ]
    if isinstance(w, Wreath):
        checks.append(("closed-form", g.unpack(g.comm_closed(px, py)),
                       [commutator_closed_form(w, x, y) for x, y in zip(xs, ys)]))
    for name, got, want in checks:
        if got != want:
            failures.append({"input": {"word": print_word(w), "law": f"packed-vs-symbolic {name}"},
                             "expected": repr(want), "got": repr(got)})
    return failures


def suite_axioms(max_len: int = 5, max_arity: int = 4, trials: int = 10000, seed: int = 0,
                 bound: int = 8, closed_form_trials: int = 1000) -> dict:
    """Associativity, identity and inverse laws on random triples for every word,
    plus the closed-form wreath commutator against the multiplied one."""
    failures: list = []
    words = enumerate_words(max_len, max_arity)
    closed_words = 0
    for i, w in enumerate(words):
        g = PackedGroup(w)
        rng = np.random.default_rng(_seed_for(seed, "axioms", i))
        x, y, z = (g.random(rng, trials, bound) for _ in range(3))
        e = g.identity(trials)
        lhs, rhs = g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z))
        checks = [("associativity", lhs, rhs, {"x": x, "y": y, "z": z}),
                  ("left identity", g.mul(e, x), x, {"x": x}),
                  ("right identity", g.mul(x, e), x, {"x": x})]
        xi = g.inv(x)
        checks += [("right inverse", g.mul(x, xi), e, {"x": x}),
                   ("left inverse", g.mul(xi, x), e, {"x": x})]
        if isinstance(w, Wreath):
            closed_words += 1
            m = min(trials, closed_form_trials)
            checks.append(("closed-form commutator", g.comm_closed(x[:m], y[:m]),
                           g.comm(x[:m], y[:m]), {"x": x[:m], "y": y[:m]}))
        for law, got, want, inputs in checks:
            k = _first_bad(got, want)
            if k is not None:
                failures.append(_row_failure(g, law, {n: v[k] for n, v in inputs.items()},
                                             want[k], got[k]))
        failures += _cross_check(w, g, random.Random(_seed_for(seed, "axioms-x", i)), bound)
    return _report("axioms", trials * len(words), failures,
                   {"words": len(words), "trials_per_word": trials, "bound": bound,
                    "closed_form_words": closed_words,
                    "by_length": _by_length(words, failures)})


def suite_com(max_len: int = 5, max_arity: int = 4, trials: int = 10000, seed: int = 0,
              bound: int = 8) -> dict:
    """abelianize(x y) == abelianize(x) + abelianize(y) on random pairs."""
    failures: list = []
    words = enumerate_words(max_len, max_arity)
    for i, w in enumerate(words):
        g = PackedGroup(w)
        rng = np.random.default_rng(_seed_for(seed, "com", i))
        x, y = g.random(rng, trials, bound), g.random(rng, trials, bound)
        got = g.abelianize(g.mul(x, y))
        want = g.abelianize(x) + g.abelianize(y)
        k = _first_bad(got, want) if got.shape[1] else None
        if k is not None:
            w_txt = print_word(w)
            xe, ye = g.unpack(x[k:k + 1])[0], g.unpack(y[k:k + 1])[0]
            failures.append({"input": {"word": w_txt, "x": print_element(w, xe), "y": print_element(w, ye)},
                             "expected": format_vector(tuple(want[k].tolist())),
                             "got": format_vector(tuple(got[k].tolist()))})
        failures += _cross_check(w, g, random.Random(_seed_for(seed, "com-x", i)), bound)
    return _report("com", trials * len(words), failures,
                   {"words": len(words), "trials_per_word": trials, "bound": bound,
                    "by_length": _by_length(words, failures)})


def _by_length(words: Sequence[GroupWord], failures: list) -> list[dict]:
    bad = Counter()
    for f in failures:
        inp = f["input"]
        if isinstance(inp, dict) and "word" in inp:
            bad[word_length(parse_word(inp["word"]))] += 1
    counts = Counter(word_length(w) for w in words)
    return [{"length": n, "words": c, "failing_words": bad[n]} for n, c in sorted(counts.items())]


def suite_cs(words: Sequence[str] | None = None, bound: int = 3, length: int = 8,
             trials: int = 10000, witness_trials: int = 1000, seed: int = 0) -> dict:
    """Bounded-ball check of the commutator-subgroup characterization."""
    words = list(words or DEFAULT_CS_WORDS)
    failures, rows = [], []
    total = 0
    for i, text in enumerate(words):
        w = parse_word(text)
        rep = ball_commutator_check(w, bound, length, trials, witness_trials,
                                    seed=_seed_for(seed, "cs", i))
        total += rep.soundness_trials + rep.completeness_trials + rep.equivalence_trials
        d = rep.to_dict()
        rows.append({k: v for k, v in d.items() if k != "counterexamples"}
                    | {"counterexamples": len(rep.counterexamples)})
        failures += [{"input": {"word": rep.word, **c}, "expected": "in [G,G] with verified witness",
                      "got": c["kind"] + " failure"} for c in rep.counterexamples]
    return _report("cs", total, failures, {"words": rows})


def suite_oracle21(configs: int = 100, seed: int = 0) -> dict:
    return run_oracle21(configs, seed)


def suite_parser(max_len: int = 6, max_arity: int = 5, element_len: int = 4,
                 element_arity: int = 4, trials: int = 1000, seed: int = 0, bound: int = 8) -> dict:
    """Word and element text round trips; normalize is idempotent and keeps beta1."""
    failures = []
    words = enumerate_words(max_len, max_arity)
    for w in words:
        text = print_word(w)
        back = parse_word(text)
        if back != w:
            failures.append({"input": text, "expected": repr(w), "got": repr(back)})
        nw = normalize(w)
        if normalize(nw) != nw or beta1(nw) != beta1(w):
            failures.append({"input": text, "expected": "idempotent, same beta1",
                             "got": print_word(nw)})
    element_words = enumerate_words(element_len, element_arity)
    for i, w in enumerate(element_words):
        rng = random.Random(_seed_for(seed, "parser", i))
        for _ in range(trials):
            x = random_element(w, bound, rng)
            text = print_element(w, x)
            if parse_element(w, text) != x:
                failures.append({"input": {"word": print_word(w), "element": text},
                                 "expected": text, "got": repr(parse_element(w, text))})
                break
    return _report("parser", len(words) + trials * len(element_words), failures,
                   {"words": len(words), "element_words": len(element_words),
                    "elements_per_word": trials})


SUITES: dict[str, Callable[..., dict]] = {
    "zc": suite_zc,
    "axioms": suite_axioms,
    "cs": suite_cs,
    "com": suite_com,
    "oracle21": suite_oracle21,
    "parser": suite_parser,
}


def run_suite(name: str, **kwargs) -> dict:
    """Run one suite, or every suite for ``"all"``.

    Keyword arguments a suite does not take are ignored, so one flag set can
    drive ``all``.
    """
    if name == "all":
        reports = [run_suite(n, **kwargs) for n in SUITES]
        return {"suite": "all", "trials": sum(r["trials"] for r in reports),
                "failures": [f | {"suite": r["suite"]} for r in reports for f in r["failures"]],
                "pass": all(r["pass"] for r in reports),
                "details": {"suites": reports}}
    fn = SUITES[name]
    accepted = inspect.signature(fn).parameters
    return fn(**{k: v for k, v in kwargs.items() if k in accepted and v is not None})

