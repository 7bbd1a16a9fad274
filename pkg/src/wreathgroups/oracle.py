"""Brute-force checks on finite wreath products and bounded balls.

Finite side: a group is a Cayley table with the identity at index 0. For a
finite group ``B`` acting on ``X = {0, ..., |X|-1}`` through ``perm`` (with
``perm[b1 b2] = perm[b1] o perm[b2]``), the wreath product ``A Wr_X B`` has
elements ``(f, b)`` with ``f: X -> A`` and product

    (f1, b1) (f2, b2) = ((f1 o perm[b2]) * f2, b1 b2).

Its center is compared three ways: a definitional table scan, the
closed-form description (``f`` constant on orbits with values in ``Z(A)``,
``b`` in ``ker perm`` and ``Z(B)``), and the centralizer of the probe
elements ``(g_{y,c}, p)``.

Infinite side: :func:`ball_commutator_check` samples bounded elements of a
wreath word over ``Z`` and checks the commutator-subgroup characterization.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Sequence

import numpy as np

from .analysis import abelianize, commutator_witness, is_commutator_element, product_of
from .element import (
    Element, WreathE, commutator, identity, inverse, multiply, print_element, random_element,
)
from .word import GroupWord, Wreath, print_word

__all__ = [
    "FiniteGroup", "WreathAction", "FiniteWreathElement", "SizeCapError",
    "cyclic", "from_permutations", "direct_product", "symmetric3", "dihedral4",
    "klein4", "CATALOG", "A_CATALOG", "B_CATALOG",
    "build_finite_wreath", "orbits", "brute_center", "formula_center",
    "probe_centralizer", "homomorphisms", "shift_action", "random_configuration",
    "check_configuration", "run_oracle21", "ball_commutator_check", "BallReport",
]

WREATH_ORDER_CAP = 10 ** 6
# full Cayley tables beyond this order do not fit in memory
TABLE_ORDER_CAP = 4096
FULL_ASSOCIATIVITY_ORDER = 64


class SizeCapError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteWreathElement:
    f: tuple[int, ...]
    b: int


class FiniteGroup:
    """Finite group given by its Cayley table; index 0 is the identity.

    The table is checked to be a Latin square with identity row/column 0;
    associativity is checked exhaustively up to order 64 and on a random
    sample of triples above that.
    """

    def __init__(self, table, name: str = "G", labels: Sequence[Any] | None = None,
                 validate: bool = True):
        self.table = np.asarray(table, dtype=np.int32)
        self.name = name
        self.labels = list(labels) if labels is not None else None
        if validate:
            self.validate()
        self.inverse = np.argmax(self.table == 0, axis=1).astype(np.int32)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def validate(self, samples: int = 20000, seed: int = 0) -> None:
        t = self.table
        n = t.shape[0]
        if t.ndim != 2 or t.shape != (n, n) or n == 0:
            raise ValueError("Cayley table must be a non-empty square array")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise ValueError("index 0 is not a two-sided identity")
        srt = np.sort(t, axis=1)
        if not (np.all(srt == ar) and np.all(np.sort(t, axis=0) == ar[:, None])):
            raise ValueError("Cayley table is not a Latin square")
        if n <= FULL_ASSOCIATIVITY_ORDER:
            left = t[t[:, :, None], ar[None, None, :]]   # (ab)c
            right = t[ar[:, None, None], t[None, :, :]]  # a(bc)
            ok = np.array_equal(left, right)
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, samples))
            ok = np.array_equal(t[t[a, b], c], t[a, t[b, c]])
        if not ok:
            raise ValueError("Cayley table is not associative")


def from_permutations(gens: Sequence[Sequence[int]], name: str) -> FiniteGroup:
    """Closure of permutation generators; product is composition ``p o q``."""
    degree = len(gens[0])
    e = tuple(range(degree))
    elems = [e]
    index = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in index:
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    table = [[index[tuple(p[q[i]] for i in range(degree))] for q in elems] for p in elems]
    return FiniteGroup(table, name, labels=elems)


def cyclic(n: int) -> FiniteGroup:
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, f"Z{n}", labels=list(range(n)))


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    m = h.order
    idx = np.arange(g.order * m)
    gi, hi = idx // m, idx % m
    table = g.table[gi[:, None], gi[None, :]] * m + h.table[hi[:, None], hi[None, :]]
    return FiniteGroup(table, name or f"{g.name}x{h.name}")


def symmetric3() -> FiniteGroup:
    return from_permutations([(1, 0, 2), (1, 2, 0)], "S3")


def dihedral4() -> FiniteGroup:
    """Symmetries of a square, order 8."""
    return from_permutations([(1, 2, 3, 0), (0, 3, 2, 1)], "D4")


def klein4() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), "Z2xZ2")


CATALOG: dict[str, Callable[[], FiniteGroup]] = {
    **{f"Z{n}": (lambda n=n: cyclic(n)) for n in range(1, 9)},
    "S3": symmetric3,
    "D4": dihedral4,
    "Z2xZ2": klein4,
}
A_CATALOG = ["Z2", "Z3", "Z4", "Z6", "Z8", "S3", "D4", "Z2xZ2"]
B_CATALOG = [f"Z{n}" for n in range(1, 9)] + ["S3", "D4", "Z2xZ2"]


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroup:
    return CATALOG[name]()


class WreathAction:
    """Action of a finite group on ``{0, ..., set_size-1}``.

    ``perm[b][x]`` is the image of ``x`` under ``b``; the map must be a
    homomorphism into the symmetric group under composition.
    """

    def __init__(self, group: FiniteGroup, set_size: int, perm, validate: bool = True):
        self.group = group
        self.set_size = set_size
        self.perm = np.asarray(perm, dtype=np.int64).reshape(group.order, set_size)
        if validate:
            self.validate()

    def validate(self) -> None:
        p, k, t = self.perm, self.set_size, self.group.table
        if k < 1:
            raise ValueError("the set acted on must be non-empty")
        if not np.all(np.sort(p, axis=1) == np.arange(k)):
            raise ValueError("every group element must act by a permutation")
        if not np.array_equal(p[0], np.arange(k)):
            raise ValueError("the identity must act trivially")
        nb = self.group.order
        composed = p[np.arange(nb)[:, None, None], p[None, :, :]]
        if not np.array_equal(p[t], composed):
            raise ValueError("action is not a homomorphism")

    def kernel(self) -> list[int]:
        return [b for b in range(self.group.order) if np.array_equal(self.perm[b], np.arange(self.set_size))]

    def is_effective(self) -> bool:
        return len(self.kernel()) == 1

    def describe(self) -> dict:
        return {"B": self.group.name, "X": self.set_size,
                "perm": self.perm.tolist(), "effective": self.is_effective()}


def shift_action(group: FiniteGroup, set_size: int) -> WreathAction:
    """Cyclic group ``Z_m`` acting on ``Z_k`` by ``b.x = (x + b) mod k``; needs ``k | m``."""
    m = group.order
    if m % set_size:
        raise ValueError("shift action needs the set size to divide the group order")
    perm = [[(x + b) % set_size for x in range(set_size)] for b in range(m)]
    return WreathAction(group, set_size, perm)


def orbits(act: WreathAction) -> list[tuple[int, ...]]:
    """Orbits of the action, each sorted, listed by smallest point."""
    seen: set[int] = set()
    out = []
    for x in range(act.set_size):
        if x in seen:
            continue
        orb = tuple(sorted(set(act.perm[:, x].tolist())))
        seen.update(orb)
        out.append(orb)
    return out


def _wreath_order(a_order: int, act: WreathAction) -> int:
    return a_order ** act.set_size * act.group.order


def _encode(a_order: int, set_size: int, f: Sequence[int], b: int) -> int:
    idx = 0
    for x in reversed(range(set_size)):
        idx = idx * a_order + f[x]
    return b * a_order ** set_size + idx


def _check_caps(A: FiniteGroup, act: WreathAction) -> int:
    order = _wreath_order(A.order, act)
    if order > WREATH_ORDER_CAP:
        raise SizeCapError(f"|A|^|X|*|B| = {order} exceeds {WREATH_ORDER_CAP}")
    return order


def build_finite_wreath(A: FiniteGroup, act: WreathAction, validate: bool = True) -> FiniteGroup:
    """Cayley table of ``A Wr_X B``; labels are :class:`FiniteWreathElement`."""
    order = _check_caps(A, act)
    if order > TABLE_ORDER_CAP:
        raise SizeCapError(f"order {order} too large for a full Cayley table (cap {TABLE_ORDER_CAP})")
    na, k, nb = A.order, act.set_size, act.group.order
    nf = na ** k
    idx = np.arange(order)
    bs = idx // nf
    fs = np.stack([(idx // na ** x) % na for x in range(k)], axis=1)
    powers = na ** np.arange(k)
    at = A.table.astype(np.int64)
    table = np.empty((order, order), dtype=np.int32)
    # (f1 o perm[b2])(x) for every right factor, shape (order, k)
    right_perm = act.perm[bs]
    chunk = max(1, 2 ** 20 // (order * k))
    for start in range(0, order, chunk):
        rows = slice(start, min(order, start + chunk))
        f1 = fs[rows]
        moved = f1[:, right_perm]                          # (r, order, k)
        f = at[moved, fs[None, :, :]]                       # pointwise product in A
        b = act.group.table[bs[rows][:, None], bs[None, :]]
        table[rows] = b * nf + (f * powers).sum(axis=2)
    labels = [FiniteWreathElement(tuple(int(v) for v in fs[i]), int(bs[i])) for i in range(order)]
    name = f"{A.name} Wr_{k} {act.group.name}"
    return FiniteGroup(table, name, labels=labels, validate=validate)


def brute_center(G: FiniteGroup) -> set[int]:
    """Indices commuting with everything, from a full table scan."""
    t = G.table
    return set(np.flatnonzero(np.all(t == t.T, axis=1)).tolist())


def formula_center(A: FiniteGroup, act: WreathAction) -> set[FiniteWreathElement]:
    """Center predicted from orbits, ``Z(A)``, ``Z(B)`` and the kernel of the action."""
    _check_caps(A, act)
    za = sorted(brute_center(A))
    zb = brute_center(act.group)
    bs = [b for b in act.kernel() if b in zb]
    orbs = orbits(act)
    out = set()
    for values in itertools.product(za, repeat=len(orbs)):
        f = [0] * act.set_size
        for orb, v in zip(orbs, values):
            for x in orb:
                f[x] = v
        for b in bs:
            out.add(FiniteWreathElement(tuple(f), b))
    return out


def probe_elements(A: FiniteGroup, act: WreathAction) -> list[int]:
    """Indices of ``(g_{y,c}, p)``: ``c`` at ``y``, identity elsewhere, any ``p``."""
    out = set()
    for y in range(act.set_size):
        for c in range(A.order):
            f = [0] * act.set_size
            f[y] = c
            for p in range(act.group.order):
                out.add(_encode(A.order, act.set_size, f, p))
    return sorted(out)


def probe_centralizer(A: FiniteGroup, act: WreathAction,
                      G: FiniteGroup | None = None) -> set[FiniteWreathElement]:
    """Centralizer of the probe set, by scanning the Cayley table."""
    _check_caps(A, act)
    if G is None:
        G = build_finite_wreath(A, act)
    s = np.array(probe_elements(A, act))
    t = G.table
    hits = np.flatnonzero(np.all(t[:, s] == t[s, :].T, axis=1))
    return {G.labels[i] for i in hits.tolist()}


def _perm_order(p: tuple[int, ...]) -> int:
    e = tuple(range(len(p)))
    q, k = p, 1
    while q != e:
        q = tuple(p[i] for i in q)
        k += 1
    return k


def _element_order(G: FiniteGroup, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = G.mul(x, g)
        k += 1
    return k


def _generators(G: FiniteGroup) -> list[int]:
    """Greedy generating set, highest-order elements first."""
    order = {g: _element_order(G, g) for g in range(G.order)}
    gens: list[int] = []
    span = {0}
    for g in sorted(range(1, G.order), key=lambda g: (-order[g], g)):
        if g in span:
            continue
        gens.append(g)
        span = _closure(G, gens)
        if len(span) == G.order:
            break
    return gens


def _closure(G: FiniteGroup, gens: Sequence[int]) -> set[int]:
    span, frontier = {0}, [0]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = G.mul(h, g)
                if x not in span:
                    span.add(x)
                    nxt.append(x)
        frontier = nxt
    return span


@lru_cache(maxsize=None)
def homomorphisms(group_name: str, set_size: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All actions of a catalog group on ``set_size`` points, as ``perm`` tables."""
    G = catalog_group(group_name)
    gens = _generators(G)
    perms = list(itertools.permutations(range(set_size)))
    orders = {p: _perm_order(p) for p in perms}
    choices = [[p for p in perms if _element_order(G, g) % orders[p] == 0] for g in gens]
    ident = tuple(range(set_size))
    found = []
    for images in itertools.product(*choices):
        image = {0: ident}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for h in frontier:
                ph = image[h]
                for g, pg in zip(gens, images):
                    x = G.mul(h, g)
                    q = tuple(ph[pg[i]] for i in range(set_size))
                    if x in image:
                        if image[x] != q:
                            ok = False
                            break
                    else:
                        image[x] = q
                        nxt.append(x)
                if not ok:
                    break
            frontier = nxt
        if ok:
            found.append(tuple(image[b] for b in range(G.order)))
    return tuple(found)


def random_configuration(rng: random.Random, max_order: int = 2048,
                         non_effective_rate: float = 0.5) -> tuple[FiniteGroup, WreathAction]:
    """Random ``(A, action)`` from the catalogs with ``|A|^|X| |B| <= max_order``.

    About ``non_effective_rate`` of the draws use an action with a
    non-trivial kernel whenever the chosen ``B`` and ``|X|`` admit one.
    """
    while True:
        a_name = rng.choice(A_CATALOG)
        b_name = rng.choice(B_CATALOG)
        k = rng.randint(1, 5)
        A, B = catalog_group(a_name), catalog_group(b_name)
        if A.order ** k * B.order > max_order:
            continue
        homs = homomorphisms(b_name, k)
        ident = tuple(range(k))
        non_eff = [h for h in homs if sum(p == ident for p in h) > 1]
        pool = non_eff if non_eff and rng.random() < non_effective_rate else homs
        return A, WreathAction(B, k, rng.choice(pool))


def check_configuration(A: FiniteGroup, act: WreathAction) -> dict:
    """Compare the three center computations for one configuration."""
    G = build_finite_wreath(A, act)
    center = brute_center(G)
    brute = {G.labels[i] for i in center}
    formula = formula_center(A, act)
    probe = probe_centralizer(A, act, G)
    zi = np.array(sorted(center))
    # the scanned center must itself be a subgroup
    closed = bool(np.isin(G.table[np.ix_(zi, zi)], zi).all())

    def diff(s, t):
        return sorted([list(e.f), e.b] for e in s ^ t)

    return {
        "config": {"A": A.name, **act.describe(), "order": G.order},
        "brute_center_size": len(brute),
        "formula_center_size": len(formula),
        "probe_centralizer_size": len(probe),
        "formula_agrees": formula == brute,
        "probe_agrees": probe == brute,
        "center_closed": closed,
        "counterexamples": {"formula": diff(formula, brute), "probe": diff(probe, brute)},
    }


def run_oracle21(configs: int = 100, seed: int = 0, max_order: int = 2048) -> dict:
    rng = random.Random(seed)
    results, failures = [], []
    for _ in range(configs):
        A, act = random_configuration(rng, max_order)
        r = check_configuration(A, act)
        results.append(r)
        if not (r["formula_agrees"] and r["probe_agrees"] and r["center_closed"]):
            failures.append({"input": r["config"],
                             "expected": r["brute_center_size"],
                             "got": {"formula": r["formula_center_size"],
                                     "probe": r["probe_centralizer_size"],
                                     "counterexamples": r["counterexamples"]}})
    agreements = sum(r["formula_agrees"] and r["probe_agrees"] for r in results)
    return {
        "suite": "oracle21",
        "trials": configs,
        "failures": failures,
        "pass": not failures,
        "details": {
            "agreements": agreements,
            "non_effective": sum(not r["config"]["effective"] for r in results),
            "configs": results,
        },
    }


@dataclass
class BallReport:
    word: str
    coord_bound: int
    length: int
    soundness_trials: int = 0
    completeness_trials: int = 0
    equivalence_trials: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "word": self.word, "coord_bound": self.coord_bound, "length": self.length,
            "soundness_trials": self.soundness_trials,
            "completeness_trials": self.completeness_trials,
            "equivalence_trials": self.equivalence_trials,
            "counterexamples": self.counterexamples, "pass": self.passed,
        }


def random_commutator_element(w: Wreath, bound: int, rng: random.Random) -> WreathE:
    """Random element of ``{(g; 0) : g_0 ... g_{n-1} in [A, A]}``.

    Coordinates 1.. are uniform; coordinate 0 is chosen so that the ordered
    product equals a random product of base commutators.
    """
    base = w.base
    rest = [random_element(base, bound, rng) for _ in range(w.arity - 1)]
    r = identity(base)
    for _ in range(rng.randint(0, 2)):
        r = multiply(base, r, commutator(base, random_element(base, bound, rng),
                                         random_element(base, bound, rng)))
    g0 = multiply(base, r, inverse(base, product_of(base, rest)))
    return WreathE((g0, *rest), 0)


def ball_commutator_check(w: GroupWord, coord_bound: int, length: int,
                          trials: int = 10000, witness_trials: int = 1000,
                          seed: int = 0) -> BallReport:
    """Sample the ball of radius ``coord_bound`` in a wreath word over Z.

    * soundness: products of at most ``length`` random commutators satisfy
      :func:`is_commutator_element`;
    * completeness: random elements meeting the characterization get a
      witness that multiplies back to them exactly;
    * equivalence: on random elements, membership agrees with a zero
      abelianization, and every member found also gets a verified witness.
    """
    if not isinstance(w, Wreath):
        raise ValueError("ball check needs a wreath word")
    if coord_bound < 1 or length < 0:
        raise ValueError("coord_bound must be >= 1 and length >= 0")
    if trials * max(length, 1) > 10 ** 6:
        raise ValueError("trials * length exceeds 10**6 products")
    rng = random.Random(seed)
    report = BallReport(print_word(w), coord_bound, length)
    show = lambda x: print_element(w, x)  # noqa: E731

    def witness_ok(x: Element) -> bool:
        try:
            return commutator_witness(w, x).evaluate(w) == x
        except ValueError:
            return False

    if length == 0:
        e = identity(w)
        report.soundness_trials = 1
        if not is_commutator_element(w, e):
            report.counterexamples.append({"kind": "soundness", "element": show(e)})
        return report

    for _ in range(trials):
        x = identity(w)
        for _ in range(rng.randint(0, length)):
            c = commutator(w, random_element(w, coord_bound, rng), random_element(w, coord_bound, rng))
            x = multiply(w, x, c)
        report.soundness_trials += 1
        if not is_commutator_element(w, x):
            report.counterexamples.append({"kind": "soundness", "element": show(x)})

    for _ in range(witness_trials):
        x = random_commutator_element(w, coord_bound, rng)
        report.completeness_trials += 1
        if not (is_commutator_element(w, x) and witness_ok(x)):
            report.counterexamples.append({"kind": "completeness", "element": show(x)})

    zero = (0,) * len(abelianize(w, identity(w)))
    for _ in range(trials):
        x = random_element(w, coord_bound, rng)
        report.equivalence_trials += 1
        member = is_commutator_element(w, x)
        if member != (abelianize(w, x) == zero):
            report.counterexamples.append({"kind": "equivalence", "element": show(x)})
        elif member and not witness_ok(x):
            report.counterexamples.append({"kind": "completeness", "element": show(x)})
    return report

