"""Centers, commutator subgroups and abelianization for groups given by words.

For ``G = A wr_n Z``:

* the center is ``{(a, ..., a; n k) : a in Z(A)}``;
* ``[G, G]`` is ``{(g_0, ..., g_{n-1}; 0) : g_0 ... g_{n-1} in [A, A]}``;
* ``(g; k) -> (abelianize(g_0 ... g_{n-1}), k)`` is the abelianization.

Direct products split componentwise, so for every word ``w`` the center and
the abelianization are free abelian of rank ``beta1(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .element import (
    Element, ElementTypeError, IntE, PairE, TrivE, WreathE, commutator,
    embed_coordinate, identity, inverse, multiply,
)
from .word import GroupWord, Prod, Triv, Wreath, Zed, beta1

__all__ = [
    "AbelianVector", "CommutatorWitness", "NotACommutatorError",
    "is_central", "center_generators", "abelianize", "is_commutator_element",
    "commutator_witness", "integer_rank", "format_vector", "product_of",
]

AbelianVector = tuple[int, ...]


class NotACommutatorError(ValueError):
    """The element is not in the commutator subgroup."""


@dataclass(frozen=True)
class CommutatorWitness:
    """Pairs ``(x_i, y_i)`` with ``[x_1, y_1] ... [x_m, y_m]`` equal to the target."""

    pairs: tuple[tuple[Element, Element], ...] = field(default=())

    def evaluate(self, w: GroupWord) -> Element:
        result = identity(w)
        for x, y in self.pairs:
            result = multiply(w, result, commutator(w, x, y))
        return result

    def __len__(self) -> int:
        return len(self.pairs)


def _check(cond: bool, w: GroupWord, x: object) -> None:
    if not cond:
        raise ElementTypeError(f"element {x!r} does not match word {w!r}")


def product_of(w: GroupWord, xs: Sequence[Element]) -> Element:
    """Ordered product ``xs[0] xs[1] ...``; the identity for an empty sequence."""
    if not xs:
        return identity(w)
    acc = xs[0]
    for x in xs[1:]:
        acc = multiply(w, acc, x)
    return acc


def is_central(w: GroupWord, x: Element) -> bool:
    if isinstance(w, Triv):
        _check(isinstance(x, TrivE), w, x)
        return True
    if isinstance(w, Zed):
        _check(isinstance(x, IntE), w, x)
        return True
    if isinstance(w, Prod):
        _check(isinstance(x, PairE), w, x)
        return is_central(w.left, x.a) and is_central(w.right, x.b)
    _check(isinstance(x, WreathE) and len(x.coords) == w.arity, w, x)
    if beta1(w.base) == 0:
        # trivial base: the whole group is Z
        return True
    if x.shift % w.arity:
        return False
    first = x.coords[0]
    if any(c != first for c in x.coords[1:]):
        return False
    return is_central(w.base, first)


def center_generators(w: GroupWord) -> list[Element]:
    """``beta1(w)`` central elements generating a free abelian subgroup of full rank.

    A wreath ``A wr_n Z`` contributes the diagonal ``(g, ..., g; 0)`` of each
    generator ``g`` of ``Z(A)`` and the shift power ``(e, ..., e; n)``. A
    trivial base makes the group Z itself, generated by ``(e, ..., e; 1)``.
    """
    if isinstance(w, Triv):
        return []
    if isinstance(w, Zed):
        return [IntE(1)]
    if isinstance(w, Prod):
        ea, eb = identity(w.left), identity(w.right)
        return ([PairE(g, eb) for g in center_generators(w.left)]
                + [PairE(ea, g) for g in center_generators(w.right)])
    gens: list[Element] = [WreathE((g,) * w.arity, 0) for g in center_generators(w.base)]
    step = w.arity if beta1(w.base) else 1
    gens.append(WreathE((identity(w.base),) * w.arity, step))
    return gens


def abelianize(w: GroupWord, x: Element) -> AbelianVector:
    """Image of ``x`` in ``Z^beta1(w)``.

    Slots follow the Z symbols of the word left to right; a wreath's own
    slot comes after the slots of its base.
    """
    if isinstance(w, Triv):
        _check(isinstance(x, TrivE), w, x)
        return ()
    if isinstance(w, Zed):
        _check(isinstance(x, IntE), w, x)
        return (x.k,)
    if isinstance(w, Prod):
        _check(isinstance(x, PairE), w, x)
        return abelianize(w.left, x.a) + abelianize(w.right, x.b)
    _check(isinstance(x, WreathE) and len(x.coords) == w.arity, w, x)
    return abelianize(w.base, product_of(w.base, x.coords)) + (x.shift,)


def is_commutator_element(w: GroupWord, x: Element) -> bool:
    if isinstance(w, Triv):
        _check(isinstance(x, TrivE), w, x)
        return True
    if isinstance(w, Zed):
        _check(isinstance(x, IntE), w, x)
        return x.k == 0
    if isinstance(w, Prod):
        _check(isinstance(x, PairE), w, x)
        return is_commutator_element(w.left, x.a) and is_commutator_element(w.right, x.b)
    _check(isinstance(x, WreathE) and len(x.coords) == w.arity, w, x)
    return x.shift == 0 and is_commutator_element(w.base, product_of(w.base, x.coords))


def commutator_witness(w: GroupWord, x: Element) -> CommutatorWitness:
    """Write ``x`` in ``[G, G]`` as an explicit product of commutators.

    In a wreath, ``(g_0, ..., g_{n-1}; 0)`` is reduced to
    ``(g_0 ... g_{n-1}, e, ..., e; 0)`` by folding coordinate ``j`` into
    ``j - 1`` for ``j = n-1, ..., 1``. Each fold is one commutator
    ``[(G^-1 at j-1; 1), (G at j-1; 0)]`` = ``(G^-1 at j-1, G at j; 0)``,
    where ``G = g_j ... g_{n-1}``. The remaining first coordinate is
    handled recursively in the base and embedded at coordinate 0.
    """
    if not is_commutator_element(w, x):
        raise NotACommutatorError(f"{x!r} is not in the commutator subgroup of {w!r}")
    return CommutatorWitness(tuple(_witness(w, x)))


def _witness(w: GroupWord, x: Element) -> list[tuple[Element, Element]]:
    if isinstance(w, (Triv, Zed)):
        return []
    if isinstance(w, Prod):
        ea, eb = identity(w.left), identity(w.right)
        pairs = [(PairE(u, eb), PairE(v, eb)) for u, v in _witness(w.left, x.a)]
        pairs += [(PairE(ea, u), PairE(ea, v)) for u, v in _witness(w.right, x.b)]
        return pairs
    base, n = w.base, w.arity
    e = identity(base)
    # suffix[j] = g_j ... g_{n-1}
    suffix = [e] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = multiply(base, x.coords[j], suffix[j + 1])
    folds = []
    for j in range(1, n):
        g = suffix[j]
        if g == e:
            continue
        c = embed_coordinate(w, inverse(base, g), j - 1, shift=1)
        d = embed_coordinate(w, g, j - 1)
        folds.append((c, d))
    head = [(embed_coordinate(w, u), embed_coordinate(w, v)) for u, v in _witness(base, suffix[0])]
    return head + folds


def integer_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination; exact on ints."""
    rows = [list(r) for r in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix rows must have equal length")
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            f = ri[col]
            for j in range(col, ncols):
                ri[j] = (p * ri[j] - f * rows[rank][j]) // prev
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def format_vector(v: AbelianVector) -> str:
    return "[" + ", ".join(str(k) for k in v) + "]"
