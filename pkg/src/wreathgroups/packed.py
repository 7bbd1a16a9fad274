"""Batched arithmetic on elements packed into flat int64 rows.

Every element of a word's group is a fixed-length integer vector: ``Zed``
holds one slot, ``Triv`` none, ``Prod`` concatenates its factors, and
``base wr_n Z`` stores ``n`` base blocks followed by the shift. A batch is a
2-D array with one element per row, so a whole sample of elements is
multiplied with a handful of numpy calls per node of the word.

The packing is a bijection with :mod:`wreathgroups.element`; row equality is
structural equality of elements. Values are bounded by ``2**62`` and an
:class:`OverflowError` is raised instead of wrapping.
"""

from __future__ import annotations

import numpy as np

from .element import TRIV_E, Element, IntE, PairE, TrivE, WreathE
from .word import GroupWord, Prod, Triv, Wreath, Zed

__all__ = ["PackedGroup"]

LIMIT = 2 ** 62


def _guard(a: np.ndarray) -> np.ndarray:
    if a.size and np.abs(a).max() >= LIMIT:
        raise OverflowError("packed integer entry exceeds 2**62")
    return a


class _Node:
    size: int
    rank: int

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray: ...
    def inv(self, x: np.ndarray) -> np.ndarray: ...
    def ab(self, x: np.ndarray) -> np.ndarray: ...
    def pack(self, e: Element, out: list[int]) -> None: ...
    def unpack(self, row, pos: int) -> tuple[Element, int]: ...


class _Triv(_Node):
    size = 0
    rank = 0

    def mul(self, x, y):
        return x

    def inv(self, x):
        return x

    def ab(self, x):
        return x[:, :0]

    def pack(self, e, out):
        if not isinstance(e, TrivE):
            raise TypeError(f"expected TrivE, got {e!r}")

    def unpack(self, row, pos):
        return TRIV_E, pos


class _Zed(_Node):
    size = 1
    rank = 1

    def mul(self, x, y):
        return _guard(x + y)

    def inv(self, x):
        return -x

    def ab(self, x):
        return x

    def pack(self, e, out):
        if not isinstance(e, IntE):
            raise TypeError(f"expected IntE, got {e!r}")
        out.append(e.k)

    def unpack(self, row, pos):
        return IntE(int(row[pos])), pos + 1


class _Prod(_Node):
    def __init__(self, left: _Node, right: _Node):
        self.left, self.right = left, right
        self.size = left.size + right.size
        self.rank = left.rank + right.rank
        self.cut = left.size

    def mul(self, x, y):
        c = self.cut
        return np.concatenate(
            [self.left.mul(x[:, :c], y[:, :c]), self.right.mul(x[:, c:], y[:, c:])], axis=1)

    def inv(self, x):
        c = self.cut
        return np.concatenate([self.left.inv(x[:, :c]), self.right.inv(x[:, c:])], axis=1)

    def ab(self, x):
        c = self.cut
        return np.concatenate([self.left.ab(x[:, :c]), self.right.ab(x[:, c:])], axis=1)

    def pack(self, e, out):
        if not isinstance(e, PairE):
            raise TypeError(f"expected PairE, got {e!r}")
        self.left.pack(e.a, out)
        self.right.pack(e.b, out)

    def unpack(self, row, pos):
        a, pos = self.left.unpack(row, pos)
        b, pos = self.right.unpack(row, pos)
        return PairE(a, b), pos


class _Wreath(_Node):
    def __init__(self, base: _Node, n: int):
        self.base, self.n = base, n
        self.size = n * base.size + 1
        self.rank = base.rank + 1

    def split(self, x):
        m = x.shape[0]
        return x[:, :-1].reshape(m, self.n, self.base.size), x[:, -1]

    def join(self, coords, shift):
        m = coords.shape[0]
        return np.concatenate([coords.reshape(m, -1), shift[:, None]], axis=1)

    def gather(self, coords, idx):
        # coords[r, idx[r, i], :] for every row r and position i
        return coords[np.arange(coords.shape[0])[:, None], idx]

    def on_base(self, fn, *blocks):
        m = blocks[0].shape[0]
        s = self.base.size
        flat = [b.reshape(m * self.n, s) for b in blocks]
        return fn(*flat).reshape(m, self.n, s)

    def mul(self, x, y):
        a, k = self.split(x)
        b, p = self.split(y)
        shift = _guard(k + p)
        if self.base.size == 0:
            return self.join(a, shift)
        idx = (np.arange(self.n)[None, :] + p[:, None]) % self.n
        coords = self.on_base(self.base.mul, self.gather(a, idx), b)
        return self.join(coords, shift)

    def inv(self, x):
        a, k = self.split(x)
        if self.base.size == 0:
            return self.join(a, -k)
        idx = (np.arange(self.n)[None, :] - k[:, None]) % self.n
        coords = self.on_base(self.base.inv, self.gather(a, idx))
        return self.join(coords, -k)

    def ab(self, x):
        a, k = self.split(x)
        acc = a[:, 0, :]
        for i in range(1, self.n):
            acc = self.base.mul(acc, a[:, i, :])
        return np.concatenate([self.base.ab(acc), k[:, None]], axis=1)

    def pack(self, e, out):
        if not isinstance(e, WreathE) or len(e.coords) != self.n:
            raise TypeError(f"expected WreathE with {self.n} coordinates, got {e!r}")
        for c in e.coords:
            self.base.pack(c, out)
        out.append(e.shift)

    def unpack(self, row, pos):
        coords = []
        for _ in range(self.n):
            c, pos = self.base.unpack(row, pos)
            coords.append(c)
        return WreathE(tuple(coords), int(row[pos])), pos + 1


def _build(w: GroupWord) -> _Node:
    if isinstance(w, Triv):
        return _Triv()
    if isinstance(w, Zed):
        return _Zed()
    if isinstance(w, Prod):
        return _Prod(_build(w.left), _build(w.right))
    if isinstance(w, Wreath):
        return _Wreath(_build(w.base), w.arity)
    raise TypeError(f"not a group word: {w!r}")


class PackedGroup:
    """Vectorized group law for the word ``w``.

    >>> from wreathgroups.word import parse_word
    >>> g = PackedGroup(parse_word("Z wr2 Z"))
    >>> g.mul(np.array([[1, 2, 0]]), np.array([[0, 0, 1]])).tolist()
    [[2, 1, 1]]
    """

    def __init__(self, w: GroupWord):
        self.word = w
        self.root = _build(w)
        self.size = self.root.size
        self.rank = self.root.rank

    def _batch(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if x.ndim != 2 or x.shape[1] != self.size:
            raise ValueError(f"expected shape (m, {self.size}), got {x.shape}")
        return _guard(x)

    def identity(self, m: int = 1) -> np.ndarray:
        return np.zeros((m, self.size), dtype=np.int64)

    def random(self, rng: np.random.Generator, m: int, bound: int) -> np.ndarray:
        """``m`` elements with every slot uniform on ``[-bound, bound]``."""
        return rng.integers(-bound, bound + 1, size=(m, self.size), dtype=np.int64)

    def mul(self, x, y) -> np.ndarray:
        return self.root.mul(self._batch(x), self._batch(y))

    def inv(self, x) -> np.ndarray:
        return self.root.inv(self._batch(x))

    def comm(self, x, y) -> np.ndarray:
        x, y = self._batch(x), self._batch(y)
        r = self.root
        return r.mul(r.mul(r.mul(x, y), r.inv(x)), r.inv(y))

    def comm_closed(self, x, y) -> np.ndarray:
        """Coordinatewise commutator ``a[i-l] b[i-l-p] a[i-l-p]^-1 b[i-p]^-1``
        for a wreath word; see :func:`element.commutator_closed_form`."""
        node = self.root
        if not isinstance(node, _Wreath):
            raise TypeError("closed-form commutator is defined for wreath words only")
        x, y = self._batch(x), self._batch(y)
        a, l = node.split(x)
        b, p = node.split(y)
        m = x.shape[0]
        if node.base.size == 0:
            return node.join(a, np.zeros(m, dtype=np.int64))
        i = np.arange(node.n)[None, :]
        n = node.n
        bm, bi = node.base.mul, node.base.inv
        t1 = node.gather(a, (i - l[:, None]) % n)
        t2 = node.gather(b, (i - l[:, None] - p[:, None]) % n)
        t3 = node.on_base(bi, node.gather(a, (i - l[:, None] - p[:, None]) % n))
        t4 = node.on_base(bi, node.gather(b, (i - p[:, None]) % n))
        c = node.on_base(bm, t1, t2)
        c = node.on_base(bm, c, t3)
        c = node.on_base(bm, c, t4)
        return node.join(c, np.zeros(m, dtype=np.int64))

    def abelianize(self, x) -> np.ndarray:
        return self.root.ab(self._batch(x))

    def pack(self, elements) -> np.ndarray:
        rows = []
        for e in elements:
            out: list[int] = []
            self.root.pack(e, out)
            rows.append(out)
        return self._batch(np.array(rows, dtype=np.int64).reshape(len(rows), self.size))

    def unpack(self, x) -> list[Element]:
        out = []
        for row in self._batch(x):
            e, _ = self.root.unpack(row, 0)
            out.append(e)
        return out
