"""Symbolic elements of the group presented by a word, with exact arithmetic.

An element of ``base wr_n Z`` is a pair ``(coords, shift)`` with ``n``
coordinates in ``base`` and an unreduced integer shift. The product is

    (a, k) * (b, p) = ([a[(i + p) % n] * b[i] for i in range(n)], k + p)

Text form: ``e`` (trivial), a signed integer (Z), ``<x, y>`` (direct
product), ``(x0, ..., x_{n-1}; k)`` (wreath).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Union

from .word import GroupWord, Prod, Triv, Wreath, Zed

__all__ = [
    "TrivE", "IntE", "PairE", "WreathE", "Element", "ElementTypeError",
    "ElementSyntaxError", "typecheck", "identity", "multiply", "inverse",
    "power", "commutator", "commutator_closed_form", "generating_set",
    "random_element", "parse_element", "print_element", "embed_coordinate",
]


@dataclass(frozen=True, slots=True)
class TrivE:
    def __repr__(self) -> str:
        return "TrivE"


@dataclass(frozen=True, slots=True)
class IntE:
    k: int


@dataclass(frozen=True, slots=True)
class PairE:
    a: Element
    b: Element


@dataclass(frozen=True, slots=True)
class WreathE:
    coords: tuple[Element, ...]
    shift: int


Element = Union[TrivE, IntE, PairE, WreathE]

TRIV_E = TrivE()


class ElementTypeError(TypeError):
    """An element does not have the shape required by its word."""


class ElementSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _mismatch(w: GroupWord, x: object) -> ElementTypeError:
    return ElementTypeError(f"element {x!r} does not match word {w!r}")


def typecheck(w: GroupWord, x: object) -> bool:
    if isinstance(w, Triv):
        return isinstance(x, TrivE)
    if isinstance(w, Zed):
        return isinstance(x, IntE) and isinstance(x.k, int) and not isinstance(x.k, bool)
    if isinstance(w, Prod):
        return isinstance(x, PairE) and typecheck(w.left, x.a) and typecheck(w.right, x.b)
    if isinstance(w, Wreath):
        return (
            isinstance(x, WreathE)
            and isinstance(x.shift, int) and not isinstance(x.shift, bool)
            and isinstance(x.coords, tuple)
            and len(x.coords) == w.arity
            and all(typecheck(w.base, c) for c in x.coords)
        )
    raise TypeError(f"not a group word: {w!r}")


def identity(w: GroupWord) -> Element:
    if isinstance(w, Triv):
        return TRIV_E
    if isinstance(w, Zed):
        return IntE(0)
    if isinstance(w, Prod):
        return PairE(identity(w.left), identity(w.right))
    e = identity(w.base)
    return WreathE((e,) * w.arity, 0)


def multiply(w: GroupWord, x: Element, y: Element) -> Element:
    if isinstance(w, Zed):
        if not (isinstance(x, IntE) and isinstance(y, IntE)):
            raise _mismatch(w, (x, y))
        return IntE(x.k + y.k)
    if isinstance(w, Wreath):
        if not (isinstance(x, WreathE) and isinstance(y, WreathE)):
            raise _mismatch(w, (x, y))
        n = w.arity
        a, b = x.coords, y.coords
        if len(a) != n or len(b) != n:
            raise _mismatch(w, (x, y))
        p = y.shift
        base = w.base
        coords = tuple(multiply(base, a[(i + p) % n], b[i]) for i in range(n))
        return WreathE(coords, x.shift + p)
    if isinstance(w, Prod):
        if not (isinstance(x, PairE) and isinstance(y, PairE)):
            raise _mismatch(w, (x, y))
        return PairE(multiply(w.left, x.a, y.a), multiply(w.right, x.b, y.b))
    if isinstance(w, Triv):
        if not (isinstance(x, TrivE) and isinstance(y, TrivE)):
            raise _mismatch(w, (x, y))
        return TRIV_E
    raise TypeError(f"not a group word: {w!r}")


def inverse(w: GroupWord, x: Element) -> Element:
    """Inverse; for ``(a, k)`` in a wreath it is ``([a[(j - k) % n]^-1], -k)``."""
    if isinstance(w, Zed):
        if not isinstance(x, IntE):
            raise _mismatch(w, x)
        return IntE(-x.k)
    if isinstance(w, Wreath):
        if not isinstance(x, WreathE) or len(x.coords) != w.arity:
            raise _mismatch(w, x)
        n, k, a = w.arity, x.shift, x.coords
        return WreathE(tuple(inverse(w.base, a[(j - k) % n]) for j in range(n)), -k)
    if isinstance(w, Prod):
        if not isinstance(x, PairE):
            raise _mismatch(w, x)
        return PairE(inverse(w.left, x.a), inverse(w.right, x.b))
    if isinstance(w, Triv):
        if not isinstance(x, TrivE):
            raise _mismatch(w, x)
        return TRIV_E
    raise TypeError(f"not a group word: {w!r}")


def power(w: GroupWord, x: Element, m: int) -> Element:
    if m < 0:
        x, m = inverse(w, x), -m
    result = identity(w)
    while m:
        if m & 1:
            result = multiply(w, result, x)
        x = multiply(w, x, x)
        m >>= 1
    return result


def commutator(w: GroupWord, x: Element, y: Element) -> Element:
    """``x y x^-1 y^-1``."""
    xy = multiply(w, x, y)
    return multiply(w, multiply(w, xy, inverse(w, x)), inverse(w, y))


def commutator_closed_form(w: Wreath, x: WreathE, y: WreathE) -> WreathE:
    """Commutator of two wreath elements computed coordinatewise.

    With ``x = (a, l)`` and ``y = (b, p)`` the result has shift 0 and
    coordinate ``i`` equal to ``a[i-l] b[i-l-p] a[i-l-p]^-1 b[i-p]^-1``
    (indices mod n). Independent of :func:`commutator`, which multiplies.
    """
    if not isinstance(w, Wreath):
        raise TypeError("closed-form commutator is defined for wreath words only")
    if not (typecheck(w, x) and typecheck(w, y)):
        raise _mismatch(w, (x, y))
    n, base = w.arity, w.base
    a, l = x.coords, x.shift
    b, p = y.coords, y.shift
    coords = []
    for i in range(n):
        c = multiply(base, a[(i - l) % n], b[(i - l - p) % n])
        c = multiply(base, c, inverse(base, a[(i - l - p) % n]))
        c = multiply(base, c, inverse(base, b[(i - p) % n]))
        coords.append(c)
    return WreathE(tuple(coords), 0)


def embed_coordinate(w: Wreath, g: Element, position: int = 0, shift: int = 0) -> WreathE:
    """Wreath element with ``g`` at ``position``, identities elsewhere."""
    e = identity(w.base)
    coords = [e] * w.arity
    coords[position] = g
    return WreathE(tuple(coords), shift)


def generating_set(w: GroupWord) -> list[Element]:
    if isinstance(w, Triv):
        return []
    if isinstance(w, Zed):
        return [IntE(1)]
    if isinstance(w, Prod):
        ea, eb = identity(w.left), identity(w.right)
        return ([PairE(g, eb) for g in generating_set(w.left)]
                + [PairE(ea, g) for g in generating_set(w.right)])
    gens = [embed_coordinate(w, g) for g in generating_set(w.base)]
    gens.append(WreathE((identity(w.base),) * w.arity, 1))
    return gens


def random_element(w: GroupWord, bound: int, seed: int | random.Random) -> Element:
    """Every integer entry and shift drawn uniformly from ``[-bound, bound]``.

    ``seed`` may be an int or an existing :class:`random.Random`, so that
    callers drawing many elements can share one stream.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return _random(w, bound, rng)


def _random(w: GroupWord, bound: int, rng: random.Random) -> Element:
    if isinstance(w, Triv):
        return TRIV_E
    if isinstance(w, Zed):
        return IntE(rng.randint(-bound, bound))
    if isinstance(w, Prod):
        return PairE(_random(w.left, bound, rng), _random(w.right, bound, rng))
    coords = tuple(_random(w.base, bound, rng) for _ in range(w.arity))
    return WreathE(coords, rng.randint(-bound, bound))


def print_element(w: GroupWord, x: Element) -> str:
    if not typecheck(w, x):
        raise _mismatch(w, x)
    return _print(x)


def _print(x: Element) -> str:
    if isinstance(x, IntE):
        return str(x.k)
    if isinstance(x, WreathE):
        return "(" + ", ".join(map(_print, x.coords)) + f"; {x.shift})"
    if isinstance(x, PairE):
        return f"<{_print(x.a)}, {_print(x.b)}>"
    return "e"


_ETOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<sym>[e<>(),;]))")


def _etokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos, end = 0, len(text.rstrip())
    while pos < end:
        m = _ETOKEN.match(text, pos)
        if m is None:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ElementSyntaxError(f"unexpected character {text[col]!r}", col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_element(w: GroupWord, text: str) -> Element:
    """Parse element text and check it against ``w``.

    Raises :class:`ElementSyntaxError` on bad text and
    :class:`ElementTypeError` if the parsed element does not fit ``w``.
    """
    toks = _etokens(text)
    i = 0

    def expect(value: str) -> None:
        nonlocal i
        kind, v, pos = toks[i]
        if v != value or kind == "end":
            raise ElementSyntaxError(f"expected {value!r}, got {v or 'end of input'!r}", pos)
        i += 1

    def elem() -> Element:
        nonlocal i
        kind, v, pos = toks[i]
        i += 1
        if kind == "int":
            return IntE(int(v))
        if v == "e":
            return TRIV_E
        if v == "<":
            a = elem()
            expect(",")
            b = elem()
            expect(">")
            return PairE(a, b)
        if v == "(":
            coords = [elem()]
            while toks[i][1] == ",":
                i += 1
                coords.append(elem())
            expect(";")
            kind, v, pos = toks[i]
            if kind != "int":
                raise ElementSyntaxError(f"expected integer shift, got {v or 'end of input'!r}", pos)
            i += 1
            expect(")")
            return WreathE(tuple(coords), int(v))
        raise ElementSyntaxError(f"unexpected {v or 'end of input'!r}", pos)

    x = elem()
    if toks[i][0] != "end":
        raise ElementSyntaxError(f"trailing input {toks[i][1]!r}", toks[i][2])
    if not typecheck(w, x):
        raise _mismatch(w, x)
    return x
