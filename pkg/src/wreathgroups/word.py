"""Presentation words for groups built from 1 and Z by direct and wreath products.

A word is a small immutable tree::

    Triv                 the trivial group 1
    Zed                  the infinite cyclic group Z
    Prod(left, right)    left x right
    Wreath(base, n)      base wr_n Z  (base^n shifted cyclically by Z)

Concrete syntax::

    word := term ( "x" term )*
    term := atom ( "wr" INT "Z" )*
    atom := "1" | "Z" | "(" word ")"

``x`` is left-associative and ``wr`` binds tighter than ``x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

__all__ = [
    "Triv", "Zed", "Prod", "Wreath", "GroupWord", "WordSyntaxError",
    "parse_word", "print_word", "beta1", "word_length", "normalize",
    "enumerate_words", "count_words",
]


@dataclass(frozen=True)
class Triv:
    def __repr__(self) -> str:
        return "Triv"


@dataclass(frozen=True)
class Zed:
    def __repr__(self) -> str:
        return "Zed"


@dataclass(frozen=True)
class Prod:
    left: GroupWord
    right: GroupWord

    def __repr__(self) -> str:
        return f"Prod({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Wreath:
    base: GroupWord
    arity: int

    def __post_init__(self) -> None:
        if not isinstance(self.arity, int) or self.arity < 1:
            raise ValueError(f"wreath arity must be a positive integer, got {self.arity!r}")

    def __repr__(self) -> str:
        return f"Wreath({self.base!r}, {self.arity})"


GroupWord = Union[Triv, Zed, Prod, Wreath]

TRIV = Triv()
ZED = Zed()


class WordSyntaxError(ValueError):
    """Raised for malformed word text; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<wr>wr)|(?P<sym>[Zx()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected character {text[col]!r}", col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind
            got = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise WordSyntaxError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def word(self) -> GroupWord:
        w = self.term()
        while self.peek()[:2] == ("sym", "x"):
            self.i += 1
            w = Prod(w, self.term())
        return w

    def term(self) -> GroupWord:
        w = self.atom()
        while self.peek()[0] == "wr":
            self.i += 1
            _, digits, pos = self.take("int")
            n = int(digits)
            if n < 1:
                raise WordSyntaxError(f"wreath arity must be >= 1, got {n}", pos)
            self.take("sym", "Z")
            w = Wreath(w, n)
        return w

    def atom(self) -> GroupWord:
        kind, value, pos = self.peek()
        if kind == "int":
            if value != "1":
                raise WordSyntaxError(f"only the atom '1' is allowed here, got {value!r}", pos)
            self.i += 1
            return TRIV
        if (kind, value) == ("sym", "Z"):
            self.i += 1
            return ZED
        if (kind, value) == ("sym", "("):
            self.i += 1
            w = self.word()
            self.take("sym", ")")
            return w
        got = repr(value) if kind != "end" else "end of input"
        raise WordSyntaxError(f"expected '1', 'Z' or '(', got {got}", pos)


def parse_word(text: str) -> GroupWord:
    """Parse word text such as ``"(1 wr3 Z) x Z"`` into a tree."""
    p = _Parser(text)
    w = p.word()
    p.take("end")
    return w


def print_word(w: GroupWord) -> str:
    """Render ``w`` so that ``parse_word`` gives back the same tree.

    Wreath terms that are operands of ``x`` are parenthesized, which is
    redundant for the grammar but keeps the usual written form, e.g.
    ``((Z wr3 Z) x (Z wr5 Z)) wr7 Z``.
    """
    if isinstance(w, Triv):
        return "1"
    if isinstance(w, Zed):
        return "Z"
    if isinstance(w, Prod):
        left = print_word(w.left)
        if isinstance(w.left, Wreath):
            left = f"({left})"
        right = print_word(w.right)
        if isinstance(w.right, (Prod, Wreath)):
            right = f"({right})"
        return f"{left} x {right}"
    if isinstance(w, Wreath):
        base = print_word(w.base)
        if isinstance(w.base, Prod):
            base = f"({base})"
        return f"{base} wr{w.arity} Z"
    raise TypeError(f"not a group word: {w!r}")


def beta1(w: GroupWord) -> int:
    """Number of Z symbols in ``w``: each Zed leaf and each ``wr_n Z``."""
    if isinstance(w, Triv):
        return 0
    if isinstance(w, Zed):
        return 1
    if isinstance(w, Prod):
        return beta1(w.left) + beta1(w.right)
    return beta1(w.base) + 1


def word_length(w: GroupWord) -> int:
    """Number of symbols 1 and Z in ``w`` (a wreath contributes its Z)."""
    if isinstance(w, (Triv, Zed)):
        return 1
    if isinstance(w, Prod):
        return word_length(w.left) + word_length(w.right)
    return word_length(w.base) + 1


def _rewrite(w: GroupWord) -> GroupWord | None:
    if isinstance(w, Wreath):
        if isinstance(w.base, Triv):
            return ZED
        if w.arity == 1:
            return Prod(w.base, ZED)
    elif isinstance(w, Prod):
        if isinstance(w.left, Triv):
            return w.right
        if isinstance(w.right, Triv):
            return w.left
    return None


def normalize(w: GroupWord) -> GroupWord:
    """Apply ``1 wr_n Z -> Z``, ``A wr_1 Z -> A x Z``, ``1 x A -> A``, ``A x 1 -> A``
    everywhere until none applies. The group is unchanged up to isomorphism."""
    if isinstance(w, Prod):
        w = Prod(normalize(w.left), normalize(w.right))
    elif isinstance(w, Wreath):
        w = Wreath(normalize(w.base), w.arity)
    r = _rewrite(w)
    return w if r is None else normalize(r)


@lru_cache(maxsize=None)
def _words_of_length(length: int, max_arity: int) -> tuple[GroupWord, ...]:
    if length == 1:
        return (TRIV, ZED)
    out: list[GroupWord] = []
    for base in _words_of_length(length - 1, max_arity):
        for n in range(1, max_arity + 1):
            out.append(Wreath(base, n))
    for i in range(1, length):
        rights = _words_of_length(length - i, max_arity)
        for left in _words_of_length(i, max_arity):
            for right in rights:
                out.append(Prod(left, right))
    return tuple(out)


def enumerate_words(max_length: int, max_arity: int) -> list[GroupWord]:
    """All words with ``word_length <= max_length`` and arities ``<= max_arity``.

    Ordered by length, then wreaths before products; the order is stable
    across calls.
    """
    if max_length < 1 or max_arity < 1:
        raise ValueError("max_length and max_arity must be >= 1")
    out: list[GroupWord] = []
    for length in range(1, max_length + 1):
        out.extend(_words_of_length(length, max_arity))
    return out


def count_words(max_length: int, max_arity: int) -> int:
    """Size of ``enumerate_words(max_length, max_arity)`` without building it."""
    counts = [0, 2]
    for length in range(2, max_length + 1):
        c = max_arity * counts[length - 1]
        c += sum(counts[i] * counts[length - i] for i in range(1, length))
        counts.append(c)
    return sum(counts[1:max_length + 1])
