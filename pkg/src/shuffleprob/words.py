"""Basis monomials: letters, words over an algebra, and bar words.

A word ``a1...an`` is a basis element of the (non-unital) tensor algebra over
the span of the declared letters; a bar word ``w1|...|wm`` is a basis element
of the double tensor algebra built on top of it.  The empty word and the
empty bar word are the respective units and both print as ``"1"``.

Every value here is immutable and hashable; they are used as dictionary keys
throughout the package, so hashes are computed once at construction.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError


class Letter(NamedTuple):
    """A generator of the base algebra.

    ``tag`` distinguishes the two algebras of a free-product context (1/2);
    plain single-algebra computations use the default tag 0.  Letters compare
    equal exactly when both name and tag agree.
    """

    name: str
    tag: int = 0

    def __str__(self):
        return self.name if self.tag == 0 else f"{self.name}#{self.tag}"


class Word:
    """An ordered sequence of letters; degree = number of letters."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = tuple(letters)
        self._hash = hash(self.letters)

    @classmethod
    def of(cls, *names: str, tag: int = 0) -> "Word":
        """Convenience constructor from letter names: ``Word.of("a","b")``."""
        return cls(Letter(n, tag) for n in names)

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __bool__(self):
        return bool(self.letters)

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def subword(self, positions: Iterable[int]) -> "Word":
        """The letters at the given 1-based positions, in natural order.

        The empty position set yields the empty word.  Positions outside
        1..degree raise :class:`DomainError`.
        """
        pos = sorted(set(positions))
        n = len(self.letters)
        if pos and (pos[0] < 1 or pos[-1] > n):
            raise DomainError(f"subset {pos} out of range for a word of degree {n}")
        return Word(self.letters[p - 1] for p in pos)

    def complement_components(self, positions: Iterable[int]) -> "BarWord":
        """Bar word of the maximal consecutive runs of positions NOT selected.

        For a word of degree n and S inside [n], the positions of [n]-S split
        into maximal runs J1 < J2 < ... ; the result is the bar word
        ``a_J1 | a_J2 | ...``.  Selecting everything yields the empty bar word;
        selecting nothing yields the whole word as a single component.
        """
        pos = set(positions)
        n = len(self.letters)
        if pos and (min(pos) < 1 or max(pos) > n):
            raise DomainError(f"subset {sorted(pos)} out of range for a word of degree {n}")
        runs: list[Word] = []
        current: list[Letter] = []
        for i in range(1, n + 1):
            if i in pos:
                if current:
                    runs.append(Word(current))
                    current = []
            else:
                current.append(self.letters[i - 1])
        if current:
            runs.append(Word(current))
        return BarWord(runs)

    def sort_key(self):
        return (len(self.letters), tuple((l.name, l.tag) for l in self.letters))

    def __repr__(self):
        if not self.letters:
            return "1"
        return ".".join(str(l) for l in self.letters)


EMPTY_WORD = Word()


class BarWord:
    """An ordered sequence of nonempty words, written ``w1|w2|...|wm``.

    Empty component words are silently dropped at construction, which
    realises the identification of ``w1|1|w2`` with ``w1|w2``.
    """

    __slots__ = ("words", "_key", "_hash")

    def __init__(self, words: Iterable[Word] = ()):
        self.words = tuple(w for w in words if w.letters)
        # flat letter tuples: equality and hashing stay in C
        self._key = tuple(w.letters for w in self.words)
        self._hash = hash(self._key)

    @classmethod
    def from_word(cls, w: Word) -> "BarWord":
        return cls((w,))

    @property
    def degree(self) -> int:
        return sum(len(w) for w in self.words)

    @property
    def bar_length(self) -> int:
        return len(self.words)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, BarWord) and self._key == other._key

    def __bool__(self):
        return bool(self.words)

    def concat(self, other: "BarWord") -> "BarWord":
        return BarWord(self.words + other.words)

    def sort_key(self):
        return (self.degree, len(self.words), tuple(w.sort_key() for w in self.words))

    def __repr__(self):
        if not self.words:
            return "1"
        return "|".join(repr(w) for w in self.words)


EMPTY_BAR = BarWord()


def as_barword(x) -> BarWord:
    """Coerce a Word (single bar component) or BarWord to a BarWord."""
    if isinstance(x, BarWord):
        return x
    if isinstance(x, Word):
        return BarWord.from_word(x)
    raise TypeError(f"expected Word or BarWord, got {type(x).__name__}")


def words_of_degree(letters: Iterable[Letter], degree: int) -> Iterator[Word]:
    """All words of the exact degree over the given letters, in product order."""
    letters = tuple(letters)
    for combo in itertools.product(letters, repeat=degree):
        yield Word(combo)


def words_up_to(letters: Iterable[Letter], max_degree: int,
                include_empty: bool = False) -> Iterator[Word]:
    letters = tuple(letters)
    if include_empty:
        yield EMPTY_WORD
    for d in range(1, max_degree + 1):
        yield from words_of_degree(letters, d)


def barwords_of_degree(letters: Iterable[Letter], degree: int) -> Iterator[BarWord]:
    """All bar words of the exact total degree: one block per composition part."""
    letters = tuple(letters)
    for comp in _compositions(degree):
        pools = [words_of_degree(letters, part) for part in comp]
        for combo in itertools.product(*pools):
            yield BarWord(combo)


def barwords_up_to(letters: Iterable[Letter], max_degree: int,
                   include_empty: bool = False) -> Iterator[BarWord]:
    if include_empty:
        yield EMPTY_BAR
    for d in range(1, max_degree + 1):
        yield from barwords_of_degree(letters, d)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_barwords(letters: tuple[Letter, ...], max_degree: int) -> tuple[BarWord, ...]:
    """Materialized nonempty bar words of degree <= max_degree, cached so the
    same objects (and their memoized evaluations) are reused across sweeps."""
    return tuple(barwords_up_to(tuple(letters), max_degree))


@lru_cache(maxsize=None)
def all_words(letters: tuple[Letter, ...], max_degree: int) -> tuple[Word, ...]:
    return tuple(words_up_to(tuple(letters), max_degree))
