"""Distribution-level API: moments <-> free/boolean/monotone cumulants.

A :class:`Distribution` is a finitely supported multivariate moment map over
a declared letter set, truncated at a maximal degree.  The three cumulant
families are the three logarithms of its moment character:

    free     <- left half-shuffle logarithm,
    boolean  <- right half-shuffle logarithm,
    monotone <- convolution logarithm,

and the inverse transforms are the corresponding exponentials.  Conversions
between families go through the Magnus map and pre-Lie exponential directly
at the infinitesimal-character level, never through moments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import functionals as fn
from .errors import ValidationError
from .magnus import magnus, magnus_inverse
from .words import EMPTY_WORD, Letter, Word, words_up_to


class CumulantKind(enum.Enum):
    FREE = "free"
    BOOLEAN = "boolean"
    MONOTONE = "monotone"


def _as_kind(kind) -> CumulantKind:
    if isinstance(kind, CumulantKind):
        return kind
    try:
        return CumulantKind(str(kind).lower())
    except ValueError:
        raise ValidationError(f"unknown cumulant kind {kind!r}") from None


@dataclass(frozen=True)
class Distribution:
    """Moments of a family of non-commutative random variables, one letter
    per variable, for every word of degree <= max_degree (absent words have
    moment 0; the empty word implicitly has moment 1)."""

    letters: tuple[Letter, ...]
    max_degree: int
    moments: Mapping[Word, Fraction]

    def __post_init__(self):
        if not self.letters:
            raise ValidationError("a distribution needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValidationError("duplicate letters in distribution")
        if self.max_degree < 1:
            raise ValidationError("max_degree must be >= 1")
        allowed = set(self.letters)
        clean = {}
        for w, v in self.moments.items():
            if not isinstance(w, Word):
                raise ValidationError(f"moment keys must be words, got {w!r}")
            if w == EMPTY_WORD:
                if Fraction(v) != 1:
                    raise ValidationError("the empty word always has moment 1")
                continue
            if len(w) > self.max_degree:
                raise ValidationError(f"moment key {w!r} exceeds max_degree {self.max_degree}")
            if any(l not in allowed for l in w.letters):
                raise ValidationError(f"moment key {w!r} uses undeclared letters")
            v = Fraction(v)
            if v:
                clean[w] = v
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "moments", clean)

    def moment(self, w: Word) -> Fraction:
        if w == EMPTY_WORD:
            return Fraction(1)
        return self.moments.get(w, Fraction(0))

    def character(self) -> fn.Functional:
        return fn.character(self.moments)

    def words(self):
        return words_up_to(self.letters, self.max_degree)

    def retag(self, tag: int) -> "Distribution":
        """Same distribution with every letter re-tagged (free-product setup)."""
        table = {l: Letter(l.name, tag) for l in self.letters}
        remap = lambda w: Word(table[l] for l in w.letters)
        return Distribution(tuple(table[l] for l in self.letters), self.max_degree,
                            {remap(w): v for w, v in self.moments.items()})

    @classmethod
    def univariate(cls, name: str, values, max_degree: int | None = None,
                   tag: int = 0) -> "Distribution":
        """Distribution of a single variable from the list of its moments
        (m_1, m_2, ...)."""
        values = [Fraction(v) for v in values]
        n = max_degree if max_degree is not None else len(values)
        letter = Letter(name, tag)
        moments = {Word((letter,) * (k + 1)): v for k, v in enumerate(values[:n]) if v}
        return cls((letter,), n, moments)


def semicircle(max_degree: int = 6, name: str = "a") -> Distribution:
    """Standard semicircle moments: Catalan numbers in even degrees."""
    vals = []
    for k in range(1, max_degree + 1):
        vals.append(Fraction(math.comb(k, k // 2) - math.comb(k, k // 2 + 1))
                    if k % 2 == 0 else Fraction(0))
    return Distribution.univariate(name, vals, max_degree)


def bernoulli_symmetric(max_degree: int = 6, name: str = "a") -> Distribution:
    """Symmetric Bernoulli (point masses at +1/-1): even moments 1."""
    vals = [Fraction(0) if k % 2 else Fraction(1) for k in range(1, max_degree + 1)]
    return Distribution.univariate(name, vals, max_degree)


def point_mass(c, max_degree: int = 6, name: str = "a") -> Distribution:
    c = Fraction(c)
    vals = [c ** k for k in range(1, max_degree + 1)]
    return Distribution.univariate(name, vals, max_degree)


def cumulant_functional(d: Distribution, kind) -> fn.Functional:
    """The infinitesimal character of the requested family for d's moment
    character (free: log<, boolean: log>, monotone: log*)."""
    kind = _as_kind(kind)
    phi = d.character()
    if kind is CumulantKind.FREE:
        return fn.log_left(phi)
    if kind is CumulantKind.BOOLEAN:
        return fn.log_right(phi)
    return fn.log_star(phi)


def to_cumulants(d: Distribution, kind) -> dict[Word, Fraction]:
    """Cumulants of every word of degree <= max_degree (zeros omitted)."""
    rho = cumulant_functional(d, kind)
    out = {}
    for w in d.words():
        v = rho(w)
        if v:
            out[w] = v
    return out


def _infinitesimal_from_map(c: Mapping[Word, Fraction]) -> fn.Functional:
    return fn.infinitesimal(c)


def from_cumulants(c: Mapping[Word, Fraction], kind, letters, max_degree: int
                   ) -> Distribution:
    """Distribution whose cumulants of the given kind are c: evaluate the
    matching exponential of the infinitesimal character on all words."""
    kind = _as_kind(kind)
    alpha = _infinitesimal_from_map(c)
    if kind is CumulantKind.FREE:
        phi = fn.exp_left(alpha)
    elif kind is CumulantKind.BOOLEAN:
        phi = fn.exp_right(alpha)
    else:
        phi = fn.exp_star(alpha)
    letters = tuple(letters)
    moments = {}
    for w in words_up_to(letters, max_degree):
        v = phi(w)
        if v:
            moments[w] = v
    return Distribution(letters, max_degree, moments)


def convert(c: Mapping[Word, Fraction], kind_from, kind_to, max_degree: int,
            letters=None) -> dict[Word, Fraction]:
    """Convert a cumulant map between families at the Lie level.

    Monotone and free trade places under the Magnus map and its inverse;
    boolean reaches either by conjugating with a sign twist.  When ``letters``
    is omitted it is inferred from the keys of c.
    """
    kind_from, kind_to = _as_kind(kind_from), _as_kind(kind_to)
    if letters is None:
        letters = sorted({l for w in c for l in w.letters}, key=lambda l: (l.name, l.tag))
        if not letters:
            raise ValidationError("cannot infer letters from an empty cumulant map; "
                                  "pass letters explicitly")
    letters = tuple(letters)
    alpha = _infinitesimal_from_map(c)
    out = _convert_functional(alpha, kind_from, kind_to)
    result = {}
    for w in words_up_to(letters, max_degree):
        v = out(w)
        if v:
            result[w] = v
    return result


def _convert_functional(alpha: fn.Functional, kind_from: CumulantKind,
                        kind_to: CumulantKind) -> fn.Functional:
    if kind_from is kind_to:
        return alpha
    K, B, M = CumulantKind.FREE, CumulantKind.BOOLEAN, CumulantKind.MONOTONE
    if (kind_from, kind_to) == (K, M):
        return magnus(alpha)
    if (kind_from, kind_to) == (M, K):
        return magnus_inverse(alpha)
    if (kind_from, kind_to) == (B, M):
        return -1 * magnus(-1 * alpha)
    if (kind_from, kind_to) == (M, B):
        return -1 * magnus_inverse(-1 * alpha)
    if (kind_from, kind_to) == (K, B):
        return -1 * magnus_inverse(-1 * magnus(alpha))
    # boolean -> free
    return magnus_inverse(-1 * magnus(-1 * alpha))


class TruncatedSeries:
    """Polynomial in the non-commuting letters, truncated above max_degree.

    Words index the coefficients; multiplication is concatenation, dropping
    anything beyond the truncation degree.
    """

    __slots__ = ("letters", "max_degree", "coefficients")

    def __init__(self, letters, max_degree: int, coefficients: Mapping[Word, Fraction]):
        self.letters = tuple(letters)
        self.max_degree = max_degree
        self.coefficients = {w: Fraction(v) for w, v in coefficients.items()
                             if v and len(w) <= max_degree}

    def coefficient(self, w: Word) -> Fraction:
        return self.coefficients.get(w, Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.max_degree == other.max_degree
                and self.coefficients == other.coefficients)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self.coefficients)
        for w, v in other.coefficients.items():
            out[w] = out.get(w, 0) + v
        return TruncatedSeries(self.letters, self.max_degree, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out: dict[Word, Fraction] = {}
        n = self.max_degree
        for u, cu in self.coefficients.items():
            for v, cv in other.coefficients.items():
                if len(u) + len(v) <= n:
                    key = u.concat(v)
                    out[key] = out.get(key, 0) + cu * cv
        return TruncatedSeries(self.letters, self.max_degree, out)

    def __repr__(self):
        if not self.coefficients:
            return "0"
        bits = []
        for w in sorted(self.coefficients, key=Word.sort_key):
            c = self.coefficients[w]
            bits.append(f"{c}*{w!r}" if c != 1 else repr(w))
        return " + ".join(bits)


def series(d: Distribution, which: str) -> TruncatedSeries:
    """Generating series of a distribution: "M" collects moments, "R" free
    cumulants, "eta" boolean cumulants, on all words up to max_degree."""
    table = {"m": None, "r": CumulantKind.FREE, "eta": CumulantKind.BOOLEAN}
    key = str(which).lower()
    if key not in table:
        raise ValidationError(f"unknown series {which!r}; expected M, R or eta")
    if table[key] is None:
        coeffs = dict(d.moments)
    else:
        coeffs = to_cumulants(d, table[key])
    return TruncatedSeries(d.letters, d.max_degree, coeffs)
