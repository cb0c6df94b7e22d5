"""Linear functionals on the span of bar words, with the shuffle calculus.

A :class:`Functional` maps bar words to exact rationals.  Derived functionals
are immutable expression nodes; evaluation is lazy, recursing through the
coproducts of the argument, and memoized per node.  All series-type operators
(inverse, exponentials, logarithms) are degree-bounded recursions: evaluating
one at a bar word of degree d only ever touches evaluations at degree <= d,
so every value is an exact finite sum.

Two cheap structural flags travel with each node: ``is_character`` (unital
and multiplicative over bars) and ``is_infinitesimal_character`` (vanishes on
the empty bar word and on bar products).  They are set when the construction
guarantees the property and gate the operations whose meaning requires it.
Equality of functionals is always extensional; see :func:`agree_up_to`.

Expression trees are immutable and freely shareable; the per-node memo dicts
are not synchronized, so concurrent evaluation needs external locking or
per-thread nodes (results are deterministic either way).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from . import mutations
from .coproducts import Side, unshuffle_bar
from .errors import DomainError
from .words import BarWord, EMPTY_BAR, Word, all_barwords, as_barword

#: When true, closed-form adjoint nodes re-derive every word evaluation from
#: the defining conjugation and assert agreement.  Enabled by the test suite.
CROSS_CHECK_AD = False


class Functional:
    __slots__ = ("_memo", "is_character", "is_infinitesimal_character")

    def __init__(self):
        self._memo: dict[BarWord, Fraction] = {}
        self.is_character = False
        self.is_infinitesimal_character = False

    def __call__(self, element) -> Fraction:
        if type(element) is not BarWord:
            element = as_barword(element)
        memo = self._memo
        v = memo.get(element)
        if v is None:
            v = self._value(element)
            memo[element] = v
        return v

    def _value(self, b: BarWord) -> Fraction:
        raise NotImplementedError

    # Linear structure; scalar multiples only (convolution is conv()).
    def __add__(self, other: "Functional") -> "Functional":
        return _Linear(((1, self), (1, other)))

    def __sub__(self, other: "Functional") -> "Functional":
        return _Linear(((1, self), (-1, other)))

    def __neg__(self) -> "Functional":
        return _Linear(((-1, self),))

    def __mul__(self, scalar) -> "Functional":
        return _Linear(((Fraction(scalar), self),))

    __rmul__ = __mul__


class _Unit(Functional):
    """The augmentation map e: 1 on the empty bar word, 0 elsewhere."""

    __slots__ = ()

    def __init__(self):
        super().__init__()
        self.is_character = True

    def _value(self, b):
        return Fraction(1) if not b.words else Fraction(0)


#: The convolution unit.  Construction helpers compare against this instance
#: to reject the undefined half-products of the unit with itself.
e = _Unit()


def unit() -> Functional:
    return e


class _Character(Functional):
    """Multiplicative extension of a moment map: the value on a bar word is
    the product of the word moments, and the empty bar word maps to 1."""

    __slots__ = ("moments",)

    def __init__(self, moments: Mapping[Word, Fraction]):
        super().__init__()
        clean = {}
        for w, v in moments.items():
            if not isinstance(w, Word):
                raise DomainError(f"moment keys must be words, got {w!r}")
            v = Fraction(v)
            if not w:
                if v != 1:
                    raise DomainError("the empty word must have moment 1")
                continue
            if v:
                clean[w] = v
        self.moments = clean
        self.is_character = True

    def _value(self, b):
        out = Fraction(1)
        moments = self.moments
        for w in b.words:
            m = moments.get(w)
            if m is None:
                return Fraction(0)
            out *= m
        return out


class _Infinitesimal(Functional):
    """Infinitesimal character from word values: zero on the empty bar word
    and on every bar word with two or more components."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[Word, Fraction]):
        super().__init__()
        clean = {}
        for w, v in values.items():
            if not isinstance(w, Word):
                raise DomainError(f"value keys must be words, got {w!r}")
            if not w:
                raise DomainError("an infinitesimal character vanishes on the empty word")
            v = Fraction(v)
            if v:
                clean[w] = v
        self.values = clean
        self.is_infinitesimal_character = True

    def _value(self, b):
        if len(b.words) != 1:
            return Fraction(0)
        return self.values.get(b.words[0], Fraction(0))


class _Table(Functional):
    """Arbitrary linear form given by explicit bar-word values (default 0)."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[BarWord, Fraction]):
        super().__init__()
        self.values = {as_barword(k): Fraction(v) for k, v in values.items() if v}

    def _value(self, b):
        return self.values.get(b, Fraction(0))


class _Linear(Functional):
    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[tuple[Fraction, Functional]]):
        super().__init__()
        self.parts = tuple(parts)
        self.is_infinitesimal_character = all(
            f.is_infinitesimal_character for _, f in self.parts)

    def _value(self, b):
        total = 0
        for c, f in self.parts:
            v = f(b)
            if v:
                total += c * v
        return total


class _Conv(Functional):
    """Convolution product: pair the operands across the full coproduct."""

    __slots__ = ("f", "g")

    def __init__(self, f, g):
        super().__init__()
        self.f, self.g = f, g
        self.is_character = f.is_character and g.is_character

    def _value(self, b):
        f, g = self.f, self.g
        total = 0
        for (x, y), c in unshuffle_bar(b, Side.FULL):
            left = f(x)
            if left:
                right = g(y)
                if right:
                    v = left * right
                    total += v if c == 1 else c * v
        return total


class _Half(Functional):
    """Half-shuffle product over the unreduced half-coproducts; the value at
    the empty bar word is 0 (the products live on the augmentation kernel)."""

    __slots__ = ("f", "g", "side")

    def __init__(self, f, g, side: Side):
        super().__init__()
        if isinstance(f, _Unit) and isinstance(g, _Unit):
            raise DomainError("the half-products of the unit with itself are undefined")
        self.f, self.g, self.side = f, g, side

    def _value(self, b):
        if not b.words:
            return Fraction(0)
        f, g = self.f, self.g
        total = 0
        for (x, y), c in unshuffle_bar(b, self.side):
            left = f(x)
            if left:
                right = g(y)
                if right:
                    v = left * right
                    total += v if c == 1 else c * v
        return total


class _Inverse(Functional):
    """Convolution inverse of a unital functional (the Neumann series
    sum_k (-1)^k (f-e)^{*k}, realised as a degree recursion)."""

    __slots__ = ("f",)

    def __init__(self, f):
        super().__init__()
        if f(EMPTY_BAR) != 1:
            raise DomainError("only functionals with value 1 on the empty bar word are invertible")
        self.f = f
        self.is_character = f.is_character

    def _value(self, b):
        if not b.words:
            return Fraction(1)
        f = self.f
        total = 0
        for (x, y), c in unshuffle_bar(b, Side.FULL):
            if y.words:  # the y = 1 term is the unknown itself
                left = self(x)
                if left:
                    right = f(y)
                    if right:
                        v = left * right
                        total += v if c == 1 else c * v
        return -total


class _SeriesStar(Functional):
    """Shared machinery for exp/log with respect to the convolution product:
    value at b = unit_term + sum_{k=1..deg b} coeff(k) * base^{*k}(b), where
    base vanishes on the empty bar word, so the k-th convolution power
    vanishes below degree k and the sum is exact."""

    __slots__ = ("base", "unit_term", "_powers")

    def __init__(self, base, unit_term):
        super().__init__()
        self.base = base
        self.unit_term = unit_term
        self._powers = [None, base]

    def _coeff(self, k: int) -> Fraction:
        raise NotImplementedError

    def _value(self, b):
        d = b.degree
        if d == 0:
            return self.unit_term
        powers = self._powers
        while len(powers) <= d:
            powers.append(_Conv(powers[-1], self.base))
        total = 0
        for k in range(1, d + 1):
            pk = powers[k](b)
            if pk:
                total += self._coeff(k) * pk
        return total


class _ExpStar(_SeriesStar):
    __slots__ = ()

    def __init__(self, alpha):
        if alpha(EMPTY_BAR) != 0:
            raise DomainError("exp* needs an operand vanishing on the empty bar word")
        super().__init__(alpha, Fraction(1))
        self.is_character = alpha.is_infinitesimal_character

    def _coeff(self, k):
        f = 1
        for i in range(2, k + 1):
            f *= i
        return Fraction(1, f)


class _LogStar(_SeriesStar):
    __slots__ = ()

    def __init__(self, phi):
        if phi(EMPTY_BAR) != 1:
            raise DomainError("log* needs an operand with value 1 on the empty bar word")
        super().__init__(phi - e, Fraction(0))
        self.is_infinitesimal_character = phi.is_character

    def _coeff(self, k):
        return Fraction(1, k) if k % 2 else Fraction(-1, k)


class _ExpLeft(Functional):
    """Left half-shuffle exponential: the unique solution of X = e + a < X,
    evaluated by degree recursion (the right legs of the left half-coproduct
    always drop degree)."""

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        super().__init__()
        if alpha(EMPTY_BAR) != 0:
            raise DomainError("half-shuffle exponentials need an operand vanishing "
                              "on the empty bar word")
        self.alpha = alpha
        self.is_character = alpha.is_infinitesimal_character

    def _value(self, b):
        if not b.words:
            return Fraction(1)
        alpha = self.alpha
        total = 0
        for (x, y), c in unshuffle_bar(b, Side.LEFT):
            left = alpha(x)
            if left:
                right = self(y)
                if right:
                    v = left * right
                    total += v if c == 1 else c * v
        return total


class _ExpRight(Functional):
    """Right half-shuffle exponential: X = e + X > a."""

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        super().__init__()
        if alpha(EMPTY_BAR) != 0:
            raise DomainError("half-shuffle exponentials need an operand vanishing "
                              "on the empty bar word")
        self.alpha = alpha
        self.is_character = alpha.is_infinitesimal_character

    def _value(self, b):
        if not b.words:
            return Fraction(1)
        alpha = self.alpha
        total = 0
        for (x, y), c in unshuffle_bar(b, Side.RIGHT):
            right = alpha(y)
            if right:
                left = self(x)
                if left:
                    v = left * right
                    total += v if c == 1 else c * v
        return total


class _AdjointAction(Functional):
    """Closed-form Lie-level adjoint action of g1 on g2 (written g2^{g1}):
    on a word, the sum of g2(subword) * E<(g1)(complement runs) over the
    subsets containing both endpoints; zero off single-component bar words.
    Extensionally equal to the conjugation E<(g1)^{-1} > g2 < E<(g1)."""

    __slots__ = ("g1", "g2", "exp", "_composed")

    def __init__(self, g1, g2):
        super().__init__()
        if not (g1.is_infinitesimal_character and g2.is_infinitesimal_character):
            raise DomainError("the adjoint actions act on infinitesimal characters")
        self.g1, self.g2 = g1, g2
        conjugator = -1 * g1 if mutations.is_active("flip-ad-conjugator") else g1
        self.exp = _ExpLeft(conjugator)
        self._composed = None
        self.is_infinitesimal_character = True

    def _value(self, b):
        if len(b.words) != 1:
            return Fraction(0)
        w = b.words[0]
        n = len(w)
        g2, exp = self.g2, self.exp
        if n == 1:
            total = g2(b)
        else:
            total = Fraction(0)
            first_last = 1 | (1 << (n - 1))
            for inner in range(1 << (n - 2)) if n > 2 else (0,):
                mask = first_last | (inner << 1)
                positions = [i + 1 for i in range(n) if mask >> i & 1]
                val = g2(BarWord.from_word(w.subword(positions)))
                if val:
                    total += val * exp(w.complement_components(positions))
        if CROSS_CHECK_AD:
            if self._composed is None:
                self._composed = hs_left(hs_right(neumann_inverse(self.exp), self.g2), self.exp)
            assert self._composed(b) == total, f"adjoint closed form disagrees at {b!r}"
        return total


class _PositivePart(Functional):
    """f composed with the augmentation projector: 0 at the empty bar word."""

    __slots__ = ("f",)

    def __init__(self, f):
        super().__init__()
        self.f = f

    def _value(self, b):
        return Fraction(0) if not b.words else self.f(b)


# ---------------------------------------------------------------------------
# public constructors

def character(moments: Mapping[Word, Fraction]) -> Functional:
    """The character extending a word -> moment map multiplicatively over bars."""
    return _Character(moments)


def infinitesimal(values: Mapping[Word, Fraction]) -> Functional:
    """The infinitesimal character with the given word values."""
    return _Infinitesimal(values)


def from_values(values: Mapping[BarWord, Fraction]) -> Functional:
    """A plain linear form with explicit bar-word values (all else 0)."""
    return _Table(values)


def conv(f: Functional, g: Functional) -> Functional:
    """Convolution product f * g."""
    return _Conv(f, g)


def hs_left(f: Functional, g: Functional) -> Functional:
    """Left half-shuffle product f < g; f < e = f, e < f = 0."""
    return _Half(f, g, Side.LEFT)


def hs_right(f: Functional, g: Functional) -> Functional:
    """Right half-shuffle product f > g; e > f = f, f > e = 0."""
    return _Half(f, g, Side.RIGHT)


def prelie(f: Functional, g: Functional) -> Functional:
    """Pre-Lie product f |> g = f > g - g < f (operands vanish at the unit)."""
    if f(EMPTY_BAR) != 0 or g(EMPTY_BAR) != 0:
        raise DomainError("the pre-Lie product acts on functionals vanishing "
                          "on the empty bar word")
    out = _Linear(((1, hs_right(f, g)), (-1, hs_left(g, f))))
    out.is_infinitesimal_character = (f.is_infinitesimal_character
                                      and g.is_infinitesimal_character)
    return out


def neumann_inverse(f: Functional) -> Functional:
    """Convolution inverse of a unital functional; f * f^{-1} = f^{-1} * f = e."""
    return _Inverse(f)


def exp_star(alpha: Functional) -> Functional:
    """Convolution exponential e + sum alpha^{*n} / n!."""
    return _ExpStar(alpha)


def log_star(phi: Functional) -> Functional:
    """Convolution logarithm sum (-1)^{n+1} (phi - e)^{*n} / n."""
    return _LogStar(phi)


def exp_left(alpha: Functional) -> Functional:
    """Left half-shuffle exponential, the solution of X = e + alpha < X."""
    return _ExpLeft(alpha)


def exp_right(alpha: Functional) -> Functional:
    """Right half-shuffle exponential, the solution of X = e + X > alpha."""
    return _ExpRight(alpha)


def log_left(phi: Functional) -> Functional:
    """Left half-shuffle logarithm (phi - e) < phi^{-1}, the compositional
    inverse of exp_left."""
    if phi(EMPTY_BAR) != 1:
        raise DomainError("half-shuffle logarithms need a unital operand")
    out = hs_left(phi - e, neumann_inverse(phi))
    out.is_infinitesimal_character = phi.is_character
    return out


def log_right(phi: Functional) -> Functional:
    """Right half-shuffle logarithm phi^{-1} > (phi - e)."""
    if phi(EMPTY_BAR) != 1:
        raise DomainError("half-shuffle logarithms need a unital operand")
    out = hs_right(neumann_inverse(phi), phi - e)
    out.is_infinitesimal_character = phi.is_character
    return out


def hs_power(phi: Functional, s, side: Side = Side.LEFT) -> Functional:
    """Half-shuffle power: rescale the corresponding logarithm by s and
    re-exponentiate.  s = 1 gives phi back, s = 0 the unit."""
    s = Fraction(s)
    if side is Side.LEFT:
        return exp_left(s * log_left(phi))
    if side is Side.RIGHT:
        return exp_right(s * log_right(phi))
    raise DomainError("half-shuffle powers are left- or right-sided")


def adjoint(phi: Functional, mu: Functional) -> Functional:
    """Group adjoint action Ad_phi(mu) = phi^{-1} > mu < phi."""
    if phi(EMPTY_BAR) != 1:
        raise DomainError("the adjoint action is indexed by unital functionals")
    if mu(EMPTY_BAR) != 0:
        raise DomainError("the adjoint action moves functionals vanishing at the unit")
    out = hs_left(hs_right(neumann_inverse(phi), mu), phi)
    out.is_infinitesimal_character = (mu.is_infinitesimal_character and phi.is_character)
    return out


def ad_action(g1: Functional, g2: Functional) -> Functional:
    """Left Lie-level adjoint action of g1 on g2, written g2^{g1}."""
    return _AdjointAction(g1, g2)


def ad_action_right(g1: Functional, g2: Functional) -> Functional:
    """Right Lie-level adjoint action; equals the left action of -g1."""
    return _AdjointAction(-1 * g1, g2)


def ad_action_composed(g1: Functional, g2: Functional) -> Functional:
    """The defining conjugation E<(g1)^{-1} > g2 < E<(g1); used to
    cross-check the closed form."""
    E = exp_left(g1)
    out = hs_left(hs_right(neumann_inverse(E), g2), E)
    out.is_infinitesimal_character = True
    return out


def positive_part(f: Functional) -> Functional:
    """f with its value at the empty bar word replaced by 0."""
    return _PositivePart(f)


def agree_up_to(f: Functional, g: Functional, letters, max_degree: int,
                include_empty: bool = True):
    """First bar word of degree <= max_degree where f and g differ, as a
    (bar word, f value, g value) triple, or None if they agree everywhere."""
    if include_empty:
        fv, gv = f(EMPTY_BAR), g(EMPTY_BAR)
        if fv != gv:
            return (EMPTY_BAR, fv, gv)
    for b in all_barwords(tuple(letters), max_degree):
        fv, gv = f(b), g(b)
        if fv != gv:
            return (b, fv, gv)
    return None
