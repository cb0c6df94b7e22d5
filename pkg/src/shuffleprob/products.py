"""Additive convolutions, universal products, subordination, and the
group-level boolean-to-free bijection.

Convolutions act on characters over a common algebra: the free convolution
adds left-logarithms, the boolean convolution adds right-logarithms, and the
monotone/antimonotone products are the convolution product in either order.
The two-algebra universal products are the same operations applied to
characters that extend each factor by zero on the other's letters; a
:class:`LabeledContext` packages that embedding and the closed forms the
products reduce to on alternating words.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import functionals as fn
from .coproducts import Side
from .cumulants import Distribution
from .errors import DomainError, ValidationError
from .words import Letter, Word, words_up_to


# ---------------------------------------------------------------------------
# group-level convolutions

def _require_unital(*phis):
    for phi in phis:
        if phi(fn.EMPTY_BAR) != 1:
            raise DomainError("convolutions act on unital (character-type) functionals")


def free_conv(phi1: fn.Functional, phi2: fn.Functional) -> fn.Functional:
    """Free additive convolution: exp_left of the sum of left logarithms."""
    _require_unital(phi1, phi2)
    return fn.exp_left(fn.log_left(phi1) + fn.log_left(phi2))


def boolean_conv(phi1: fn.Functional, phi2: fn.Functional) -> fn.Functional:
    """Boolean additive convolution: exp_right of the sum of right logarithms."""
    _require_unital(phi1, phi2)
    return fn.exp_right(fn.log_right(phi1) + fn.log_right(phi2))


def monotone_conv(phi1: fn.Functional, phi2: fn.Functional) -> fn.Functional:
    """Monotone product: plain convolution phi1 * phi2."""
    _require_unital(phi1, phi2)
    return fn.conv(phi1, phi2)


def antimonotone_conv(phi1: fn.Functional, phi2: fn.Functional) -> fn.Functional:
    return monotone_conv(phi2, phi1)


def factorize(g1: fn.Functional, g2: fn.Functional, side: Side = Side.LEFT):
    """Split the exponential of a sum into a convolution of exponentials.

    Left: (E<(g1), E<(g2^{g1})) multiplies to E<(g1+g2); right:
    (E>(g1^{-g2}), E>(g2)) multiplies to E>(g1+g2).
    """
    if side is Side.LEFT:
        return fn.exp_left(g1), fn.exp_left(fn.ad_action(g1, g2))
    if side is Side.RIGHT:
        return fn.exp_right(fn.ad_action(-1 * g2, g1)), fn.exp_right(g2)
    raise DomainError("factorize is left- or right-sided")


def subordinate(phi: fn.Functional, psi: fn.Functional, side: Side = Side.LEFT
                ) -> fn.Functional:
    """Subordination products.

    Left (phi |> psi): exp_left of the adjoint action of psi's left logarithm
    on phi's; satisfies  phi (+)< psi = psi * (phi |> psi).
    Right (phi <| psi): exp_right of the action of minus phi's right
    logarithm on psi's; satisfies  phi (+)> psi = (psi <| phi) * psi.
    """
    _require_unital(phi, psi)
    if side is Side.LEFT:
        return fn.exp_left(fn.ad_action(fn.log_left(psi), fn.log_left(phi)))
    if side is Side.RIGHT:
        return fn.exp_right(fn.ad_action(-1 * fn.log_right(phi), fn.log_right(psi)))
    raise DomainError("subordination is left- or right-sided")


def bp(phi: fn.Functional) -> fn.Functional:
    """Boolean-to-free bijection on characters: reread the right logarithm
    as a left logarithm (exp_left o log_right)."""
    _require_unital(phi)
    return fn.exp_left(fn.log_right(phi))


def bp_inverse(phi: fn.Functional) -> fn.Functional:
    _require_unital(phi)
    return fn.exp_right(fn.log_left(phi))


def bp_t(phi: fn.Functional, t) -> fn.Functional:
    """One-parameter interpolation of :func:`bp`.

    With k the left logarithm of phi, t >= 0 maps phi to exp_left(k^{tk});
    t = 0 is the identity, t = 1 is bp, and the family is an additive
    semigroup in t.  For t > 0 it agrees with the boolean 1/t-th power of
    the free t-th power.
    """
    t = Fraction(t)
    if t < 0:
        raise DomainError("the bijection semigroup is defined for t >= 0")
    _require_unital(phi)
    kappa = fn.log_left(phi)
    return fn.exp_left(fn.ad_action(t * kappa, kappa))


# ---------------------------------------------------------------------------
# two-algebra universal products

@dataclass(frozen=True)
class LabeledContext:
    """Two distributions on disjoint letter sets, embedded in the free
    product: each moment character extends by zero on words that touch the
    other algebra's letters."""

    d1: Distribution
    d2: Distribution

    def __post_init__(self):
        names1 = {l.name for l in self.d1.letters}
        names2 = {l.name for l in self.d2.letters}
        if names1 & names2:
            raise ValidationError(f"letter names must be disjoint, both sides use "
                                  f"{sorted(names1 & names2)}")
        if self.d1.max_degree != self.d2.max_degree:
            raise ValidationError("both distributions must share max_degree")
        if {l.tag for l in self.d1.letters} != {1} or {l.tag for l in self.d2.letters} != {2}:
            raise ValidationError("context distributions must carry algebra tags 1 and 2; "
                                  "use LabeledContext.from_distributions")

    @classmethod
    def from_distributions(cls, d1: Distribution, d2: Distribution) -> "LabeledContext":
        return cls(d1.retag(1), d2.retag(2))

    @property
    def max_degree(self) -> int:
        return self.d1.max_degree

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self.d1.letters + self.d2.letters

    def characters(self):
        return self.d1.character(), self.d2.character()

    def dist_for_tag(self, tag: int) -> Distribution:
        return self.d1 if tag == 1 else self.d2

    def alternating_words(self, max_len: int):
        """All words whose letters strictly alternate between the two
        algebras, of length 1..max_len, either algebra starting."""
        pools = (self.d1.letters, self.d2.letters)
        for n in range(1, max_len + 1):
            for start in (0, 1):
                seqs = [pools[(start + i) % 2] for i in range(n)]
                for combo in iproduct(*seqs):
                    yield Word(combo)

    @functools.cached_property
    def _product_characters(self):
        phi1, phi2 = self.characters()
        return {"monotone": monotone_conv(phi1, phi2),
                "antimonotone": antimonotone_conv(phi1, phi2),
                "free": free_conv(phi1, phi2),
                "boolean": boolean_conv(phi1, phi2)}

    def _evaluate(self, kind: str, w: Word, closed) -> Fraction:
        phi = self._product_characters[kind]
        value = phi(w)
        try:
            self._check_alternating(w)
        except DomainError:
            return value  # mixed words go through the convolution path only
        expected = closed(phi, w) if kind == "free" else closed(w)
        assert value == expected, \
            f"{kind} product disagrees with its closed form at {w!r}"
        return value

    def monotone_product(self, w: Word) -> Fraction:
        """Moment of w under the monotone extension (the convolution product
        of the two embedded characters, in context order)."""
        return self._evaluate("monotone", w, self.closed_monotone)

    def antimonotone_product(self, w: Word) -> Fraction:
        return self._evaluate("antimonotone", w, self.closed_antimonotone)

    def free_product(self, w: Word) -> Fraction:
        """Moment of w under the free extension (left logarithms add)."""
        return self._evaluate("free", w, self.closed_free)

    def boolean_product(self, w: Word) -> Fraction:
        """Moment of w under the boolean extension (right logarithms add)."""
        return self._evaluate("boolean", w, self.closed_boolean)

    # --- closed forms on alternating words ------------------------------

    def closed_monotone(self, w: Word) -> Fraction:
        """First algebra's letters multiply inside one moment; second
        algebra's letters factor out one by one."""
        self._check_alternating(w)
        own = w.subword([i + 1 for i, l in enumerate(w.letters) if l.tag == 1])
        out = self.d1.moment(own) if own else Fraction(1)
        for l in w.letters:
            if l.tag == 2:
                out *= self.d2.moment(Word((l,)))
        return out

    def closed_antimonotone(self, w: Word) -> Fraction:
        self._check_alternating(w)
        own = w.subword([i + 1 for i, l in enumerate(w.letters) if l.tag == 2])
        out = self.d2.moment(own) if own else Fraction(1)
        for l in w.letters:
            if l.tag == 1:
                out *= self.d1.moment(Word((l,)))
        return out

    def closed_boolean(self, w: Word) -> Fraction:
        """Every letter factors out on its own moment."""
        self._check_alternating(w)
        out = Fraction(1)
        for l in w.letters:
            out *= self.dist_for_tag(l.tag).moment(Word((l,)))
        return out

    def closed_free(self, phi: fn.Functional, w: Word) -> Fraction:
        """Signed subset recursion satisfied by the free product character:
        the moment of w is determined by moments of proper subwords keeping
        position 1 and by first moments of the dropped letters."""
        self._check_alternating(w)
        n = len(w)
        if n == 1:
            return self.dist_for_tag(w.letters[0].tag).moment(w)
        total = Fraction(0)
        for mask in range(1, 1 << n, 2):
            if mask == (1 << n) - 1:
                continue
            positions = [i + 1 for i in range(n) if mask >> i & 1]
            inner = phi(w.subword(positions))
            if not inner:
                continue
            sign = -1 if (n - len(positions)) % 2 else 1
            outer = Fraction(1)
            for i in range(n):
                if not mask >> i & 1:
                    l = w.letters[i]
                    outer *= self.dist_for_tag(l.tag).moment(Word((l,)))
            total += sign * inner * outer
        return -total

    def _check_alternating(self, w: Word):
        if not w:
            raise DomainError("closed forms are stated for nonempty alternating words")
        tags = [l.tag for l in w.letters]
        if any(t not in (1, 2) for t in tags):
            raise DomainError(f"word {w!r} uses letters outside the context")
        if any(a == b for a, b in zip(tags, tags[1:])):
            raise DomainError(f"word {w!r} does not alternate between the algebras")


def convolve_distributions(d1: Distribution, d2: Distribution, kind: str) -> Distribution:
    """Distribution-level convolution over a common letter set.

    kind is one of "free", "boolean", "monotone-left", "monotone-right".
    """
    if d1.letters != d2.letters:
        raise ValidationError("convolution needs a common letter set "
                              f"({d1.letters} vs {d2.letters})")
    if d1.max_degree != d2.max_degree:
        raise ValidationError("convolution needs a common max_degree")
    ops = {"free": free_conv, "boolean": boolean_conv,
           "monotone-left": monotone_conv, "monotone-right": antimonotone_conv}
    if kind not in ops:
        raise ValidationError(f"unknown convolution kind {kind!r}; expected one of {sorted(ops)}")
    phi = ops[kind](d1.character(), d2.character())
    moments = {}
    for w in words_up_to(d1.letters, d1.max_degree):
        v = phi(w)
        if v:
            moments[w] = v
    return Distribution(d1.letters, d1.max_degree, moments)


def subordinate_distributions(d1: Distribution, d2: Distribution, side: str) -> Distribution:
    if d1.letters != d2.letters or d1.max_degree != d2.max_degree:
        raise ValidationError("subordination needs a common letter set and max_degree")
    side_enum = {"left": Side.LEFT, "right": Side.RIGHT}.get(side)
    if side_enum is None:
        raise ValidationError(f"unknown side {side!r}; expected left or right")
    phi = subordinate(d1.character(), d2.character(), side_enum)
    moments = {}
    for w in words_up_to(d1.letters, d1.max_degree):
        v = phi(w)
        if v:
            moments[w] = v
    return Distribution(d1.letters, d1.max_degree, moments)


def bp_distribution(d: Distribution, t=1) -> Distribution:
    phi = bp_t(d.character(), t)
    moments = {}
    for w in words_up_to(d.letters, d.max_degree):
        v = phi(w)
        if v:
            moments[w] = v
    return Distribution(d.letters, d.max_degree, moments)
