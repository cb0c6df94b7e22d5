"""Pre-Lie Magnus expansion, its inverse, BCH, and the shuffle group laws.

The Magnus map and its inverse exchange the convolution logarithm with the
left half-shuffle logarithm of a common group element: with O the Magnus map
and W its inverse,

    exp_left(k) = exp_star(O(k)),      W(log_star(X)) = log_left(X).

O is a Bernoulli-weighted fixed point in the pre-Lie product; W is the plain
right-nested pre-Lie exponential sum.  Both truncate exactly, because every
pre-Lie multiplication raises the minimal degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from . import mutations
from .errors import DomainError
from .functionals import (Functional, _Linear, conv, exp_left, exp_star,
                          hs_left, hs_right, log_left, log_star, neumann_inverse,
                          prelie)


class BernoulliTable:
    """Bernoulli numbers B_m (B_1 = -1/2 convention), grown on demand via the
    defining recurrence sum_{j<=m} C(m+1, j) B_j = 0."""

    def __init__(self):
        self._values = [Fraction(1)]

    def __getitem__(self, m: int) -> Fraction:
        if m < 0:
            raise DomainError("Bernoulli numbers are indexed by m >= 0")
        values = self._values
        while len(values) <= m:
            k = len(values)
            acc = sum(comb(k + 1, j) * values[j] for j in range(k))
            values.append(Fraction(-acc, k + 1))
        return values[m]


bernoulli = BernoulliTable()


class _Magnus(Functional):
    """The Magnus fixed point O(k) = sum_m (B_m / m!) L_{O(k)}^m (k), where
    L_x(y) = x |> y.  Self-references only occur at strictly smaller degree,
    so the degree recursion is well founded."""

    __slots__ = ("kappa", "_iters")

    def __init__(self, kappa):
        super().__init__()
        if not kappa.is_infinitesimal_character:
            raise DomainError("the Magnus expansion acts on infinitesimal characters")
        self.kappa = kappa
        self._iters = [kappa]
        self.is_infinitesimal_character = True

    def _value(self, b):
        d = b.degree
        if d == 0:
            return Fraction(0)
        iters = self._iters
        while len(iters) <= d - 1:
            iters.append(prelie(self, iters[-1]))
        total = self.kappa(b)
        skip2 = mutations.is_active("skip-bernoulli-2")
        for m in range(1, d):
            if skip2 and m == 2:
                continue
            bm = bernoulli[m]
            if bm:
                total += bm / factorial(m) * iters[m](b)
        return total


class _MagnusInverse(Functional):
    """The pre-Lie exponential W(r) = sum_n L_{r}^n (r) / (n+1)!."""

    __slots__ = ("rho", "_iters")

    def __init__(self, rho):
        super().__init__()
        if not rho.is_infinitesimal_character:
            raise DomainError("the inverse Magnus expansion acts on infinitesimal characters")
        self.rho = rho
        self._iters = [rho]
        self.is_infinitesimal_character = True

    def _value(self, b):
        d = b.degree
        if d == 0:
            return Fraction(0)
        iters = self._iters
        while len(iters) <= d - 1:
            iters.append(prelie(self.rho, iters[-1]))
        total = Fraction(0)
        for n in range(d):
            v = iters[n](b)
            if v:
                total += Fraction(1, factorial(n + 1)) * v
        return total


def magnus(kappa: Functional) -> Functional:
    """Magnus expansion O(kappa); equals log_star(exp_left(kappa))."""
    return _Magnus(kappa)


def magnus_inverse(rho: Functional) -> Functional:
    """Inverse Magnus map W(rho); W and O are mutually inverse."""
    return _MagnusInverse(rho)


def bch(g1: Functional, g2: Functional) -> Functional:
    """Baker-Campbell-Hausdorff law log_star(exp_star(g1) * exp_star(g2))."""
    if not (g1.is_infinitesimal_character and g2.is_infinitesimal_character):
        raise DomainError("the BCH law acts on infinitesimal characters")
    return log_star(conv(exp_star(g1), exp_star(g2)))


def group_law_left(g1: Functional, g2: Functional) -> Functional:
    """Left shuffle group law g1 # g2 = log_left(E<(g1) * E<(g2)).

    Computed in closed form as g1 plus the conjugation of g2 by E<(g1) from
    the left, which trades a logarithm round trip for a single adjoint."""
    if not (g1.is_infinitesimal_character and g2.is_infinitesimal_character):
        raise DomainError("the shuffle group laws act on infinitesimal characters")
    E = exp_left(g1)
    moved = hs_left(hs_right(E, g2), neumann_inverse(E))
    out = _Linear(((1, g1), (1, moved)))
    out.is_infinitesimal_character = True
    return out


def group_law_left_definitional(g1: Functional, g2: Functional) -> Functional:
    """The defining expression for g1 # g2; kept for cross-checks."""
    return log_left(conv(exp_left(g1), exp_left(g2)))


def group_law_right(g1: Functional, g2: Functional) -> Functional:
    """Right shuffle group law g1 (.) g2 = -((-g2) # (-g1))."""
    out = _Linear(((-1, group_law_left(-1 * g2, -1 * g1)),))
    out.is_infinitesimal_character = True
    return out


__all__ = ["BernoulliTable", "bernoulli", "magnus", "magnus_inverse", "bch",
           "group_law_left", "group_law_left_definitional", "group_law_right"]
