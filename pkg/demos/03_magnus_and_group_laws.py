"""The pre-Lie Magnus pair and the group laws it transports.

Half-shuffle exponentials and the convolution exponential are linked by the
Magnus expansion: exp_left(k) = exp_star(O(k)), where O is the Bernoulli-
weighted pre-Lie fixed point and W its inverse.  Pulling the convolution
product through the three exponentials gives three group laws on
infinitesimal characters; BCH corresponds to exp_star, the left/right
shuffle laws to the half-shuffle exponentials.
"""

from fractions import Fraction

from shuffleprob import (Letter, Word, agree_up_to, bch, bernoulli, conv,
                         exp_left, exp_star, infinitesimal, log_left, log_star,
                         magnus, magnus_inverse, group_law_left, prelie)

letters = (Letter("a"), Letter("b"))
a, b = letters

print("Bernoulli numbers:", [bernoulli[m] for m in range(9)])
print()

alpha = infinitesimal({Word((a,)): Fraction(1), Word((b,)): Fraction(1, 2),
                       Word((a, b)): Fraction(2), Word((a, a, b)): Fraction(-1)})

# Low-order shape: O(x) = x - x|>x / 2 + ..., W(x) = x + x|>x / 2 + ...
om = magnus(alpha)
print("Magnus values on a.b:", om(Word((a, b))),
      "= alpha(a.b) - (alpha |> alpha)(a.b)/2 =",
      alpha(Word((a, b))) - Fraction(1, 2) * prelie(alpha, alpha)(Word((a, b))))

# The defining property and the inverse.
assert agree_up_to(om, log_star(exp_left(alpha)), letters, 5) is None
assert agree_up_to(magnus_inverse(om), alpha, letters, 5) is None
print("magnus = log_star o exp_left, and W inverts it (degree <= 5)")
print()

# The left shuffle group law closes in one adjoint action and matches BCH
# after transport through the Magnus map.
beta = infinitesimal({Word((a,)): Fraction(-1, 3), Word((b, b)): Fraction(1)})
law = group_law_left(alpha, beta)
assert agree_up_to(law, log_left(conv(exp_left(alpha), exp_left(beta))),
                   letters, 4) is None
assert agree_up_to(magnus(law), bch(magnus(alpha), magnus(beta)),
                   letters, 4) is None
print("group law:  log_left(E<(x) * E<(y)) = x + Ad_{E<(x)^-1}(y)")
print("transport:  O(x # y) = BCH(O(x), O(y))")
print()

# BCH itself, to second order, is the familiar commutator correction.
g = bch(alpha, beta)
w = Word((a, b))
expected = (alpha(w) + beta(w)
            + Fraction(1, 2) * (conv(alpha, beta)(w) - conv(beta, alpha)(w)))
print(f"BCH on {w!r}: {g(w)} (x + y + [x,y]/2 gives {expected})")
assert g(w) == expected
