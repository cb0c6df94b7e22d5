"""Words, bar words, and the unshuffling coproduct.

The basis of the engine: a word is a string of letters; a bar word is a
string of words.  The coproduct of a word picks out every subset of the
letter positions, sending the chosen subword to the left tensor leg and the
maximal runs of leftover positions -- as a bar word -- to the right leg.
"""

from shuffleprob import (BarWord, Letter, Side, Word, half_unshuffle, unshuffle,
                         unshuffle_bar)
from shuffleprob.axioms import check_axioms

a, b, c = Letter("a"), Letter("b"), Letter("c")

w = Word((a, b, c))
print(f"word {w!r} has coproduct with {len(unshuffle(w))} terms:")
print("   ", unshuffle(w))
print()

# The subset {2} leaves two runs behind: positions 1 and 3 become a|c.
left_leg = BarWord((Word((b,)),))
right_leg = BarWord((Word((a,)), Word((c,))))
print(f"coefficient of {left_leg!r} (x) {right_leg!r}:",
      unshuffle(w).coefficient(left_leg, right_leg))
print()

# The coproduct splits in two: subsets keeping the first letter (left half)
# and subsets dropping it (right half).
print("left half: ", half_unshuffle(w, Side.LEFT))
print("right half:", half_unshuffle(w, Side.RIGHT))
assert half_unshuffle(w, Side.LEFT) + half_unshuffle(w, Side.RIGHT) == unshuffle(w)
print("(the halves add up to the full coproduct)")
print()

# On bar words the coproduct extends multiplicatively; a half acts on the
# first component only.
bar = BarWord((Word((a,)), Word((b, c))))
print(f"bar word {bar!r}:")
print("  full coproduct:", unshuffle_bar(bar))
print()

# The whole coalgebra structure is machine-checkable on basis elements:
# coassociativity, counit laws, the splitting, the three half-coproduct
# coassociativity axioms, and the compatibility with the bar product.
report = check_axioms((a, b), max_degree=4)
for line in report.lines():
    print(line)
