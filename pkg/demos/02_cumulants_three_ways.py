"""Free, boolean and monotone cumulants as three logarithms of one character.

The moments of a family of non-commutative random variables extend to a
character on bar words.  Its left half-shuffle logarithm collects the free
cumulants, the right one the boolean cumulants, and the convolution
logarithm the monotone cumulants.  An independent set-partition oracle
(non-crossing sums, interval sums, inverse-tree-factorial-weighted sums)
recomposes the moments from each family -- the two paths share no code.
"""

from fractions import Fraction

from shuffleprob import (Word, convert, from_cumulants, oracle_moments,
                         semicircle, series, to_cumulants)

sem = semicircle(6)
a = sem.letters[0]
word = lambda k: Word((a,) * k)
fmt = lambda vals: "(" + ", ".join(str(v) for v in vals) + ")"

print("semicircle moments:", fmt(sem.moment(word(k)) for k in range(1, 7)))
for kind in ("free", "boolean", "monotone"):
    cums = to_cumulants(sem, kind)
    vec = [cums.get(word(k), Fraction(0)) for k in range(1, 7)]
    print(f"{kind:9s} cumulants: {fmt(vec)}")
    recomposed = [oracle_moments(cums, kind, word(k)) for k in range(1, 7)]
    assert recomposed == [sem.moment(word(k)) for k in range(1, 7)]
print("partition oracle recomposes the moments from every family")
print()

# The three families convert into each other at the Lie-algebra level,
# through the Magnus expansion -- no detour through moments.
pair = {word(2): Fraction(1)}
print("unit pair cumulants, read as each family, produce:")
for kind, tag in (("free", "Catalan"), ("boolean", "single nesting"),
                  ("monotone", "arcsine")):
    d = from_cumulants(pair, kind, sem.letters, 6)
    print(f"  {kind:9s}-> moments {fmt(d.moment(word(k)) for k in range(1, 7))}  ({tag})")
mono = convert(pair, "boolean", "monotone", 4)
print("boolean pair cumulants as monotone cumulants:",
      {repr(w): str(v) for w, v in mono.items()})
print()

# Generating series: the moment series satisfies M = eta + M.eta, with eta
# the boolean cumulant series.
M, eta = series(sem, "M"), series(sem, "eta")
assert M == eta + M * eta
print("M = eta + M*eta holds for the semicircle law")
print("R-series of the semicircle:", series(sem, "R"))
