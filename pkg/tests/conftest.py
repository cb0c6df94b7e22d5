import random
from fractions import Fraction

import pytest

from shuffleprob import Letter, Word, infinitesimal
from shuffleprob.words import words_up_to

AB = (Letter("a"), Letter("b"))


@pytest.fixture
def ab():
    return AB


def random_fraction(rng):
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def random_inf(seed, letters=AB, max_degree=5):
    rng = random.Random(seed)
    values = {}
    for w in words_up_to(letters, max_degree):
        v = random_fraction(rng)
        if v:
            values[w] = v
    return infinitesimal(values)


def uword(letter_name, k, letters=AB):
    by_name = {l.name: l for l in letters}
    return Word((by_name[letter_name],) * k)
