import random
from fractions import Fraction as F

import pytest

import shuffleprob as sp
from shuffleprob import Distribution, ValidationError, Word
from shuffleprob.cumulants import CumulantKind, series
from shuffleprob.words import words_up_to

from conftest import AB, random_fraction

A, B = AB


def uw(letter, k):
    return Word((letter,) * k)


def random_distribution(seed, letters=AB, max_degree=5):
    rng = random.Random(seed)
    values = {}
    for w in words_up_to(letters, max_degree):
        v = random_fraction(rng)
        if v:
            values[w] = v
    phi = sp.exp_left(sp.infinitesimal(values))
    moments = {w: phi(w) for w in words_up_to(letters, max_degree) if phi(w)}
    return Distribution(tuple(letters), max_degree, moments)


def test_distribution_validation():
    with pytest.raises(ValidationError):
        Distribution((), 3, {})
    with pytest.raises(ValidationError):
        Distribution((A,), 0, {})
    with pytest.raises(ValidationError):
        Distribution((A,), 2, {uw(A, 3): F(1)})
    with pytest.raises(ValidationError):
        Distribution((A,), 2, {uw(B, 1): F(1)})
    with pytest.raises(ValidationError):
        Distribution((A,), 2, {Word(): F(2)})


def test_semicircle_fixed_vectors():
    sem = sp.semicircle(6)
    a = sem.letters[0]
    assert [sem.moment(uw(a, k)) for k in range(1, 7)] == [0, 1, 0, 2, 0, 5]
    free = sp.to_cumulants(sem, "free")
    boolean = sp.to_cumulants(sem, "boolean")
    mono = sp.to_cumulants(sem, "monotone")
    assert free == {uw(a, 2): 1}
    assert boolean == {uw(a, 2): 1, uw(a, 4): 1, uw(a, 6): 2}
    assert mono[uw(a, 4)] == F(1, 2)


def test_from_cumulants_catalan_and_interval():
    sem = sp.semicircle(6)
    a = sem.letters[0]
    pair = {uw(a, 2): F(1)}
    free_d = sp.from_cumulants(pair, "free", sem.letters, 6)
    assert [free_d.moment(uw(a, k)) for k in range(1, 7)] == [0, 1, 0, 2, 0, 5]
    bool_d = sp.from_cumulants(pair, "boolean", sem.letters, 6)
    assert [bool_d.moment(uw(a, k)) for k in range(1, 7)] == [0, 1, 0, 1, 0, 1]
    zero_d = sp.from_cumulants({}, "monotone", sem.letters, 4)
    assert zero_d.moments == {}


def test_round_trips_all_kinds():
    d = random_distribution(50)
    for kind in CumulantKind:
        back = sp.from_cumulants(sp.to_cumulants(d, kind), kind, d.letters, d.max_degree)
        assert back.moments == d.moments, kind


def test_oracle_equivalence_random():
    for seed in (51, 52, 53):
        d = random_distribution(seed, max_degree=4)
        for kind in CumulantKind:
            cums = sp.to_cumulants(d, kind)
            for w in d.words():
                assert sp.oracle_moments(cums, kind, w) == d.moment(w), (kind, w)


def test_convert_examples():
    a = A
    pair = {uw(a, 2): F(1)}
    boolean = sp.convert(pair, "free", "boolean", 4, (a,))
    assert boolean == {uw(a, 2): 1, uw(a, 4): 1}
    mono = sp.convert(pair, "boolean", "monotone", 4, (a,))
    assert mono == {uw(a, 2): 1, uw(a, 4): F(-1, 2)}
    same = sp.convert(pair, "free", "free", 4, (a,))
    assert same == pair


def test_convert_round_trips_and_detour():
    d = random_distribution(54, max_degree=4)
    base = sp.to_cumulants(d, "free")
    for src in CumulantKind:
        start = sp.convert(base, "free", src, 4, d.letters)
        for dst in CumulantKind:
            there = sp.convert(start, src, dst, 4, d.letters)
            detour = sp.to_cumulants(sp.from_cumulants(start, src, d.letters, 4), dst)
            assert there == detour, (src, dst)
            back = sp.convert(there, dst, src, 4, d.letters)
            assert back == start, (src, dst)


def test_convert_infers_letters():
    pair = {uw(A, 2): F(1)}
    assert sp.convert(pair, "free", "boolean", 4) == {uw(A, 2): 1, uw(A, 4): 1}
    with pytest.raises(ValidationError):
        sp.convert({}, "free", "boolean", 4)


def test_degree_one_two_cumulants_agree():
    d = random_distribution(55, max_degree=3)
    maps = [sp.to_cumulants(d, kind) for kind in CumulantKind]
    for w in words_up_to(d.letters, 2):
        vals = {F(m.get(w, 0)) for m in maps}
        assert len(vals) == 1, w
    # and the one-letter degree-2 value is the variance
    a = d.letters[0]
    assert maps[0].get(uw(a, 2), F(0)) == d.moment(uw(a, 2)) - d.moment(uw(a, 1)) ** 2


def test_moment_series_fixed_point():
    d = random_distribution(56, max_degree=4)
    M = series(d, "M")
    eta = series(d, "eta")
    assert M == eta + M * eta


def test_series_fixed_examples():
    sem = sp.semicircle(6)
    a = sem.letters[0]
    R = series(sem, "R")
    assert R.coefficients == {uw(a, 2): 1}
    pm = sp.point_mass(F(5, 2), 4)
    eta = series(pm, "eta")
    assert eta.coefficients == {uw(pm.letters[0], 1): F(5, 2)}
    with pytest.raises(ValidationError):
        series(sem, "Q")


def test_unknown_kind_rejected():
    with pytest.raises(ValidationError):
        sp.to_cumulants(sp.semicircle(2), "classical")
