"""Maximum-order complexity: automaton engine against the window oracle."""

import random

import pytest

from seqlab.config import oracle_bound
from seqlab.errors import NotEllModulus, OracleBoundExceeded
from seqlab.generators import fcsr_word
from seqlab.maxorder import (
    coset,
    ell_moduli,
    ell_period,
    moc,
    moc_ell_formula,
    moc_from_coset,
    moc_oracle,
    moc_periodic,
    moc_profile,
)
from seqlab.numtheory import euler_phi, is_odd_prime_power, is_two_primitive
from seqlab.seqcore import PeriodicSequence, Word


def all_words(length):
    for v in range(1 << length):
        yield Word(bytes((v >> i) & 1 for i in range(length)))


def random_word(rng, length):
    return Word(bytes(rng.getrandbits(1) for _ in range(length)))


def test_moc_matches_oracle_exhaustive():
    for length in range(0, 11):
        for w in all_words(length):
            assert moc(w).m == moc_oracle(w).m, w.to01()


def test_moc_matches_oracle_random():
    rng = random.Random(20)
    for _ in range(300):
        w = random_word(rng, rng.randrange(1, 200))
        assert moc(w).m == moc_oracle(w).m, w.to01()


def test_moc_witness_is_valid():
    rng = random.Random(21)
    words = [random_word(rng, rng.randrange(2, 120)) for _ in range(100)]
    words += [Word.from01("0110100110010110"), Word.from01("0010010000100100")]
    for w in words:
        res = moc(w)
        if res.m == 0:
            assert len(w) <= 1
            continue
        wit = res.witness
        L = res.m - 1
        assert wit.length == L
        # Two occurrences of the same length-L window with different successors.
        assert w.bits[wit.i : wit.i + L] == w.bits[wit.j : wit.j + L]
        assert w[wit.i + L] != w[wit.j + L]


def test_moc_known_values():
    assert moc(Word.from01("")).m == 0
    assert moc(Word.from01("0")).m == 0
    assert moc(Word.from01("01")).m == 1
    assert moc(Word.from01("00")).m == 0
    assert moc(Word.from01("00000")).m == 0
    assert moc(Word.from01("0011")).m == 2
    assert moc(Word.from01("0001")).m == 3
    assert moc_periodic(PeriodicSequence.from_word(Word.from01("00100100"))) == 6


def test_moc_profile_matches_prefixes():
    rng = random.Random(22)
    for _ in range(30):
        w = random_word(rng, rng.randrange(1, 80))
        prof = moc_profile(w)
        for n in range(1, len(w) + 1):
            assert prof.at(n) == moc(Word(w.bits[:n])).m


def test_moc_profile_nondecreasing():
    rng = random.Random(23)
    for _ in range(20):
        w = random_word(rng, 150)
        prof = moc_profile(w)
        vals = [prof.at(n) for n in range(1, 151)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_moc_oracle_respects_bound(monkeypatch):
    monkeypatch.setenv("SEQLAB_ORACLE_BOUNDS", "moc=50")
    assert oracle_bound("moc") == 50
    with pytest.raises(OracleBoundExceeded):
        moc_oracle(Word(bytes(60)))
    monkeypatch.delenv("SEQLAB_ORACLE_BOUNDS")
    assert oracle_bound("moc") == 2000


def test_coset_structure():
    c = coset(3, 31)
    assert c.q == 31
    assert c.elements == frozenset({3, 6, 12, 24, 17})
    for x in c.elements:
        assert (2 * x) % 31 in c.elements


def test_moc_from_coset_known():
    assert moc_from_coset(3, 31) == 3
    assert moc_from_coset(1, 63) == 5


def test_moc_from_coset_matches_word_route():
    rng = random.Random(24)
    for q in (11, 31, 63, 85, 127, 255, 257):
        for _ in range(4):
            a = rng.randrange(1, q)
            from math import gcd

            if gcd(a, q) != 1:
                continue
            s = fcsr_word(a, q)
            assert moc_from_coset(a, q) == moc_periodic(s), (a, q)


def test_moc_periodic_stabilizes():
    rng = random.Random(25)
    for _ in range(40):
        T = rng.randrange(1, 12)
        s = PeriodicSequence.from_word(random_word(rng, T))
        m = moc_periodic(s)
        assert m == moc(s.prefix(2 * s.T)).m
        assert m == moc(s.prefix(3 * s.T + 5)).m


def test_ell_moduli_membership():
    mods = ell_moduli(600)
    assert mods == sorted(mods)
    expected = []
    for q in range(3, 601, 2):
        if is_odd_prime_power(q) and is_two_primitive(q):
            expected.append(q)
    assert mods == expected
    assert mods[:10] == [3, 5, 9, 11, 13, 19, 25, 27, 29, 37]


def test_ell_period():
    for q in (3, 5, 9, 11, 13, 19, 25, 27):
        assert ell_period(q) == euler_phi(q)
        assert ell_period(q) == fcsr_word(1, q).T
    # Any odd modulus has a well-defined expansion period.
    assert ell_period(7) == 3


def test_moc_ell_formula_matches_word_route():
    for q in ell_moduli(1000):
        assert moc_ell_formula(q) == moc_from_coset(1, q), q
    with pytest.raises(NotEllModulus):
        moc_ell_formula(7)
