"""Sequence family generators against independent oracles."""

import math
import random

import pytest

from seqlab.errors import (
    EvenModulus,
    InvalidParameter,
    NegativeValue,
    NotCoprime,
    TooShort,
    ZeroSeed,
)
from seqlab.generators import (
    IDENTITY,
    PolySpec,
    SeqSpec,
    along_polynomial,
    fcsr_bit,
    fcsr_word,
    legendre_period,
    legendre_word,
    lfsr_period,
    lfsr_word,
    materialize,
    pattern_bit,
    pattern_word,
    periodic_sequence,
    rudin_shapiro_word,
    thue_morse_word,
    zeckendorf_bit,
    zeckendorf_digits,
    zeckendorf_word,
)
from seqlab.numtheory import legendre_symbol, multiplicative_order
from seqlab.seqcore import Word, write_bits


# Run-length oracle: overlapping occurrences of the all-ones block of
# length k in the binary expansion of n, reduced mod 2.
def pattern_oracle(k: int, n: int) -> int:
    count = 0
    run = 0
    while n:
        if n & 1:
            run += 1
            if run >= k:
                count += 1
        else:
            run = 0
        n >>= 1
    return count & 1


def test_pattern_bit_matches_runlength_oracle():
    for k in (1, 2, 3, 4):
        for n in range(0, 1 << 14):
            assert pattern_bit(k, n) == pattern_oracle(k, n), (k, n)


def test_pattern_bit_matches_stripping_recursion():
    # Independent recursion: p(n) = p(n >> 1) xor [low k bits all ones].
    for k in (1, 2, 3, 4):
        m = (1 << k) - 1
        p = bytearray(1 << 18)
        for n in range(1, 1 << 18):
            p[n] = p[n >> 1] ^ (1 if (n & m) == m else 0)
        for n in range(0, 1 << 18, 97):
            assert pattern_bit(k, n) == p[n]
        for n in range(0, 4096):
            assert pattern_bit(k, n) == p[n]


def test_thue_morse_frozen_prefix():
    assert thue_morse_word(32).to01() == "01101001100101101001011001101001"
    assert thue_morse_word(64).to01() == pattern_word(1, 64).to01()


def test_rudin_shapiro_frozen_prefix():
    assert rudin_shapiro_word(16).to01() == "0001001000011101"
    assert rudin_shapiro_word(64).to01() == pattern_word(2, 64).to01()


def test_pattern_word_consistent_with_bit():
    for k in (1, 3):
        w = pattern_word(k, 200)
        assert list(w) == [pattern_bit(k, n) for n in range(200)]


def test_along_polynomial():
    f = PolySpec((0, 0, 1))
    w = along_polynomial(lambda n: pattern_bit(1, n), f, 50)
    assert list(w) == [pattern_bit(1, i * i) for i in range(50)]
    const = along_polynomial(lambda n: pattern_bit(1, n), PolySpec((3,)), 10)
    assert list(const) == [pattern_bit(1, 3)] * 10
    with pytest.raises(NegativeValue):
        along_polynomial(lambda n: 0, PolySpec((-5, 1)), 3)


def test_polyspec_canonical():
    assert PolySpec((1, 0, 2, 0)).coefficients == (1, 0, 2)
    assert PolySpec((0, 0)).coefficients == (0,)
    assert PolySpec((0, 1)).degree == 1
    assert PolySpec((7, -2, 3))(5) == 7 - 10 + 75
    assert IDENTITY(42) == 42
    with pytest.raises(ValueError):
        PolySpec(())


def fib_upto(n):
    fibs = [1, 2]
    while fibs[-1] <= n:
        fibs.append(fibs[-1] + fibs[-2])
    return fibs


def test_zeckendorf_digits_greedy_unique():
    for n in range(0, 3000):
        digits = zeckendorf_digits(n)
        assert sum(digits) == n
        assert list(digits) == sorted(digits, reverse=True)
        fibs = fib_upto(max(digits) if digits else 1)
        idx = [fibs.index(d) for d in digits]
        # Summands are distinct Fibonacci numbers, no two adjacent.
        assert len(set(idx)) == len(idx)
        for a, b in zip(sorted(idx), sorted(idx)[1:]):
            assert b - a >= 2


def test_zeckendorf_bit_is_summand_parity():
    for n in range(0, 3000):
        assert zeckendorf_bit(n) == len(zeckendorf_digits(n)) % 2
    assert [zeckendorf_bit(i) for i in range(16)] == [
        0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0,
    ]
    w = zeckendorf_word(300)
    assert list(w) == [zeckendorf_bit(n) for n in range(300)]


def test_legendre_word_character_convention():
    for p in (7, 11, 19):
        w = legendre_word(p, IDENTITY, 2 * p)
        for n in range(2 * p):
            expected = 1 if legendre_symbol(n, p) == 1 else 0
            assert w[n] == expected, (p, n)


def test_legendre_period():
    s = legendre_period(19, IDENTITY)
    assert s.T == 19
    assert s.word.to01() == legendre_word(19, IDENTITY, 19).to01()
    quad = legendre_period(7, PolySpec((1, 0, 1)))
    assert list(quad.word) == [
        1 if legendre_symbol(n * n + 1, 7) == 1 else 0 for n in range(7)
    ]


def test_fcsr_bit_formula():
    # s_n = (a * 2^-n mod q) mod 2, the 2-adic digit stream of a/q.
    for a, q in [(1, 11), (3, 31), (37, 127), (173, 255)]:
        inv2 = pow(2, -1, q)
        x = a % q
        for n in range(40):
            assert fcsr_bit(a, q, n) == x % 2, (a, q, n)
            x = (x * inv2) % q


def test_fcsr_expansion_identity():
    # The stream is the 2-adic expansion of -a/q: q * S_n + a = 0 mod 2^n.
    for a, q in [(1, 11), (5, 31), (37, 127), (173, 255)]:
        s = fcsr_word(a, q)
        for n in (5, 10, 20, 33):
            val = s.prefix(n).value()
            assert (q * val + a) % (1 << n) == 0, (a, q, n)


def test_fcsr_fixed_periods():
    cases = [
        ((3, 31), "11000", 5),
        ((5, 31), "10100", 5),
        ((37, 127), "1010010", 7),
        ((173, 255), "10110101", 8),
    ]
    for (a, q), bits, T in cases:
        s = fcsr_word(a, q)
        assert s.word.to01() == bits
        assert s.T == T == multiplicative_order(2, q)


def test_fcsr_argument_checks():
    with pytest.raises(EvenModulus):
        fcsr_word(3, 10)
    with pytest.raises(NotCoprime):
        fcsr_word(3, 9)
    with pytest.raises(ValueError):
        fcsr_word(0, 31)
    with pytest.raises(ValueError):
        fcsr_word(31, 31)


def test_lfsr_recurrence_and_seed():
    taps = (0, 1)
    seed = (1, 0, 0, 0)
    w = lfsr_word(taps, seed, 40)
    assert tuple(w)[:4] == seed
    for i in range(40 - 4):
        assert w[i + 4] == w[i] ^ w[i + 1], i
    taps5 = (0, 2)
    seed5 = (1, 1, 0, 1, 0)
    v = lfsr_word(taps5, seed5, 50)
    for i in range(50 - 5):
        assert v[i + 5] == v[i] ^ v[i + 2], i


def test_lfsr_period():
    s = lfsr_period((0, 1), (1, 0, 0, 0))
    assert s.T == 15
    assert s.prefix(30).to01() == lfsr_word((0, 1), (1, 0, 0, 0), 30).to01()
    # x^4 + x^2 + 1 is not primitive; this seed closes after 6 steps.
    assert lfsr_period((0, 2), (1, 0, 0, 0)).T == 6


def test_lfsr_argument_checks():
    with pytest.raises(ZeroSeed):
        lfsr_word((0, 1), (0, 0, 0, 0), 5)
    with pytest.raises(ValueError):
        lfsr_word((0, 4), (1, 0, 0, 0), 5)
    with pytest.raises(InvalidParameter):
        lfsr_period((1, 2), (1, 0, 0))


def test_seqspec_validation():
    with pytest.raises(InvalidParameter):
        SeqSpec("nonesuch")
    with pytest.raises(InvalidParameter):
        SeqSpec("ell", poly=IDENTITY)
    with pytest.raises(InvalidParameter):
        SeqSpec("ell", params=(("q", 31), ("q", 33)))
    spec = SeqSpec("ell", params=(("q", 31), ("A", 5)))
    assert spec.params == (("A", 5), ("q", 31))
    assert spec.text() == "ell:A=5,q=31"
    assert spec.param("q") == 31
    assert spec.param("missing", 7) == 7


def test_materialize_families(tmp_path):
    assert materialize(SeqSpec("zero"), 6).to01() == "000000"
    assert materialize(SeqSpec("ones"), 4).to01() == "1111"
    tm = materialize(SeqSpec("thue-morse"), 32)
    assert tm.to01() == thue_morse_word(32).to01()
    rs = materialize(SeqSpec("pattern", params=(("k", 2),)), 64)
    assert rs.to01() == materialize(SeqSpec("rudin-shapiro"), 64).to01()
    ell = materialize(SeqSpec("ell", params=(("A", 3), ("q", 31))), 12)
    assert ell.to01() == fcsr_word(3, 31).prefix(12).to01()
    poly = SeqSpec("thue-morse", poly=PolySpec((0, 0, 1)))
    assert list(materialize(poly, 20)) == [pattern_bit(1, i * i) for i in range(20)]
    zw = materialize(SeqSpec("zeckendorf"), 50)
    assert zw.to01() == zeckendorf_word(50).to01()
    lw = materialize(
        SeqSpec("lfsr", params=(("taps", (0, 1)), ("seed", (1, 0, 0, 0)))), 20
    )
    assert lw.to01() == lfsr_word((0, 1), (1, 0, 0, 0), 20).to01()

    path = tmp_path / "w.bits"
    write_bits(rudin_shapiro_word(40), path)
    fspec = SeqSpec("file", params=(("path", str(path)),))
    assert materialize(fspec, 40).to01() == rudin_shapiro_word(40).to01()
    with pytest.raises(TooShort):
        materialize(fspec, 41)


def test_periodic_sequence_from_spec():
    assert periodic_sequence(SeqSpec("zero")).word.to01() == "0"
    assert periodic_sequence(SeqSpec("ones")).word.to01() == "1"
    assert periodic_sequence(SeqSpec("legendre", params=(("p", 19),))).T == 19
    ell = periodic_sequence(SeqSpec("ell", params=(("A", 3), ("q", 31))))
    assert ell.word.to01() == "11000"
    lfsr = periodic_sequence(
        SeqSpec("lfsr", params=(("taps", (0, 1)), ("seed", (1, 0, 0, 0))))
    )
    assert lfsr.T == 15
    with pytest.raises(InvalidParameter):
        periodic_sequence(SeqSpec("thue-morse"))
    with pytest.raises(InvalidParameter):
        periodic_sequence(SeqSpec("zeckendorf"))
