"""Generators for the sequence families under study."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    EvenModulus,
    InvalidParameter,
    MissingParameter,
    NegativeValue,
    NotCoprime,
    NotOddPrime,
    TooShort,
    ZeroSeed,
)
from .numtheory import is_prime, legendre_symbol, multiplicative_order
from .seqcore import PeriodicSequence, Word, least_period, read_bits


@dataclass(frozen=True)
class PolySpec:
    """Integer polynomial, constant coefficient first.

    Trailing zero coefficients are trimmed so degree is canonical; the zero
    polynomial is (0,).
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise ValueError("need at least one coefficient")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def text(self) -> str:
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if c == 0 and self.degree > 0:
                continue
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append("n" if c == 1 else f"{c}*n")
            else:
                parts.append(f"n^{e}" if c == 1 else f"{c}*n^{e}")
        return "+".join(parts).replace("+-", "-") or "0"


IDENTITY = PolySpec((0, 1))


def pattern_bit(k: int, n: int) -> int:
    """Parity of the number of all-ones windows of length k in binary(n).

    Windows may overlap: binary 111 contains two occurrences of 11. k = 1
    gives the parity of the bit count (Thue-Morse), k = 2 the Rudin-Shapiro
    coefficient parity.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n < 0:
        raise NegativeValue(n, n)
    m = n
    for j in range(1, k):
        m &= n >> j
    # Each surviving bit marks a position where k consecutive bits are 1.
    return m.bit_count() & 1


def pattern_word(k: int, n: int) -> Word:
    return Word(bytes(pattern_bit(k, i) for i in range(n)))


def thue_morse_word(n: int) -> Word:
    return pattern_word(1, n)


def rudin_shapiro_word(n: int) -> Word:
    return pattern_word(2, n)


def along_polynomial(base_bit: Callable[[int], int], f: PolySpec, n: int) -> Word:
    """Subsequence (base_bit(f(0)), ..., base_bit(f(n-1))); f must stay >= 0."""
    out = bytearray()
    for i in range(n):
        v = f(i)
        if v < 0:
            raise NegativeValue(i, v)
        out.append(base_bit(v))
    return Word(bytes(out))


_FIBS = [1, 2]  # F_2, F_3, ... in the zero-free indexing; grown on demand


def _fibs_upto(n: int) -> list[int]:
    while _FIBS[-1] < n:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS


def zeckendorf_digits(n: int) -> tuple[int, ...]:
    """Greedy Fibonacci expansion of n >= 0: the summands, descending.

    The greedy choice never takes two consecutive Fibonacci numbers, which is
    the defining constraint of the expansion.
    """
    if n < 0:
        raise NegativeValue(n, n)
    fibs = _fibs_upto(n) if n else []
    out = []
    i = len(fibs) - 1
    rest = n
    while rest:
        while fibs[i] > rest:
            i -= 1
        out.append(fibs[i])
        rest -= fibs[i]
        i -= 1  # skip the adjacent summand
    return tuple(out)


def zeckendorf_bit(n: int) -> int:
    """Parity of the Fibonacci digit sum of n."""
    return len(zeckendorf_digits(n)) & 1


def zeckendorf_word(n: int) -> Word:
    return Word(bytes(zeckendorf_bit(i) for i in range(n)))


def legendre_word(p: int, f: PolySpec, n: int) -> Word:
    """Bits of the quadratic-residue indicator of f along 0..n-1 mod p.

    Bit i is 1 exactly when f(i) is a nonzero square mod p; multiples of p
    (symbol 0) give bit 0.
    """
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    if all(c % p == 0 for c in f.coefficients):
        raise ValueError(f"f vanishes identically mod {p}")
    out = bytearray()
    for i in range(n):
        out.append(1 if legendre_symbol(f(i) % p, p) == 1 else 0)
    return Word(bytes(out))


def legendre_period(p: int, f: PolySpec) -> PeriodicSequence:
    """One full period (length p) of the quadratic-residue sequence."""
    return PeriodicSequence.from_word(legendre_word(p, f, p))


def fcsr_bit(a: int, q: int, n: int) -> int:
    """Bit n of the carry-register sequence: (a * 2^{-n} mod q) mod 2."""
    _check_fcsr_args(a, q)
    inv = pow(2, -n, q) if n else 1
    return (a * inv % q) & 1


def fcsr_word(a: int, q: int) -> PeriodicSequence:
    """Carry-register sequence with connection integer q and numerator a.

    One least period of s_n = (a * 2^{-n} mod q) mod 2; its length is the
    multiplicative order of 2 mod q. The 2-adic value of the sequence is
    -a/q, so connection() inverts this construction exactly.
    """
    _check_fcsr_args(a, q)
    T = multiplicative_order(2, q)
    inv2 = (q + 1) // 2
    bits = bytearray()
    cur = a
    for _ in range(T):
        bits.append(cur & 1)
        cur = cur * inv2 % q
    return PeriodicSequence(Word(bytes(bits)), least=True)


def _check_fcsr_args(a: int, q: int) -> None:
    if q < 3 or q % 2 == 0:
        raise EvenModulus(f"need odd q >= 3, got {q}")
    if not 0 < a < q:
        raise ValueError(f"need 0 < a < q, got a = {a}")
    if math.gcd(a, q) != 1:
        raise NotCoprime(f"gcd({a}, {q}) != 1")


def lfsr_word(taps: tuple[int, ...], seed: tuple[int, ...], n: int) -> Word:
    """Linear-feedback sequence s_{i+r} = XOR of s_{i+t} over t in taps.

    r is the seed length; taps are positions in [0, r). The first r output
    bits are the seed itself.
    """
    r = len(seed)
    if r == 0:
        raise ValueError("empty seed")
    if any(b not in (0, 1) for b in seed):
        raise ValueError("seed must be bits")
    if not all(0 <= t < r for t in taps):
        raise ValueError(f"taps must lie in [0, {r})")
    if len(set(taps)) != len(taps):
        raise ValueError("duplicate tap")
    if not any(seed):
        raise ZeroSeed("all-zero seed generates the zero sequence")
    state = list(seed)
    out = bytearray()
    for _ in range(n):
        out.append(state[0])
        nxt = 0
        for t in taps:
            nxt ^= state[t]
        state = state[1:] + [nxt]
    return Word(bytes(out))


def lfsr_period(taps: tuple[int, ...], seed: tuple[int, ...]) -> PeriodicSequence:
    """One least period of the register output, found from the state cycle.

    Requires tap 0 so the state map is a bijection and the cycle returns to
    the seed. The state at step i is the next r output bits, so the output
    period equals the state period exactly.
    """
    if 0 not in taps:
        raise InvalidParameter("tap 0 is required for a pure state cycle")
    r = len(seed)
    lfsr_word(taps, seed, 0)  # validates taps and seed
    state = tuple(seed)
    out = bytearray()
    steps = 0
    while True:
        out.append(state[0])
        nxt = 0
        for t in taps:
            nxt ^= state[t]
        state = state[1:] + (nxt,)
        steps += 1
        if state == tuple(seed):
            break
        assert steps < 1 << r, "state cycle missed the seed"
    return PeriodicSequence(Word(bytes(out)), least=True)


FAMILIES = frozenset(
    {
        "zero",
        "ones",
        "thue-morse",
        "pattern",
        "rudin-shapiro",
        "zeckendorf",
        "legendre",
        "ell",
        "lfsr",
        "file",
    }
)

# Families whose bit function is indexed by n and may be composed with a
# polynomial subsequence; the rest are registers or external data.
_INDEXED = frozenset({"zero", "ones", "thue-morse", "pattern", "rudin-shapiro", "zeckendorf"})

_PATTERN_ORDER = {"thue-morse": 1, "rudin-shapiro": 2}


@dataclass(frozen=True)
class SeqSpec:
    """A named sequence family plus its parameters.

    params is a tuple of (key, value) pairs; values are ints, index tuples,
    paths, or PolySpec. poly, when present, selects the subsequence along
    the polynomial's values.
    """

    family: str
    params: tuple[tuple[str, object], ...] = ()
    poly: PolySpec | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}")
        if self.poly is not None and self.family not in _INDEXED:
            raise InvalidParameter(f"family {self.family!r} does not take a poly suffix")
        keys = [k for k, _ in self.params]
        if len(set(keys)) != len(keys):
            raise InvalidParameter("duplicate parameter")
        ordered = tuple(sorted(self.params))
        if ordered != self.params:
            object.__setattr__(self, "params", ordered)

    def param(self, key: str, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def text(self) -> str:
        """Canonical spec string; parameters in sorted key order."""
        parts = []
        for k, v in sorted(self.params):
            if isinstance(v, PolySpec):
                parts.append(f"{k}={v.text()}")
            elif isinstance(v, tuple):
                parts.append(f"{k}={'.'.join(str(b) for b in v)}")
            else:
                parts.append(f"{k}={v}")
        out = self.family + (":" + ",".join(parts) if parts else "")
        if self.poly is not None:
            out += f"@poly={self.poly.text()}"
        return out


def _int_param(spec: SeqSpec, key: str) -> int:
    v = spec.param(key)
    if v is None:
        raise MissingParameter(f"family {spec.family!r} needs {key}=")
    if not isinstance(v, int):
        raise InvalidParameter(f"{key} must be an integer, got {v!r}")
    return v


def _pattern_order(spec: SeqSpec) -> int:
    k = spec.param("k", _PATTERN_ORDER.get(spec.family))
    if k is None:
        raise MissingParameter("pattern needs k=")
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"k must be a positive integer, got {k!r}")
    return k


def materialize(spec: SeqSpec, n: int) -> Word:
    """First n bits of the specified sequence."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    fam = spec.family
    if fam in ("zero", "ones"):
        bit = 0 if fam == "zero" else 1
        if spec.poly is not None:
            return along_polynomial(lambda m: bit, spec.poly, n)
        return Word(bytes([bit]) * n)
    if fam in ("thue-morse", "rudin-shapiro", "pattern"):
        k = _pattern_order(spec)
        if spec.poly is not None:
            return along_polynomial(lambda m: pattern_bit(k, m), spec.poly, n)
        return pattern_word(k, n)
    if fam == "zeckendorf":
        if spec.poly is not None:
            return along_polynomial(zeckendorf_bit, spec.poly, n)
        return zeckendorf_word(n)
    if fam == "legendre":
        f = spec.param("f", IDENTITY)
        if not isinstance(f, PolySpec):
            raise InvalidParameter(f"f must be a polynomial, got {f!r}")
        return legendre_word(_int_param(spec, "p"), f, n)
    if fam == "ell":
        return fcsr_word(_int_param(spec, "A"), _int_param(spec, "q")).prefix(n)
    if fam == "lfsr":
        return lfsr_word(_index_tuple(spec, "taps"), _index_tuple(spec, "seed"), n)
    w = read_bits(_path_param(spec))
    if len(w) < n:
        raise TooShort(f"file holds {len(w)} bits, need {n}")
    return w[:n]


def periodic_sequence(spec: SeqSpec) -> PeriodicSequence:
    """The specified sequence as a least-period word; only register, residue
    and file families have one."""
    fam = spec.family
    if fam in ("zero", "ones"):
        return PeriodicSequence(Word([0 if fam == "zero" else 1]), least=True)
    if fam == "legendre":
        f = spec.param("f", IDENTITY)
        if not isinstance(f, PolySpec):
            raise InvalidParameter(f"f must be a polynomial, got {f!r}")
        return legendre_period(_int_param(spec, "p"), f)
    if fam == "ell":
        return fcsr_word(_int_param(spec, "A"), _int_param(spec, "q"))
    if fam == "lfsr":
        return lfsr_period(_index_tuple(spec, "taps"), _index_tuple(spec, "seed"))
    if fam == "file":
        return least_period(read_bits(_path_param(spec)))
    raise InvalidParameter(f"family {fam!r} has no finite period")


def _index_tuple(spec: SeqSpec, key: str) -> tuple[int, ...]:
    v = spec.param(key)
    if v is None:
        raise MissingParameter(f"lfsr needs {key}=")
    if not (isinstance(v, tuple) and all(isinstance(b, int) for b in v)):
        raise InvalidParameter(f"{key} must be a dot-separated integer list, got {v!r}")
    return v


def _path_param(spec: SeqSpec) -> str:
    v = spec.param("path")
    if v is None:
        raise MissingParameter("file needs path=")
    if not isinstance(v, str):
        raise InvalidParameter(f"path must be a string, got {v!r}")
    return v
