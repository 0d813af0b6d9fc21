"""Linear complexity, windowed correlation of order k, and the algebraic
dependence degree of the generating function."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import oracle_bound
from .errors import BoundExceeded, TooShort
from .seqcore import Profile, Word, prefix_value


def linear_profile(w: Word) -> Profile:
    """Per-prefix linear complexity via incremental Berlekamp-Massey.

    Polynomials are packed into ints (bit i = coefficient of x^i), so each
    step is a couple of word-parallel xors. All-zero prefixes give 0.
    """
    c = 1  # current connection polynomial, c_0 = 1
    b = 1  # copy from before the last length change
    ell = 0
    m = -1  # index of the last length change
    srev = 0  # bit k = s_{n-k}
    values = []
    for n, bit in enumerate(w):
        srev = (srev << 1) | bit
        if (c & srev).bit_count() & 1:
            t = c
            c ^= b << (n - m)
            if 2 * ell <= n:
                ell = n + 1 - ell
                b = t
                m = n
        values.append(ell)
    return Profile(tuple(values))


def linear_complexity_periodic(period: Word) -> int:
    """Linear complexity of the infinite periodic sequence: the profile
    saturates within two periods."""
    t = len(period)
    if t == 0:
        raise TooShort("empty period")
    doubled = Word(period.bits * 2)
    return linear_profile(doubled).at(2 * t)


@dataclass(frozen=True)
class CorrelationWitness:
    """Achieving window: U terms starting at offsets, value the signed sum."""

    window: int
    offsets: tuple[int, ...]
    value: int


def correlation2(w: Word) -> tuple[int, CorrelationWitness]:
    """Order-2 correlation: max over window length U and offsets d1 < d2 of
    |sum_{i<U} (-1)^(s_{i+d1} + s_{i+d2})|. O(N^2) via per-lag prefix sums."""
    if len(w) < 2:
        raise TooShort(f"need length >= 2, got {len(w)}")
    return _correlation(w, 2)


def correlation_k(w: Word, k: int) -> tuple[int, CorrelationWitness]:
    """Order-k correlation over offset tuples d1 < ... < dk.

    Cost grows like N^k; guarded by k <= 4 and the 'corr' length bound
    (default 2048, see SEQLAB_ORACLE_BOUNDS).
    """
    if not 2 <= k <= 4:
        raise BoundExceeded(f"order k must be in [2, 4], got {k}")
    bound = oracle_bound("corr")
    if len(w) > bound:
        raise BoundExceeded(f"len {len(w)} > correlation bound {bound}")
    if len(w) < k:
        raise TooShort(f"need length >= {k}, got {len(w)}")
    return _correlation(w, k)


def _correlation(w: Word, k: int) -> tuple[int, CorrelationWitness]:
    n = len(w)
    bits = w.bits
    best_val = -1
    best_key = None  # (U, d1, lag tuple); lexicographically least among ties
    best_sign = 1
    for lags in combinations(range(1, n), k - 1):
        top = lags[-1]
        xs = [bits[j] for j in range(n - top)]
        for lag in lags:
            for j in range(n - top):
                xs[j] ^= bits[j + lag]
        # prefix sums of +-1 terms; the lag's max |window sum| is max - min
        prefix = [0] * (len(xs) + 1)
        acc = 0
        hi = lo = 0
        for j, bit in enumerate(xs):
            acc += 1 - 2 * bit
            prefix[j + 1] = acc
            if acc > hi:
                hi = acc
            elif acc < lo:
                lo = acc
        val = hi - lo
        if val < best_val:
            continue
        if val > best_val:
            best_val = val
            best_key = None
        # Tie-break pass: find the least (U, d1) achieving |sum| = val for
        # this lag tuple. latest-occurrence map gives the min U ending at b.
        latest: dict[int, int] = {}
        for b, pb in enumerate(prefix):
            for target, sign in ((pb - val, 1), (pb + val, -1)):
                a = latest.get(target)
                if a is not None:
                    key = (b - a, a, lags)
                    if best_key is None or key < best_key:
                        best_key = key
                        best_sign = sign
            if pb not in latest or latest[pb] < b:
                latest[pb] = b
    u, d1, lags = best_key
    offsets = (d1,) + tuple(d1 + lag for lag in lags)
    return best_val, CorrelationWitness(u, offsets, best_sign * best_val)


def expansion_complexity(w: Word, n: int, d_max: int = 16) -> int | None:
    """Least total degree d of a nonzero h(x, y) with h(x, G(x)) = 0 mod x^n,
    where G is the prefix generating function. Returns None when every
    d <= d_max fails (value exceeds the cap); all-zero prefixes give 0.

    Columns x^i * G^j mod x^n are packed into ints and fed to an F2
    elimination; a column reducing to zero is a dependence of degree d.
    """
    if not 1 <= n <= len(w):
        raise ValueError(f"need 1 <= n <= {len(w)}, got {n}")
    if d_max < 1:
        raise ValueError(f"need d_max >= 1, got {d_max}")
    mask = (1 << n) - 1
    g = prefix_value(w, n) & mask
    if g == 0:
        return 0
    powers = [1]
    # Seed the constant monomial x^0 y^0; alone it annihilates nothing, but
    # dependences found later may use it.
    basis: dict[int, int] = {0: 1}
    for d in range(1, d_max + 1):
        powers.append(_gf2_mul_trunc(powers[-1], g, n))
        for j in range(d + 1):
            vec = (powers[j] << (d - j)) & mask
            while vec:
                piv = vec.bit_length() - 1
                other = basis.get(piv)
                if other is None:
                    basis[piv] = vec
                    break
                vec ^= other
            if not vec:
                return d
    return None


def _gf2_mul_trunc(a: int, b: int, n: int) -> int:
    """Carry-less product of bit-packed polynomials, truncated mod x^n."""
    mask = (1 << n) - 1
    a &= mask
    b &= mask
    out = 0
    while a:
        low = a & -a
        out ^= b * low  # single-bit multiple: a shift
        a ^= low
    return out & mask
