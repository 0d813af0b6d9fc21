"""Maximum-order complexity: the shortest window length whose successor map
is single-valued over the word, plus its number-theoretic shortcuts for
carry-register sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import oracle_bound
from .errors import NotCoprime, NotEllModulus, OracleBoundExceeded
from .numtheory import (
    ceil_log2,
    is_odd_prime_power,
    is_two_primitive,
    multiplicative_order,
)
from .seqcore import PeriodicSequence, Profile, Word


@dataclass(frozen=True)
class MocWitness:
    """A maximal conflict: equal windows of the given length starting at i < j
    whose successor symbols differ."""

    i: int
    j: int
    length: int


@dataclass(frozen=True)
class MocResult:
    m: int
    witness: MocWitness | None


class _Sam:
    """Suffix automaton over the binary alphabet.

    end[state] records one position where the state's longest string ends,
    which is all the witness extraction needs.
    """

    __slots__ = ("next0", "next1", "link", "length", "end", "last")

    def __init__(self):
        self.next0 = [-1]
        self.next1 = [-1]
        self.link = [-1]
        self.length = [0]
        self.end = [-1]
        self.last = 0

    def _new(self, length: int, end: int) -> int:
        self.next0.append(-1)
        self.next1.append(-1)
        self.link.append(-1)
        self.length.append(length)
        self.end.append(end)
        return len(self.length) - 1

    def extend(self, c: int, pos: int) -> None:
        nxt = self.next1 if c else self.next0
        cur = self._new(self.length[self.last] + 1, pos)
        p = self.last
        while p != -1 and nxt[p] == -1:
            nxt[p] = cur
            p = self.link[p]
        if p == -1:
            self.link[cur] = 0
        else:
            q = nxt[p]
            if self.length[p] + 1 == self.length[q]:
                self.link[cur] = q
            else:
                clone = self._new(self.length[p] + 1, self.end[q])
                self.next0[clone] = self.next0[q]
                self.next1[clone] = self.next1[q]
                self.link[clone] = self.link[q]
                self.link[q] = clone
                self.link[cur] = clone
                while p != -1 and nxt[p] == q:
                    nxt[p] = clone
                    p = self.link[p]
        self.last = cur


def moc(w: Word) -> MocResult:
    """Maximum-order complexity of a word, with a maximal conflict witness.

    m is the least window length whose window -> successor map is single
    valued; equivalently 1 plus the longest string that occurs followed by
    both symbols. Constant words (and the empty word) give 0.
    """
    sam = _Sam()
    for pos, c in enumerate(w):
        sam.extend(c, pos)
    best = -1
    best_state = -1
    next0, next1, length = sam.next0, sam.next1, sam.length
    for p in range(len(length)):
        if next0[p] != -1 and next1[p] != -1 and length[p] > best:
            best = length[p]
            best_state = p
    if best_state == -1:
        return MocResult(0, None)
    # The longest branching string ends where its children's occurrences end.
    e0 = sam.end[next0[best_state]]
    e1 = sam.end[next1[best_state]]
    i0, i1 = e0 - best, e1 - best
    return MocResult(best + 1, MocWitness(min(i0, i1), max(i0, i1), best))


def moc_profile(w: Word) -> Profile:
    """Per-prefix maximum-order complexity, computed online.

    Appending a symbol can only raise the value via a conflict ending at the
    new position: the longest suffix of the previous prefix that occurred
    earlier followed by the other symbol. Suffix-link depths decrease, so the
    first hit on the chain is the longest such suffix. Worst case O(N^2)
    (constant words walk whole chains); near-linear on random-like input.
    """
    sam = _Sam()
    values = []
    m = 0
    for idx, c in enumerate(w):
        other = sam.next0 if c else sam.next1
        link, length = sam.link, sam.length
        p = sam.last
        while p != -1 and length[p] + 1 > m:
            if other[p] != -1:
                m = length[p] + 1
                break
            p = link[p]
        sam.extend(c, idx)
        values.append(m)
    return Profile(tuple(values))


def moc_oracle(w: Word) -> MocResult:
    """Reference implementation: grow m until the successor map is a function.

    Guarded by the 'moc' oracle bound (default 2000); raise it via
    SEQLAB_ORACLE_BOUNDS for long runs.
    """
    n = len(w)
    bound = oracle_bound("moc")
    if n > bound:
        raise OracleBoundExceeded(f"len {n} > moc oracle bound {bound}")
    data = w.bits
    last_conflict = None
    for m in range(n):
        seen: dict[bytes, tuple[int, int]] = {}
        conflict = None
        for i in range(n - m):
            key = data[i : i + m]
            succ = data[i + m]
            prev = seen.get(key)
            if prev is None:
                seen[key] = (succ, i)
            elif prev[0] != succ:
                conflict = MocWitness(prev[1], i, m)
                break
        if conflict is None:
            return MocResult(m, last_conflict)
        last_conflict = conflict
    return MocResult(max(n - 1, 0), last_conflict)


@dataclass(frozen=True)
class CosetSet:
    """Orbit of a unit A under doubling mod q; its size is ord_q(2)."""

    elements: frozenset[int]
    q: int

    @property
    def T(self) -> int:
        return len(self.elements)


def coset(a: int, q: int) -> CosetSet:
    if q < 1 or q % 2 == 0:
        raise ValueError(f"need odd q >= 1, got {q}")
    if math.gcd(a, q) != 1:
        raise NotCoprime(f"gcd({a}, {q}) != 1")
    a %= q
    orbit = set()
    cur = a
    while cur not in orbit:
        orbit.add(cur)
        cur = cur * 2 % q
    return CosetSet(frozenset(orbit), q)


def moc_from_coset(a: int, q: int) -> int:
    """Maximum-order complexity of the carry-register sequence for (a, q),
    computed as the least N with the doubling orbit distinct mod 2^N.

    q = 1 (and generally orbit size 1) is the constant sequence: returns 0.
    """
    orbit = sorted(coset(a, q).elements)
    t = len(orbit)
    if t == 1:
        return 0
    for nbits in range(1, q.bit_length() + 1):
        mask = (1 << nbits) - 1
        seen = set()
        ok = True
        for u in orbit:
            r = u & mask
            if r in seen:
                ok = False
                break
            seen.add(r)
        if ok:
            return nbits
    raise AssertionError("unreachable: orbit elements are distinct below q")


def moc_periodic(s: PeriodicSequence) -> int:
    """Maximum-order complexity of a periodic sequence: the value stabilizes
    at prefix length 2T - 1, so that prefix is what gets measured."""
    s = s.normalized()
    return moc(s.prefix(2 * s.T - 1)).m


def moc_ell_formula(q: int) -> int:
    """Closed form for maximal-period carry-register sequences.

    Requires q to be an odd prime power with 2 primitive. The value is
    floor(log2 q) for q in {3, 5, 9} and ceil(log2 q) otherwise.
    """
    if is_odd_prime_power(q) is None or not is_two_primitive(q):
        raise NotEllModulus(f"{q} is not an odd prime power with 2 primitive")
    if q in (3, 5, 9):
        return q.bit_length() - 1
    return ceil_log2(q)


def ell_moduli(limit: int) -> list[int]:
    """All odd prime powers q <= limit with 2 a primitive root, ascending."""
    out = []
    for q in range(3, limit + 1, 2):
        if is_odd_prime_power(q) is not None and is_two_primitive(q):
            out.append(q)
    return out


def ell_period(q: int) -> int:
    return multiplicative_order(2, q)
