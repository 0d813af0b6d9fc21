"""2-adic complexity, periodic and aperiodic.

Periodic: the connection integer q of one period (gcd formula); the
complexity is log2(q). Aperiodic: the exact minimum over odd q of
max(|f|, |q|) subject to q * S = f (mod 2^N), where S is the base-2 value
of the length-N prefix. The admissible pairs form a rank-2 lattice, so the
minimum is found by basis reduction plus a bounded enumeration; an
exhaustive oracle anchors exactness at small N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import oracle_bound
from .errors import OracleBoundExceeded
from .numtheory import ceil_log2, int_log2
from .seqcore import PeriodicSequence, Profile, RationalRep, Word, prefix_value, reverse_period


@dataclass(frozen=True)
class AdicValue:
    """A complexity value carried as its exact integer argument mu."""

    mu: int

    @property
    def log2(self) -> float:
        return int_log2(self.mu)

    @property
    def ceil(self) -> int:
        """Exact ceil(log2 mu); correct at powers of two."""
        return ceil_log2(self.mu)


@dataclass(frozen=True)
class ApproxPair:
    """Minimizing pair for one prefix length: q odd positive, f the
    absolutely-least achiever (ties broken toward positive f), and
    mu = max(|f|, q) >= 1."""

    f: int
    q: int
    n: int
    mu: int

    @property
    def value(self) -> AdicValue:
        return AdicValue(self.mu)


def _checked_pair(f: int, q: int, n: int, s: int) -> ApproxPair:
    # Recheck admissibility on every return; a failure here is a bug.
    full = 1 << n
    if q <= 0 or q % 2 == 0:
        raise AssertionError(f"bad q = {q}")
    mu = max(abs(f), q)
    if mu < 1 or (q * s - f) % full:
        raise AssertionError(f"pair ({f}, {q}) infeasible at N = {n}")
    return ApproxPair(f=f, q=q, n=n, mu=mu)


def connection(s: PeriodicSequence) -> RationalRep:
    """Reduced (A, q) with the sequence's 2-adic value equal to -A/q:
    q = (2^T - 1)/gcd(2^T - 1, S), A = S/gcd, S the period's base-2 value."""
    s = s.normalized()
    sv = s.word.value()
    modulus = (1 << s.T) - 1
    g = math.gcd(modulus, sv)
    return RationalRep(A=sv // g, q=modulus // g)


def phi2(s: PeriodicSequence) -> AdicValue:
    return AdicValue(connection(s).q)


def phi2_symmetric(s: PeriodicSequence) -> AdicValue:
    """Reversal-invariant variant: the smaller connection integer of the
    sequence and its reversed period."""
    q_fwd = connection(s).q
    q_rev = connection(reverse_period(s.normalized())).q
    return AdicValue(min(q_fwd, q_rev))


class _Lattice:
    """Incremental basis for {(f, q): f = q*S (mod 2^n)} as bits arrive.

    Consuming one bit keeps the sublattice fixed by the new congruence: the
    parity of (f - q*S')/2^n splits the old basis, the determinant doubles,
    and a Lagrange step re-reduces. Basis stays Euclid-reduced with u the
    shorter vector.
    """

    __slots__ = ("n", "s", "uf", "uq", "vf", "vq")

    def __init__(self):
        self.n = 0
        self.s = 0
        self.uf, self.uq = 1, 0
        self.vf, self.vq = 0, 1

    def push(self, bit: int) -> None:
        n = self.n
        s2 = self.s | (bit << n)
        uf, uq, vf, vq = self.uf, self.uq, self.vf, self.vq
        eu = ((uf - uq * s2) >> n) & 1
        ev = ((vf - vq * s2) >> n) & 1
        if eu:
            if ev:
                uf, uq, vf, vq = uf - vf, uq - vq, 2 * vf, 2 * vq
            else:
                uf, uq, vf, vq = vf, vq, 2 * uf, 2 * uq
        else:
            if not ev:
                raise AssertionError("index-2 step left both basis vectors inside")
            vf, vq = 2 * vf, 2 * vq
        # Lagrange reduction; loop is O(1) amortized across pushes.
        nu = uf * uf + uq * uq
        nv = vf * vf + vq * vq
        while True:
            if nu > nv:
                uf, uq, vf, vq, nu, nv = vf, vq, uf, uq, nv, nu
            dot = uf * vf + uq * vq
            r = (2 * dot + nu) // (2 * nu)
            if r == 0:
                break
            vf -= r * uf
            vq -= r * uq
            nv = vf * vf + vq * vq
        self.n = n + 1
        self.s = s2
        self.uf, self.uq, self.vf, self.vq = uf, uq, vf, vq

    def minimize(self) -> ApproxPair:
        """Exact odd-q sup-norm minimum at the current n.

        Seeds an incumbent (the q = 1 pair plus small basis combinations),
        then walks the coefficient of the longer basis vector outward; the
        Cramer bound |y| <= mu*(|uf| + |uq|)/2^n shrinks as the incumbent
        improves, so the walk terminates. Per coefficient, the sup-norm is
        quasi-convex in the other coefficient, so a constant window around
        its critical points suffices. The tie rule (mu, then q, then |f|,
        then positive f) has a unique optimum, making the result canonical.
        """
        n = self.n
        if n == 0:
            raise ValueError("no bits consumed")
        full = 1 << n
        half = full >> 1
        s = self.s
        uf, uq, vf, vq = self.uf, self.uq, self.vf, self.vq

        f0 = s if s <= half else s - full
        best_key = (max(abs(f0), 1), 1, abs(f0), 0 if f0 >= 0 else 1)
        best = (f0, 1)

        def consider(f: int, q: int) -> None:
            nonlocal best_key, best
            if not q & 1:
                return
            if q < 0:
                f, q = -f, -q
            af = -f if f < 0 else f
            mu = af if af > q else q
            key = (mu, q, af, 0 if f >= 0 else 1)
            if key < best_key:
                best_key = key
                best = (f, q)

        for x in range(-2, 3):
            for y in range(-2, 3):
                consider(x * uf + y * vf, x * uq + y * vq)

        wsum = abs(uf) + abs(uq)
        ay = 0
        while True:
            if ay > best_key[0] * wsum // full:
                break
            for y in (0,) if ay == 0 else (ay, -ay):
                cf = y * vf
                cq = y * vq
                for x in _x_candidates(cf, cq, uf, uq):
                    consider(cf + x * uf, cq + x * uq)
            ay += 1
            if ay > 2_000_000:
                raise AssertionError("enumeration failed to converge")

        f, q = best
        return _checked_pair(f, q, n, s)


def _x_candidates(cf: int, cq: int, uf: int, uq: int) -> set[int]:
    # Integer windows around the kinks and crossings of
    # x -> max(|cf + x*uf|, |cq + x*uq|); width 2 covers both parities.
    cands = {-1, 0, 1}

    def around(num: int, den: int) -> None:
        if den:
            t = num // den
            cands.update((t - 2, t - 1, t, t + 1, t + 2))

    around(-cf, uf)
    around(-cq, uq)
    around(cq - cf, uf - uq)
    around(-(cf + cq), uf + uq)
    return cands


def adic_min(w: Word, n: int) -> ApproxPair:
    """Exact aperiodic minimum for the length-n prefix of w."""
    if not 1 <= n <= len(w):
        raise ValueError(f"need 1 <= n <= {len(w)}, got {n}")
    lat = _Lattice()
    for bit in w[:n]:
        lat.push(bit)
    return lat.minimize()


def adic_minima(w: Word, ns: list[int]) -> list[ApproxPair]:
    """Minimizing pairs at several prefix lengths in one incremental pass;
    ns must be strictly increasing."""
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("prefix lengths must be strictly increasing")
    if ns and not 1 <= ns[0] <= ns[-1] <= len(w):
        raise ValueError(f"prefix lengths must lie in [1, {len(w)}]")
    lat = _Lattice()
    out = []
    want = iter(ns)
    nxt = next(want, None)
    for i, bit in enumerate(w):
        if nxt is None:
            break
        lat.push(bit)
        if i + 1 == nxt:
            out.append(lat.minimize())
            nxt = next(want, None)
    return out


def adic_profile(w: Word) -> Profile:
    """mu at every prefix length 1..len(w)."""
    lat = _Lattice()
    values = []
    for bit in w:
        lat.push(bit)
        values.append(lat.minimize().mu)
    return Profile(tuple(values))


def adic_oracle(w: Word, n: int) -> ApproxPair:
    """Exhaustive reference: scan every odd q in [1, 2^n) with f the
    absolutely-least residue of q*S (ties toward positive f). Negative q
    is redundant by the symmetry (f, q) <-> (-f, -q).

    Guarded by the 'adic' oracle bound (default n <= 20); raise it via
    SEQLAB_ORACLE_BOUNDS for longer runs.
    """
    if not 1 <= n <= len(w):
        raise ValueError(f"need 1 <= n <= {len(w)}, got {n}")
    bound = oracle_bound("adic")
    if n > bound:
        raise OracleBoundExceeded(f"N = {n} > adic oracle bound {bound}")
    full = 1 << n
    half = full >> 1
    mask = full - 1
    s = prefix_value(w, n) & mask
    two_s = (2 * s) & mask
    best_mu = full
    best_q = 1
    best_f = 0
    q = 1
    f = s
    while q < full:
        fa = f if f <= half else full - f
        m = fa if fa > q else q
        if m < best_mu:
            # q ascends, so the first achiever is the canonical minimum.
            best_mu = m
            best_q = q
            best_f = f if f <= half else f - full
        q += 2
        f = (f + two_s) & mask
    return _checked_pair(best_f, best_q, n, s)
