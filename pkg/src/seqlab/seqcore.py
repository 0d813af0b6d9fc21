"""Binary words, periodic sequences, measure profiles, and the bit-file format."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, Union

from .errors import MalformedBitFile
from .numtheory import int_log2

_TO01 = bytes.maketrans(b"\x00\x01", b"01")
_FROM01 = bytes.maketrans(b"01", b"\x00\x01")


class Word:
    """Immutable finite binary word, one byte per symbol.

    Supports O(1) indexing, cheap slicing, and direct conversion to the
    base-2 value with bit n weighted 2^n (symbol 0 is the least significant
    bit everywhere in this package).
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[bytes, Iterable[int]]):
        data = bits if isinstance(bits, bytes) else bytes(bits)
        if data.count(0) + data.count(1) != len(data):
            bad = next(i for i, b in enumerate(data) if b > 1)
            raise ValueError(f"symbol {data[bad]} at index {bad} is not a bit")
        self._bits = data

    @classmethod
    def from01(cls, text: str) -> "Word":
        return cls(text.encode("ascii").translate(_FROM01))

    @property
    def bits(self) -> bytes:
        return self._bits

    def to01(self) -> str:
        return self._bits.translate(_TO01).decode("ascii")

    def value(self) -> int:
        """Sum of s_n * 2^n over the whole word."""
        if not self._bits:
            return 0
        return int(self.to01()[::-1], 2)

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self._bits)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self._bits[idx])
        return self._bits[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        if len(self._bits) <= 40:
            return f"Word({self.to01()!r})"
        return f"Word({self[:37].to01()!r}..., len={len(self._bits)})"


def prefix_value(w: Word, n: int | None = None) -> int:
    """Value sum s_i * 2^i of the first n symbols (whole word by default)."""
    if n is None or n >= len(w):
        return w.value()
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return w[:n].value()


@dataclass(frozen=True)
class PeriodicSequence:
    """An infinite periodic binary sequence given by one period word.

    least is True when the stored word is the least period. Constructors
    normalize; operations that need the least period call normalized().
    """

    word: Word
    least: bool = False

    @classmethod
    def from_word(cls, w: Word) -> "PeriodicSequence":
        return least_period(w)

    @property
    def T(self) -> int:
        return len(self.word)

    def normalized(self) -> "PeriodicSequence":
        return self if self.least else least_period(self.word)

    def prefix(self, n: int) -> Word:
        """First n symbols of the infinite sequence."""
        T = len(self.word)
        if T == 0:
            raise ValueError("empty period")
        reps = -(-n // T)
        return Word((self.word.bits * reps)[:n])

    def bit(self, n: int) -> int:
        return self.word[n % len(self.word)]


def least_period(w: Word) -> PeriodicSequence:
    """Normalize a period word: find the least d dividing len(w) that tiles it."""
    T = len(w)
    if T == 0:
        raise ValueError("empty word has no period")
    data = w.bits
    for d in range(1, T + 1):
        if T % d == 0 and data == data[:d] * (T // d):
            return PeriodicSequence(Word(data[:d]), least=True)
    raise AssertionError("unreachable: d = T always tiles")


def reverse_period(s: PeriodicSequence) -> PeriodicSequence:
    """Sequence whose period word is the reversal of s's period word."""
    # Reversal preserves least-periodicity.
    return PeriodicSequence(Word(s.word.bits[::-1]), least=s.least)


@dataclass(frozen=True)
class RationalRep:
    """Reduced connection pair (A, q): the sequence value equals -A/q 2-adically.

    q is odd and positive, 0 <= A <= q, gcd(A, q) = 1. A = 0 encodes the zero
    sequence (q = 1) and A = q = 1 the all-ones sequence.
    """

    A: int
    q: int

    def __post_init__(self):
        if self.q <= 0 or self.q % 2 == 0:
            raise ValueError(f"q must be odd positive, got {self.q}")
        if not 0 <= self.A <= self.q:
            raise ValueError(f"A = {self.A} outside [0, {self.q}]")
        if math.gcd(self.A, self.q) != 1:
            raise ValueError(f"gcd({self.A}, {self.q}) != 1")

    @property
    def phi2(self) -> float:
        """log2(q), the periodic 2-adic complexity."""
        return int_log2(self.q)


@dataclass(frozen=True)
class Profile:
    """Per-prefix measure values; at(N) is the value for the length-N prefix."""

    values: tuple[int, ...]

    def at(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"profile covers N in [1, {len(self.values)}], got {n}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


Source = Union[str, Path, IO[str]]


def read_bits(source: Source) -> Word:
    """Read a bit file: ASCII '0'/'1' with whitespace ignored.

    Any other byte raises MalformedBitFile carrying its offset in the text.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="ascii")
    bits = bytearray()
    for off, ch in enumerate(text):
        if ch == "0":
            bits.append(0)
        elif ch == "1":
            bits.append(1)
        elif not ch.isspace():
            raise MalformedBitFile(off, ch)
    return Word(bytes(bits))


def write_bits(w: Word, sink: Source) -> None:
    """Write a word as ASCII bits, 64 per line, newline-terminated."""
    text = w.to01()
    lines = [text[i : i + 64] for i in range(0, len(text), 64)]
    payload = "".join(line + "\n" for line in lines)
    if hasattr(sink, "write"):
        sink.write(payload)
    else:
        Path(sink).write_text(payload, encoding="ascii")
