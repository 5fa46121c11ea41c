"""Byte stream to gap stream codec.

Each payload byte splits into two 4-bit halves, high half first.  A half
with value v is transmitted as a gap of the secret semigroup chosen
uniformly among the gaps congruent to v mod 16, so the receiver recovers
v as a plain residue and never needs the gap list itself.  Checking that
received values really are gaps is a separate authenticity screen.

Optional salting adds k * L to every value for a per-value random
k in [1, k_max], where L is the lcm of two chosen generators.  Adding a
multiple of any member keeps gap-ness intact often enough to audit but
not always, so salted streams are wider-ranged decoys; de-salting is
reduction mod L, which is exact as long as every original value was
below L.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    EmptyClassError,
    MissingSaltPeriodError,
    NegativeInputError,
    ValueExceedsPeriodError,
)
from .semigroup import GeneratingSet, SemigroupTable

DEFAULT_MODULUS = 16
DEFAULT_K_MAX = 64


@dataclass(frozen=True, eq=False)
class GapIndex:
    """Gaps of one semigroup bucketed by residue class.

    classes[v] is a sorted int64 array of the gaps congruent to v mod
    modulus.  Built once per key and reused across messages.
    """

    modulus: int
    classes: tuple[np.ndarray, ...]
    frobenius: int

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


@dataclass(frozen=True)
class CipherStream:
    """Transmitted integer sequence, possibly salted.

    salt_period is None for a bare gap stream and the salting period L
    otherwise; it must ride along for the receiver to undo the salt.
    """

    values: tuple[int, ...]
    salt_period: int | None = None

    @property
    def salted(self) -> bool:
        return self.salt_period is not None

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SaltSpec:
    """Salting parameters: period plus the per-value multiplier range."""

    period: int
    k_max: int = DEFAULT_K_MAX

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"salt period must be >= 1, got {self.period}")
        if self.k_max < 1:
            raise ValueError(f"k_max must be >= 1, got {self.k_max}")

    @classmethod
    def from_generators(
        cls, gens: GeneratingSet, i: int = 0, j: int = 1, k_max: int = DEFAULT_K_MAX
    ) -> SaltSpec:
        """Period = lcm of the i-th and j-th generators."""
        if i == j:
            raise ValueError("salt pair must use two distinct generators")
        return cls(math.lcm(gens[i], gens[j]), k_max)


def build_gap_index(table: SemigroupTable, modulus: int = DEFAULT_MODULUS) -> GapIndex:
    """Bucket the gaps by residue; refuse keys with an empty class.

    Raises EmptyClassError naming the smallest residue whose class holds
    no gap, since such a key cannot carry that nibble value.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    gaps = table.gaps()
    residues = gaps % modulus
    classes = tuple(gaps[residues == v] for v in range(modulus))
    for v, cls in enumerate(classes):
        if len(cls) == 0:
            raise EmptyClassError(v)
    return GapIndex(modulus, classes, table.frobenius)


def encode_nibble(v: int, index: GapIndex, rng: random.Random) -> int:
    """Uniform draw from the gaps congruent to v mod the index modulus."""
    if not 0 <= v < index.modulus:
        raise ValueError(f"value {v} outside [0, {index.modulus})")
    cls = index.classes[v]
    return int(cls[rng.randrange(len(cls))])


def encode_message(payload: bytes, index: GapIndex, rng: random.Random) -> CipherStream:
    """Encode bytes as gap values, two per byte, high nibble first."""
    if index.modulus != DEFAULT_MODULUS:
        raise ValueError(f"byte encoding needs modulus 16, got {index.modulus}")
    values = []
    for byte in payload:
        values.append(encode_nibble(byte >> 4, index, rng))
        values.append(encode_nibble(byte & 0xF, index, rng))
    return CipherStream(tuple(values))


def decode_byte(n1: int, n2: int, modulus: int = DEFAULT_MODULUS) -> int:
    """Rebuild one byte from two values: residues only, no key needed."""
    if modulus != DEFAULT_MODULUS:
        raise ValueError(f"byte decoding needs modulus 16, got {modulus}")
    if n1 < 0 or n2 < 0:
        raise NegativeInputError("stream values must be non-negative")
    return ((n1 % modulus) << 4) | (n2 % modulus)


def decode_message(stream: CipherStream) -> bytes:
    """Decode a whole stream back to bytes, de-salting first if needed."""
    if stream.salted:
        stream = desalt_stream(stream)
    vals = stream.values
    if len(vals) % 2:
        raise ValueError(f"stream length {len(vals)} is odd, expected value pairs")
    return bytes(decode_byte(vals[i], vals[i + 1]) for i in range(0, len(vals), 2))


def verify_stream(stream: CipherStream, table: SemigroupTable) -> list[bool]:
    """Authenticity screen: per value, is it really a gap of our semigroup?

    Only meaningful on an unsalted stream; salted input is refused rather
    than judged wrongly.
    """
    if stream.salted:
        raise ValueError("verify runs on de-salted streams; call desalt_stream first")
    if not stream.values:
        return []
    arr = np.asarray(stream.values, dtype=np.int64)
    return [not m for m in table.members(arr)]


def salt_stream(stream: CipherStream, spec: SaltSpec, rng: random.Random) -> CipherStream:
    """Add k * period to every value, fresh k in [1, k_max] each time."""
    if stream.salted:
        raise ValueError("stream already carries a salt period")
    for v in stream.values:
        if v >= spec.period:
            raise ValueExceedsPeriodError(
                f"value {v} >= salt period {spec.period}; salting would be ambiguous"
            )
    salted = tuple(v + rng.randint(1, spec.k_max) * spec.period for v in stream.values)
    return CipherStream(salted, spec.period)


def desalt_stream(stream: CipherStream) -> CipherStream:
    """Undo salting by reducing every value mod the carried period."""
    if not stream.salted:
        raise MissingSaltPeriodError("stream carries no salt period")
    period = stream.salt_period
    return CipherStream(tuple(v % period for v in stream.values), None)


def measure_salt_gap_preservation(
    table: SemigroupTable, spec: SaltSpec, samples: int, rng: random.Random
) -> Fraction:
    """Fraction of random salted gaps that remain gaps.

    Draws `samples` gaps uniformly, salts each with a fresh k, and counts
    how many of the results still avoid the semigroup.  Strictly below 1
    in general: salting trades perfect gap-ness for a wider value range.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    gaps = table.gaps()
    preserved = 0
    for _ in range(samples):
        x = int(gaps[rng.randrange(len(gaps))])
        k = rng.randint(1, spec.k_max)
        if not table.is_member(x + k * spec.period):
            preserved += 1
    return Fraction(preserved, samples)
