"""Radix-tagged unsigned integer words and the bit/trit width equivalence.

Everything here is a pure function over immutable values; the rest of the
package builds on these to encode operands and to pair up binary and
ternary circuit widths of comparable information capacity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

__all__ = [
    "Radix",
    "Word",
    "WidthPair",
    "WordOverflowError",
    "word_from_uint",
    "word_to_uint",
    "information_ratio",
    "round_half_up",
    "trit_width_for_bit_width",
    "equivalent_trit_width",
    "width_pair",
    "TABLE_WIRE_WIDTHS",
]


class Radix(IntEnum):
    """Digit base of a wire or word; only 2 and 3 are constructible."""

    BINARY = 2
    TERNARY = 3


class WordOverflowError(ValueError):
    """Raised when a value does not fit in the requested digit width."""


@dataclass(frozen=True)
class Word:
    """Unsigned integer as a least-significant-first digit vector."""

    radix: Radix
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "radix", Radix(self.radix))
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        for d in self.digits:
            if not 0 <= d < self.radix:
                raise ValueError(f"digit {d} out of range for radix {int(self.radix)}")

    @property
    def width(self) -> int:
        return len(self.digits)

    def __int__(self) -> int:
        return word_to_uint(self)


def word_from_uint(value: int, radix: Radix | int, width: int) -> Word:
    """Encode ``value`` as a ``width``-digit word, least significant digit first."""
    radix = Radix(radix)
    if width < 0:
        raise ValueError("width must be non-negative")
    if value < 0:
        raise ValueError("value must be unsigned")
    if value >= radix**width:
        raise WordOverflowError(f"{value} does not fit in {width} radix-{int(radix)} digits")
    digits = []
    for _ in range(width):
        value, d = divmod(value, int(radix))
        digits.append(d)
    return Word(radix, tuple(digits))


def word_to_uint(word: Word) -> int:
    """Inverse of :func:`word_from_uint`."""
    value = 0
    for d in reversed(word.digits):
        value = value * int(word.radix) + d
    return value


def information_ratio() -> float:
    """Information carried by one trit relative to one bit, log(3)/log(2)."""
    return math.log2(3.0)


def round_half_up(x: float) -> int:
    """Round to nearest integer with .5 going up (not banker's rounding)."""
    return math.floor(x + 0.5)


#: Published wire-width pairs (bits -> trits). The published table follows no
#: single rounding rule (8 -> 5 rounds down, 16 -> 11 exceeds round(10.09)),
#: so these pairs are pinned and everything else falls back to half-up
#: rounding of n_bits / information_ratio().
TABLE_WIRE_WIDTHS: dict[int, int] = {8: 5, 16: 11, 32: 21, 64: 41}


def trit_width_for_bit_width(n_bits: int) -> int:
    """Number of ternary wires paired with ``n_bits`` binary wires."""
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    if n_bits in TABLE_WIRE_WIDTHS:
        return TABLE_WIRE_WIDTHS[n_bits]
    return round_half_up(n_bits / information_ratio())


def equivalent_trit_width(n_bits: int) -> int:
    """Multiplier capability pairing: plain half-up rounding of n_bits / IR.

    This reproduces the published multiplier pairings 8 -> 5, 12 -> 8 and
    16 -> 10, which differ from the wire table for 16 bits (11 wires).
    """
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    return round_half_up(n_bits / information_ratio())


@dataclass(frozen=True)
class WidthPair:
    """A binary width and the ternary width it is compared against."""

    n_bits: int
    m_trits: int

    def __post_init__(self) -> None:
        if self.n_bits >= 2 and self.m_trits < 1:
            raise ValueError("m_trits must be >= 1 for n_bits >= 2")

    @property
    def raw_trits(self) -> float:
        """Unrounded n_bits / IR, exposed so callers can see the rounding."""
        return self.n_bits / information_ratio()


def width_pair(n_bits: int) -> WidthPair:
    """Wire-table pairing for ``n_bits`` (pinned pairs, half-up fallback)."""
    return WidthPair(n_bits, trit_width_for_bit_width(n_bits))
