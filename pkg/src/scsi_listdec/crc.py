"""CRC tags for picking the source word out of a decode list.

The tag is the bare polynomial remainder ``x(xi) mod g(xi)``: no reflection,
no initial value, no final XOR.  A word of n symbols becomes a bit string by
writing each symbol as m bits, most significant bit first, symbols in index
order; the first bit is the highest-degree coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .finite_field import GaloisField

CRC12 = 0x180F  # xi^12 + xi^11 + xi^3 + xi^2 + xi + 1


@dataclass(frozen=True)
class CrcSpec:
    generator: int = CRC12

    def __post_init__(self):
        # generator 1 (degree 0) is the empty tag
        if self.generator < 1 or not self.generator & 1:
            raise ValueError("generator must have constant term 1")

    @property
    def rho(self) -> int:
        return self.generator.bit_length() - 1

    @classmethod
    def from_hex(cls, text: str) -> "CrcSpec":
        return cls(int(text, 16))

    def __str__(self) -> str:
        return f"CRC-{self.rho} ({self.generator:#x})"


NO_CRC = CrcSpec(1)


def word_to_bits(word: Iterable[int], m: int) -> list[int]:
    bits = []
    for sym in word:
        sym = int(sym)
        bits.extend((sym >> (m - 1 - j)) & 1 for j in range(m))
    return bits


def crc_compute(spec: CrcSpec, x, field: GaloisField) -> int:
    """Remainder of the serialised word modulo the generator, as an int < 2^rho."""
    rho = spec.rho
    if rho == 0:
        return 0
    gen = spec.generator
    top = 1 << rho
    reg = 0
    for bit in word_to_bits(x, field.m):
        reg = (reg << 1) | bit
        if reg & top:
            reg ^= gen
    return reg


def crc_filter(spec: CrcSpec, candidates, tag: int, field: GaloisField) -> list[np.ndarray]:
    """The candidates whose CRC equals ``tag``, in their original order."""
    return [np.asarray(c) for c in candidates if crc_compute(spec, c, field) == tag]
