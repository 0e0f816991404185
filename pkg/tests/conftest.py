"""Shared oracles: slow textbook arithmetic kept independent of the package."""

import pytest


def clmul_mod(a: int, b: int, modulus: int) -> int:
    """Carry-less product reduced bit by bit (shift-and-add)."""
    m = modulus.bit_length() - 1
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus
    return out


def poly_mod2_remainder(value: int, nbits: int, generator: int) -> int:
    """Remainder of a GF(2) polynomial (given as an int) by ``generator``."""
    deg = generator.bit_length() - 1
    for shift in range(nbits - 1, deg - 1, -1):
        if value >> shift & 1:
            value ^= generator << (shift - deg)
    return value


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240601)
