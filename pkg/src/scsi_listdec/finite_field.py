"""Arithmetic over GF(2^m) for 2 <= m <= 16 using exp/log tables.

Elements are plain Python ints (or integer numpy arrays) in ``[0, q-1]``;
bit ``i`` is the coefficient of ``x^i`` in the polynomial basis.  A
:class:`GaloisField` instance owns the tables and is the handle every other
module passes around.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, NonPrimitiveModulus

# Primitive polynomials, bit mask including the x^m term.
DEFAULT_MODULI = {
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x89,  # x^7 + x^3 + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


class GaloisField:
    """The field GF(2^m) defined by a primitive modulus.

    Parameters
    ----------
    m : int
        Extension degree, ``2 <= m <= 16``.
    modulus : int, optional
        Primitive polynomial as a bit mask with bit ``m`` set.  Defaults to
        the entry of :data:`DEFAULT_MODULI`.

    Attributes
    ----------
    q : int
        Field size ``2**m``.
    exp : ndarray
        ``exp[i] = x^i`` for ``0 <= i < 2(q-1)``; doubled so that a sum of
        two logs never needs reducing.
    log : ndarray
        Inverse of ``exp`` on nonzero elements; ``log[0]`` is unused.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= 16:
            raise ValueError(f"extension degree must lie in [2, 16], got {m}")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if modulus.bit_length() != m + 1:
            raise ValueError(f"modulus {modulus:#x} does not have degree {m}")
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self.order = self.q - 1

        exp = np.zeros(2 * self.order, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        seen = np.zeros(self.q, dtype=bool)
        x = 1
        for i in range(self.order):
            if seen[x]:
                raise NonPrimitiveModulus(
                    f"x has multiplicative order {i} < {self.order} modulo {modulus:#x}"
                )
            seen[x] = True
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= modulus
            if x == 0:
                raise NonPrimitiveModulus(f"modulus {modulus:#x} is reducible (x divides it)")
        if x != 1:
            raise NonPrimitiveModulus(f"modulus {modulus:#x} is not primitive")
        exp[self.order:] = exp[: self.order]
        exp.flags.writeable = False
        log.flags.writeable = False
        self.exp = exp
        self.log = log

    def __repr__(self) -> str:
        return f"GaloisField(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GaloisField)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    # -- scalar arithmetic -------------------------------------------------

    @property
    def primitive(self) -> int:
        """The generator ``x`` of the multiplicative group."""
        return 2

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        # characteristic 2
        return a

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return int(self.exp[(self.order - self.log[a]) % self.order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp[(self.log[a] * e) % self.order])

    def alpha_pow(self, e: int) -> int:
        """``x^e`` for any integer ``e``."""
        return int(self.exp[e % self.order])

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        la = int(self.log[a])
        return self.order // np.gcd(la, self.order)

    def poly_eval(self, coeffs: Sequence[int], at: int) -> int:
        """Evaluate ``sum(coeffs[i] * at**i)`` by Horner's rule."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.mul(acc, at) ^ int(c)
        return acc

    # -- vectorised arithmetic ---------------------------------------------

    def mul_vec(self, a, b) -> np.ndarray:
        """Elementwise product of broadcastable integer arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def matvec(self, mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
        """``mat @ vec`` over the field (XOR-accumulated products)."""
        prod = self.mul_vec(mat, np.asarray(vec, dtype=np.int64)[None, :])
        return np.bitwise_xor.reduce(prod, axis=1)

    def poly_eval_vec(self, coeffs: Sequence[int], points) -> np.ndarray:
        points = np.asarray(points, dtype=np.int64)
        acc = np.zeros_like(points)
        for c in reversed(list(coeffs)):
            acc = self.mul_vec(acc, points) ^ int(c)
        return acc

    def validate(self, word) -> np.ndarray:
        """Coerce ``word`` to an int64 array and check every symbol is < q."""
        arr = np.asarray(word, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise ValueError(f"symbols must lie in [0, {self.q - 1}]")
        return arr


@lru_cache(maxsize=None)
def field_new(m: int, modulus: int | None = None) -> GaloisField:
    """Build (and memoise) the field GF(2^m)."""
    return GaloisField(m, modulus)
