"""Syndrome compression with decoder side information.

The encoder sends the syndrome of ``x`` and a CRC tag; nothing else.  The
decoder picks any word ``a`` in the syndrome's coset, list-decodes
``y - a`` (XOR, characteristic 2), shifts the list back by ``a`` and keeps the
words whose CRC matches the tag.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .crc import CrcSpec, crc_compute, crc_filter
from .errors import RadiusTooLarge, WireFormatError
from .finite_field import DEFAULT_MODULI, field_new
from .gs_decoder import certified_radius, gs_list_decode, gs_radius
from .rs_code import RsCode, coset_representative, syndrome


class Status(str, enum.Enum):
    RECOVERED = "Recovered"
    NO_CANDIDATE = "NoCandidate"
    NO_CRC_MATCH = "NoCrcMatch"
    AMBIGUOUS = "Ambiguous"


@dataclass(frozen=True)
class EncodedMessage:
    syndrome: np.ndarray
    crc: int

    def payload_bits(self, m: int, rho: int) -> int:
        return len(self.syndrome) * m + rho

    def __eq__(self, other):
        return (
            isinstance(other, EncodedMessage)
            and self.crc == other.crc
            and np.array_equal(self.syndrome, other.syndrome)
        )


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of one decode.

    ``candidates`` is the coset list searched (words within ``radius`` of the
    side information); ``radius`` is the radius actually certified, which
    only differs from the requested one for progressive decoding.
    """

    status: Status
    recovered: np.ndarray | None
    list_size: int
    ambiguous_set: tuple = ()
    candidates: tuple = ()
    radius: int = 0
    multiplicity: int | None = None

    @property
    def ok(self) -> bool:
        return self.status is Status.RECOVERED


def scsi_encode(code: RsCode, crc_spec: CrcSpec, x) -> EncodedMessage:
    x = code._check_len(x, "source word")
    return EncodedMessage(syndrome(code, x), crc_compute(crc_spec, x, code.field))


def _coset_list(code: RsCode, msg: EncodedMessage, y, tau: int, multiplicity: int | None):
    a = coset_representative(code, msg.syndrome)
    dl = gs_list_decode(code, y ^ a, tau, multiplicity)
    words = [c ^ a for c in dl]
    for w in words:
        if not np.array_equal(syndrome(code, w), msg.syndrome):
            raise AssertionError("list candidate left the transmitted coset")
        if np.count_nonzero(w != y) > tau:
            raise AssertionError("list candidate outside the decoding radius")
    return words, dl.multiplicity


def _outcome(code, crc_spec, msg, words, tau, mult) -> DecodeOutcome:
    matches = crc_filter(crc_spec, words, msg.crc, code.field)
    if not words:
        status = Status.NO_CANDIDATE
    elif not matches:
        status = Status.NO_CRC_MATCH
    elif len(matches) == 1:
        status = Status.RECOVERED
    else:
        status = Status.AMBIGUOUS
    return DecodeOutcome(
        status=status,
        recovered=matches[0] if status is Status.RECOVERED else None,
        list_size=len(words),
        ambiguous_set=tuple(matches) if status is Status.AMBIGUOUS else (),
        candidates=tuple(words),
        radius=tau,
        multiplicity=mult,
    )


def scsi_decode(
    code: RsCode,
    crc_spec: CrcSpec,
    msg: EncodedMessage,
    y,
    tau: int,
    multiplicity: int | None = None,
) -> DecodeOutcome:
    """Recover ``x`` from its syndrome and CRC given side information ``y``.

    Every word of the transmitted coset within ``tau`` of ``y`` is listed;
    the status reports how many of them carry the transmitted CRC.
    """
    y = code._check_len(y, "side information")
    words, mult = _coset_list(code, msg, y, tau, multiplicity)
    return _outcome(code, crc_spec, msg, words, tau, mult)


def progressive_schedule(n: int, k: int, tau: int, max_multiplicity: int | None = None):
    """``(radius, multiplicity)`` steps with strictly growing radius, ending at ``tau``."""
    if tau > gs_radius(n, k):
        raise RadiusTooLarge(f"radius {tau} exceeds gs_radius({n}, {k}) = {gs_radius(n, k)}")
    steps = []
    last = -1
    m = 1
    while last < tau and (max_multiplicity is None or m <= max_multiplicity):
        r = min(certified_radius(n, k, m), tau)
        if r > last:
            steps.append((r, m))
            last = r
        m += 1
    return steps


def scsi_decode_progressive(
    code: RsCode,
    crc_spec: CrcSpec,
    msg: EncodedMessage,
    y,
    tau: int,
    max_multiplicity: int | None = None,
) -> DecodeOutcome:
    """Decode at growing radii, stopping as soon as the CRC singles out a word.

    Cost is governed by how far ``y`` actually is from ``x`` rather than by
    ``tau``: most words resolve at multiplicity 1.  The outcome's ``radius``
    is the last radius searched; when no step recovered, the final step's
    list is reported (its radius is ``tau`` unless ``max_multiplicity``
    stopped the schedule early).
    """
    y = code._check_len(y, "side information")
    outcome = None
    for radius, mult in progressive_schedule(code.n, code.k, tau, max_multiplicity):
        words, _ = _coset_list(code, msg, y, radius, mult)
        outcome = _outcome(code, crc_spec, msg, words, radius, mult)
        if outcome.status in (Status.RECOVERED, Status.AMBIGUOUS):
            break
    return outcome


def payload_rate(n: int, k: int, m: int, rho: int) -> Fraction:
    """Compressed bits per source bit, ``((n-k) m + rho) / (n m)``."""
    return Fraction((n - k) * m + rho, n * m)


def measured_rate(code: RsCode, crc_spec: CrcSpec) -> Fraction:
    return payload_rate(code.n, code.k, code.field.m, crc_spec.rho)


# -- byte formats ------------------------------------------------------------

MAGIC = b"SCSI"
VERSION = 1
_HEADER = struct.Struct("<4sBBHHHBQ")


def pack_bits(bits) -> bytes:
    bits = list(bits)
    bits += [0] * (-len(bits) % 8)
    return np.packbits(np.array(bits, dtype=np.uint8)).tobytes() if bits else b""


def unpack_bits(data: bytes, nbits: int) -> list[int]:
    arr = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    if np.any(arr[nbits:]):
        raise WireFormatError("nonzero padding bits")
    return arr[:nbits].tolist()


def _int_bits(value: int, width: int) -> list[int]:
    return [(int(value) >> (width - 1 - j)) & 1 for j in range(width)]


def _bits_int(bits) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | int(b)
    return out


def pack_symbols(word, m: int) -> bytes:
    """Symbols as m-bit fields, MSB first, zero-padded to a byte boundary."""
    bits = []
    for s in word:
        bits.extend(_int_bits(s, m))
    return pack_bits(bits)


def unpack_symbols(data: bytes, n: int, m: int) -> np.ndarray:
    nbits = n * m
    need = -(-nbits // 8)
    if len(data) != need:
        raise WireFormatError(
            f"expected {nbits} bits ({need} bytes) for {n} symbols of {m} bits, got {len(data) * 8} bits"
        )
    bits = unpack_bits(data, nbits)
    return np.array([_bits_int(bits[i * m : (i + 1) * m]) for i in range(n)], dtype=np.int64)


def encode_wire(code: RsCode, crc_spec: CrcSpec, msg: EncodedMessage) -> bytes:
    """Serialise a message with the parameters needed to decode it."""
    m = code.field.m
    if code.field.modulus != DEFAULT_MODULI[m]:
        raise WireFormatError("the wire format assumes the default modulus for m")
    header = _HEADER.pack(MAGIC, VERSION, m, code.n, code.k, code.b, crc_spec.rho, crc_spec.generator)
    bits = []
    for s in msg.syndrome:
        bits.extend(_int_bits(s, m))
    bits.extend(_int_bits(msg.crc, crc_spec.rho))
    return header + pack_bits(bits)


@dataclass(frozen=True)
class WireMessage:
    m: int
    n: int
    k: int
    b: int
    crc_spec: CrcSpec
    message: EncodedMessage = field(compare=False)

    def code(self) -> RsCode:
        return RsCode(field_new(self.m), self.n, self.k, self.b)


def decode_wire(data: bytes) -> WireMessage:
    if len(data) < _HEADER.size:
        raise WireFormatError("truncated header")
    magic, version, m, n, k, b, rho, gen = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise WireFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise WireFormatError(f"unsupported version {version}")
    crc_spec = CrcSpec(gen)
    if crc_spec.rho != rho:
        raise WireFormatError(f"generator {gen:#x} has degree {crc_spec.rho}, header says {rho}")
    if not 2 <= m <= 16:
        raise WireFormatError(f"bad symbol width {m}")
    nbits = (n - k) * m + rho
    body = data[_HEADER.size :]
    if len(body) != -(-nbits // 8):
        raise WireFormatError(f"expected {nbits} payload bits, got {len(body) * 8}")
    bits = unpack_bits(body, nbits)
    synd = np.array(
        [_bits_int(bits[i * m : (i + 1) * m]) for i in range(n - k)], dtype=np.int64
    )
    tag = _bits_int(bits[(n - k) * m :])
    return WireMessage(m, n, k, b, crc_spec, EncodedMessage(synd, tag))

