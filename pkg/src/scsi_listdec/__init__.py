"""Compression with decoder side information via Reed-Solomon list decoding."""

from .crc import CRC12, NO_CRC, CrcSpec, crc_compute
from .designer import CorrelationModel, binomial_tail_threshold, design
from .finite_field import GaloisField, field_new
from .gs_decoder import brute_force_list_decode, gs_list_decode, gs_radius
from .rs_code import RsCode, coset_representative, encode_message, rs_new, syndrome
from .scsi_codec import (
    Status,
    decode_wire,
    encode_wire,
    scsi_decode,
    scsi_decode_progressive,
    scsi_encode,
)
from .sim_harness import run_trials

__all__ = [
    "CRC12", "NO_CRC", "CrcSpec", "crc_compute",
    "CorrelationModel", "binomial_tail_threshold", "design",
    "GaloisField", "field_new",
    "brute_force_list_decode", "gs_list_decode", "gs_radius",
    "RsCode", "coset_representative", "encode_message", "rs_new", "syndrome",
    "Status", "decode_wire", "encode_wire", "scsi_decode", "scsi_decode_progressive", "scsi_encode",
    "run_trials",
]
