"""Recompute the published design examples and compare them cell by cell."""

from __future__ import annotations

from dataclasses import dataclass

from .designer import (
    CorrelationModel,
    binomial_tail_threshold,
    design,
    rm_required_distance,
)

MATCH = "MATCH"
MISMATCH = "MISMATCH"
DOCUMENTED = "DOCUMENTED-DISCREPANCY"

COLUMNS = ("T_eps", "code", "tau", "rate", "rate+CRC", "unique rate")


@dataclass(frozen=True)
class Cell:
    ours: str
    published: str
    status: str
    note: str = ""


@dataclass(frozen=True)
class Row:
    example: str
    cells: dict

    def statuses(self):
        return [c.status for c in self.cells.values()]


def _num(ours: float, published: str) -> Cell:
    digits = len(published.split(".")[1]) if "." in published else 0
    text = f"{ours:.{digits}f}"
    return Cell(text, published, MATCH if text == published else MISMATCH)


def _int(ours: int, published: int) -> Cell:
    return Cell(str(ours), str(published), MATCH if ours == published else MISMATCH)


def _above(ours: float, bound: float, label: str) -> Cell:
    return Cell(str(ours), f"> {bound}", MATCH if ours > bound else MISMATCH, label)


def build_rows() -> list[Row]:
    rows = []
    for eps, published in ((1e-4, 459), (1e-5, 468)):
        t = binomial_tail_threshold(1000, 0.4, eps)
        rows.append(Row(f"T_eps n=1000 p=0.4 eps={eps:g}", {"T_eps": _int(t, published)}))

    rs = design(255, CorrelationModel(256, 0.3), 1e-4, 12)
    crc_cell = _num(float(rs.rate_with_crc), "0.702")
    if crc_cell.status == MISMATCH:
        crc_cell = Cell(
            crc_cell.ours,
            crc_cell.published,
            DOCUMENTED,
            "12 CRC bits over 255*8 source bits give 1348/2040; 0.702 = 0.6549 + 12/255 "
            "counts the bits per q-ary symbol",
        )
    rows.append(Row("RS q=256 n=255 p=0.3 eps=1e-4", {
        "T_eps": _int(rs.t_eps, 105),
        "code": Cell(f"({rs.n},{rs.k})", "(255,88)", MATCH if (rs.n, rs.k) == (255, 88) else MISMATCH),
        "tau": _above(rs.tau, 105, "GS radius must exceed T_eps"),
        "rate": _num(float(rs.rate_no_crc), "0.6549"),
        "rate+CRC": crc_cell,
        "unique rate": _num(float(rs.unique_rate), "0.8235"),
        "unique code": Cell(f"({rs.n},{rs.unique_k}) d={rs.unique_d_min}", "(255,45) d=211",
                            MATCH if (rs.unique_k, rs.unique_d_min) == (45, 211) else MISMATCH),
    }))

    bch = design(1023, CorrelationModel(2, 0.2), 1e-4, 12)
    rows.append(Row("BCH q=2 n=1023 p=0.2 eps=1e-4", {
        "T_eps": _int(bch.t_eps, 254),
        "code": Cell(f"({bch.n},{bch.k})", "(1023,56)", MATCH if (bch.n, bch.k) == (1023, 56) else MISMATCH),
        "D": _above(round(bch.d_min / bch.n, 5), 0.3743, f"Bose distance {bch.d_min}"),
        "d_min": _above(bch.d_min, 382, "read as the distance claim; the radius formula gives tau below"),
        "tau": _above(bch.tau, bch.t_eps, "radius formula must exceed T_eps"),
        "rate": _num(float(bch.rate_no_crc), "0.9453"),
        "rate+CRC": _num(float(bch.rate_with_crc), "0.9570"),
        "unique d_min": _above(bch.unique_d_min, 508, ""),
        "unique code": Cell(f"({bch.n},{bch.unique_k})", "(1023,11)",
                            MATCH if bch.unique_k == 11 else MISMATCH),
        "unique rate": _num(float(bch.unique_rate), "0.9892"),
    }))

    rm = design(1024, CorrelationModel(2, 0.3), 1e-4, 12)
    need = rm_required_distance(1024, rm.t_eps)
    rows.append(Row("RM q=2 n=1024 p=0.3 eps=1e-4", {
        "T_eps": _int(rm.t_eps, 364),
        "required d_min": Cell(f"{need:.2f} -> {int(need) + 1}", "235",
                               MATCH if int(need) + 1 == 235 else MISMATCH,
                               "smallest integer distance whose radius exceeds T_eps"),
        "code": Cell(f"({rm.n},{rm.k}) d={rm.d_min}", "(1024,56) d=256",
                     MATCH if (rm.k, rm.d_min) == (56, 256) else MISMATCH),
        "tau": _above(rm.tau, rm.t_eps, ""),
        "rate": _num(float(rm.rate_no_crc), "0.9453"),
        "rate+CRC": _num(float(rm.rate_with_crc), "0.9570"),
        "unique d_min": _above(rm.unique_d_min, 728, "only order 0 qualifies"),
        "unique rate": Cell(f"{float(rm.unique_rate):.4f}", "no compression",
                            MATCH if rm.unique_k <= 1 else MISMATCH),
    }))
    return rows


def render(rows: list[Row]) -> str:
    lines = []
    for row in rows:
        lines.append(row.example)
        for name, cell in row.cells.items():
            line = f"  {name:<15} {cell.ours:<22} published {cell.published:<16} {cell.status}"
            if cell.note:
                line += f"  ({cell.note})"
            lines.append(line)
    counts = {}
    for row in rows:
        for s in row.statuses():
            counts[s] = counts.get(s, 0) + 1
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return "\n".join(lines) + "\n"


def to_record(rows: list[Row]) -> list[dict]:
    return [
        {"example": r.example, "cells": {k: vars(c) for k, c in r.cells.items()}}
        for r in rows
    ]
