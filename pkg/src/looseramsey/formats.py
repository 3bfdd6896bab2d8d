"""Coloring file formats.

Canonical output format LRC1: header line ``LRC1 <N>`` followed by a
hex-encoded red bitmap of ceil(C(N,3)/4) digits in colex order, bit i
corresponding to rank i, most significant bit first within each hex digit.

Also accepted on input, LRE1: header line ``LRE1 <N>`` followed by one
``a b c`` line per red triple; blue is implied for every other triple.
"""

from __future__ import annotations

from math import comb
from typing import TextIO

from .core import Coloring, TripleEdge, colex_rank


class FormatError(ValueError):
    """Malformed coloring file."""


def encode_lrc1(coloring: Coloring) -> str:
    n_digits = (coloring.n_triples + 3) // 4
    digits = []
    bits = coloring.red_bits
    for j in range(n_digits):
        value = 0
        for k in range(4):
            rank = 4 * j + k
            if rank < coloring.n_triples and (bits >> rank) & 1:
                value |= 1 << (3 - k)
        digits.append(format(value, "x"))
    return f"LRC1 {coloring.n_vertices}\n{''.join(digits)}\n"


def encode_lre1(coloring: Coloring) -> str:
    lines = [f"LRE1 {coloring.n_vertices}"]
    for e in coloring.red_edges():
        lines.append(f"{e.a} {e.b} {e.c}")
    return "\n".join(lines) + "\n"


def decode(text: str) -> Coloring:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty coloring file")
    header = lines[0].split()
    if len(header) != 2 or header[0] not in ("LRC1", "LRE1"):
        raise FormatError(f"unrecognized header {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad vertex count {header[1]!r}") from exc
    if n < 3:
        raise FormatError(f"vertex count {n} below 3")
    n_triples = comb(n, 3)

    if header[0] == "LRC1":
        hex_str = "".join(lines[1:])
        expected = (n_triples + 3) // 4
        if len(hex_str) != expected:
            raise FormatError(
                f"expected {expected} hex digits for N={n}, got {len(hex_str)}"
            )
        bits = 0
        for j, ch in enumerate(hex_str):
            try:
                value = int(ch, 16)
            except ValueError as exc:
                raise FormatError(f"bad hex digit {ch!r}") from exc
            for k in range(4):
                if value & (1 << (3 - k)):
                    rank = 4 * j + k
                    if rank >= n_triples:
                        raise FormatError("padding bits must be zero")
                    bits |= 1 << rank
        return Coloring(n, bits)

    bits = 0
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"expected three vertex labels, got {ln!r}")
        try:
            e = TripleEdge.of(*(int(p) for p in parts))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
        if e.c >= n:
            raise FormatError(f"edge {ln!r} outside [0, {n})")
        bits |= 1 << colex_rank(e)
    return Coloring(n, bits)


def write_coloring(coloring: Coloring, fh: TextIO, explicit: bool = False) -> None:
    fh.write(encode_lre1(coloring) if explicit else encode_lrc1(coloring))


def read_coloring(fh: TextIO) -> Coloring:
    return decode(fh.read())
