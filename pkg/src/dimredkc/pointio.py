"""Point-set file formats: dense CSV, 0/1 text rows, and packed-bit binary.

The packed format is a 16-byte little-endian header (magic ``HKC1``,
uint32 n, uint32 d, 4 reserved zero bytes) followed by n rows of
ceil(d / 8) bytes, bits packed most-significant first.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .core import Metric, PointSet

PACKED_MAGIC = b"HKC1"
_HEADER = struct.Struct("<4sII4x")

FORMATS = ("csv", "bits", "packed")


class PointFormatError(ValueError):
    """Malformed input file; the message names the offending row."""


def _default_metric(fmt: str) -> Metric:
    return Metric.EUCLIDEAN if fmt == "csv" else Metric.HAMMING


def load_points(path, fmt: str, metric: Metric | None = None) -> PointSet:
    """Read a point set from `path` in the given format.

    `metric` defaults to Euclidean for csv and Hamming for bits/packed;
    binary coordinates are validated whenever the metric is Hamming.
    """
    path = Path(path)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if metric is None:
        metric = _default_metric(fmt)
    if fmt == "csv":
        rows = _read_csv(path)
    elif fmt == "bits":
        rows = _read_bits(path)
    else:
        rows = _read_packed(path)
    try:
        return PointSet(rows, metric)
    except ValueError as exc:
        raise PointFormatError(f"{path}: {exc}") from exc


def _read_csv(path: Path) -> np.ndarray:
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = [float(tok) for tok in line.split(",")]
            except ValueError as exc:
                raise PointFormatError(f"{path}: row {lineno}: {exc}") from None
            if rows and len(row) != len(rows[0]):
                raise PointFormatError(
                    f"{path}: row {lineno}: {len(row)} columns, expected {len(rows[0])}"
                )
            rows.append(row)
    if not rows:
        raise PointFormatError(f"{path}: no points found")
    return np.array(rows)


def _read_bits(path: Path) -> np.ndarray:
    rows: list[list[int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if set(line) - {"0", "1"}:
                bad = sorted(set(line) - {"0", "1"})
                raise PointFormatError(f"{path}: row {lineno}: non-binary characters {bad}")
            if rows and len(line) != len(rows[0]):
                raise PointFormatError(
                    f"{path}: row {lineno}: {len(line)} bits, expected {len(rows[0])}"
                )
            rows.append([int(c) for c in line])
    if not rows:
        raise PointFormatError(f"{path}: no points found")
    return np.array(rows)


def _read_packed(path: Path) -> np.ndarray:
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise PointFormatError(f"{path}: truncated header ({len(raw)} bytes)")
    magic, n, d = _HEADER.unpack_from(raw)
    if magic != PACKED_MAGIC:
        raise PointFormatError(f"{path}: bad magic {magic!r}, expected {PACKED_MAGIC!r}")
    row_bytes = (d + 7) // 8
    expected = _HEADER.size + n * row_bytes
    if len(raw) != expected:
        raise PointFormatError(f"{path}: expected {expected} bytes, found {len(raw)}")
    packed = np.frombuffer(raw, dtype=np.uint8, offset=_HEADER.size).reshape(n, row_bytes)
    return np.unpackbits(packed, axis=1)[:, :d]


def save_points(points: PointSet, path, fmt: str) -> None:
    """Write a point set to `path`; bits/packed require binary coordinates."""
    path = Path(path)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "csv":
        with open(path, "w", encoding="utf-8") as fh:
            for row in points.coords:
                fh.write(",".join(repr(float(v)) for v in row) + "\n")
        return
    if not np.isin(points.coords, (0.0, 1.0)).all():
        raise ValueError(f"format {fmt!r} requires binary coordinates")
    bits = points.coords.astype(np.uint8)
    if fmt == "bits":
        with open(path, "w", encoding="utf-8") as fh:
            for row in bits:
                fh.write("".join("1" if b else "0" for b in row) + "\n")
        return
    packed = np.packbits(bits, axis=1)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(PACKED_MAGIC, points.n, points.dim))
        fh.write(packed.tobytes())
