"""CSV and ASCII PLY point exports.

Coordinates are written as floats for viewing only; nothing reads them back
into a verification.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path

from .sphere import LabeledPoint

CSV_COLUMNS = ("x", "y", "z", "layer_radius", "piece_label", "word")

_LABEL_RE = re.compile(r"^([ABX])(\d+)$")


def label_code(label: str) -> int:
    """Integer PLY label: A_i -> 2i, B_i -> 2i+1, X_j -> 1000+j, unknown -> -1."""
    m = _LABEL_RE.match(label)
    if not m:
        return -1
    kind, i = m.group(1), int(m.group(2))
    if kind == "X":
        return 1000 + i
    return 2 * i + (kind == "B")


def _write_csv(points: list[LabeledPoint], path: Path) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for p in points:
            w.writerow([repr(float(c)) for c in p.point] + [repr(float(p.radius)), p.label, p.word])


def _write_ply(points: list[LabeledPoint], path: Path) -> None:
    with path.open("w") as fh:
        fh.write("ply\nformat ascii 1.0\n")
        fh.write("comment label codes: A_i = 2i, B_i = 2i+1, X_j = 1000+j\n")
        fh.write(f"element vertex {len(points)}\n")
        fh.write("property double x\nproperty double y\nproperty double z\nproperty int label\n")
        fh.write("end_header\n")
        for p in points:
            x, y, z = (repr(float(c)) for c in p.point)
            fh.write(f"{x} {y} {z} {label_code(p.label)}\n")


def export_points(points: list[LabeledPoint], path, fmt: str | None = None) -> Path:
    """Write ``points`` as CSV or PLY; the format defaults to the file suffix."""
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".") or "csv").lower()
    if fmt == "csv":
        _write_csv(points, path)
    elif fmt == "ply":
        _write_ply(points, path)
    else:
        raise ValueError(f"unknown export format {fmt!r} (csv or ply)")
    return path


def read_ply(path) -> tuple[int, list[tuple[float, float, float, int]]]:
    """(declared vertex count, vertex rows) of an ASCII PLY file."""
    lines = Path(path).read_text().splitlines()
    count = 0
    end = lines.index("end_header")
    for line in lines[:end]:
        if line.startswith("element vertex"):
            count = int(line.split()[2])
    rows = []
    for line in lines[end + 1 : end + 1 + count]:
        x, y, z, lab = line.split()
        rows.append((float(x), float(y), float(z), int(lab)))
    return count, rows
