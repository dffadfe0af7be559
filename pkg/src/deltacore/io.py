"""Text formats: point clouds, distance matrices, diagrams and result tables."""

from __future__ import annotations

import csv
import io
import math
import re
from pathlib import Path

import numpy as np

from .complexes import ReductionRow
from .homology import PersistenceDiagram
from .metric_space import Metric, PointCloud

_SPLIT = re.compile(r"[,\s]+")


def parse_points(text: str) -> PointCloud:
    """Parse a point file, or a ``matrix n`` distance-matrix file."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if rows and rows[0].split()[0].lower() == "matrix":
        head = rows[0].split()
        if len(head) != 2:
            raise ValueError("matrix header must read 'matrix n'")
        n = int(head[1])
        body = [[float(v) for v in _SPLIT.split(r) if v] for r in rows[1:]]
        if len(body) != n or any(len(r) != n for r in body):
            raise ValueError(f"expected {n} rows of {n} distances")
        return PointCloud.from_matrix(np.array(body, dtype=float).reshape(n, n))
    points = [[float(v) for v in _SPLIT.split(r) if v] for r in rows]
    if len({len(p) for p in points}) > 1:
        raise ValueError("points have differing dimensions")
    return PointCloud(np.array(points, dtype=float))


def format_points(cloud: PointCloud, comments: list[str] = ()) -> str:
    out = io.StringIO()
    for c in comments:
        out.write(f"# {c}\n")
    if cloud.metric is Metric.PRECOMPUTED:
        out.write(f"matrix {len(cloud)}\n")
    for row in cloud.data:
        out.write(" ".join(repr(float(v)) for v in row) + "\n")
    return out.getvalue()


def read_points(path) -> PointCloud:
    return parse_points(Path(path).read_text())


def write_points(path, cloud: PointCloud, comments: list[str] = ()) -> None:
    Path(path).write_text(format_points(cloud, comments))


def read_diagram(path) -> PersistenceDiagram:
    return PersistenceDiagram.from_csv(Path(path).read_text())


def write_diagram(path, diagram: PersistenceDiagram) -> None:
    Path(path).write_text(diagram.to_csv())


REDUCTION_HEADER = ["index", "scale", "vr_simplices", "core_simplices", "reduction_pct"]


def format_reduction_table(rows: list[ReductionRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REDUCTION_HEADER)
    for k, row in enumerate(rows, start=1):
        writer.writerow([k, repr(row.scale), row.simplices_before, row.simplices_after,
                         f"{row.reduction_pct:.1f}"])
    total = ReductionRow(math.nan, sum(r.simplices_before for r in rows),
                         sum(r.simplices_after for r in rows))
    writer.writerow(["total", "", total.simplices_before, total.simplices_after,
                     f"{total.reduction_pct:.1f}"])
    return out.getvalue()


def parse_reduction_table(text: str) -> tuple[list[ReductionRow], ReductionRow]:
    """Rows and the total row (whose ``scale`` is NaN)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != REDUCTION_HEADER:
        raise ValueError("not a reduction table")
    rows, total = [], None
    for rec in reader:
        if not rec:
            continue
        if rec[0] == "total":
            total = ReductionRow(math.nan, int(rec[2]), int(rec[3]))
        else:
            rows.append(ReductionRow(float(rec[1]), int(rec[2]), int(rec[3])))
    if total is None:
        raise ValueError("reduction table lacks its total row")
    return rows, total


def comparison_header(degrees) -> list[str]:
    cols = ["method", "n"]
    for q in degrees:
        cols += [f"H{q}_bottleneck", f"H{q}_wasserstein1"]
    return cols


def format_comparison(records: list[dict], degrees) -> str:
    """``records`` hold ``method``, ``n`` and ``distances: {q: (bn, w1)}``."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(comparison_header(degrees))
    for rec in records:
        row = [rec["method"], rec["n"]]
        for q in degrees:
            bn, w1 = rec["distances"][q]
            row += [repr(float(bn)), repr(float(w1))]
        writer.writerow(row)
    return out.getvalue()


def parse_comparison(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header[:2] != ["method", "n"] or len(header) % 2:
        raise ValueError("not a comparison table")
    degrees = [int(h[1:].split("_")[0]) for h in header[2::2]]
    records = []
    for rec in reader:
        if not rec:
            continue
        vals = [float(v) for v in rec[2:]]
        records.append({
            "method": rec[0],
            "n": int(rec[1]),
            "distances": {q: (vals[2 * k], vals[2 * k + 1]) for k, q in enumerate(degrees)},
        })
    return records
