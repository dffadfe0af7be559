"""Persistent homology over Z/2 by standard column reduction."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .complexes import FlagGraph, Filtration, flag_filtration, vr_filtration
from .metric_space import PointCloud


@dataclass
class PersistenceDiagram:
    """Intervals per homology degree as ``(m, 2)`` arrays; death may be ``inf``."""

    intervals: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for q, rows in self.intervals.items():
            arr = np.asarray(rows, dtype=float).reshape(-1, 2)
            if np.any(arr[:, 0] > arr[:, 1]):
                raise ValueError("interval with birth after death")
            arr = arr[arr[:, 0] < arr[:, 1]]
            clean[int(q)] = arr[np.lexsort((arr[:, 1], arr[:, 0]))]
        self.intervals = dict(sorted(clean.items()))

    def __getitem__(self, q: int) -> np.ndarray:
        return self.intervals.get(q, np.empty((0, 2)))

    @property
    def degrees(self) -> list[int]:
        return list(self.intervals)

    def betti(self, q: int) -> int:
        return int(np.sum(np.isinf(self[q][:, 1])))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        qs = set(self.intervals) | set(other.intervals)
        return all(np.array_equal(self[q], other[q]) for q in qs)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("degree,birth,death\n")
        for q, rows in self.intervals.items():
            for birth, death in rows:
                d = "inf" if math.isinf(death) else repr(float(death))
                out.write(f"{q},{float(birth)!r},{d}\n")
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> PersistenceDiagram:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].replace(" ", "") != "degree,birth,death":
            raise ValueError("diagram CSV must start with the header 'degree,birth,death'")
        groups: dict[int, list] = {}
        for ln in lines[1:]:
            parts = ln.split(",")
            if len(parts) != 3:
                raise ValueError(f"malformed diagram row: {ln!r}")
            groups.setdefault(int(parts[0]), []).append((float(parts[1]), float(parts[2])))
        return cls(groups)


def persistence_pairs(filtration: Filtration) -> tuple[np.ndarray, np.ndarray]:
    """Pairs ``(birth_position, death_position)`` and unpaired positions."""
    ptr, idx = filtration.boundary()
    pivot_of_row = _kernels.reduce_boundary(ptr, idx)
    births = np.flatnonzero(pivot_of_row >= 0)
    deaths = pivot_of_row[births]
    paired = np.zeros(len(filtration), dtype=bool)
    paired[births] = True
    paired[deaths] = True
    return np.column_stack([births, deaths]), np.flatnonzero(~paired)


def persistent_homology(filtration: Filtration, max_degree: int) -> PersistenceDiagram:
    """Persistence diagram in degrees ``0..max_degree``.

    Degree ``max_dim`` is never reported since the cofaces that would kill
    its classes are absent from the skeleton.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if max_degree > filtration.max_dim - 1:
        raise ValueError(
            f"max_degree={max_degree} needs simplices up to dimension {max_degree + 1}, "
            f"filtration stops at {filtration.max_dim}"
        )
    pairs, essential = persistence_pairs(filtration)
    dims, values = filtration.dims, filtration.values
    out: dict[int, list] = {q: [] for q in range(max_degree + 1)}
    for b, d in pairs:
        q = int(dims[b])
        if q <= max_degree and values[b] < values[d]:
            out[q].append((values[b], values[d]))
    for b in essential:
        q = int(dims[b])
        if q <= max_degree:
            out[q].append((values[b], math.inf))
    return PersistenceDiagram(out)


def vr_persistence(cloud: PointCloud, max_degree: int, threshold: float) -> PersistenceDiagram:
    filtration = vr_filtration(cloud, max_degree + 1, threshold)
    return persistent_homology(filtration, max_degree)


def betti_numbers(cloud: PointCloud, scale: float, max_degree: int) -> list[int]:
    """Betti numbers of VR(cloud, scale) in degrees ``0..max_degree``."""
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    dgm = vr_persistence(cloud, max_degree, scale)
    return [dgm.betti(q) for q in range(max_degree + 1)]


def flag_betti_numbers(graph: FlagGraph, max_degree: int) -> list[int]:
    """Betti numbers of the clique complex of ``graph``."""
    filtration = flag_filtration(graph, max_degree + 1)
    pairs, essential = persistence_pairs(filtration)
    counts = np.bincount(filtration.dims[essential], minlength=max_degree + 2)
    return [int(c) for c in counts[: max_degree + 1]]
