"""Point clouds, distances, closed δ-neighborhoods and percentile-based δ."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.spatial import cKDTree

# Spatial index is only worth it in low dimension.
KDTREE_MAX_DIM = 20


class Metric(enum.Enum):
    EUCLIDEAN = "euclidean"
    PRECOMPUTED = "precomputed"


@dataclass(frozen=True, eq=False)
class PointCloud:
    """A finite metric space.

    For ``Metric.EUCLIDEAN`` ``data`` is an ``(n, d)`` coordinate array; for
    ``Metric.PRECOMPUTED`` it is an ``(n, n)`` distance matrix.
    """

    data: np.ndarray
    metric: Metric = Metric.EUCLIDEAN

    def __post_init__(self):
        data = np.array(self.data, dtype=float)
        if self.metric is Metric.EUCLIDEAN:
            if data.size == 0:
                data = data.reshape(0, max(data.shape[-1] if data.ndim == 2 else 1, 1))
            if data.ndim == 1:
                data = data.reshape(-1, 1)
            if data.ndim != 2 or data.shape[1] < 1:
                raise ValueError("points must form an (n, d) array with d >= 1")
            if not np.all(np.isfinite(data)):
                raise ValueError("coordinates must be finite")
        else:
            if data.size == 0:
                data = data.reshape(0, 0)
            if data.ndim != 2 or data.shape[0] != data.shape[1]:
                raise ValueError("distance matrix must be square")
            if not np.array_equal(data, data.T):
                raise ValueError("distance matrix must be symmetric")
            if np.any(np.diag(data) != 0):
                raise ValueError("distance matrix must have a zero diagonal")
            if np.any(data < 0) or not np.all(np.isfinite(data)):
                raise ValueError("distances must be finite and non-negative")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_matrix(cls, matrix) -> PointCloud:
        return cls(matrix, Metric.PRECOMPUTED)

    def __len__(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int | None:
        """Ambient dimension, or None for a precomputed metric."""
        return self.data.shape[1] if self.metric is Metric.EUCLIDEAN else None

    def subset(self, indices) -> PointCloud:
        idx = np.asarray(indices, dtype=np.int64)
        if self.metric is Metric.EUCLIDEAN:
            return PointCloud(self.data[idx], self.metric)
        return PointCloud(self.data[np.ix_(idx, idx)], self.metric)

    def distances_from(self, i: int, js) -> np.ndarray:
        """Distances from point ``i`` to each point in ``js``.

        Every distance in the package is evaluated here, so the KD-tree and
        brute-force paths compare bit-identical values against δ.
        """
        js = np.asarray(js, dtype=np.int64)
        if self.metric is Metric.PRECOMPUTED:
            return self.data[i, js]
        diff = self.data[js] - self.data[i]
        return np.sqrt(np.sum(diff * diff, axis=1))

    def distance_matrix(self) -> np.ndarray:
        n = len(self)
        if self.metric is Metric.PRECOMPUTED:
            return np.array(self.data)
        all_idx = np.arange(n)
        return np.array([self.distances_from(i, all_idx) for i in range(n)]).reshape(n, n)

    def diameter(self) -> float:
        if len(self) < 2:
            return 0.0
        return float(self.distance_matrix().max())


def pairwise_distance(cloud: PointCloud, i: int, j: int) -> float:
    n = len(cloud)
    for k in (i, j):
        if not 0 <= k < n:
            raise IndexError(f"point index {k} out of range for {n} points")
    return float(cloud.distances_from(i, [j])[0])


@dataclass(frozen=True, eq=False)
class NeighborGraph:
    """Closed δ-neighborhoods: ``neighborhoods[i]`` is the sorted array of all
    ``j`` with ``d(x_i, x_j) <= delta``, including ``i`` itself."""

    delta: float
    neighborhoods: tuple

    def __len__(self) -> int:
        return len(self.neighborhoods)

    def degrees(self) -> np.ndarray:
        return np.array([len(nb) - 1 for nb in self.neighborhoods], dtype=np.int64)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, int(j)) for i, nb in enumerate(self.neighborhoods) for j in nb if j > i]


def _candidates_kdtree(cloud: PointCloud, delta: float) -> list[np.ndarray]:
    tree = cKDTree(cloud.data)
    # Slightly inflated radius; the exact test happens in the shared filter.
    radius = delta * (1 + 1e-9) + 1e-12
    return [np.asarray(c, dtype=np.int64) for c in tree.query_ball_point(cloud.data, radius)]


def neighborhoods(cloud: PointCloud, delta: float, method: str = "auto") -> NeighborGraph:
    """Closed δ-neighborhoods of every point.

    ``method`` is ``"auto"``, ``"kdtree"`` or ``"brute"``. Both paths yield
    identical graphs: candidates are always re-filtered with
    :meth:`PointCloud.distances_from` using ``<=``.
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    return _threshold_graph(cloud, delta, method)


def _threshold_graph(cloud: PointCloud, eps: float, method: str = "auto") -> NeighborGraph:
    n = len(cloud)
    if method == "auto":
        use_tree = cloud.metric is Metric.EUCLIDEAN and cloud.dim <= KDTREE_MAX_DIM and n > 32
    elif method == "kdtree":
        if cloud.metric is not Metric.EUCLIDEAN:
            raise ValueError("kdtree search needs Euclidean coordinates")
        use_tree = True
    elif method == "brute":
        use_tree = False
    else:
        raise ValueError(f"unknown neighborhood method {method!r}")

    if n == 0:
        return NeighborGraph(eps, ())
    if use_tree:
        candidates = _candidates_kdtree(cloud, eps)
    else:
        everyone = np.arange(n, dtype=np.int64)
        candidates = [everyone] * n

    result = []
    for i, cand in enumerate(candidates):
        cand = np.sort(cand)
        keep = cand[cloud.distances_from(i, cand) <= eps]
        if i not in keep:
            keep = np.union1d(keep, [i])
        keep.setflags(write=False)
        result.append(keep)
    return NeighborGraph(float(eps), tuple(result))


def pair_distances(cloud: PointCloud) -> np.ndarray:
    """Distances of all ``n(n-1)/2`` distinct pairs (strict upper triangle)."""
    n = len(cloud)
    parts = [cloud.distances_from(i, np.arange(i + 1, n)) for i in range(n - 1)]
    return np.concatenate(parts) if parts else np.empty(0)


def delta_from_percentile(cloud: PointCloud, p: float) -> float:
    """Nearest-rank ``p``-th percentile of the distinct-pair distances."""
    if len(cloud) < 2:
        raise ValueError("need at least two points to pick delta from a percentile")
    if not 0 < p <= 100:
        raise ValueError(f"percentile must lie in (0, 100], got {p}")
    values = np.sort(pair_distances(cloud))
    m = len(values)
    # exact rational arithmetic: 15 * m / 100 must not round up spuriously
    rank = max(1, math.ceil(Fraction(p) * m / 100))
    return float(values[rank - 1])
