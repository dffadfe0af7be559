"""Vietoris-Rips filtrations and strong-collapse cores of flag complexes.

Flag complexes are kept as graphs (closed neighborhoods); their simplices
are enumerated only when a filtration or a count is requested.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .metric_space import NeighborGraph, PointCloud, _threshold_graph
from .subsampling import collapse_dominated


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[int, ...]
    value: float

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


class Filtration:
    """Simplices ordered by (value, dimension, lexicographic vertices).

    Stored column-wise: ``vertices`` is an ``(s, max_dim + 1)`` array padded
    with ``-1``, alongside ``dims`` and ``values``. Construction does not
    reorder; use :meth:`from_simplices` for arbitrary input.
    """

    def __init__(self, vertices, dims, values, max_dim: int, threshold: float = np.inf):
        self.vertices = np.asarray(vertices, dtype=np.int64).reshape(-1, max_dim + 1)
        self.dims = np.asarray(dims, dtype=np.int64)
        self.values = np.asarray(values, dtype=np.float64)
        self.max_dim = int(max_dim)
        self.threshold = float(threshold)
        self._boundary = None

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[tuple[Sequence[int], float]],
        max_dim: int | None = None,
        threshold: float = np.inf,
    ) -> Filtration:
        items = [(tuple(sorted(int(v) for v in vs)), float(val)) for vs, val in simplices]
        top = max((len(vs) - 1 for vs, _ in items), default=0)
        if max_dim is None:
            max_dim = top
        if top > max_dim:
            raise ValueError(f"simplex of dimension {top} exceeds max_dim={max_dim}")
        verts = np.full((len(items), max_dim + 1), -1, dtype=np.int64)
        for row, (vs, _) in enumerate(items):
            verts[row, : len(vs)] = vs
        dims = np.array([len(vs) - 1 for vs, _ in items], dtype=np.int64)
        values = np.array([val for _, val in items], dtype=np.float64)
        return cls._sorted(verts, dims, values, max_dim, threshold)

    @classmethod
    def _sorted(cls, verts, dims, values, max_dim, threshold):
        keys = [verts[:, c] for c in range(verts.shape[1] - 1, -1, -1)] + [dims, values]
        order = np.lexsort(keys) if len(dims) else np.arange(0)
        return cls(verts[order], dims[order], values[order], max_dim, threshold)

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, k: int) -> Simplex:
        d = self.dims[k]
        return Simplex(tuple(int(v) for v in self.vertices[k, : d + 1]), float(self.values[k]))

    def __iter__(self):
        return (self[k] for k in range(len(self)))

    @property
    def simplices(self) -> list[Simplex]:
        return list(self)

    def boundary(self) -> tuple[np.ndarray, np.ndarray]:
        """Boundary matrix in CSR form over filtration positions.

        Raises ValueError if a face is missing or appears after its coface.
        """
        if self._boundary is None:
            self._boundary = self._build_boundary()
        return self._boundary

    def _build_boundary(self):
        s = len(self)
        positions = np.arange(s, dtype=np.int64)
        base = int(self.vertices.max()) + 2 if s else 1
        if base ** (self.max_dim + 1) >= 2**62:
            raise ValueError("too many vertices to index simplices of this dimension")
        weights = base ** np.arange(self.max_dim, -1, -1, dtype=np.int64)

        def encode(rows):
            return (rows + 1) @ weights[-rows.shape[1]:] if rows.shape[1] else np.zeros(len(rows), np.int64)

        faces_of = np.zeros((s, self.max_dim + 1), dtype=np.int64)
        for d in range(1, self.max_dim + 1):
            sel = np.flatnonzero(self.dims == d)
            if len(sel) == 0:
                continue
            lower = np.flatnonzero(self.dims == d - 1)
            lower_keys = encode(self.vertices[lower, :d])
            order = np.argsort(lower_keys, kind="stable")
            sorted_keys = lower_keys[order]
            rows = self.vertices[sel, : d + 1]
            for drop in range(d + 1):
                face = np.delete(rows, drop, axis=1)
                fk = encode(face)
                at = np.searchsorted(sorted_keys, fk)
                at_ok = np.minimum(at, len(sorted_keys) - 1) if len(sorted_keys) else at
                if len(sorted_keys) == 0 or np.any(sorted_keys[at_ok] != fk):
                    raise ValueError("filtration is missing a face of some simplex")
                faces_of[sel, drop] = positions[lower[order[at_ok]]]
            block = np.sort(faces_of[sel, : d + 1], axis=1)
            if np.any(block[:, -1] >= sel):
                raise ValueError("filtration lists a face after its coface")
            if np.any(self.values[block].max(axis=1) > self.values[sel]):
                raise ValueError("filtration value of a face exceeds that of its coface")
            faces_of[sel, : d + 1] = block
        ptr = np.zeros(s + 1, dtype=np.int64)
        np.cumsum(np.where(self.dims > 0, self.dims + 1, 0), out=ptr[1:])
        idx = np.empty(ptr[-1], dtype=np.int64)
        for d in range(1, self.max_dim + 1):
            sel = np.flatnonzero(self.dims == d)
            if len(sel):
                starts = ptr[sel]
                idx[(starts[:, None] + np.arange(d + 1)).ravel()] = faces_of[sel, : d + 1].ravel()
        return ptr, idx

    def validate(self) -> None:
        self.boundary()

    def to_text(self) -> str:
        lines = []
        for k in range(len(self)):
            d = int(self.dims[k])
            vs = " ".join(str(int(v)) for v in self.vertices[k, : d + 1])
            lines.append(f"{float(self.values[k])!r} {d} {vs}")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, max_dim: int | None = None) -> Filtration:
        items = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            value, dim = float(fields[0]), int(fields[1])
            vs = [int(v) for v in fields[2:]]
            if len(vs) != dim + 1:
                raise ValueError(f"dimension {dim} does not match vertices {vs}")
            items.append((vs, value))
        return cls.from_simplices(items, max_dim=max_dim)


@dataclass(frozen=True, eq=False)
class FlagGraph:
    """1-skeleton of a flag complex; ``adjacency[v]`` is the sorted closed
    neighborhood of ``v``."""

    adjacency: tuple

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> FlagGraph:
        nbrs = [{v} for v in range(n)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_neighbor_graph(cls, graph: NeighborGraph) -> FlagGraph:
        return cls(tuple(tuple(int(k) for k in nb) for nb in graph.neighborhoods))

    def induced(self, keep: Sequence[int]) -> FlagGraph:
        """Induced subgraph on ``keep`` with vertices relabelled ``0..len-1``."""
        relabel = {int(v): k for k, v in enumerate(keep)}
        return FlagGraph(tuple(
            tuple(sorted(relabel[u] for u in self.adjacency[v] if u in relabel)) for v in keep
        ))

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, nb in enumerate(self.adjacency) for u in nb if u > v]

    def __eq__(self, other):
        return isinstance(other, FlagGraph) and self.adjacency == other.adjacency

    def __hash__(self):
        return hash(self.adjacency)


def _upper_csr(adjacency, weight_fn=None):
    n = len(adjacency)
    ups = [np.asarray([u for u in nb if u > v], dtype=np.int64) for v, nb in enumerate(adjacency)]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum([len(u) for u in ups], out=indptr[1:])
    indices = np.concatenate(ups) if n else np.empty(0, np.int64)
    if weight_fn is None:
        weights = np.zeros(len(indices))
    else:
        weights = np.concatenate([weight_fn(v, ups[v]) for v in range(n)]) if n else np.empty(0)
    return indptr, indices.astype(np.int64), weights.astype(np.float64)


def _clique_filtration(adjacency, max_dim, weight_fn=None, threshold=np.inf) -> Filtration:
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    indptr, indices, weights = _upper_csr(adjacency, weight_fn)
    total = int(_kernels.count_cliques(indptr, indices, max_dim + 1).sum())
    verts, values, dims = _kernels.enumerate_cliques(indptr, indices, weights, max_dim + 1, total)
    return Filtration._sorted(verts, dims, values, max_dim, threshold)


def vr_filtration(cloud: PointCloud, max_dim: int, threshold: float) -> Filtration:
    """Vietoris-Rips filtration of ``cloud``: all cliques with at most
    ``max_dim + 1`` vertices whose pairwise distances are ``<= threshold``."""
    if not threshold > 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    graph = _threshold_graph(cloud, threshold)
    return _clique_filtration(graph.neighborhoods, max_dim, cloud.distances_from, threshold)


def flag_filtration(graph: FlagGraph, max_dim: int) -> Filtration:
    """The ``max_dim``-skeleton of the clique complex of ``graph``, all at value 0."""
    return _clique_filtration(graph.adjacency, max_dim)


def simplex_count(filtration: Filtration) -> tuple[list[int], int]:
    counts = np.bincount(filtration.dims, minlength=filtration.max_dim + 1)
    return [int(c) for c in counts], int(counts.sum())


def count_flag_simplices(adjacency, max_dim: int) -> list[int]:
    """Simplices per dimension of the clique complex, without materializing them."""
    if len(adjacency) == 0:
        return [0] * (max_dim + 1)
    indptr, indices, _ = _upper_csr(adjacency)
    return [int(c) for c in _kernels.count_cliques(indptr, indices, max_dim + 1)]


def flag_core(graph: FlagGraph) -> tuple[FlagGraph, list[int]]:
    """Core of the flag complex of ``graph`` via closed-neighborhood domination."""
    result = collapse_dominated(graph.adjacency)
    keep = list(result.surviving)
    return graph.induced(keep), keep


@dataclass(frozen=True)
class ReductionRow:
    scale: float
    simplices_before: int
    simplices_after: int

    @property
    def reduction_pct(self) -> float:
        if self.simplices_before == 0:
            return 0.0
        return 100.0 * (1.0 - self.simplices_after / self.simplices_before)


def core_reduction_table(cloud: PointCloud, scales: Sequence[float], max_dim: int) -> list[ReductionRow]:
    """Simplex counts of the ``max_dim``-skeleton of VR(cloud, scale) before
    and after replacing the complex by its core, one row per scale."""
    if list(scales) != sorted(scales):
        raise ValueError("scales must be ascending")
    rows = []
    for eps in scales:
        if eps < 0:
            raise ValueError("scales must be non-negative")
        graph = FlagGraph.from_neighbor_graph(_threshold_graph(cloud, eps))
        before = sum(count_flag_simplices(graph.adjacency, max_dim))
        core, _ = flag_core(graph)
        after = sum(count_flag_simplices(core.adjacency, max_dim))
        rows.append(ReductionRow(float(eps), before, after))
    return rows
