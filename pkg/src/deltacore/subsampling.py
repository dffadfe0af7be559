"""δ-core subsampling by iterated removal of dominated points, the
δ-equivalence check between subsamples, and the farthest-point baseline."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metric_space import NeighborGraph, PointCloud, neighborhoods

#: Largest input for which :func:`delta_equivalent` runs the exact search.
EXACT_EQUIVALENCE_LIMIT = 12


@dataclass(frozen=True)
class CoreResult:
    """Outcome of a core reduction.

    ``removed`` holds ``(removed_index, dominating_index, sweep)`` records in
    the order the points were marked; sweeps are numbered from 1.
    """

    surviving: tuple[int, ...]
    removed: tuple[tuple[int, int, int], ...]
    sweeps: int

    def __len__(self) -> int:
        return len(self.surviving)


def _is_subset_sorted(a, b) -> bool:
    # linear merge over two ascending sequences
    j, nb = 0, len(b)
    for x in a:
        while j < nb and b[j] < x:
            j += 1
        if j == nb or b[j] != x:
            return False
        j += 1
    return True


def is_dominated(graph: NeighborGraph, active, i: int, j: int) -> bool:
    """True iff the active closed neighborhood of ``i`` lies inside that of ``j``."""
    if i == j:
        raise ValueError("a point cannot be dominated by itself")
    active = set(active)
    for k in (i, j):
        if k not in active:
            raise ValueError(f"index {k} is not active")
    ni = [k for k in graph.neighborhoods[i] if k in active]
    nj = [k for k in graph.neighborhoods[j] if k in active]
    return _is_subset_sorted(ni, nj)


def collapse_dominated(adjacency) -> CoreResult:
    """Remove dominated vertices of a closed-neighborhood graph in sweeps.

    Each sweep visits active vertices in ascending order and marks a vertex
    as soon as its first unmarked neighbor (ascending) dominates it; marks
    are applied at the end of the sweep. Stops after a sweep with no marks.
    Neighborhoods in a sweep are taken relative to the active set at its
    start, so every mark is a valid single-vertex collapse in mark order.
    """
    n = len(adjacency)
    nbrs = [frozenset(int(k) for k in nb) for nb in adjacency]
    ordered = [sorted(nb) for nb in nbrs]
    active = set(range(n))
    removed = []
    sweep = 0
    while True:
        sweep += 1
        marked = set()
        local = {i: nbrs[i] & active for i in active}
        for i in sorted(active):
            ni = local[i]
            for j in ordered[i]:
                if j == i or j in marked or j not in active:
                    continue
                if ni <= local[j]:
                    marked.add(i)
                    removed.append((i, j, sweep))
                    break
        if not marked:
            break
        active -= marked
    return CoreResult(tuple(sorted(active)), tuple(removed), sweep)


def delta_core(cloud: PointCloud, delta: float) -> CoreResult:
    """δ-core of ``cloud``: surviving point indices after all dominated
    points have been removed."""
    if len(cloud) == 0:
        raise ValueError("cannot take the core of an empty cloud")
    graph = neighborhoods(cloud, delta)
    return collapse_dominated(graph.neighborhoods)


def _adjacency_sets(cloud: PointCloud, delta: float) -> list[set[int]]:
    graph = neighborhoods(cloud, delta) if len(cloud) else NeighborGraph(delta, ())
    return [set(int(k) for k in nb if k != i) for i, nb in enumerate(graph.neighborhoods)]


def _isomorphic(adj_a: list[set[int]], adj_b: list[set[int]]) -> bool:
    n = len(adj_a)
    deg_a = [len(s) for s in adj_a]
    deg_b = [len(s) for s in adj_b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    # most constrained vertices first
    order = sorted(range(n), key=lambda v: (-deg_a[v], v))
    image = {}
    used = set()

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if w in used or deg_b[w] != deg_a[v]:
                continue
            if all((u in adj_a[v]) == (image[u] in adj_b[w]) for u in image):
                image[v] = w
                used.add(w)
                if extend(pos + 1):
                    return True
                del image[v]
                used.discard(w)
        return False

    return extend(0)


def delta_equivalent(
    cloud_y: PointCloud,
    cloud_z: PointCloud,
    delta: float,
    exact_limit: int = EXACT_EQUIVALENCE_LIMIT,
) -> bool | None:
    """Whether a bijection ``Y -> Z`` preserves the relation ``d <= delta``.

    Returns ``None`` when the cheap invariants agree but the clouds are too
    large (more than ``exact_limit`` points) for the exact search.
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    if len(cloud_y) != len(cloud_z):
        return False
    adj_y = _adjacency_sets(cloud_y, delta)
    adj_z = _adjacency_sets(cloud_z, delta)
    if sorted(map(len, adj_y)) != sorted(map(len, adj_z)):
        return False
    if len(cloud_y) > exact_limit:
        return None
    return _isomorphic(adj_y, adj_z)


def fps_subsample(cloud: PointCloud, k: int, seed: int = 0, start: int | None = None) -> list[int]:
    """Farthest-point (maxmin) sample of ``k`` indices, returned sorted.

    The first index is drawn from ``seed`` unless ``start`` is given; ties in
    the maxmin step go to the lowest index.
    """
    n = len(cloud)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    if start is None:
        start = int(np.random.default_rng(seed).integers(n))
    chosen = [start]
    everyone = np.arange(n)
    mindist = cloud.distances_from(start, everyone).astype(float)
    mindist[start] = -np.inf
    for _ in range(k - 1):
        nxt = int(np.argmax(mindist))  # argmax returns the first maximum
        chosen.append(nxt)
        mindist = np.minimum(mindist, cloud.distances_from(nxt, everyone))
        mindist[chosen] = -np.inf
    return sorted(chosen)
