"""Bottleneck and 1-Wasserstein distances between persistence diagrams.

Both use the sup-norm ground cost, with the diagonal available at cost
``(death - birth) / 2``. Essential (infinite) intervals are matched among
themselves in order of birth; diagrams with different numbers of them are
infinitely far apart.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching


def _split(dgm) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(dgm, dtype=float).reshape(-1, 2)
    inf = np.isinf(arr[:, 1])
    return arr[~inf], np.sort(arr[inf, 0])


def _essential_costs(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    if len(a) != len(b):
        return None
    return np.abs(a - b)


def _cross_costs(d: np.ndarray, e: np.ndarray) -> np.ndarray:
    return np.maximum(
        np.abs(d[:, None, 0] - e[None, :, 0]),
        np.abs(d[:, None, 1] - e[None, :, 1]),
    )


def _diagonal_costs(d: np.ndarray) -> np.ndarray:
    return (d[:, 1] - d[:, 0]) / 2


def _perfect_matching_exists(cross, diag_d, diag_e, r) -> bool:
    m, n = cross.shape
    size = m + n
    adj = np.zeros((size, size), dtype=bool)
    adj[:m, :n] = cross <= r
    adj[np.arange(m), n + np.arange(m)] = diag_d <= r
    adj[m + np.arange(n), np.arange(n)] = diag_e <= r
    adj[m:, n:] = True
    matching = maximum_bipartite_matching(csr_matrix(adj), perm_type="column")
    return bool(np.all(matching >= 0))


def bottleneck_distance(dgm_a, dgm_b) -> float:
    """Bottleneck distance between two single-degree diagrams."""
    fin_a, ess_a = _split(dgm_a)
    fin_b, ess_b = _split(dgm_b)
    ess = _essential_costs(ess_a, ess_b)
    if ess is None:
        return math.inf
    ess_cost = float(ess.max()) if len(ess) else 0.0

    if len(fin_a) == 0 and len(fin_b) == 0:
        return ess_cost
    cross = _cross_costs(fin_a, fin_b)
    diag_a = _diagonal_costs(fin_a)
    diag_b = _diagonal_costs(fin_b)
    candidates = np.unique(np.concatenate([cross.ravel(), diag_a, diag_b]))
    # the largest candidate is always feasible (everything to the diagonal)
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _perfect_matching_exists(cross, diag_a, diag_b, candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return max(ess_cost, float(candidates[lo]))


def wasserstein1_distance(dgm_a, dgm_b) -> float:
    """1-Wasserstein distance between two single-degree diagrams."""
    fin_a, ess_a = _split(dgm_a)
    fin_b, ess_b = _split(dgm_b)
    ess = _essential_costs(ess_a, ess_b)
    if ess is None:
        return math.inf

    m, n = len(fin_a), len(fin_b)
    if m + n == 0:
        return math.fsum(ess)
    cost = np.full((m + n, n + m), np.inf)
    cost[:m, :n] = _cross_costs(fin_a, fin_b)
    cost[np.arange(m), n + np.arange(m)] = _diagonal_costs(fin_a)
    cost[m + np.arange(n), np.arange(n)] = _diagonal_costs(fin_b)
    cost[m:, n:] = 0.0
    rows, cols = linear_sum_assignment(cost)
    # exactly rounded sums make the result independent of argument order
    return math.fsum([*ess, *cost[rows, cols]])


def compare_diagrams(dgm_a, dgm_b, degrees=None) -> dict[int, tuple[float, float]]:
    """``{degree: (bottleneck, wasserstein1)}`` for two PersistenceDiagrams.

    A degree missing from one side is compared against the empty diagram.
    """
    if degrees is None:
        degrees = sorted(set(dgm_a.degrees) | set(dgm_b.degrees))
    return {
        q: (bottleneck_distance(dgm_a[q], dgm_b[q]), wasserstein1_distance(dgm_a[q], dgm_b[q]))
        for q in degrees
    }
