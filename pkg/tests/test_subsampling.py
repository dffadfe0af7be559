import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltacore.metric_space import PointCloud, neighborhoods, pair_distances
from deltacore.subsampling import (
    collapse_dominated,
    delta_core,
    delta_equivalent,
    fps_subsample,
    is_dominated,
)

from conftest import small_clouds


def all_core_sizes(cloud, delta):
    """Oracle: explore every sequence of single dominated-point removals."""
    nbrs = [frozenset(nb.tolist()) for nb in neighborhoods(cloud, delta).neighborhoods]
    sizes, seen = set(), set()

    def explore(active):
        if active in seen:
            return
        seen.add(active)
        moves = [
            x for x in active
            if any(y != x and (nbrs[x] & active) <= (nbrs[y] & active) for y in active)
        ]
        if not moves:
            sizes.add(len(active))
        for x in moves:
            explore(active - {x})

    explore(frozenset(range(len(cloud))))
    return sizes


def test_is_dominated_line(line4):
    g = neighborhoods(line4, 1.0)
    active = range(4)
    assert is_dominated(g, active, 0, 1)
    assert not is_dominated(g, active, 1, 0)


def test_is_dominated_duplicates():
    cloud = PointCloud([[0.0, 0.0], [0.0, 0.0]])
    g = neighborhoods(cloud, 0.1)
    assert is_dominated(g, [0, 1], 0, 1)
    assert is_dominated(g, [0, 1], 1, 0)


def test_is_dominated_respects_active(line4):
    g = neighborhoods(line4, 1.0)
    # with 0 gone, 1 has neighborhood {1, 2} which sits inside N(2)
    assert is_dominated(g, [1, 2, 3], 1, 2)


def test_is_dominated_errors(line4):
    g = neighborhoods(line4, 1.0)
    with pytest.raises(ValueError):
        is_dominated(g, range(4), 1, 1)
    with pytest.raises(ValueError):
        is_dominated(g, [1, 2], 0, 1)


def test_line_core_trace(line4):
    result = delta_core(line4, 1.0)
    assert result.surviving == (2,)
    # sweep 1: 0 falls to 1, 1 cannot use the marked 0 and is not inside N(2),
    # 3 falls to 2; sweep 2 removes 1; sweep 3 is empty
    assert result.removed == ((0, 1, 1), (3, 2, 1), (1, 2, 2))
    assert result.sweeps == 3
    assert all_core_sizes(line4, 1.0) == {1}


def test_core_at_diameter_is_a_point():
    rng = np.random.default_rng(0)
    cloud = PointCloud(rng.normal(size=(30, 3)))
    assert len(delta_core(cloud, cloud.diameter())) == 1


def test_core_below_min_distance_is_everything():
    rng = np.random.default_rng(1)
    cloud = PointCloud(rng.normal(size=(30, 2)))
    delta = pair_distances(cloud).min() / 2
    assert delta_core(cloud, delta).surviving == tuple(range(30))


def test_duplicate_pair_loses_exactly_one():
    cloud = PointCloud([[0.0, 0.0], [5.0, 5.0], [5.0, 5.0], [10.0, 0.0]])
    result = delta_core(cloud, 1.0)
    assert result.surviving == (0, 2, 3)
    assert result.removed == ((1, 2, 1),)


def test_core_errors():
    with pytest.raises(ValueError):
        delta_core(PointCloud(np.empty((0, 2))), 1.0)
    with pytest.raises(ValueError):
        delta_core(PointCloud([[0.0]]), 0.0)


@settings(max_examples=150, deadline=None)
@given(cloud=small_clouds(max_n=9), delta=st.sampled_from([0.5, 1.0, 1.2, 1.5, 2.0]))
def test_core_size_matches_every_removal_order(cloud, delta):
    assert {len(delta_core(cloud, delta))} == all_core_sizes(cloud, delta)


@settings(max_examples=150, deadline=None)
@given(cloud=small_clouds(max_n=25), delta=st.sampled_from([0.5, 1.0, 1.5, 2.5]))
def test_core_result_invariants(cloud, delta):
    result = delta_core(cloud, delta)
    n = len(cloud)
    removed = [r[0] for r in result.removed]
    assert sorted(removed + list(result.surviving)) == list(range(n))
    assert list(result.surviving) == sorted(result.surviving)

    graph = neighborhoods(cloud, delta)
    nbrs = [set(nb.tolist()) for nb in graph.neighborhoods]
    # replay the trace: each removal was a domination relative to the active set
    # at the start of its sweep, and the dominator was still active then
    active = set(range(n))
    for sweep in range(1, result.sweeps + 1):
        batch = [(x, y) for x, y, s in result.removed if s == sweep]
        for x, y in batch:
            assert y in active and y not in [b[0] for b in batch[: batch.index((x, y))]]
            assert (nbrs[x] & active) <= (nbrs[y] & active)
            assert is_dominated(graph, sorted(active), x, y)
            # locality: every active neighbor of x is a neighbor of y
            assert all(y in nbrs[z] for z in nbrs[x] & active)
        active -= {x for x, _ in batch}
    assert active == set(result.surviving)

    # minimality
    for x in result.surviving:
        assert not any(
            y != x and is_dominated(graph, result.surviving, x, y) for y in result.surviving
        )


def test_sequential_replay_of_sweeps():
    # marks applied in order must each be a valid single-point removal
    rng = np.random.default_rng(7)
    for _ in range(50):
        cloud = PointCloud(rng.uniform(size=(40, 2)))
        result = delta_core(cloud, 0.2)
        graph = neighborhoods(cloud, 0.2)
        nbrs = [set(nb.tolist()) for nb in graph.neighborhoods]
        active = set(range(40))
        for x, y, _ in result.removed:
            assert y in active
            assert (nbrs[x] & active) <= (nbrs[y] & active)
            assert is_dominated(graph, sorted(active), x, y)
            active.discard(x)


def test_collapse_complete_graph():
    adjacency = [list(range(6))] * 6
    assert len(collapse_dominated(adjacency)) == 1


def test_delta_equivalent_identity_and_motion():
    rng = np.random.default_rng(4)
    pts = rng.uniform(size=(10, 3))
    y = PointCloud(pts)
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    perm = rng.permutation(10)
    z = PointCloud(pts[perm] @ q.T + np.array([5.0, -2.0, 1.0]))
    assert delta_equivalent(y, y, 0.4) is True
    assert delta_equivalent(y, z, 0.4) is True


def test_delta_equivalent_size_mismatch():
    y = PointCloud([[0.0], [1.0]])
    z = PointCloud([[0.0]])
    assert delta_equivalent(y, z, 1.0) is False


def test_delta_equivalent_same_degrees_not_isomorphic():
    # a 6-cycle and two triangles: both 2-regular on 6 vertices
    hexagon = PointCloud([[np.cos(t), np.sin(t)] for t in np.arange(6) * np.pi / 3])
    triangles = PointCloud([[0, 0], [1, 0], [0.5, 0.8], [10, 0], [11, 0], [10.5, 0.8]])
    assert delta_equivalent(hexagon, triangles, 1.05) is False


def test_delta_equivalent_inconclusive_when_large():
    rng = np.random.default_rng(5)
    pts = rng.uniform(size=(20, 2))
    assert delta_equivalent(PointCloud(pts), PointCloud(pts[::-1]), 0.3) is None


def test_delta_equivalent_rejects_bad_delta():
    with pytest.raises(ValueError):
        delta_equivalent(PointCloud([[0.0]]), PointCloud([[0.0]]), 0)


@settings(max_examples=200, deadline=None)
@given(a=small_clouds(min_n=1, max_n=7, max_dim=2), b=small_clouds(min_n=1, max_n=7, max_dim=2))
def test_delta_equivalent_agrees_with_networkx(a, b):
    def graph(c):
        g = nx.Graph()
        g.add_nodes_from(range(len(c)))
        nb = neighborhoods(c, 1.0).neighborhoods
        g.add_edges_from((i, int(j)) for i in range(len(c)) for j in nb[i] if j > i)
        return g

    if len(a) != len(b):
        assert delta_equivalent(a, b, 1.0) is False
    else:
        assert delta_equivalent(a, b, 1.0) == nx.is_isomorphic(graph(a), graph(b))


def test_fps_full_and_single():
    rng = np.random.default_rng(2)
    cloud = PointCloud(rng.normal(size=(12, 2)))
    assert fps_subsample(cloud, 12, seed=3) == list(range(12))
    first = int(np.random.default_rng(3).integers(12))
    assert fps_subsample(cloud, 1, seed=3) == [first]


def test_fps_line(line4):
    assert fps_subsample(line4, 2, start=0) == [0, 3]
    seed = next(s for s in itertools.count() if np.random.default_rng(s).integers(4) == 0)
    assert fps_subsample(line4, 2, seed=seed) == [0, 3]


def test_fps_tie_breaks_low():
    cloud = PointCloud([[0.0], [-1.0], [1.0]])
    # both 1 and 2 are at distance 1 from the start; the lower index wins
    assert fps_subsample(cloud, 2, start=0) == [0, 1]


def test_fps_range():
    cloud = PointCloud([[0.0], [1.0]])
    for k in (0, 3):
        with pytest.raises(ValueError):
            fps_subsample(cloud, k)


def test_fps_is_maxmin():
    rng = np.random.default_rng(8)
    cloud = PointCloud(rng.uniform(size=(60, 2)))
    d = cloud.distance_matrix()
    chosen = [int(np.random.default_rng(11).integers(60))]
    for _ in range(9):
        score = d[:, chosen].min(axis=1)
        score[chosen] = -1
        chosen.append(int(np.argmax(score)))
    assert fps_subsample(cloud, 10, seed=11) == sorted(chosen)
