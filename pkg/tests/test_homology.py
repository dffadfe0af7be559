import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltacore import _kernels
from deltacore.complexes import Filtration, vr_filtration
from deltacore.homology import (
    PersistenceDiagram,
    betti_numbers,
    persistence_pairs,
    persistent_homology,
    vr_persistence,
)
from deltacore.metric_space import PointCloud

from conftest import small_clouds
from oracles import betti_brute, brute_diagram, random_filtration


def as_lists(dgm, degrees):
    return {q: sorted(map(tuple, dgm[q].tolist())) for q in degrees}


def test_single_point():
    dgm = vr_persistence(PointCloud([[0.0]]), 0, 1.0)
    assert as_lists(dgm, [0]) == {0: [(0.0, math.inf)]}


def test_square_boundary(unit_square):
    dgm = persistent_homology(vr_filtration(unit_square, 2, 1.0), 1)
    assert as_lists(dgm, [0, 1]) == {
        0: [(0.0, 1.0)] * 3 + [(0.0, math.inf)],
        1: [(1.0, math.inf)],
    }


def test_square_boundary_matches_oracle(unit_square):
    filt = vr_filtration(unit_square, 2, 1.0)
    simplices = [s.vertices for s in filt]
    values = [s.value for s in filt]
    expected = brute_diagram(simplices, values, 1)
    assert as_lists(persistent_homology(filt, 1), [0, 1]) == expected


def test_filled_square_kills_cycle(unit_square):
    dgm = persistent_homology(vr_filtration(unit_square, 2, 1.5), 1)
    assert as_lists(dgm, [1]) == {1: [(1.0, math.sqrt(2))]}


def test_triangle_zero_length_cycle_dropped():
    filt = Filtration.from_simplices(
        [([0], 0), ([1], 0), ([2], 0), ([0, 1], 1), ([0, 2], 1), ([1, 2], 1), ([0, 1, 2], 1)]
    )
    dgm = persistent_homology(filt, 1)
    assert as_lists(dgm, [0, 1]) == {0: [(0.0, 1.0), (0.0, 1.0), (0.0, math.inf)], 1: []}
    expected = brute_diagram([s.vertices for s in filt], [s.value for s in filt], 1)
    assert expected == as_lists(dgm, [0, 1])


def test_top_degree_refused(unit_square):
    with pytest.raises(ValueError):
        persistent_homology(vr_filtration(unit_square, 1, 1.0), 1)


def test_invalid_ordering_refused():
    filt = Filtration(np.array([[0, 1], [0, -1], [1, -1]]), [1, 0, 0], [1.0, 0.0, 0.0], 1)
    with pytest.raises(ValueError):
        persistent_homology(filt, 0)


def test_betti_examples(unit_square):
    assert betti_numbers(PointCloud([[0.0], [2.0]]), 1.0, 1) == [2, 0]
    assert betti_numbers(unit_square, 1.0, 1) == [1, 1]
    assert betti_numbers(PointCloud([[0.0, 0.0]]), 1.0, 1) == [1, 0]


def test_random_filtrations_match_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(150):
        items = random_filtration(rng)
        top = max(len(vs) for vs, _ in items) - 1
        filt = Filtration.from_simplices(items, max_dim=top + 1)
        simplices = [s.vertices for s in filt]
        values = [s.value for s in filt]
        assert as_lists(persistent_homology(filt, top), range(top + 1)) == brute_diagram(
            simplices, values, top
        )


@settings(max_examples=80, deadline=None)
@given(cloud=small_clouds(max_n=8), threshold=st.sampled_from([0.6, 1.1, 1.6, 2.5]))
def test_vr_diagrams_match_oracle(cloud, threshold):
    filt = vr_filtration(cloud, 3, threshold)
    expected = brute_diagram([s.vertices for s in filt], [s.value for s in filt], 2)
    assert as_lists(persistent_homology(filt, 2), range(3)) == expected


@settings(max_examples=80, deadline=None)
@given(cloud=small_clouds(max_n=12), threshold=st.sampled_from([0.6, 1.1, 2.0]))
def test_pairing_partitions_simplices(cloud, threshold):
    filt = vr_filtration(cloud, 3, threshold)
    pairs, essential = persistence_pairs(filt)
    seen = np.concatenate([pairs.ravel(), essential])
    assert sorted(seen.tolist()) == list(range(len(filt)))
    # births are one dimension below their deaths and come first
    assert np.all(filt.dims[pairs[:, 1]] == filt.dims[pairs[:, 0]] + 1)
    assert np.all(pairs[:, 0] < pairs[:, 1])


@settings(max_examples=60, deadline=None)
@given(cloud=small_clouds(max_n=7))
def test_euler_characteristic(cloud):
    # the full complex on <= 7 points fits in its 6-skeleton, so Betti numbers
    # in every degree are available
    n = len(cloud)
    scale = max(cloud.diameter(), 0.5) / 2
    filt = vr_filtration(cloud, n, scale)
    dgm = persistent_homology(filt, n - 1)
    chi_homology = sum((-1) ** q * dgm.betti(q) for q in range(n))
    chi_cells = int(sum((-1) ** d for d in filt.dims))
    assert chi_homology == chi_cells
    simplices = [s.vertices for s in filt]
    assert [dgm.betti(q) for q in range(n)] == betti_brute(simplices, n - 1)


def test_kernel_left_to_right_discipline():
    # run the pure-Python body so the structural assertion executes as written
    rng = np.random.default_rng(5)
    for _ in range(20):
        items = random_filtration(rng)
        filt = Filtration.from_simplices(items)
        ptr, idx = filt.boundary()
        piv_py = _kernels.reduce_boundary.py_func(ptr, idx)
        piv = _kernels.reduce_boundary(ptr, idx)
        assert np.array_equal(piv, piv_py)
        assert np.all((piv < 0) | (piv > np.arange(len(piv))))


def test_diagram_csv_roundtrip():
    dgm = PersistenceDiagram({0: [(0.0, math.inf), (0.0, 0.1)], 1: [(0.3, 1 / 3)]})
    text = dgm.to_csv()
    assert text.splitlines()[0] == "degree,birth,death"
    assert "0,0.0,inf" in text.splitlines()
    assert PersistenceDiagram.from_csv(text) == dgm


def test_diagram_drops_zero_length_and_rejects_inverted():
    assert len(PersistenceDiagram({1: [(1.0, 1.0)]})[1]) == 0
    with pytest.raises(ValueError):
        PersistenceDiagram({0: [(2.0, 1.0)]})


def test_infinite_count_is_final_betti():
    rng = np.random.default_rng(9)
    for _ in range(10):
        cloud = PointCloud(rng.uniform(size=(25, 2)))
        dgm = vr_persistence(cloud, 1, 0.3)
        filt = vr_filtration(cloud, 2, 0.3)
        assert [dgm.betti(q) for q in (0, 1)] == betti_brute([s.vertices for s in filt], 1)
