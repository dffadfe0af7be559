import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from deltacore.complexes import ReductionRow
from deltacore.io import (
    format_comparison,
    format_points,
    format_reduction_table,
    parse_comparison,
    parse_points,
    parse_reduction_table,
)
from deltacore.metric_space import Metric, PointCloud

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=100)
@given(data=arrays(np.float64, st.tuples(st.integers(1, 6), st.integers(1, 4)), elements=finite))
def test_points_roundtrip_bit_exact(data):
    back = parse_points(format_points(PointCloud(data)))
    assert np.array_equal(back.data, data)


def test_comma_and_comment_input():
    cloud = parse_points("# header\n0, 1\n\n2.5,3\n")
    assert cloud.data.tolist() == [[0.0, 1.0], [2.5, 3.0]]


def test_distance_matrix_input():
    text = "matrix 3\n0 1 2\n1 0 1.5\n2 1.5 0\n"
    cloud = parse_points(text)
    assert cloud.metric is Metric.PRECOMPUTED
    assert cloud.distances_from(1, [2]).tolist() == [1.5]
    assert parse_points(format_points(cloud)).data.tolist() == cloud.data.tolist()


@pytest.mark.parametrize("text", ["0 1\n2\n", "matrix 2\n0 1\n", "0 x\n", "matrix 2\n0 1\n2 0\n"])
def test_bad_point_files(text):
    with pytest.raises(ValueError):
        parse_points(text)


def test_reduction_table_roundtrip():
    rows = [ReductionRow(0.0, 10, 10), ReductionRow(0.1, 30, 12), ReductionRow(1 / 3, 90, 1)]
    text = format_reduction_table(rows)
    lines = text.splitlines()
    assert lines[0] == "index,scale,vr_simplices,core_simplices,reduction_pct"
    assert lines[1] == "1,0.0,10,10,0.0"
    assert lines[-1] == "total,,130,23,82.3"
    back, total = parse_reduction_table(text)
    assert back == rows
    assert (total.simplices_before, total.simplices_after) == (130, 23)


def test_comparison_roundtrip():
    records = [
        {"method": "original", "n": 5, "distances": {0: (0.0, 0.0), 1: (0.0, 0.0)}},
        {"method": "fps", "n": 2, "distances": {0: (math.inf, math.inf), 1: (0.1, 1 / 7)}},
    ]
    text = format_comparison(records, [0, 1])
    assert text.splitlines()[0] == "method,n,H0_bottleneck,H0_wasserstein1,H1_bottleneck,H1_wasserstein1"
    assert parse_comparison(text) == records
