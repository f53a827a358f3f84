import numpy as np
import pytest

from src.services.experiment_services.services.degree_report_service import degree_report, normalized_histogram
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix


class TestNormalizedHistogram:
    def test_fractions(self):
        histogram = normalized_histogram(np.array([1, 2, 2, 4]), 4)
        assert histogram == [(0.25, 0.25), (0.5, 0.5), (1.0, 0.25)]

    def test_empty(self):
        assert normalized_histogram(np.array([], dtype=np.int64), 3) == []


class TestDegreeReport:
    def test_dense_matrix_has_full_degrees(self):
        rows = degree_report([SparseWeightMatrix.from_dense(0, np.ones((2, 3)))])
        assert rows == [
            {"cluster": 0, "kind": "pattern", "normalized_degree": 1.0, "fraction": 1.0},
            {"cluster": 0, "kind": "constraint", "normalized_degree": 1.0, "fraction": 1.0},
        ]

    def test_sparse_matrix(self):
        values = np.array([[1.0, 0.0, 0.0, -1.0], [0.0, 2.0, 0.0, 1.0]])
        rows = degree_report([SparseWeightMatrix.from_dense(3, values)])
        pattern = {row["normalized_degree"]: row["fraction"] for row in rows if row["kind"] == "pattern"}
        constraint = {row["normalized_degree"]: row["fraction"] for row in rows if row["kind"] == "constraint"}
        assert pattern == {0.0: pytest.approx(0.25), 0.5: pytest.approx(0.5), 1.0: pytest.approx(0.25)}
        assert constraint == {0.5: 1.0}
        assert {row["cluster"] for row in rows} == {3}

    def test_cluster_without_constraints(self):
        rows = degree_report([SparseWeightMatrix.empty(1, 4)])
        assert rows == [{"cluster": 1, "kind": "pattern", "normalized_degree": 0.0, "fraction": 1.0}]
