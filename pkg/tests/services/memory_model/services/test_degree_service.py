import numpy as np
import pytest

from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.degree_service import (
    degree_distributions,
    edge_degree_distributions,
    node_degree_distribution,
)
from src.services.memory_model.services.exceptions import MemoryModelError
from src.services.memory_model.services.layout_service import random_cluster_layout


class TestNodeDegreeDistribution:
    def test_counts_column_degrees(self):
        W = SparseWeightMatrix.from_dense(0, [[1.0, 1.0, 0.0], [0.0, 1.0, 1.0]])
        coefficients, mean = node_degree_distribution(W)
        np.testing.assert_allclose(coefficients, [0.0, 2 / 3, 1 / 3])
        assert mean == pytest.approx(4 / 3)

    def test_mixed_degrees(self):
        W = SparseWeightMatrix.from_dense(0, [[1.0, 1.0, 1.0], [0.0, 1.0, 1.0]])
        coefficients, mean = node_degree_distribution(W)
        np.testing.assert_allclose(coefficients, [0.0, 1 / 3, 2 / 3])
        assert mean == pytest.approx(5 / 3)

    def test_empty_matrix(self):
        coefficients, mean = node_degree_distribution(SparseWeightMatrix.empty(0, 4))
        np.testing.assert_array_equal(coefficients, [1.0])
        assert mean == 0.0

    def test_dense_matrix(self):
        coefficients, _ = node_degree_distribution(SparseWeightMatrix.from_dense(0, np.ones((3, 4))))
        np.testing.assert_array_equal(coefficients, [0.0, 0.0, 0.0, 1.0])


class TestEdgeDegreeDistributions:
    def test_regular_layout(self):
        # six clusters of six neurons on n=12; every neuron sits in three of them
        clusters = [[(start + offset) % 12 for offset in range(6)] for start in range(0, 12, 2)]
        layout = ClusterLayout.from_clusters(12, clusters)
        assert set(layout.membership_counts().tolist()) == {3}
        edge_lambda, edge_rho = edge_degree_distributions(layout)
        np.testing.assert_allclose(edge_lambda, [0.0, 0.0, 1.0])
        np.testing.assert_allclose(edge_rho, [0.0, 0.0, 0.0, 0.0, 0.0, 1.0])

    def test_single_cluster(self):
        edge_lambda, edge_rho = edge_degree_distributions(ClusterLayout.from_clusters(4, [[0, 1, 2, 3]]))
        np.testing.assert_allclose(edge_lambda, [1.0])
        np.testing.assert_allclose(edge_rho, [0.0, 0.0, 0.0, 1.0])

    def test_disjoint_clusters(self):
        _, edge_rho = edge_degree_distributions(ClusterLayout.from_clusters(6, [[0, 1], [2, 3, 4, 5]]))
        np.testing.assert_allclose(edge_rho, [0.0, 2 / 6, 0.0, 4 / 6])


class TestDegreeDistributions:
    def test_generated_layout_sums_to_one(self):
        layout = random_cluster_layout(60, 6, 2.5, 0.2, seed=5)
        rng = np.random.default_rng(0)
        weights = [
            SparseWeightMatrix.from_dense(cluster_id, rng.normal(size=(3, n)) * (rng.random((3, n)) < 0.5))
            for cluster_id, n in enumerate(layout.cluster_sizes())
        ]
        distributions = degree_distributions(weights, layout)
        for coefficients in (*distributions.node_lambda, distributions.edge_lambda, distributions.edge_rho):
            assert coefficients.sum() == pytest.approx(1.0, abs=1e-9)
        assert len(distributions.mean_degree) == layout.size

    def test_weight_count_must_match_layout(self):
        layout = ClusterLayout.from_clusters(2, [[0], [1]])
        with pytest.raises(MemoryModelError):
            degree_distributions([SparseWeightMatrix.empty(0, 1)], layout)
