from itertools import pairwise

import numpy as np
import pytest

from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.services.exceptions import DimensionMismatchError, MissingWeightsError
from src.services.recall_services.services.peeling_service import (
    build_contracted,
    calibrate_sat_tol,
    calibrated_sat_tol,
    peel,
    unsatisfied_clusters,
)

DIFFERENCES = np.array(
    [
        [1.0, -1.0, 0.0, 0.0],
        [0.0, 1.0, -1.0, 0.0],
        [0.0, 0.0, 1.0, -1.0],
        [1.0, 0.0, 0.0, -1.0],
        [1.0, 0.0, -1.0, 0.0],
        [0.0, 1.0, 0.0, -1.0],
    ]
)


def difference_weights(layout: ClusterLayout) -> list[SparseWeightMatrix]:
    return [SparseWeightMatrix.from_dense(cluster_id, DIFFERENCES) for cluster_id in range(layout.size)]


@pytest.fixture
def chain():
    """Three four-neuron clusters sharing neurons 3 and 6."""
    return ClusterLayout.from_clusters(10, [[0, 1, 2, 3], [3, 4, 5, 6], [6, 7, 8, 9]])


@pytest.fixture
def disjoint():
    return ClusterLayout.from_clusters(8, [[0, 1, 2, 3], [4, 5, 6, 7]])


class TestPeel:
    def test_clean_pattern(self, chain):
        result = peel(difference_weights(chain), chain, np.ones(10, dtype=np.int64), RecallConfig(), Q=3)
        assert result.success
        assert result.rounds == 0
        assert result.events == ()

    def test_overlap_unlocks_a_stalled_cluster(self, chain):
        noisy = np.ones(10, dtype=np.int64)
        noisy[[1, 3]] = 2
        result = peel(difference_weights(chain), chain, noisy, RecallConfig(), Q=3)
        assert result.success
        assert result.rounds == 2  # noqa: PLR2004
        np.testing.assert_array_equal(result.pattern, np.ones(10))
        first = result.events[0]
        assert (first.cluster, first.attempted, first.succeeded) == (0, True, False)
        second = result.events[1]
        assert (second.cluster, second.succeeded, second.changed_neurons) == (1, True, (3,))

    def test_failure_restores_the_cluster(self, disjoint):
        noisy = np.ones(8, dtype=np.int64)
        noisy[[0, 1]] = 2
        result = peel(difference_weights(disjoint), disjoint, noisy, RecallConfig(), Q=3)
        assert not result.success
        assert result.rounds == 1
        np.testing.assert_array_equal(result.pattern, noisy)

    def test_one_error_per_cluster(self, disjoint):
        noisy = np.ones(8, dtype=np.int64)
        noisy[2] = 0
        noisy[5] = 2
        result = peel(difference_weights(disjoint), build_contracted(disjoint), noisy, RecallConfig(), Q=3)
        assert result.success
        assert result.rounds == 1
        np.testing.assert_array_equal(result.pattern, np.ones(8))

    def test_changes_only_inside_successful_attempts(self, chain):
        rng = np.random.default_rng(7)
        weights = difference_weights(chain)
        for _ in range(200):
            noisy = np.ones(10, dtype=np.int64) + rng.choice([-1, 0, 1], size=10, p=[0.1, 0.8, 0.1])
            result = peel(weights, chain, noisy, RecallConfig(), Q=3)
            committed = {i for event in result.events if event.succeeded for i in event.changed_neurons}
            assert all(not event.changed_neurons for event in result.events if not event.succeeded)
            assert set(np.flatnonzero(result.pattern != noisy)) <= committed
            again = peel(weights, chain, noisy, RecallConfig(), Q=3)
            np.testing.assert_array_equal(again.pattern, result.pattern)
            assert again.events == result.events

    def test_correction_that_unsatisfies_neighbors_is_reverted(self):
        # fixing neuron 1 satisfies the first cluster but breaks the two clusters pinned to it
        layout = ClusterLayout.from_clusters(4, [[0, 1], [1, 2], [1, 3]])
        weights = [
            SparseWeightMatrix.from_dense(0, np.array([[1.0, 0.0], [1.0, 1.0]])),
            SparseWeightMatrix.from_dense(1, np.array([[1.0, -1.0]])),
            SparseWeightMatrix.from_dense(2, np.array([[1.0, -1.0]])),
        ]
        noisy = np.array([0, 1, 1, 1])
        result = peel(weights, layout, noisy, RecallConfig(), Q=2)
        assert not result.success
        np.testing.assert_array_equal(result.pattern, noisy)
        first = result.events[0]
        assert (first.cluster, first.attempted, first.succeeded, first.changed_neurons) == (0, True, False, ())

    def test_unsatisfied_count_never_rises_between_rounds(self):
        rng = np.random.default_rng(11)
        ring = [[0, 1, 2, 3, 4], [3, 4, 5, 6, 7], [6, 7, 8, 9, 10], [9, 10, 11, 0, 1]]
        layout = ClusterLayout.from_clusters(12, ring)
        graph = build_contracted(layout)
        for _ in range(50):
            weights = [
                SparseWeightMatrix.from_dense(c, rng.integers(-1, 2, size=(3, 5)).astype(float) + np.eye(3, 5))
                for c in range(layout.size)
            ]
            noisy = rng.integers(0, 3, size=12)
            counts = [len(unsatisfied_clusters(weights, graph, noisy, RecallConfig()))]
            for rounds in range(1, 6):
                config = RecallConfig(peel_rounds_max=rounds)
                state = peel(weights, layout, noisy, config, Q=3).pattern
                counts.append(len(unsatisfied_clusters(weights, graph, state, config)))
            assert all(later <= earlier for earlier, later in pairwise(counts))

    def test_missing_weights(self, chain):
        with pytest.raises(MissingWeightsError):
            peel(difference_weights(chain)[:2], chain, np.ones(10, dtype=np.int64), RecallConfig())

    def test_wrong_pattern_length(self, chain):
        with pytest.raises(DimensionMismatchError):
            peel(difference_weights(chain), chain, np.ones(9, dtype=np.int64), RecallConfig())


class TestUnsatisfiedClusters:
    def test_reports_clusters_touching_errors(self, chain):
        noisy = np.ones(10, dtype=np.int64)
        noisy[6] = 0
        graph = build_contracted(chain)
        assert unsatisfied_clusters(difference_weights(chain), graph, noisy, RecallConfig()) == [1, 2]


class TestCalibrateSatTol:
    @pytest.fixture
    def layout(self):
        return ClusterLayout.from_clusters(2, [[0, 1]])

    def test_percentiles(self, layout):
        weights = [SparseWeightMatrix.from_dense(0, np.array([[1.0, -1.0]]))]
        dataset = Dataset.from_rows([[1, 1], [2, 1]], 3)
        assert calibrate_sat_tol(weights, dataset, layout, 100.0) == pytest.approx(1.0)
        assert calibrate_sat_tol(weights, dataset, layout, 50.0) == pytest.approx(0.5)

    def test_without_constraints(self, layout):
        dataset = Dataset.from_rows([[1, 1]], 3)
        assert calibrate_sat_tol([SparseWeightMatrix.empty(0, 2)], dataset, layout) == 0.0

    def test_rounding_level_syndromes_keep_the_relative_default(self, layout):
        weights = [SparseWeightMatrix.from_dense(0, np.array([[1.0, -1.0 + 1e-12]]))]
        dataset = Dataset.from_rows([[1, 1], [2, 2]], 3)
        assert 0.0 < calibrate_sat_tol(weights, dataset, layout, 100.0) < 1e-9  # noqa: PLR2004
        assert calibrated_sat_tol(weights, dataset, layout, 100.0) is None

    def test_approximate_constraints_keep_the_calibrated_value(self, layout):
        weights = [SparseWeightMatrix.from_dense(0, np.array([[1.0, -1.0]]))]
        dataset = Dataset.from_rows([[1, 1], [2, 1]], 3)
        assert calibrated_sat_tol(weights, dataset, layout, 100.0) == pytest.approx(1.0)
