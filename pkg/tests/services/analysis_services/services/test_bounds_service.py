import math

import numpy as np
import pytest

from src.enums.enum import PcModeEnum
from src.services.analysis_services.services.bounds_service import (
    cluster_pc_bound,
    network_pc,
    pc_ensemble_monte_carlo,
    pc_lower_bound,
    pc_min_degree_bound,
    pc_monte_carlo,
    sample_cluster_weights,
    zero_degree_floor,
)
from src.services.analysis_services.services.exceptions import BoundDomainError, InvalidTrialsError
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.recall_services.models.recall_config import RecallConfig

DIFFERENCES = SparseWeightMatrix.from_dense(
    0,
    np.array(
        [
            [1.0, -1.0, 0.0, 0.0],
            [0.0, 1.0, -1.0, 0.0],
            [0.0, 0.0, 1.0, -1.0],
            [1.0, 0.0, 0.0, -1.0],
            [1.0, 0.0, -1.0, 0.0],
            [0.0, 1.0, 0.0, -1.0],
        ]
    ),
)


class TestClosedFormBounds:
    def test_cubic_degree_polynomial(self):
        assert pc_lower_bound([0, 0, 0, 1], 3, 10, 5) == pytest.approx(0.973**4, abs=1e-9)
        assert pc_lower_bound([0, 0, 0, 1], 3, 10, 5) == pytest.approx(0.89630, abs=1e-5)

    def test_all_degree_zero(self):
        assert pc_lower_bound([1.0], 0, 10, 5) == 0.0

    def test_single_neuron(self):
        assert pc_lower_bound([0, 1], 1, 3, 1) == 1.0

    def test_mean_degree_above_m(self):
        with pytest.raises(BoundDomainError):
            pc_lower_bound([0, 1], 5, 3, 4)

    def test_min_degree_form(self):
        assert pc_min_degree_bound(3, 10, 5, 3) == pytest.approx(pc_lower_bound([0, 0, 0, 1], 3, 10, 5))
        with pytest.raises(BoundDomainError):
            pc_min_degree_bound(3, 10, 5, -1)

    def test_zero_degree_floor(self):
        assert zero_degree_floor(0.1, 10) == pytest.approx(math.exp(-1.0))
        with pytest.raises(BoundDomainError):
            zero_degree_floor(1.5, 10)

    def test_cluster_bound(self):
        assert cluster_pc_bound(DIFFERENCES) == pytest.approx(0.875**3)


class TestPcMonteCarlo:
    def test_distinct_supports_always_correct(self):
        estimate = pc_monte_carlo(DIFFERENCES, RecallConfig(phi=0.99), trials=300, seed=0)
        assert estimate.rate == 1.0
        assert estimate.successes == 300  # noqa: PLR2004

    def test_duplicate_columns_fail(self):
        W = SparseWeightMatrix.from_dense(0, np.array([[1.0, 1.0], [1.0, 1.0]]))
        estimate = pc_monte_carlo(W, RecallConfig(phi=0.99), trials=50, seed=0)
        assert estimate.rate < 1.0

    def test_rejects_zero_trials(self):
        with pytest.raises(InvalidTrialsError):
            pc_monte_carlo(DIFFERENCES, RecallConfig(), trials=0, seed=0)

    def test_is_reproducible(self):
        W = sample_cluster_weights([0, 0.5, 0.5], 4, 6, np.random.default_rng(2))
        first = pc_monte_carlo(W, RecallConfig(), trials=100, seed=5)
        second = pc_monte_carlo(W, RecallConfig(), trials=100, seed=5)
        assert first == second

    def test_ensemble_respects_lower_bound(self):
        node_lambda = [0.0, 0.0, 0.0, 1.0]
        estimate = pc_ensemble_monte_carlo(node_lambda, 10, 5, RecallConfig(phi=0.99), trials=10_000, seed=1)
        bound = pc_lower_bound(node_lambda, 3.0, 10, 5)
        assert bound == pytest.approx(0.8963, abs=1e-4)
        assert estimate.rate >= bound - 3 * estimate.standard_error

    def test_clamping_to_the_alphabet(self):
        W = SparseWeightMatrix.from_dense(0, np.array([[1.0, 1.0], [1.0, 1.0]]))
        assert pc_monte_carlo(W, RecallConfig(phi=0.99), trials=50, seed=0).rate == 0.0
        assert pc_monte_carlo(W, RecallConfig(phi=0.99), trials=50, seed=0, Q=2).rate == 1.0


class TestSampleClusterWeights:
    def test_degrees_follow_distribution(self):
        W = sample_cluster_weights([0.0, 0.0, 1.0], 5, 40, np.random.default_rng(0), cluster_id=3)
        assert W.cluster_id == 3  # noqa: PLR2004
        assert (W.column_degrees() == 2).all()  # noqa: PLR2004
        assert np.abs(W.dense[W.dense != 0]).min() >= 0.5  # noqa: PLR2004

    def test_degree_above_m(self):
        with pytest.raises(BoundDomainError):
            sample_cluster_weights([0.0, 0.0, 0.0, 1.0], 2, 4, np.random.default_rng(0))


class TestNetworkPc:
    def test_one(self):
        assert network_pc(PcModeEnum.ONE, [], RecallConfig(), 10, 0) == 1.0

    def test_bound_is_mean_over_clusters(self):
        pc = network_pc(PcModeEnum.BOUND, [DIFFERENCES, DIFFERENCES], RecallConfig(), 10, 0)
        assert pc == pytest.approx(0.875**3)

    def test_empirical(self):
        pc = network_pc(PcModeEnum.EMPIRICAL, [DIFFERENCES], RecallConfig(phi=0.99), 100, 0)
        assert pc == 1.0

    def test_needs_weights(self):
        with pytest.raises(BoundDomainError):
            network_pc(PcModeEnum.BOUND, [], RecallConfig(), 10, 0)
