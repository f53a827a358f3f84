import numpy as np
import pytest

from src.enums.enum import PcModeEnum
from src.services.analysis_services.services.bounds_service import network_pc
from src.services.analysis_services.services.density_evolution import de_threshold
from src.services.experiment_services.models.experiment_config import ExperimentConfig
from src.services.experiment_services.services.exceptions import MissingInputError
from src.services.experiment_services.services.sweep_service import sweep_per
from src.services.learning_services.models.learning_config import LearningConfig
from src.services.learning_services.services.learning_service import learn_network
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.degree_service import degree_distributions
from src.services.memory_model.services.layout_service import random_cluster_layout
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.synth_services.models.generator_spec import GeneratorSpec
from src.services.synth_services.services.generator_service import generate_dataset

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


@pytest.fixture
def layout():
    return ClusterLayout.from_clusters(7, [[0, 1, 2, 3], [3, 4, 5, 6]])


@pytest.fixture
def weights(layout):
    return [SparseWeightMatrix.from_dense(cluster_id, DIFFERENCES) for cluster_id in range(layout.size)]


@pytest.fixture
def dataset():
    return Dataset.from_rows([[level] * 7 for level in range(1, 5)], 6)


class TestSweepPer:
    def test_no_noise_never_fails(self, dataset, layout, weights):
        points = sweep_per(dataset, layout, weights, RecallConfig(), ExperimentConfig(p_e_values=(0.0,), trials=25))
        assert points[0].pattern_errors == 0
        assert points[0].per == 0.0

    def test_points_follow_input_order(self, dataset, layout, weights):
        config = ExperimentConfig(p_e_values=(0.3, 0.0, 0.1), trials=40, seed=2)
        points = sweep_per(dataset, layout, weights, RecallConfig(), config)
        assert [point.p_e for point in points] == [0.3, 0.0, 0.1]
        assert all(0.0 <= point.per <= 1.0 for point in points)
        assert all(point.symbol_errors >= point.pattern_errors for point in points)

    def test_heavy_noise_fails_more_than_light_noise(self, dataset, layout, weights):
        config = ExperimentConfig(p_e_values=(0.02, 0.6), trials=200, seed=1)
        light, heavy = sweep_per(dataset, layout, weights, RecallConfig(), config)
        assert heavy.per > light.per

    def test_is_reproducible_across_workers(self, dataset, layout, weights):
        single = ExperimentConfig(p_e_values=(0.2,), trials=60, seed=7)
        threaded = ExperimentConfig(p_e_values=(0.2,), trials=60, seed=7, workers=3)
        assert sweep_per(dataset, layout, weights, RecallConfig(), single) == sweep_per(
            dataset, layout, weights, RecallConfig(), threaded
        )

    def test_empty_dataset(self, layout, weights):
        empty = Dataset.from_rows(np.zeros((0, 7), dtype=np.int64), 6)
        with pytest.raises(MissingInputError):
            sweep_per(empty, layout, weights, RecallConfig(), ExperimentConfig(p_e_values=(0.1,)))

    def test_layout_mismatch(self, layout, weights):
        wider = Dataset.from_rows([[1] * 8], 6)
        with pytest.raises(MissingInputError, match="neurons"):
            sweep_per(wider, layout, weights, RecallConfig(), ExperimentConfig(p_e_values=(0.1,)))


@pytest.mark.slow
class TestWaterfall:
    """n = 100 neurons in 12 clusters, each neuron in 5 of them, constraints learned from a rank-10 dataset."""

    def test_error_rate_switches_around_the_predicted_threshold(self):
        _, report = generate_dataset(GeneratorSpec(k=10, n=100, gamma=2, upsilon=2, Q=11, seed=1))
        dataset = report.dataset
        layout = random_cluster_layout(100, 12, 5.0, 0.1, seed=1)
        learned = learn_network(dataset, layout, LearningConfig(seed=1, workers=4))
        weights = [result.weights for result in learned]

        recall_config = RecallConfig()
        distributions = degree_distributions(weights, layout)
        p_c = network_pc(PcModeEnum.EMPIRICAL, weights, recall_config, trials=200, seed=1)
        p_hat = de_threshold(distributions.edge_lambda, distributions.edge_rho, p_c)
        assert 0.0 < p_hat < 0.5  # noqa: PLR2004

        config = ExperimentConfig(p_e_values=(0.5 * p_hat, 2.0 * p_hat), trials=2000, seed=1, workers=4)
        below, above = sweep_per(dataset, layout, weights, recall_config, config)
        assert below.per < 0.01  # noqa: PLR2004
        assert above.per > 0.5  # noqa: PLR2004
