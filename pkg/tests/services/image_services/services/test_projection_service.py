import math

import numpy as np
import pytest

from src.services.image_services.services.exceptions import MalformedPatternError, ZeroReferenceError
from src.services.image_services.services.projection_service import project_to_learned, snr, synthetic_images
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.recall_services.models.recall_config import RecallConfig

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


class TestSnr:
    def test_value(self):
        assert snr([3, 4], [3, 3]) == pytest.approx(10 * math.log10(25), abs=1e-12)
        assert snr([3, 4], [3, 3]) == pytest.approx(13.979, abs=1e-3)

    def test_identical(self):
        assert snr([1, 2, 3], [1, 2, 3]) == math.inf

    def test_doubling_noise_power(self):
        reference = np.array([10.0, 10.0, 10.0, 10.0])
        single = snr(reference, reference + [1, 0, 0, 0])
        double = snr(reference, reference + [1, 1, 0, 0])
        assert single - double == pytest.approx(10 * math.log10(2))

    def test_zero_reference(self):
        with pytest.raises(ZeroReferenceError):
            snr([0, 0], [1, 0])

    def test_shape_mismatch(self):
        with pytest.raises(MalformedPatternError):
            snr([1, 2], [1, 2, 3])


class TestProjectToLearned:
    @pytest.fixture
    def layout(self):
        return ClusterLayout.from_clusters(8, [[0, 1, 2, 3], [4, 5, 6, 7]])

    @pytest.fixture
    def weights(self, layout):
        return [SparseWeightMatrix.from_dense(cluster_id, DIFFERENCES) for cluster_id in range(layout.size)]

    def test_learned_pattern_is_kept(self, layout, weights):
        x = np.array([1, 1, 1, 1, 0, 0, 0, 0])
        projection = project_to_learned(x, weights, layout, RecallConfig.image_mode())
        np.testing.assert_array_equal(projection.pattern, x)
        assert projection.satisfied
        assert projection.passes == 1

    def test_deviation_is_removed(self, layout, weights):
        x = np.array([1, 0, 1, 1, 0, 0, 1, 0])
        projection = project_to_learned(x, weights, layout, RecallConfig.image_mode())
        np.testing.assert_array_equal(projection.pattern, [1, 1, 1, 1, 0, 0, 0, 0])
        assert projection.satisfied

    def test_idempotent(self, layout, weights):
        x = np.array([1, 1, 0, 0, 1, 0, 0, 0])
        first = project_to_learned(x, weights, layout, RecallConfig.image_mode())
        second = project_to_learned(first.pattern, weights, layout, RecallConfig.image_mode())
        np.testing.assert_array_equal(second.pattern, first.pattern)
        assert second.residual_clusters == first.residual_clusters


class TestSyntheticImages:
    def test_shape_and_range(self):
        images = synthetic_images(3, 8, 6, seed=1)
        assert len(images) == 3  # noqa: PLR2004
        assert all((image.width, image.height) == (8, 6) for image in images)
        assert images[0].name == "synthetic_000"
        assert all(0 <= image.pixels.min() and image.pixels.max() <= 255 for image in images)  # noqa: PLR2004

    def test_is_deterministic(self):
        first = synthetic_images(2, 5, 5, seed=3)
        second = synthetic_images(2, 5, 5, seed=3)
        for a, b in zip(first, second, strict=True):
            np.testing.assert_array_equal(a.pixels, b.pixels)
