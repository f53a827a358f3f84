import argparse

import pytest

from src.config.settings import ExperimentSettings
from src.constants.app_constants import FileConst
from src.services.memory_model.services.file_formats import read_dataset
from src.services.synth_services.controller.synth_controller import synth_controller
from src.utils.file_helper import read_key_values


class TestSynthController:
    @pytest.fixture
    def settings(self, tmp_path):
        return ExperimentSettings(seed=1, output_dir=tmp_path / "run")

    @staticmethod
    def _args(**overrides):
        values = {"k": 12, "n": 24, "gamma": 2, "upsilon": 2, "alphabet_size": 13, "limit": None, "allow_reject": False}
        values.update(overrides)
        return argparse.Namespace(**values)

    def test_full_enumeration(self, settings):
        result = synth_controller.gen_data(self._args(), settings)
        assert result.exit_code == 0
        assert read_dataset(settings.output_dir / FileConst.DATASET).count == 4096  # noqa: PLR2004
        meta = read_key_values(settings.output_dir / FileConst.DATASET_META)
        assert meta["rank"] == "12"
        assert meta["rejected"] == "0"
        assert meta["k"] == "12"

    def test_limit(self, settings):
        result = synth_controller.gen_data(self._args(limit=10), settings)
        assert result.data["patterns"] == 10  # noqa: PLR2004

    def test_bad_spec_writes_nothing(self, settings):
        result = synth_controller.gen_data(self._args(gamma=3, upsilon=3, alphabet_size=3), settings)
        assert result.exit_code == 1
        assert not settings.output_dir.exists()

    def test_invalid_dimensions(self, settings):
        result = synth_controller.gen_data(self._args(k=30), settings)
        assert result.exit_code == 1
        assert "exceeds pattern length" in result.error
