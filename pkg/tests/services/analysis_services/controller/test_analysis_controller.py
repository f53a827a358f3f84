import argparse

import numpy as np
import pandas as pd
import pytest

from src.config.settings import ExperimentSettings
from src.constants.app_constants import AnalysisConst, CsvConst, FileConst, RecallConst
from src.enums.enum import PcModeEnum
from src.services.analysis_services.controller.analysis_controller import (
    analysis_controller,
    coefficient_list,
    p_e_grid,
    register,
)
from src.services.analysis_services.services.bounds_service import network_pc
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.file_formats import write_dataset, write_layout, write_weights
from src.services.recall_services.models.recall_config import RecallConfig


def de_args(**overrides) -> argparse.Namespace:
    values = {
        "edge_lambda": (0.0, 0.0, 1.0),
        "edge_rho": (0.0, 0.0, 0.0, 0.0, 0.0, 1.0),
        "layout": None,
        "pc": 1.0,
        "pc_mode": PcModeEnum.ONE.value,
        "weights": None,
        "pc_trials": 50,
        "alphabet_size": None,
        "phi": RecallConst.PHI,
        "psi": RecallConst.PSI,
        "tol": AnalysisConst.THRESHOLD_TOL,
        "p_e_grid": np.array([0.2, 0.6]),
    }
    values.update(overrides)
    return argparse.Namespace(**values)


class TestArgumentTypes:
    def test_coefficient_list(self):
        assert coefficient_list("0, 0,1") == (0.0, 0.0, 1.0)
        with pytest.raises(argparse.ArgumentTypeError):
            coefficient_list("0,x")

    def test_p_e_grid(self):
        np.testing.assert_allclose(p_e_grid("0.1,0.5,5"), [0.1, 0.2, 0.3, 0.4, 0.5])
        with pytest.raises(argparse.ArgumentTypeError):
            p_e_grid("0.1,0.5")
        with pytest.raises(argparse.ArgumentTypeError):
            p_e_grid("0.1,0.5,many")


class TestAnalysisController:
    @pytest.fixture
    def settings(self, tmp_path):
        return ExperimentSettings(seed=0, output_dir=tmp_path / "run")

    def test_threshold(self, settings, capsys):
        result = analysis_controller.threshold(de_args(), settings)
        assert result.exit_code == 0
        assert result.data["threshold"] == pytest.approx(0.4294, abs=5e-4)
        assert capsys.readouterr().out.strip().startswith("0.429")
        row = pd.read_csv(settings.output_dir / FileConst.DE_THRESHOLD)
        assert list(row.columns) == CsvConst.DE_THRESHOLD

    def test_threshold_from_layout(self, settings, tmp_path):
        layout = ClusterLayout.from_clusters(4, [[0, 1], [2, 3], [0, 2], [1, 3]])
        path = write_layout(tmp_path / "layout.txt", layout)
        result = analysis_controller.threshold(de_args(edge_lambda=None, edge_rho=None, layout=str(path)), settings)
        assert result.exit_code == 0
        assert result.data["threshold"] == 1.0

    def test_bound_mode_reads_weights(self, settings, tmp_path):
        W = SparseWeightMatrix.from_dense(0, np.array([[1.0, -1.0, 0.0], [0.0, 1.0, -1.0], [1.0, 0.0, -1.0]]))
        path = write_weights(tmp_path / "weights.txt", [W])
        result = analysis_controller.threshold(
            de_args(pc=None, pc_mode=PcModeEnum.BOUND.value, weights=str(path)),
            settings,
        )
        assert result.exit_code == 0
        assert result.data["p_c"] == pytest.approx((1 - (2 / 3) ** 2) ** 2)

    @pytest.fixture
    def parser(self):
        parser = argparse.ArgumentParser()
        register(parser.add_subparsers(dest="command"))
        return parser

    def test_empirical_pc_is_the_default(self, parser, settings, tmp_path):
        W = SparseWeightMatrix.from_dense(0, np.array([[1.0, -1.0, 0.0], [0.0, 1.0, -1.0], [1.0, 0.0, -1.0]]))
        path = write_weights(tmp_path / "weights.txt", [W])
        flags = ["--edge-lambda", "0,0,1", "--edge-rho", "0,0,0,0,0,1", "--weights", str(path), "--pc-trials", "40"]
        args = parser.parse_args(["de-threshold", *flags])
        assert args.pc_mode == PcModeEnum.EMPIRICAL.value
        result = args.handler(args, settings)
        assert result.exit_code == 0
        assert result.data["p_c"] == pytest.approx(network_pc(PcModeEnum.EMPIRICAL, [W], RecallConfig(), 40, 0))

    def test_default_mode_needs_weights(self, parser, settings):
        args = parser.parse_args(["de-threshold", "--edge-lambda", "0,0,1", "--edge-rho", "0,0,0,0,0,1"])
        result = args.handler(args, settings)
        assert result.exit_code == 1
        assert "weights" in result.error

    def test_missing_distributions(self, settings):
        result = analysis_controller.threshold(de_args(edge_lambda=None), settings)
        assert result.exit_code == 1
        assert "edge distributions" in result.error

    def test_invalid_distribution(self, settings):
        result = analysis_controller.curve(de_args(edge_rho=(0.5, 0.2)), settings)
        assert result.exit_code == 1

    def test_curve(self, settings):
        result = analysis_controller.curve(de_args(), settings)
        assert result.exit_code == 0
        curve = pd.read_csv(settings.output_dir / FileConst.DE_CURVE)
        assert list(curve.columns) == CsvConst.DE_CURVE
        assert list(curve["success"]) == [1, 0]

    def test_eigen(self, settings, tmp_path):
        path = write_dataset(tmp_path / "dataset.txt", Dataset.from_rows([[1, 2], [2, 4]], 5))
        result = analysis_controller.eigen(argparse.Namespace(dataset=str(path), max_sweeps=60), settings)
        assert result.exit_code == 0
        assert result.data["zero_eigenvalues"] == 1
        spectrum = pd.read_csv(settings.output_dir / FileConst.EIGEN)
        assert spectrum["eigenvalue"].iloc[0] == pytest.approx(25.0)
