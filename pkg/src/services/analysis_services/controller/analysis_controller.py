"""Command-line surface for density evolution and the eigen-spectrum."""

import argparse
import logging

import numpy as np
from pydantic import ValidationError

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import AnalysisConst, CsvConst, FileConst, RecallConst
from src.enums.enum import PcModeEnum
from src.services.analysis_services.models.de_params import DEParams
from src.services.analysis_services.services.bounds_service import network_pc
from src.services.analysis_services.services.density_evolution import de_curve, de_limit, de_threshold
from src.services.analysis_services.services.spectrum_service import eigen_spectrum
from src.services.memory_model.services.degree_service import edge_degree_distributions
from src.services.memory_model.services.file_formats import read_dataset, read_layout, read_weights
from src.services.recall_services.models.recall_config import RecallConfig
from src.utils.command_helper import failed_result, require_file, start_run, success_result
from src.utils.file_helper import write_csv

_logger = logging.getLogger(__name__)


def coefficient_list(text: str) -> tuple[float, ...]:
    """Comma separated polynomial coefficients, lowest power first."""
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        msg = f"expected comma separated numbers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e


def p_e_grid(text: str) -> np.ndarray:
    """``start,stop,count`` for an evenly spaced grid."""
    parts = text.split(",")
    if len(parts) != 3:  # noqa: PLR2004
        msg = f"expected start,stop,count, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    try:
        return np.linspace(float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as e:
        msg = f"expected start,stop,count, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e


def resolve_de_inputs(
    args: argparse.Namespace,
    settings: ExperimentSettings,
) -> tuple[tuple[float, ...], tuple[float, ...], float]:
    """Edge distributions from flags or a layout, P_c from --pc or --pc-mode."""
    edge_lambda, edge_rho = args.edge_lambda, args.edge_rho
    if args.layout:
        layout_lambda, layout_rho = edge_degree_distributions(read_layout(require_file(args.layout)))
        edge_lambda = edge_lambda or tuple(float(c) for c in layout_lambda)
        edge_rho = edge_rho or tuple(float(c) for c in layout_rho)
    if not edge_lambda or not edge_rho:
        msg = "edge distributions need --edge-lambda/--edge-rho or --layout"
        raise ValueError(msg)
    if args.pc is not None:
        return edge_lambda, edge_rho, args.pc
    mode = PcModeEnum(args.pc_mode)
    weights = read_weights(require_file(args.weights)) if args.weights else []
    config = RecallConfig(phi=args.phi, psi=args.psi)
    pc = network_pc(mode, weights, config, args.pc_trials, settings.seed, args.alphabet_size)
    return edge_lambda, edge_rho, pc


class AnalysisController:
    """Controller for ``de-threshold``, ``de-curve`` and ``eigen``."""

    def threshold(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        command = "de-threshold"
        try:
            edge_lambda, edge_rho, pc = resolve_de_inputs(args, settings)
            params = DEParams(edge_lambda=edge_lambda, edge_rho=edge_rho, p_c=pc, p_e=0.0)
            output_dir = start_run(command, args, settings)
            value = de_threshold(params.edge_lambda, params.edge_rho, pc, args.tol)
            limit = de_limit(params.with_p_e(value))
            path = write_csv(
                output_dir / FileConst.DE_THRESHOLD,
                [
                    {
                        "p_e": value,
                        "z_limit": limit,
                        "success": int(limit < AnalysisConst.LIMIT_ZERO),
                        "p_c": pc,
                        "tol": args.tol,
                    },
                ],
                CsvConst.DE_THRESHOLD,
            )
        except (ValidationError, ValueError, MemoryToolkitError, OSError) as e:
            return failed_result(command, e)
        print(f"{value:.9g}")  # noqa: T201
        return success_result(threshold=value, p_c=pc, csv=path)

    def curve(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        command = "de-curve"
        try:
            edge_lambda, edge_rho, pc = resolve_de_inputs(args, settings)
            DEParams(edge_lambda=edge_lambda, edge_rho=edge_rho, p_c=pc, p_e=0.0)
            output_dir = start_run(command, args, settings)
            rows = de_curve(edge_lambda, edge_rho, pc, args.p_e_grid)
            path = write_csv(output_dir / FileConst.DE_CURVE, rows, CsvConst.DE_CURVE)
        except (ValidationError, ValueError, MemoryToolkitError, OSError) as e:
            return failed_result(command, e)
        return success_result(csv=path, points=len(rows), p_c=pc)

    def eigen(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        command = "eigen"
        try:
            dataset = read_dataset(require_file(args.dataset))
            output_dir = start_run(command, args, settings)
            values = eigen_spectrum(dataset, args.max_sweeps)
            path = write_csv(
                output_dir / FileConst.EIGEN,
                [{"index": i, "eigenvalue": float(v)} for i, v in enumerate(values)],
                CsvConst.EIGEN,
            )
        except (MemoryToolkitError, OSError) as e:
            return failed_result(command, e)
        zeros = int(np.count_nonzero(values == 0))
        _logger.info("Spectrum of %s eigenvalues, %s zero", values.size, zeros)
        return success_result(csv=path, eigenvalues=int(values.size), zero_eigenvalues=zeros)


analysis_controller = AnalysisController()


def _add_de_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--edge-lambda",
        "--lambda",
        dest="edge_lambda",
        type=coefficient_list,
        default=None,
        help="Edge-perspective pattern degree coefficients, power 0 first",
    )
    parser.add_argument(
        "--edge-rho",
        "--rho",
        dest="edge_rho",
        type=coefficient_list,
        default=None,
        help="Edge-perspective cluster degree coefficients, power 0 first",
    )
    parser.add_argument("--layout", default=None, help="Derive edge distributions from a layout file")
    parser.add_argument("--pc", type=float, default=None, help="Fixed P_c")
    parser.add_argument(
        "--pc-mode",
        choices=[mode.value for mode in PcModeEnum],
        default=PcModeEnum.EMPIRICAL.value,
        help="P_c source when --pc is not given; the empirical and bound modes need --weights",
    )
    parser.add_argument("--weights", default=None, help="Weights used by the bound and empirical P_c modes")
    parser.add_argument("--pc-trials", type=int, default=AnalysisConst.PC_TRIALS)
    parser.add_argument(
        "--alphabet-size",
        "-Q",
        type=int,
        default=None,
        help="Clamp empirical P_c trials into [0, Q-1]",
    )
    parser.add_argument("--phi", type=float, default=RecallConst.PHI)
    parser.add_argument("--psi", type=float, default=RecallConst.PSI)


def register(subparsers: argparse._SubParsersAction) -> None:
    threshold = subparsers.add_parser("de-threshold", help="Density-evolution threshold p_e*")
    _add_de_arguments(threshold)
    threshold.add_argument("--tol", type=float, default=AnalysisConst.THRESHOLD_TOL)
    threshold.set_defaults(handler=analysis_controller.threshold)

    curve = subparsers.add_parser("de-curve", help="Density-evolution limit over a p_e grid")
    _add_de_arguments(curve)
    curve.add_argument("--p-e-grid", type=p_e_grid, default=p_e_grid("0.05,0.95,19"), help="start,stop,count")
    curve.set_defaults(handler=analysis_controller.curve)

    eigen = subparsers.add_parser("eigen", help="Eigenvalues of X^T X")
    eigen.add_argument("--dataset", required=True, help="Dataset file")
    eigen.add_argument("--max-sweeps", type=int, default=AnalysisConst.JACOBI_MAX_SWEEPS)
    eigen.set_defaults(handler=analysis_controller.eigen)
