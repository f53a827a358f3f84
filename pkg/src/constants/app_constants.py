from typing import ClassVar

TEXT_ENCODING = "utf-8"


class SynthConst:
    """Defaults for the subspace pattern generator."""

    MAX_GENERATOR_RETRIES: ClassVar[int] = 100
    # Unlimited enumeration refuses to materialize more patterns than this
    MAX_PATTERNS: ClassVar[int] = 2**20
    ENUMERATION_CHUNK: ClassVar[int] = 65536


class LearningConst:
    """Defaults for constraint learning on exact-subspace data."""

    ALPHA_DECAY: ClassVar[float] = 0.95
    KAPPA: ClassVar[float] = 0.75
    THETA0: ClassVar[float] = 0.05
    SIGMA: ClassVar[float] = 100.0
    EPSILON_STOP: ClassVar[float] = 1e-6
    MAX_EPOCHS: ClassVar[int] = 10
    RELATIVE_ZERO: ClassVar[float] = 1e-4
    NORM_FLOOR: ClassVar[float] = 0.1
    NORM_CEILING: ClassVar[float] = 10.0
    MAX_RETRIES: ClassVar[int] = 10
    RANK_TOLERANCE: ClassVar[float] = 1e-8
    NULL_SPACE_RCOND: ClassVar[float] = 1e-10
    MIN_RETAINED: ClassVar[float] = 1e-6
    SPARSE_REFINE_EPOCHS: ClassVar[int] = 1


class RecallConst:
    """Defaults for intra-cluster correction and peeling."""

    PHI: ClassVar[float] = 0.82
    PSI: ClassVar[float] = 0.005
    T_MAX: ClassVar[int] = 20
    PEEL_ROUNDS_MAX: ClassVar[int] = 80
    RELATIVE_SAT_TOL: ClassVar[float] = 1e-6
    SAT_PERCENTILE: ClassVar[float] = 99.0
    # Exact-subspace runs calibrate on the largest clean syndrome
    SAT_PERCENTILE_EXACT: ClassVar[float] = 100.0


class ImageConst:
    """Defaults for the grayscale image pipeline."""

    LEVELS: ClassVar[int] = 16
    PIXEL_RANGE: ClassVar[int] = 256
    ETA: ClassVar[float] = 1.0
    THETA0: ClassVar[float] = 0.01
    MAX_EPOCHS: ClassVar[int] = 200
    PHI: ClassVar[float] = 0.85
    PSI: ClassVar[float] = 0.005
    NOISE: ClassVar[float] = 0.02
    SIZE: ClassVar[int] = 16
    COUNT: ClassVar[int] = 20
    CLUSTERS: ClassVar[int] = 32
    MEMBERSHIP: ClassVar[float] = 3.0
    MAX_CONSTRAINTS: ClassVar[int] = 8


class AnalysisConst:
    """Defaults for the closed-form analysis."""

    THRESHOLD_TOL: ClassVar[float] = 1e-4
    GRID_POINTS: ClassVar[int] = 10_000
    FIXED_POINT_TOL: ClassVar[float] = 1e-12
    MAX_DE_STEPS: ClassVar[int] = 10_000
    LIMIT_ZERO: ClassVar[float] = 1e-9
    CONFIDENCE_Z: ClassVar[float] = 1.96
    EIGEN_RELATIVE_ZERO: ClassVar[float] = 1e-10
    JACOBI_MAX_SWEEPS: ClassVar[int] = 60
    PC_TRIALS: ClassVar[int] = 1000


class CsvConst:
    """Stable CSV headers for every command output."""

    FLOAT_FORMAT: ClassVar[str] = "%.9g"
    LEARN_TRACE: ClassVar[list[str]] = ["cluster", "constraint", "epoch", "cost"]
    RECALL_LOG: ClassVar[list[str]] = ["pattern", "round", "cluster", "attempted", "succeeded", "changed_neurons"]
    RECALL_STATUS: ClassVar[list[str]] = ["pattern", "success", "rounds"]
    SWEEP_PER: ClassVar[list[str]] = ["p_e", "trials", "pattern_errors", "PER", "symbol_errors", "SER"]
    DEGREE_REPORT: ClassVar[list[str]] = ["cluster", "kind", "normalized_degree", "fraction"]
    DE_CURVE: ClassVar[list[str]] = ["p_e", "z_limit", "success"]
    DE_THRESHOLD: ClassVar[list[str]] = ["p_e", "z_limit", "success", "p_c", "tol"]
    EIGEN: ClassVar[list[str]] = ["index", "eigenvalue"]
    IMAGE: ClassVar[list[str]] = ["image", "snr_in", "snr_out", "residual_clusters"]


class FileConst:
    """Names of files written into a run's output directory."""

    RUN_META: ClassVar[str] = "run.meta"
    LOG_FILE: ClassVar[str] = "memory.log"
    DATASET: ClassVar[str] = "dataset.txt"
    DATASET_META: ClassVar[str] = "dataset.meta"
    LAYOUT: ClassVar[str] = "layout.txt"
    WEIGHTS: ClassVar[str] = "weights.txt"
    LEARN_TRACE: ClassVar[str] = "learn_trace.csv"
    NOISY: ClassVar[str] = "noisy.txt"
    RECALLED: ClassVar[str] = "recalled.txt"
    RECALL_LOG: ClassVar[str] = "recall_log.csv"
    RECALL_STATUS: ClassVar[str] = "recall_status.csv"
    SWEEP_PER: ClassVar[str] = "sweep_per.csv"
    DEGREE_REPORT: ClassVar[str] = "degree_report.csv"
    DE_THRESHOLD: ClassVar[str] = "de_threshold.csv"
    DE_CURVE: ClassVar[str] = "de_curve.csv"
    EIGEN: ClassVar[str] = "eigen.csv"
    IMAGE_REPORT: ClassVar[str] = "image_report.csv"
    IMAGE_DIR: ClassVar[str] = "images"
