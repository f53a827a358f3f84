import numpy as np
from numpy.typing import NDArray

from src.constants.app_constants import AnalysisConst
from src.services.analysis_services.services.exceptions import EmptySpectrumError
from src.services.memory_model.models.dataset import Dataset
from src.utils.linalg_helper import jacobi_eigenvalues


def correlation_matrix(dataset: Dataset) -> NDArray[np.float64]:
    patterns = dataset.patterns.astype(float)
    return patterns.T @ patterns


def eigen_spectrum(dataset: Dataset, max_sweeps: int = AnalysisConst.JACOBI_MAX_SWEEPS) -> NDArray[np.float64]:
    """Eigenvalues of X^T X in descending order, values below 1e-10 * max set to 0."""
    if dataset.count == 0 or dataset.n == 0:
        msg = "the spectrum of an empty dataset is undefined"
        raise EmptySpectrumError(msg)
    values = np.sort(jacobi_eigenvalues(correlation_matrix(dataset), max_sweeps))[::-1]
    largest = values[0]
    if largest <= 0:
        return np.zeros_like(values)
    return np.where(values < AnalysisConst.EIGEN_RELATIVE_ZERO * largest, 0.0, values)
