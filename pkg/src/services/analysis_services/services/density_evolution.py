"""Density evolution of the peeling schedule: z(t+1) = p_e * lambda~(1 - P_c * rho~(1 - z(t)))."""

import logging

import numpy as np
from numpy.polynomial import polynomial
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import minimize_scalar

from src.constants.app_constants import AnalysisConst
from src.services.analysis_services.models.de_params import DEParams

_logger = logging.getLogger(__name__)


def _recursion(
    z: NDArray[np.float64] | float,
    edge_lambda: NDArray[np.float64],
    edge_rho: NDArray[np.float64],
    p_c: float,
    p_e: float,
) -> NDArray[np.float64] | float:
    return p_e * polynomial.polyval(1.0 - p_c * polynomial.polyval(1.0 - z, edge_rho), edge_lambda)


def de_step(z: float, params: DEParams) -> float:
    return float(_recursion(z, params.lambda_array, params.rho_array, params.p_c, params.p_e))


def _predicate_holds(
    p_e: float,
    edge_lambda: NDArray[np.float64],
    edge_rho: NDArray[np.float64],
    p_c: float,
    grid_points: int,
) -> bool:
    """p_e * lambda~(1 - P_c rho~(1 - z)) < z for every z in (0, p_e)."""
    if p_e <= 0.0:
        return True
    z = p_e * np.arange(1, grid_points) / grid_points
    gap = z - _recursion(z, edge_lambda, edge_rho, p_c, p_e)
    worst = int(np.argmin(gap))
    if gap[worst] <= 0.0:
        return False
    low, high = z[max(worst - 1, 0)], z[min(worst + 1, z.size - 1)]
    if high > low:
        refined = minimize_scalar(
            lambda t: t - _recursion(t, edge_lambda, edge_rho, p_c, p_e),
            bounds=(low, high),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if refined.fun <= 0.0:
            return False
    return True


def de_threshold(
    edge_lambda: ArrayLike,
    edge_rho: ArrayLike,
    p_c: float,
    tol: float = AnalysisConst.THRESHOLD_TOL,
    grid_points: int = AnalysisConst.GRID_POINTS,
) -> float:
    """Largest p_e (to within ``tol``) for which the recursion is a strict contraction on (0, p_e).

    Bisection over [0, 1]; returns 1 when the predicate holds at every tested p_e.
    """
    lam = np.asarray(edge_lambda, dtype=float)
    rho = np.asarray(edge_rho, dtype=float)
    if _predicate_holds(1.0, lam, rho, p_c, grid_points):
        return 1.0
    low, high = 0.0, 1.0
    while high - low > tol:
        middle = (low + high) / 2.0
        if _predicate_holds(middle, lam, rho, p_c, grid_points):
            low = middle
        else:
            high = middle
    _logger.debug("Threshold in [%.6f, %.6f] for P_c=%s", low, high, p_c)
    return 1.0 if high == 1.0 else low


def de_trajectory(params: DEParams, max_steps: int = AnalysisConst.MAX_DE_STEPS) -> NDArray[np.float64]:
    """z(0) = p_e, z(1), ... until |z(t+1) - z(t)| < 1e-12 or ``max_steps`` steps."""
    if max_steps < 1:
        msg = f"max_steps must be at least 1, got {max_steps}"
        raise ValueError(msg)
    lam, rho = params.lambda_array, params.rho_array
    values = [params.p_e]
    for _ in range(max_steps):
        following = float(_recursion(values[-1], lam, rho, params.p_c, params.p_e))
        values.append(following)
        if abs(following - values[-2]) < AnalysisConst.FIXED_POINT_TOL:
            break
    return np.asarray(values)


def de_limit(params: DEParams, max_steps: int = AnalysisConst.MAX_DE_STEPS) -> float:
    return float(de_trajectory(params, max_steps)[-1])


def de_curve(
    edge_lambda: ArrayLike,
    edge_rho: ArrayLike,
    p_c: float,
    p_e_grid: ArrayLike,
    max_steps: int = AnalysisConst.MAX_DE_STEPS,
) -> list[dict]:
    """Limit of the recursion for every p_e; success means the limit is below 1e-9."""
    base = DEParams(
        edge_lambda=tuple(float(c) for c in np.asarray(edge_lambda, dtype=float)),
        edge_rho=tuple(float(c) for c in np.asarray(edge_rho, dtype=float)),
        p_c=p_c,
        p_e=0.0,
    )
    rows = []
    for p_e in np.asarray(p_e_grid, dtype=float):
        limit = de_limit(base.with_p_e(float(p_e)), max_steps)
        rows.append({"p_e": float(p_e), "z_limit": limit, "success": int(limit < AnalysisConst.LIMIT_ZERO)})
    return rows
