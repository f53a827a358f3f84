"""Exact and floating-point linear algebra used across the services."""

import numpy as np
from numpy.typing import ArrayLike, NDArray


def exact_rank(matrix: ArrayLike) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Works on Python integers held in an object array, so the result carries no
    floating-point tolerance.
    """
    values = np.asarray(matrix, dtype=np.int64)
    if values.ndim != 2 or values.size == 0:  # noqa: PLR2004
        return 0
    work = np.unique(values, axis=0).astype(object)
    n_rows, n_cols = work.shape
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.flatnonzero(work[rank:, col] != 0)
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            work[[rank, pivot_row]] = work[[pivot_row, rank]]
        pivot = work[rank, col]
        below = work[rank + 1 :]
        if below.shape[0]:
            below[:, col:] = (pivot * below[:, col:] - below[:, col : col + 1] * work[rank, col:]) // previous_pivot
        previous_pivot = pivot
        rank += 1
    return rank


def real_rank(matrix: ArrayLike, relative_tol: float) -> int:
    """Numerical rank with singular values below ``relative_tol * sigma_max`` treated as zero."""
    values = np.atleast_2d(np.asarray(matrix, dtype=float))
    if values.size == 0:
        return 0
    singular = np.linalg.svd(values, compute_uv=False)
    if singular.size == 0 or singular[0] == 0:
        return 0
    return int(np.count_nonzero(singular > relative_tol * singular[0]))


def _round_robin_pairs(size: int) -> list[tuple[NDArray[np.int64], NDArray[np.int64]]]:
    """Disjoint index pairs per round so that every pair meets exactly once per sweep."""
    players = list(range(size))
    if size % 2:
        players.append(-1)
    count = len(players)
    rounds = []
    for _ in range(count - 1):
        firsts, seconds = [], []
        for i in range(count // 2):
            a, b = players[i], players[count - 1 - i]
            if a < 0 or b < 0:
                continue
            firsts.append(min(a, b))
            seconds.append(max(a, b))
        rounds.append((np.array(firsts, dtype=np.int64), np.array(seconds, dtype=np.int64)))
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def jacobi_eigenvalues(matrix: ArrayLike, max_sweeps: int, tol: float = 1e-14) -> NDArray[np.float64]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Each round applies a set of disjoint plane rotations at once (round-robin
    ordering); a sweep visits every off-diagonal pair once.
    """
    a = np.array(matrix, dtype=float, copy=True)
    size = a.shape[0]
    if size < 2:  # noqa: PLR2004
        return np.diag(a).copy()
    scale = np.linalg.norm(a)
    if scale == 0:
        return np.zeros(size)
    rounds = _round_robin_pairs(size)
    for _ in range(max_sweeps):
        off_diagonal = np.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off_diagonal <= tol * scale:
            break
        for p_all, q_all in rounds:
            apq_all = a[p_all, q_all]
            active = apq_all != 0
            if not active.any():
                continue
            p, q, apq = p_all[active], q_all[active], apq_all[active]
            with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.nan_to_num(t, nan=0.0, posinf=0.0, neginf=0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p = a[p, :].copy()
            row_q = a[q, :].copy()
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q
    return np.diag(a).copy()
