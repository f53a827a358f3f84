"""Exponential-capacity pattern sets built as x = G^T u over a sparse integer basis G."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.constants.app_constants import SynthConst
from src.services.memory_model.models.dataset import Dataset
from src.services.synth_services.models.generator_spec import GeneratorSpec
from src.services.synth_services.services.exceptions import InfeasibleGeneratorError, PatternBudgetError
from src.utils.linalg_helper import exact_rank

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Enumeration:
    """Enumerated dataset with the count of candidates examined and dropped."""

    dataset: Dataset
    examined: int
    rejected: int


def make_generator_matrix(spec: GeneratorSpec) -> NDArray[np.int64]:
    """Random k x n generator of exact rank k.

    A permuted identity block with entries in [1, gamma-1] fixes the rank; the
    other n-k columns get between 1 and the degree budget nonzero entries.
    """
    budget = spec.column_budget
    if not spec.allow_reject and budget < 1:
        msg = (
            f"Q={spec.Q} is too small: Q-1 must be at least (gamma-1)(upsilon-1)="
            f"{(spec.gamma - 1) * (spec.upsilon - 1)}"
        )
        raise InfeasibleGeneratorError(msg)
    max_degree = spec.k if spec.allow_reject else min(budget, spec.k)
    rng = np.random.default_rng(spec.seed)

    for attempt in range(SynthConst.MAX_GENERATOR_RETRIES):
        G = np.zeros((spec.k, spec.n), dtype=np.int64)
        columns = rng.permutation(spec.n)
        G[np.arange(spec.k), columns[: spec.k]] = rng.integers(1, spec.gamma, size=spec.k)
        for col in columns[spec.k :]:
            degree = int(rng.integers(1, max_degree + 1))
            rows = rng.choice(spec.k, size=degree, replace=False)
            G[rows, col] = rng.integers(1, spec.gamma, size=degree)
        if exact_rank(G) == spec.k:
            _logger.debug("Generator found on attempt %s, max column degree %s", attempt + 1, _max_degree(G))
            return G
    msg = f"no rank-{spec.k} generator found in {SynthConst.MAX_GENERATOR_RETRIES} attempts"
    raise InfeasibleGeneratorError(msg)


def _max_degree(G: NDArray[np.int64]) -> int:
    return int(np.count_nonzero(G, axis=0).max()) if G.size else 0


def _coefficients(start: int, stop: int, k: int, upsilon: int) -> NDArray[np.int64]:
    """Rows u for lexicographic indices [start, stop); the first coordinate is most significant."""
    index = np.arange(start, stop, dtype=np.int64)
    digits = np.zeros((index.size, k), dtype=np.int64)
    for position in range(k - 1, -1, -1):
        digits[:, position] = index % upsilon
        index //= upsilon
    return digits


def _chunk(G: NDArray[np.int64], upsilon: int, start: int, stop: int) -> NDArray[np.int64]:
    return _coefficients(start, stop, G.shape[0], upsilon) @ G


def enumerate_with_report(
    G: ArrayLike,
    upsilon: int,
    Q: int,
    limit: int | None = None,
    *,
    allow_reject: bool = False,
    max_patterns: int = SynthConst.MAX_PATTERNS,
    workers: int = 1,
) -> Enumeration:
    """Emit x = G^T u for u in lexicographic order.

    Without ``allow_reject`` every candidate must fit [0, Q-1]; with it,
    out-of-range candidates are skipped until ``limit`` patterns are kept.
    Output order never depends on ``workers``.
    """
    generator = np.atleast_2d(np.asarray(G, dtype=np.int64))
    k = generator.shape[0]
    total = upsilon**k
    if limit is not None and limit < 0:
        msg = f"limit must be nonnegative, got {limit}"
        raise PatternBudgetError(msg)
    if limit is None and total > max_patterns:
        msg = f"upsilon^k = {upsilon}^{k} patterns exceed the budget of {max_patterns}; pass a limit"
        raise PatternBudgetError(msg)
    target = total if limit is None else min(limit, total)
    chunk = SynthConst.ENUMERATION_CHUNK

    with ThreadPoolExecutor(max_workers=workers) as executor:
        if not allow_reject:
            starts = range(0, target, chunk)
            blocks = list(executor.map(lambda s: _chunk(generator, upsilon, s, min(s + chunk, target)), starts))
            rows = np.vstack(blocks) if blocks else np.zeros((0, generator.shape[1]), dtype=np.int64)
            if rows.size and rows.max() > Q - 1:
                msg = f"pattern entry {int(rows.max())} exceeds Q-1={Q - 1}; the generator breaks the degree budget"
                raise InfeasibleGeneratorError(msg)
            return Enumeration(Dataset(rows, Q), examined=target, rejected=0)
        kept, kept_count, examined, rejected = [], 0, 0, 0
        start = 0
        while start < total and kept_count < target:
            starts = [s for s in range(start, start + workers * chunk, chunk) if s < total]
            blocks = executor.map(lambda s: _chunk(generator, upsilon, s, min(s + chunk, total)), starts)
            for block in blocks:
                need = target - kept_count
                if need <= 0:
                    break
                fits = block.max(axis=1) <= Q - 1
                positions = np.flatnonzero(fits)
                cut = int(positions[need - 1]) + 1 if positions.size >= need else block.shape[0]
                accepted = block[:cut][fits[:cut]]
                kept.append(accepted)
                kept_count += accepted.shape[0]
                examined += cut
                rejected += cut - accepted.shape[0]
            start += workers * chunk
    rows = np.vstack(kept) if kept else np.zeros((0, generator.shape[1]), dtype=np.int64)
    _logger.info("Kept %s patterns, rejected %s of %s candidates", kept_count, rejected, examined)
    return Enumeration(Dataset(rows, Q), examined=examined, rejected=rejected)


def enumerate_patterns(
    G: ArrayLike,
    upsilon: int,
    Q: int,
    limit: int | None = None,
    *,
    allow_reject: bool = False,
    max_patterns: int = SynthConst.MAX_PATTERNS,
    workers: int = 1,
) -> Dataset:
    return enumerate_with_report(
        G,
        upsilon,
        Q,
        limit,
        allow_reject=allow_reject,
        max_patterns=max_patterns,
        workers=workers,
    ).dataset


def verify_rank(dataset: Dataset) -> int:
    """Exact rank of the C x n pattern matrix."""
    return exact_rank(dataset.patterns)


def generate_dataset(
    spec: GeneratorSpec,
    limit: int | None = None,
    max_patterns: int = SynthConst.MAX_PATTERNS,
    workers: int = 1,
) -> tuple[NDArray[np.int64], Enumeration]:
    G = make_generator_matrix(spec)
    report = enumerate_with_report(
        G,
        spec.upsilon,
        spec.Q,
        limit,
        allow_reject=spec.allow_reject,
        max_patterns=max_patterns,
        workers=workers,
    )
    return G, report
