"""Plain-text formats for datasets, cluster layouts and learned weights.

Dataset: header ``n Q C`` then C rows of n integers.
Layout: header ``n L`` then L rows of sorted indices.
Weights: per cluster a line ``cluster <id> <m> <n_l>`` followed by ``row col value`` triplets.
"""

import logging
from collections.abc import Iterator, Sequence
from pathlib import Path

import numpy as np

from src.constants.app_constants import TEXT_ENCODING
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.exceptions import FileFormatError, MemoryModelError

_logger = logging.getLogger(__name__)

CLUSTER_KEYWORD = "cluster"


def _content_lines(path: str | Path) -> Iterator[tuple[int, list[str]]]:
    with Path(path).open(encoding=TEXT_ENCODING) as handle:
        for number, line in enumerate(handle, start=1):
            stripped = line.split("#", 1)[0].strip()
            if stripped:
                yield number, stripped.split()


def _ints(tokens: list[str], path: str | Path, number: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        msg = f"{path}:{number}: expected integers, got {' '.join(tokens)!r}"
        raise FileFormatError(msg) from e


def write_dataset(path: str | Path, dataset: Dataset) -> Path:
    lines = [f"{dataset.n} {dataset.alphabet_size} {dataset.count}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in dataset.patterns)
    Path(path).write_text("\n".join(lines) + "\n", encoding=TEXT_ENCODING)
    return Path(path)


def read_dataset(path: str | Path) -> Dataset:
    lines = list(_content_lines(path))
    if not lines:
        msg = f"{path}: empty dataset file"
        raise FileFormatError(msg)
    number, header = lines[0]
    if len(header) != 3:  # noqa: PLR2004
        msg = f"{path}:{number}: dataset header must be 'n Q C'"
        raise FileFormatError(msg)
    n, alphabet_size, count = _ints(header, path, number)
    rows = [_ints(tokens, path, line_number) for line_number, tokens in lines[1:]]
    if len(rows) != count or any(len(row) != n for row in rows):
        msg = f"{path}: expected {count} rows of length {n}"
        raise FileFormatError(msg)
    try:
        return Dataset(np.array(rows, dtype=np.int64).reshape(count, n), alphabet_size)
    except MemoryModelError as e:
        msg = f"{path}: {e}"
        raise FileFormatError(msg) from e


def write_layout(path: str | Path, layout: ClusterLayout) -> Path:
    lines = [f"{layout.n} {layout.size}"]
    lines.extend(" ".join(str(i) for i in cluster) for cluster in layout.clusters)
    Path(path).write_text("\n".join(lines) + "\n", encoding=TEXT_ENCODING)
    return Path(path)


def read_layout(path: str | Path) -> ClusterLayout:
    lines = list(_content_lines(path))
    if not lines or len(lines[0][1]) != 2:  # noqa: PLR2004
        msg = f"{path}: layout header must be 'n L'"
        raise FileFormatError(msg)
    n, size = _ints(lines[0][1], path, lines[0][0])
    clusters = [tuple(_ints(tokens, path, number)) for number, tokens in lines[1:]]
    if len(clusters) != size:
        msg = f"{path}: expected {size} clusters, found {len(clusters)}"
        raise FileFormatError(msg)
    try:
        return ClusterLayout(n, tuple(clusters))
    except MemoryModelError as e:
        msg = f"{path}: {e}"
        raise FileFormatError(msg) from e


def write_weights(path: str | Path, weights: Sequence[SparseWeightMatrix]) -> Path:
    lines = []
    for W in weights:
        lines.append(f"{CLUSTER_KEYWORD} {W.cluster_id} {W.rows} {W.cols}")
        lines.extend(f"{row} {col} {value!r}" for row, col, value in W.entries())
    Path(path).write_text("\n".join(lines) + "\n", encoding=TEXT_ENCODING)
    return Path(path)


def read_weights(path: str | Path) -> list[SparseWeightMatrix]:
    """Read every cluster block; the result is ordered by cluster id."""
    blocks: dict[int, tuple[int, int, list[tuple[int, int, float]]]] = {}
    current: list[tuple[int, int, float]] | None = None
    for number, tokens in _content_lines(path):
        if tokens[0] == CLUSTER_KEYWORD:
            if len(tokens) != 4:  # noqa: PLR2004
                msg = f"{path}:{number}: cluster header must be 'cluster <id> <m> <n_l>'"
                raise FileFormatError(msg)
            cluster_id, rows, cols = _ints(tokens[1:], path, number)
            if cluster_id in blocks:
                msg = f"{path}:{number}: cluster {cluster_id} appears twice"
                raise FileFormatError(msg)
            current = []
            blocks[cluster_id] = (rows, cols, current)
            continue
        if current is None or len(tokens) != 3:  # noqa: PLR2004
            msg = f"{path}:{number}: expected 'row col value' inside a cluster block"
            raise FileFormatError(msg)
        row, col = _ints(tokens[:2], path, number)
        try:
            current.append((row, col, float(tokens[2])))
        except ValueError as e:
            msg = f"{path}:{number}: bad weight value {tokens[2]!r}"
            raise FileFormatError(msg) from e
    if sorted(blocks) != list(range(len(blocks))):
        msg = f"{path}: cluster ids must be 0..{len(blocks) - 1}"
        raise FileFormatError(msg)
    try:
        return [
            SparseWeightMatrix.from_entries(cluster_id, rows, cols, entries)
            for cluster_id, (rows, cols, entries) in sorted(blocks.items())
        ]
    except MemoryModelError as e:
        msg = f"{path}: {e}"
        raise FileFormatError(msg) from e
