import numpy as np


def derive_seed(seed: int, *keys: int) -> int:
    """Deterministic child seed for (seed, key...) independent of scheduling order."""
    sequence = np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, *[int(key) for key in keys]])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *keys))
