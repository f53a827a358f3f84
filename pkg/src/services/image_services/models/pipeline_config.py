from pydantic import BaseModel, Field, field_validator

from src.constants.app_constants import ImageConst, RecallConst


class ImagePipelineConfig(BaseModel):
    """Settings for learning and denoising a batch of grayscale images.

    Attributes:
        levels: Quantization levels Q (a power of two)
        clusters: Number of clusters over the binary neurons
        membership: Target clusters per binary neuron
        size_spread: Relative spread of cluster sizes
        max_constraints: Cap on learned constraints per cluster
        p_e: Noise probability applied to the learned binary patterns
        sat_percentile: Percentile of clean syndromes used as the tolerance
        seed: Root seed for layout, learning and noise
        workers: Threads for constraint runs and per-image work
    """

    model_config = {"frozen": True}

    levels: int = Field(default=ImageConst.LEVELS, ge=2)
    clusters: int = Field(default=ImageConst.CLUSTERS, ge=1)
    membership: float = Field(default=ImageConst.MEMBERSHIP, ge=1)
    size_spread: float = Field(default=0.2, ge=0, lt=1)
    max_constraints: int | None = Field(default=ImageConst.MAX_CONSTRAINTS, ge=0)
    p_e: float = Field(default=ImageConst.NOISE, ge=0, le=1)
    sat_percentile: float = Field(default=RecallConst.SAT_PERCENTILE, ge=0, le=100)
    seed: int = 0
    workers: int = Field(default=1, ge=1)

    @field_validator("levels")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            msg = f"levels must be a power of two, got {value}"
            raise ValueError(msg)
        return value
