from pydantic import BaseModel, Field, field_validator


class ExperimentConfig(BaseModel):
    """Monte Carlo sweep settings.

    Attributes:
        p_e_values: Noise probabilities swept, in the given order
        trials: Trials per noise probability
        seed: Root seed; trial t at point i draws from (seed, i, t)
        workers: Threads running trials
    """

    model_config = {"frozen": True}

    p_e_values: tuple[float, ...] = Field(min_length=1)
    trials: int = Field(default=1000, ge=1)
    seed: int = 0
    workers: int = Field(default=1, ge=1)

    @field_validator("p_e_values")
    @classmethod
    def _check_probabilities(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        for value in values:
            if not 0.0 <= value <= 1.0:
                msg = f"noise probability {value} is outside [0, 1]"
                raise ValueError(msg)
        return values
