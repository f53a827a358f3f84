import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, Field, field_validator

from src.services.memory_model.models.degree_distributions import COEFFICIENT_TOL


class DEParams(BaseModel):
    """Inputs of the density-evolution recursion.

    Coefficients are indexed by power of z: ``edge_lambda = (0, 0, 1)`` is z^2.

    Attributes:
        edge_lambda: Edge-perspective pattern neuron degree coefficients
        edge_rho: Edge-perspective super node degree coefficients
        p_c: Probability a cluster corrects a single error
        p_e: Initial symbol error probability
    """

    model_config = {"frozen": True}

    edge_lambda: tuple[float, ...]
    edge_rho: tuple[float, ...]
    p_c: float = Field(ge=0.0, le=1.0)
    p_e: float = Field(ge=0.0, le=1.0)

    @field_validator("edge_lambda", "edge_rho")
    @classmethod
    def _check_distribution(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not value or any(c < 0 for c in value) or abs(sum(value) - 1.0) > COEFFICIENT_TOL:
            msg = f"coefficients must be nonnegative and sum to 1, got {value}"
            raise ValueError(msg)
        return value

    @property
    def lambda_array(self) -> NDArray[np.float64]:
        return np.asarray(self.edge_lambda, dtype=float)

    @property
    def rho_array(self) -> NDArray[np.float64]:
        return np.asarray(self.edge_rho, dtype=float)

    def with_p_e(self, p_e: float) -> "DEParams":
        return self.model_copy(update={"p_e": p_e})
