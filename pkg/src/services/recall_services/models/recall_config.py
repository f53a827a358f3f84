from pydantic import BaseModel, Field

from src.constants.app_constants import ImageConst, RecallConst


class RecallConfig(BaseModel):
    """Thresholds and iteration caps for recall.

    Attributes:
        phi: A pattern neuron moves only when |g_j| > phi
        psi: A constraint neuron reports only when |h_i| > psi
        t_max: Forward/backward rounds per intra-cluster call
        peel_rounds_max: Sweeps over all clusters during peeling
        sat_tol: Syndrome tolerance; None means 1e-6 times the largest row 1-norm of W
    """

    model_config = {"frozen": True}

    phi: float = Field(default=RecallConst.PHI, gt=0, le=1)
    psi: float = Field(default=RecallConst.PSI, ge=0)
    t_max: int = Field(default=RecallConst.T_MAX, ge=1)
    peel_rounds_max: int = Field(default=RecallConst.PEEL_ROUNDS_MAX, ge=1)
    sat_tol: float | None = Field(default=None, ge=0)

    @classmethod
    def image_mode(cls, sat_tol: float | None = None) -> "RecallConfig":
        return cls(phi=ImageConst.PHI, psi=ImageConst.PSI, sat_tol=sat_tol)
