from pydantic import BaseModel, Field, model_validator

from src.constants.app_constants import ImageConst, LearningConst
from src.enums.enum import EtaPolicyEnum


class LearningConfig(BaseModel):
    """Schedules and stopping rules for learning one cluster's constraints.

    Step sizes decay per epoch: alpha_t = alpha0 * alpha_decay / t and
    theta_t = theta0 / t. Under the coupled policy eta_t = kappa / alpha_t so
    the sparsity step alpha_t * eta_t stays at kappa.

    Attributes:
        alpha0: Initial step size; None scales it to 1 / max ||x_sub||^2
        alpha_decay: Constant c in alpha_t = alpha0 * c / t
        eta_policy: Fixed eta or coupled to alpha_t
        eta: Sparsity weight under the fixed policy
        kappa: alpha_t * eta_t under the coupled policy
        theta0: Soft threshold at t = 1
        sigma: Sharpness of the tanh sparsity penalty
        use_exact_gradient: Use the tanh penalty gradient instead of the soft threshold
        normalize_each_step: Project back to the unit sphere after every update
        epsilon_stop: Stop once the normalized cost is at most this times the mean ||x_sub||^2
        max_epochs: Passes over the dataset before giving up
        zero_epsilon: Absolute sparsification cutoff; None means relative to max|w|
        max_retries: Extra seeds tried per constraint on dependence or non-convergence
        accept_unconverged: Keep the best vector of a run that hit max_epochs without converging
        seed: Root seed for initializations and pattern draws
        workers: Threads used for independent constraint runs
    """

    model_config = {"frozen": True}

    alpha0: float | None = Field(default=None, gt=0)
    alpha_decay: float = Field(default=LearningConst.ALPHA_DECAY, gt=0)
    eta_policy: EtaPolicyEnum = EtaPolicyEnum.COUPLED
    eta: float = Field(default=0.0, ge=0)
    kappa: float = Field(default=LearningConst.KAPPA, ge=0, lt=1)
    theta0: float = Field(default=LearningConst.THETA0, ge=0)
    sigma: float = Field(default=LearningConst.SIGMA, gt=0)
    use_exact_gradient: bool = False
    normalize_each_step: bool = False
    epsilon_stop: float = Field(default=LearningConst.EPSILON_STOP, ge=0)
    max_epochs: int = Field(default=LearningConst.MAX_EPOCHS, ge=1)
    zero_epsilon: float | None = Field(default=None, ge=0)
    max_retries: int = Field(default=LearningConst.MAX_RETRIES, ge=0)
    accept_unconverged: bool = False
    seed: int = 0
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_step_product(self) -> "LearningConfig":
        if self.eta_policy is EtaPolicyEnum.FIXED and self.alpha0 is not None and self.alpha0 * self.eta >= 1:
            msg = f"alpha0 * eta must stay below 1, got {self.alpha0 * self.eta}"
            raise ValueError(msg)
        if self.use_exact_gradient and self.eta_policy is EtaPolicyEnum.COUPLED:
            msg = "the tanh penalty gradient is only supported with a fixed eta"
            raise ValueError(msg)
        return self

    @classmethod
    def image_mode(cls, seed: int = 0, workers: int = 1) -> "LearningConfig":
        """Binary image data: eta = 1, theta_t = 0.01 / t, 200 epochs, approximate constraints kept."""
        return cls(
            eta_policy=EtaPolicyEnum.FIXED,
            eta=ImageConst.ETA,
            theta0=ImageConst.THETA0,
            max_epochs=ImageConst.MAX_EPOCHS,
            accept_unconverged=True,
            seed=seed,
            workers=workers,
        )

    def alpha(self, alpha0: float, epoch: int) -> float:
        return alpha0 * self.alpha_decay / epoch

    def theta(self, epoch: int) -> float:
        return self.theta0 / epoch

    def eta_at(self, alpha_t: float) -> float:
        if self.eta_policy is EtaPolicyEnum.COUPLED:
            return self.kappa / alpha_t
        return self.eta
