from enum import Enum


class CommandStatusEnum(Enum):
    """Enumeration for command result statuses."""

    SUCCESS = "success"
    FAILED = "failed"


class EtaPolicyEnum(Enum):
    """How the sparsity weight eta is chosen during learning."""

    FIXED = "fixed"
    # eta tracks kappa / alpha_t so that alpha_t * eta stays constant
    COUPLED = "coupled"


class PcModeEnum(Enum):
    """Source of the single-error correction probability fed to density evolution."""

    ONE = "one"
    BOUND = "bound"
    EMPIRICAL = "empirical"


class DegreeKindEnum(Enum):
    """Side of a cluster's bipartite graph a degree histogram describes."""

    PATTERN = "pattern"
    CONSTRAINT = "constraint"
