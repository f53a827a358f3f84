from pydantic import BaseModel, Field, model_validator


class GeneratorSpec(BaseModel):
    """Parameters of the x = G^T u pattern construction.

    Attributes:
        k: Subspace dimension (rows of G)
        n: Pattern length (columns of G)
        gamma: Entries of G lie in [0, gamma - 1]
        upsilon: Entries of u lie in [0, upsilon - 1]
        Q: Pattern alphabet size
        seed: Seed for the random generator matrix
        allow_reject: Drop out-of-range candidates instead of bounding column degrees
    """

    model_config = {"frozen": True}

    k: int = Field(ge=1)
    n: int = Field(ge=1)
    gamma: int = Field(default=2, ge=2)
    upsilon: int = Field(default=2, ge=2)
    Q: int = Field(ge=2)
    seed: int = 0
    allow_reject: bool = False

    @model_validator(mode="after")
    def _check_dimensions(self) -> "GeneratorSpec":
        if self.k > self.n:
            msg = f"subspace dimension k={self.k} exceeds pattern length n={self.n}"
            raise ValueError(msg)
        return self

    @property
    def ratio(self) -> float:
        """r = k / n."""
        return self.k / self.n

    @property
    def column_budget(self) -> int:
        """Largest column degree d with d (gamma-1)(upsilon-1) <= Q-1."""
        return (self.Q - 1) // ((self.gamma - 1) * (self.upsilon - 1))

    @property
    def pattern_count(self) -> int:
        return self.upsilon**self.k
