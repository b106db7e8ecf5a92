from dataclasses import dataclass

# Absolute tolerance for comparisons after normalization.
TOL = 1e-9
# Relative magnitude below which Laurent coefficients are dropped.
PRUNE = 1e-12


@dataclass(frozen=True)
class Config:
    tol_abs: float = TOL
    prune_threshold: float = PRUNE
    seed: int = 0
    output: str | None = None

    def __post_init__(self):
        if self.tol_abs <= 0 or self.prune_threshold <= 0:
            raise ValueError("tolerances must be positive")
