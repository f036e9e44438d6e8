"""Numerical tolerance policy shared across the package."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["ToleranceConfig", "DEFAULT_TOL"]


@dataclass(frozen=True)
class ToleranceConfig:
    """Centralized tolerances for rank decisions and factor acceptance.

    rank_rtol: relative threshold for classifying singular values and
        eigenvalues as zero (multiplied by dimension and the largest
        magnitude before comparison).
    residual_tol: acceptance threshold for factor residuals.
    breakdown_tol: pivot floor for hyperbolic orthogonalization; a step
        whose best candidate has |<x,x>_J| <= breakdown_tol * ||x||^2 is
        declared an isotropic breakdown.
    """

    rank_rtol: float = 1e-10
    residual_tol: float = 1e-8
    breakdown_tol: float = 1e-10

    def __post_init__(self):
        for name in ("rank_rtol", "residual_tol", "breakdown_tol"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"{name} must be strictly positive, got {value}")
        if self.rank_rtol > 1.0:
            raise ValueError(f"rank_rtol must be <= 1, got {self.rank_rtol}")

    def to_dict(self) -> dict:
        return {
            "rank_rtol": self.rank_rtol,
            "residual_tol": self.residual_tol,
            "breakdown_tol": self.breakdown_tol,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ToleranceConfig":
        return cls(
            rank_rtol=float(data.get("rank_rtol", cls.rank_rtol)),
            residual_tol=float(data.get("residual_tol", cls.residual_tol)),
            breakdown_tol=float(data.get("breakdown_tol", cls.breakdown_tol)),
        )


DEFAULT_TOL = ToleranceConfig()
