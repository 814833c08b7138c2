"""Validated solver parameters."""

from __future__ import annotations
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from src.core.enums import InfluenceKind, RhoConvention
from src.geometry.density import DecreasingFunction


class SolverConfig(BaseModel):
    """
    Parameters of one solver run.

    Ordering constraints: 0 < eta1 <= eta2 < 1, 0 < gamma0 < 1,
    0 < gamma1 <= gamma2 <= 1 with gamma1 < 1, expand_factor > 1.
    """
    model_config = ConfigDict(extra="forbid")

    x0: Optional[list[float]] = None
    delta0: float = Field(1.0, gt=0)
    delta_tol: float = Field(0.05, ge=0)
    eta1: float = Field(0.5, gt=0, lt=1)
    eta2: float = Field(0.75, gt=0, lt=1)
    gamma0: float = Field(0.7, gt=0, lt=1)
    gamma1: float = Field(0.5, gt=0, lt=1)
    gamma2: float = Field(1.0, gt=0, le=1)
    expand_factor: float = Field(2.0, gt=1)
    sigma: float = Field(0.05, gt=0)
    influence: InfluenceKind = InfluenceKind.GAUSSIAN
    sharing_alpha: int = Field(1, ge=1)
    eval_budget: int = Field(1000, gt=0)
    max_iterations: int = Field(10_000, gt=0)
    seed: int = 0

    normalize_objectives: bool = False
    rho_convention: RhoConvention = RhoConvention.MIN
    expand_cap: float = Field(10.0, ge=1)
    max_shrinks: int = Field(50, ge=0)
    min_radius: float = Field(1e-8, gt=0)
    box_active_fraction: float = Field(0.25, gt=0, le=1)
    hv_reference: Optional[list[float]] = None
    track_gd: bool = True
    track_hv: bool = True

    @field_validator("eta2")
    @classmethod
    def _eta_order(cls, value: float, info: ValidationInfo) -> float:
        eta1 = info.data.get("eta1")
        if eta1 is not None and value < eta1:
            raise ValueError(f"must be >= eta1 ({eta1})")
        return value

    @field_validator("gamma2")
    @classmethod
    def _gamma_order(cls, value: float, info: ValidationInfo) -> float:
        gamma1 = info.data.get("gamma1")
        if gamma1 is not None and value < gamma1:
            raise ValueError(f"must be >= gamma1 ({gamma1})")
        return value

    @property
    def radius_threshold(self) -> float:
        """Entries below this radius no longer serve as references."""
        return max(self.delta_tol, self.min_radius)

    def decreasing_function(self) -> DecreasingFunction:
        if self.influence is InfluenceKind.SHARING:
            return DecreasingFunction.sharing(self.sigma, self.sharing_alpha)
        return DecreasingFunction.gaussian(self.sigma)
