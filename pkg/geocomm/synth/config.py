# -*- coding: utf-8 -*-
from math import inf, isinf

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from geocomm._typing import Optional
from geocomm.errors import InputError
from geocomm.maps import DEFAULTS, SYNTH_DEFAULTS

__all__ = ["SynthConfig", "parse_omega"]

INF_TOKENS = {"inf", "+inf", "infinity", "+infinity", "∞", "+∞"}



def parse_omega(value) -> float:
    """Float, with ```inf``` (and friends) meaning no geographic decay."""
    if isinstance(value, str):
        token = value.strip().lower()
        if token in INF_TOKENS:
            return inf
        try:
            return float(token)
        except ValueError:
            raise InputError(f"omega must be a number or 'inf', got '{value}'") from None
    return float(value)


class SynthConfig(BaseModel):
    """Planted partition on a lattice, edges decaying with distance.

    A pair ```(v, w)``` is joined with probability
    ```alpha * p_c * exp(-dis / omega)``` where ```p_c``` is ```p_same```
    for equal labels and ```p_diff``` otherwise. ```alpha``` is solved
    from ```target_avg_degree``` unless given.
    """
    grid_side: int = Field(SYNTH_DEFAULTS["grid_side"], ge=1)
    node_count: Optional[int] = Field(None, ge=1)
    label_count: int = Field(SYNTH_DEFAULTS["label_count"], ge=1)
    omega: float = SYNTH_DEFAULTS["omega"]
    p_same: float = SYNTH_DEFAULTS["p_same"]
    p_diff: float = SYNTH_DEFAULTS["p_diff"]
    target_avg_degree: float = Field(SYNTH_DEFAULTS["target_avg_degree"], ge=0)
    alpha: Optional[float] = Field(None, ge=0)
    seed: int = Field(DEFAULTS["seed"], ge=0)

    @field_validator("omega", mode="before")
    @classmethod
    def _omega(cls, v):
        v = parse_omega(v)
        if not v > 0:
            raise ValueError("omega must be positive or inf")
        return v

    @model_validator(mode="after")
    def _check(self) -> "SynthConfig":
        if not 0 < self.p_diff < self.p_same <= 1:
            raise ValueError("need 0 < p_diff < p_same <= 1")
        if self.node_count is None:
            self.node_count = self.grid_side * self.grid_side
        if self.node_count > self.grid_side * self.grid_side:
            raise ValueError(
                f"node_count {self.node_count} exceeds grid_side^2 = {self.grid_side ** 2}"
            )
        return self

    @classmethod
    def create(cls, **kwargs) -> "SynthConfig":
        """Like the constructor, raising InputError on invalid values."""
        try:
            return cls(**{k: v for k, v in kwargs.items() if v is not None})
        except ValidationError as e:
            raise InputError(f"invalid synthetic config: {e}") from None

    @property
    def inv_omega(self) -> float:
        return 0.0 if isinf(self.omega) else 1.0 / self.omega

    def header(self) -> dict:
        items = self.model_dump()
        items["omega"] = "inf" if isinf(self.omega) else self.omega
        return items
