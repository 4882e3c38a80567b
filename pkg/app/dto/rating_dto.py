from typing import Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.enums.rating_method import RatingMethod


class RatingVector(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    objects: List[str]
    values: np.ndarray
    method: RatingMethod
    parameters: Dict[str, Union[int, float]] = {}

    @field_validator('values', mode='before')
    @classmethod
    def validate_values(cls, v):
        values = np.array(v, dtype=float).reshape(-1)
        values.setflags(write=False)
        return values

    @model_validator(mode='after')
    def validate_length(self):
        if self.values.shape[0] != len(self.objects):
            raise ValueError(
                f'{len(self.objects)} objects but {self.values.shape[0]} rating values'
            )
        return self

    def as_dict(self) -> Dict[str, float]:
        return {label: float(v) for label, v in zip(self.objects, self.values)}


class Ranking(BaseModel):
    """Tie groups of object labels, best first."""

    model_config = ConfigDict(frozen=True)

    groups: List[List[str]]
    tie_tolerance: float

    def __str__(self) -> str:
        return " > ".join(" = ".join(group) for group in self.groups)

    def positions(self) -> Dict[str, int]:
        """Group index of every object (0 is the best group)."""
        return {label: k for k, group in enumerate(self.groups) for label in group}


class IterationTrace(BaseModel):
    """
    Iterates q(0), q(1), ... of the iterative least squares solver.

    ``iterates[k]`` is q(k); ``step_deltas[k]`` is the sup-norm of q(k) - q(k-1) with
    q(-1) = 0, which equals the sup-norm of P^k s / d.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    objects: List[str]
    iterates: np.ndarray
    step_deltas: np.ndarray
    max_degree: float
    tolerance: float
    converged_at: Optional[int] = None
    ranking_stable_at: Optional[int] = None

    @field_validator('iterates', 'step_deltas', mode='before')
    @classmethod
    def validate_arrays(cls, v):
        array = np.array(v, dtype=float)
        array.setflags(write=False)
        return array

    @property
    def steps(self) -> int:
        """Index of the last recorded iterate."""
        return self.iterates.shape[0] - 1

    def snapshot(self, k: int) -> RatingVector:
        return RatingVector(
            objects=self.objects,
            values=self.iterates[k],
            method=RatingMethod.LEAST_SQUARES_ITERATIVE,
            parameters={"step": k, "tol": self.tolerance},
        )

    def snapshots(self) -> List[RatingVector]:
        return [self.snapshot(k) for k in range(self.iterates.shape[0])]
