from typing import List

from pydantic import BaseModel


class MeanReport(BaseModel):
    words: List[str]
    mean: List[float]
    converged: bool
    epochs_run: int
    grad_norm: float
    objective: float
