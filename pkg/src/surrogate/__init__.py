# Sample sets and quadratic interpolation models
from .models import (
    QuadraticModel,
    ModelVector,
    fit_models,
    model_eval,
    model_grad,
    n_interpolation_points,
    quadratic_basis,
)
from .sampling import SampleSet, generate_sample_set

__all__ = [
    "QuadraticModel",
    "ModelVector",
    "fit_models",
    "model_eval",
    "model_grad",
    "n_interpolation_points",
    "quadratic_basis",
    "SampleSet",
    "generate_sample_set",
]
