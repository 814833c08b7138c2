# Generational distance, hypervolume and true-front samples
from .indicators import (
    gd,
    hypervolume,
    hypervolume_estimate,
    default_reference,
    tracked_hypervolume,
)
from .fronts import FrontSample, front_sampler

__all__ = [
    "gd",
    "hypervolume",
    "hypervolume_estimate",
    "default_reference",
    "tracked_hypervolume",
    "FrontSample",
    "front_sampler",
]
