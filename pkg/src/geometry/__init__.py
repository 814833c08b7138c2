# Projection hyperplane, density functions, reference selection
from .projection import ProjectionBasis, ProjectedPoint, build_basis, project, project_all, reconstruct
from .density import (
    DecreasingFunction,
    phi,
    density_at,
    archive_basis,
    archive_projections,
    archive_densities,
    select_reference,
    density_surface,
)

__all__ = [
    "ProjectionBasis",
    "ProjectedPoint",
    "build_basis",
    "project",
    "project_all",
    "reconstruct",
    "DecreasingFunction",
    "phi",
    "density_at",
    "archive_basis",
    "archive_projections",
    "archive_densities",
    "select_reference",
    "density_surface",
]
