"""Numerics for the one-parameter family of holomorphic function spaces
on the Hartogs triangle: weighted Bergman, Hardy, weighted Dirichlet and
Dirichlet spaces, their reproducing kernels, projections and isometries,
cross-validated by an independent quadrature oracle."""

from . import coeffspace, geometry, isometries, kernels, projections, quadrature, specfun, verify

__all__ = [
    "coeffspace",
    "geometry",
    "isometries",
    "kernels",
    "projections",
    "quadrature",
    "specfun",
    "verify",
]

__version__ = "0.1.0"
