"""Finite-element solvers for incompressible flow with variable density and
variable (possibly non-Newtonian) viscosity.

The package provides three fully linearised, unconditionally stable IMEX
time-stepping schemes (coupled BDF1, coupled BDF2 and a first-order
fractional-step method), the spatial operators they need on structured
quadrilateral Q2/Q1 meshes, and the verification machinery (manufactured
solutions, Rayleigh-Taylor, viscoplastic droplet, energy monitors).
"""

from .mesh import Rect, Mesh, FunctionSpace, build_mesh, build_space, refine_uniform, boundary_dofs

__all__ = [
    "Rect",
    "Mesh",
    "FunctionSpace",
    "build_mesh",
    "build_space",
    "refine_uniform",
    "boundary_dofs",
]

__version__ = "0.1.0"
