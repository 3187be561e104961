"""Structured quadrilateral meshes and Q1/Q2 Lagrangian function spaces.

All meshes are uniform grids of axis-aligned quadrilaterals on a rectangle,
so every element shares the same (diagonal, constant) Jacobian.  Degrees of
freedom live on a tensor-product lattice; the local ordering inside each
element is fixed:

* Q1: the four corners, counter-clockwise from the lower left.
* Q2: corners (counter-clockwise), then edge midpoints (bottom, right,
  top, left), then the cell centre.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SIDES = ("left", "right", "bottom", "top")

#: Lattice offsets of the local nodes relative to the element origin,
#: in units of the dof spacing.  Index 0..3 are corners (CCW), for Q2
#: index 4..7 are edge midpoints (bottom/right/top/left) and 8 the centre.
LOCAL_OFFSETS = {
    1: np.array([(0, 0), (1, 0), (1, 1), (0, 1)]),
    2: np.array(
        [(0, 0), (2, 0), (2, 2), (0, 2), (1, 0), (2, 1), (1, 2), (0, 1), (1, 1)]
    ),
}

#: Reference coordinates on [-1, 1]^2 of the local nodes, same ordering.
REFERENCE_NODES = {
    degree: offs / degree * 2.0 - 1.0 for degree, offs in LOCAL_OFFSETS.items()
}


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle (x0, x1) x (y0, y1)."""

    x0: float
    x1: float
    y0: float
    y1: float

    def __post_init__(self):
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(f"degenerate rectangle: {self}")

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0


class Mesh:
    """Uniform grid of ``nx`` x ``ny`` axis-aligned quadrilaterals.

    Attributes
    ----------
    vertices : (n_vertices, 2) float array
        Vertex coordinates, x varying fastest.
    elements : (n_elements, 4) int array
        Vertex indices per element, counter-clockwise from the lower left.
    boundary_edges : dict
        Side tag -> (n_edges, 2) array of vertex index pairs along that side.
    """

    def __init__(self, rect: Rect, nx: int, ny: int):
        if nx < 1 or ny < 1:
            raise ValueError(f"element counts must be positive, got {nx} x {ny}")
        self.rect = rect
        self.nx = int(nx)
        self.ny = int(ny)
        self.hx = rect.width / nx
        self.hy = rect.height / ny

        xs = np.linspace(rect.x0, rect.x1, nx + 1)
        ys = np.linspace(rect.y0, rect.y1, ny + 1)
        X, Y = np.meshgrid(xs, ys, indexing="xy")
        self.vertices = np.column_stack([X.ravel(), Y.ravel()])

        ex, ey = np.meshgrid(np.arange(nx), np.arange(ny), indexing="xy")
        ex = ex.ravel()
        ey = ey.ravel()
        v00 = ey * (nx + 1) + ex
        self.elements = np.column_stack(
            [v00, v00 + 1, v00 + nx + 2, v00 + nx + 1]
        )

        j = np.arange(ny)
        i = np.arange(nx)
        left = np.column_stack([j * (nx + 1), (j + 1) * (nx + 1)])
        right = left + nx
        bottom = np.column_stack([i, i + 1])
        top = bottom + ny * (nx + 1)
        self.boundary_edges = {
            "left": left,
            "right": right,
            "bottom": bottom,
            "top": top,
        }

    @property
    def n_elements(self) -> int:
        return self.nx * self.ny

    @property
    def n_vertices(self) -> int:
        return (self.nx + 1) * (self.ny + 1)

    def element_origins(self):
        """Lower-left corner coordinates of every element, shape (n_elements, 2)."""
        ex = np.arange(self.n_elements) % self.nx
        ey = np.arange(self.n_elements) // self.nx
        return np.column_stack(
            [self.rect.x0 + ex * self.hx, self.rect.y0 + ey * self.hy]
        )


def build_mesh(rect: Rect, nx: int, ny: int) -> Mesh:
    """Build a uniform structured quad mesh on ``rect``."""
    return Mesh(rect, nx, ny)


def refine_uniform(mesh: Mesh) -> Mesh:
    """Halve the element size in both directions."""
    return Mesh(mesh.rect, 2 * mesh.nx, 2 * mesh.ny)


class FunctionSpace:
    """Scalar Lagrangian space of degree 1 (Q1) or 2 (Q2) on a structured mesh.

    Global dofs form a lattice of shape ``(degree*nx + 1) x (degree*ny + 1)``
    numbered with x varying fastest.  ``elem_dofs`` maps each element to its
    local nodes in the fixed ordering documented at module level.
    """

    def __init__(self, mesh: Mesh, degree: int):
        if degree not in (1, 2):
            raise ValueError(f"unsupported polynomial degree {degree}")
        self.mesh = mesh
        self.degree = degree
        self.nx_dofs = degree * mesh.nx + 1
        self.ny_dofs = degree * mesh.ny + 1
        self.n_dofs = self.nx_dofs * self.ny_dofs

        xs = np.linspace(mesh.rect.x0, mesh.rect.x1, self.nx_dofs)
        ys = np.linspace(mesh.rect.y0, mesh.rect.y1, self.ny_dofs)
        X, Y = np.meshgrid(xs, ys, indexing="xy")
        self.dof_coords = np.column_stack([X.ravel(), Y.ravel()])

        offsets = LOCAL_OFFSETS[degree]
        ex = np.arange(mesh.n_elements) % mesh.nx
        ey = np.arange(mesh.n_elements) // mesh.nx
        base_i = degree * ex
        base_j = degree * ey
        gi = base_i[:, None] + offsets[None, :, 0]
        gj = base_j[:, None] + offsets[None, :, 1]
        self.elem_dofs = gj * self.nx_dofs + gi

        ii = np.arange(self.n_dofs) % self.nx_dofs
        jj = np.arange(self.n_dofs) // self.nx_dofs
        self._boundary = {
            "left": np.flatnonzero(ii == 0),
            "right": np.flatnonzero(ii == self.nx_dofs - 1),
            "bottom": np.flatnonzero(jj == 0),
            "top": np.flatnonzero(jj == self.ny_dofs - 1),
        }

    @property
    def n_local(self) -> int:
        return (self.degree + 1) ** 2

    def side_dofs(self, side: str):
        return self._boundary[side]


def build_space(mesh: Mesh, degree: int) -> FunctionSpace:
    """Build the Q1 or Q2 Lagrangian space on ``mesh``."""
    return FunctionSpace(mesh, degree)


def boundary_dofs(space: FunctionSpace, sides) -> np.ndarray:
    """Sorted dof indices on the requested sides.

    Corner dofs belong to both adjacent sides, so requesting e.g.
    ``("left", "bottom")`` returns their union without duplicates.
    """
    if isinstance(sides, str):
        sides = (sides,)
    if not sides:
        raise ValueError("at least one side must be requested")
    unknown = set(sides) - set(SIDES)
    if unknown:
        raise ValueError(f"unknown side tags: {sorted(unknown)}")
    return np.unique(np.concatenate([space.side_dofs(s) for s in sides]))
