"""Uniform tensor lattices on polysquare domains and scalar fields on them.

A domain of complex dimension ``n`` (1 or 2) is the product of closed
squares ``{|Re z_i| <= r, |Im z_i| <= r}``.  It is discretized by a
uniform lattice with ``m`` nodes per real axis, so arrays carry ``2n``
axes ordered ``(x_1, y_1, ..., x_n, y_n)`` with ``z_i = x_i + 1j*y_i``.
``m`` is odd so the origin is always a node.

This module provides the grid descriptor, scalar component fields,
4th-order finite differences, C^k sup-norms, cubic-spline interpolation
and restriction to smaller radii.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, singledispatch

import numpy as np
from scipy.interpolate import NdBSpline, make_interp_spline

__all__ = [
    "GridSpec",
    "ComponentField",
    "OutOfDomainError",
    "make_grid",
    "diff_axis",
    "ck_norm",
    "tensor_spline",
    "interpolate",
    "restrict",
    "K_MAX_DEFAULT",
]

#: Highest derivative order tracked by C^k norms unless overridden.
K_MAX_DEFAULT = 5


class OutOfDomainError(ValueError):
    """Raised when a point to interpolate lies outside the domain."""


@dataclass(frozen=True)
class GridSpec:
    """Descriptor of the uniform lattice on a polysquare of radius ``r``.

    Attributes
    ----------
    n : int
        Complex dimension, 1 or 2.
    r : float
        Half-width of every real coordinate range, ``0 < r <= 1``.
    m : int
        Nodes per real axis; odd and at least 9.
    """

    n: int
    r: float
    m: int

    @property
    def h(self) -> float:
        """Lattice spacing ``2r / (m - 1)``."""
        return 2.0 * self.r / (self.m - 1)

    @property
    def shape(self) -> tuple[int, ...]:
        """Array shape of a scalar field: ``(m,) * 2n``."""
        return (self.m,) * (2 * self.n)

    @property
    def num_nodes(self) -> int:
        return self.m ** (2 * self.n)

    @property
    def origin_index(self) -> tuple[int, ...]:
        """Multi-index of the origin node."""
        return ((self.m - 1) // 2,) * (2 * self.n)

    @property
    def axis(self) -> np.ndarray:
        """1D node coordinates ``linspace(-r, r, m)``."""
        return _axis_nodes(self.r, self.m)

    def real_points(self) -> np.ndarray:
        """All lattice nodes as real coordinates, shape ``shape + (2n,)``."""
        return _real_points(self)

    def complex_nodes(self) -> np.ndarray:
        """Complex coordinates of every node, shape ``shape + (n,)``."""
        pts = _real_points(self)
        return pts[..., 0::2] + 1j * pts[..., 1::2]


@lru_cache(maxsize=64)
def _axis_nodes(r: float, m: int) -> np.ndarray:
    x = np.linspace(-r, r, m)
    x.flags.writeable = False
    return x


@lru_cache(maxsize=32)
def _real_points(grid: GridSpec) -> np.ndarray:
    axes = np.meshgrid(*([grid.axis] * (2 * grid.n)), indexing="ij")
    pts = np.stack(axes, axis=-1)
    pts.flags.writeable = False
    return pts


def make_grid(n: int, r: float, m: int) -> GridSpec:
    """Validate parameters and build a :class:`GridSpec`.

    Raises
    ------
    ValueError
        If ``n`` is not 1 or 2, ``r`` is outside ``(0, 1]``, ``m`` is even
        (the origin must be a node) or ``m < 9``.
    """
    if n not in (1, 2):
        raise ValueError(f"complex dimension must be 1 or 2, got {n}")
    if not (0.0 < r <= 1.0):
        raise ValueError(f"radius must satisfy 0 < r <= 1, got {r}")
    if m % 2 == 0:
        raise ValueError(f"m must be odd so the origin is a node, got {m}")
    if m < 9:
        raise ValueError(f"need at least 9 nodes per axis, got {m}")
    return GridSpec(n=n, r=float(r), m=m)


@dataclass(frozen=True, eq=False)
class ComponentField:
    """One complex scalar per lattice node of a fixed grid."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != self.grid.shape:
            raise ValueError(
                f"values shape {vals.shape} does not match grid {self.grid.shape}"
            )
        if not np.all(np.isfinite(vals.view(np.float64))):
            raise ValueError("field values must be finite")
        object.__setattr__(self, "values", vals)


# ---------------------------------------------------------------------------
# Finite differences
# ---------------------------------------------------------------------------

# 4th-order first-derivative stencils.  Interior: centered 5-point.
# Rows near an edge use one-sided / skewed 5-point stencils of the same order.
_CENTERED = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_EDGE0 = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
_EDGE1 = np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / 12.0


@lru_cache(maxsize=64)
def _diff_matrix(m: int, h: float) -> np.ndarray:
    """Dense (m, m) matrix applying d/dx along one axis to 4th order."""
    D = np.zeros((m, m))
    for i in range(2, m - 2):
        D[i, i - 2 : i + 3] = _CENTERED
    D[0, :5] = _EDGE0
    D[1, :5] = _EDGE1
    # Mirror stencils at the far edge: d/dx anti-commutes with reversal.
    D[m - 1, m - 5 :] = -_EDGE0[::-1]
    D[m - 2, m - 5 :] = -_EDGE1[::-1]
    D /= h
    D.flags.writeable = False
    return D


def diff_axis(values: np.ndarray, grid: GridSpec, axis: int) -> np.ndarray:
    """Partial derivative of a node array along one real axis (4th order)."""
    D = _diff_matrix(grid.m, grid.h)
    out = np.tensordot(D, np.moveaxis(values, axis, 0), axes=(1, 0))
    return np.moveaxis(out, 0, axis)


def _sup(values: np.ndarray) -> float:
    return float(np.abs(values).max())


def _array_ck_norm(values: np.ndarray, grid: GridSpec, k: int) -> float:
    """Sup over nodes and over all partial derivatives of order <= k."""
    best = _sup(values)
    # Mixed partials commute (the 1D difference matrices act on distinct
    # axes), so enumerate each multiset of axes once: nondecreasing order.
    frontier = [(values, 0)]
    for _ in range(k):
        new_frontier = []
        for arr, min_axis in frontier:
            for ax in range(min_axis, 2 * grid.n):
                d = diff_axis(arr, grid, ax)
                best = max(best, _sup(d))
                new_frontier.append((d, ax))
        frontier = new_frontier
    return best


@singledispatch
def ck_norm(field_like, k: int, *, k_max: int = K_MAX_DEFAULT) -> float:
    """C^k sup-norm of a field-like object.

    Dispatches on the argument type; container types (deformations,
    generalized vector fields, ...) register overloads that take the max
    over their components.
    """
    raise TypeError(f"ck_norm: unsupported type {type(field_like).__name__}")


@ck_norm.register
def _(field: ComponentField, k: int, *, k_max: int = K_MAX_DEFAULT) -> float:
    if k < 0:
        raise ValueError("derivative order k must be >= 0")
    if k > k_max:
        raise ValueError(f"k={k} exceeds k_max={k_max}")
    return _array_ck_norm(field.values, field.grid, k)


# ---------------------------------------------------------------------------
# Interpolation
# ---------------------------------------------------------------------------


def tensor_spline(grid: GridSpec, values: np.ndarray) -> NdBSpline:
    """Tensor-product cubic spline (not-a-knot) through the node values.

    ``values`` may carry trailing batch axes beyond ``grid.shape``; the
    returned spline maps points of shape ``(..., 2n)`` to values with the
    batch axes appended.  Exact on polynomials of degree <= 3 per axis and
    exact at the nodes.
    """
    c = np.asarray(values, dtype=np.complex128)
    x = grid.axis
    knots = []
    for ax in range(2 * grid.n):
        spl = make_interp_spline(x, np.moveaxis(c, ax, 0), k=3)
        knots.append(spl.t)
        c = np.moveaxis(spl.c, 0, ax)
    return NdBSpline(tuple(knots), c, k=3)


def _field_spline(field: ComponentField) -> NdBSpline:
    spl = field.__dict__.get("_spline")
    if spl is None:
        spl = tensor_spline(field.grid, field.values)
        object.__setattr__(field, "_spline", spl)
    return spl


def check_in_domain(grid: GridSpec, points: np.ndarray, *, slack: float = 1e-12) -> None:
    """Raise :class:`OutOfDomainError` if any point leaves the polysquare."""
    pts = np.asarray(points, dtype=np.float64)
    worst = float(np.abs(pts).max()) if pts.size else 0.0
    if worst > grid.r + slack:
        raise OutOfDomainError(
            f"point with sup-coordinate {worst:.6g} outside radius {grid.r:.6g}"
        )


def interpolate(field: ComponentField, point) -> complex | np.ndarray:
    """Evaluate a field at off-node points, shape ``(..., 2n)`` real coords.

    Exact at lattice nodes; raises :class:`OutOfDomainError` outside the
    closed domain.
    """
    pts = np.asarray(point, dtype=np.float64)
    if pts.shape[-1] != 2 * field.grid.n:
        raise ValueError(f"expected trailing axis of size {2 * field.grid.n}")
    check_in_domain(field.grid, pts)
    out = _field_spline(field)(pts)
    if out.shape == ():
        return complex(out)
    return out


# ---------------------------------------------------------------------------
# Restriction
# ---------------------------------------------------------------------------


@singledispatch
def restrict(field_like, r_new: float):
    """Resample a field-like object onto the lattice of a smaller radius.

    Container overloads are registered where the containers are defined.
    """
    raise TypeError(f"restrict: unsupported type {type(field_like).__name__}")


def restricted_grid(grid: GridSpec, r_new: float) -> GridSpec:
    if not 0.0 < r_new < grid.r:
        raise ValueError(f"need 0 < r_new < {grid.r}, got {r_new}")
    return GridSpec(n=grid.n, r=float(r_new), m=grid.m)


def resample_values(grid: GridSpec, values: np.ndarray, new_grid: GridSpec) -> np.ndarray:
    """Spline-resample node values (with optional trailing batch axes)."""
    spl = tensor_spline(grid, values)
    return spl(new_grid.real_points())


@restrict.register
def _(field: ComponentField, r_new: float) -> ComponentField:
    new_grid = restricted_grid(field.grid, r_new)
    return ComponentField(new_grid, resample_values(field.grid, field.values, new_grid))
