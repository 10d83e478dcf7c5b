"""Containers for graded tensor sections and generalized diffeomorphisms.

Conventions used throughout the package.  On a domain of complex
dimension ``n`` the relevant frame bundle splits into two maximal
isotropic halves:

* ``L``  spanned by ``{d/dz̄_i, dz_i}``,
* ``L*`` spanned by ``{d/dz_i, dz̄_i}`` (contraction pairing).

Degree-``k`` sections of the exterior powers of ``L*`` are stored by
bidegree blocks keyed ``(I, J)``: ``I`` a strictly increasing tuple of
contravariant indices (``d/dz`` factors, listed first in the wedge) and
``J`` a strictly increasing tuple of covariant indices (``dz̄``
factors).  A degree-2 section is a deformation with graded parts

* ``eps1`` — bivector block, keys ``(i, j)``, ``i < j``,
* ``eps2`` — mixed block, keys ``(i, j)`` for ``d/dz_i ⊗ dz̄_j``,
* ``eps3`` — form block, keys ``(i, j)``, ``i < j``.

Generalized diffeomorphisms are pairs (B-field, diffeomorphism) stored
as a real closed 2-form plus a displacement field fixing the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .grids import (
    GridSpec,
    K_MAX_DEFAULT,
    _array_ck_norm,
    ck_norm,
    resample_values,
    restrict,
    restricted_grid,
)

__all__ = [
    "GradedSection",
    "Deformation",
    "GenVectorField",
    "GenDiffeo",
    "decompose",
    "zeta",
    "diffeo_norm",
    "identity_gen_diffeo",
    "deformation_to_matrix",
    "matrix_to_deformation",
    "antisymmetry_defect",
    "pairing_swap",
]


def _as_complex_block(grid: GridSpec, values) -> np.ndarray:
    vals = np.asarray(values, dtype=np.complex128)
    if vals.shape != grid.shape:
        raise ValueError(f"block shape {vals.shape} != grid shape {grid.shape}")
    return vals


def _as_real_block(grid: GridSpec, values) -> np.ndarray:
    vals = np.asarray(values, dtype=np.float64)
    if vals.shape != grid.shape:
        raise ValueError(f"block shape {vals.shape} != grid shape {grid.shape}")
    return vals


def _zeros(grid: GridSpec) -> np.ndarray:
    return np.zeros(grid.shape, dtype=np.complex128)


# ---------------------------------------------------------------------------
# Graded sections of ∧^k L*
# ---------------------------------------------------------------------------


def bidegree_keys(n: int, p: int, q: int) -> list[tuple[tuple, tuple]]:
    """All canonical (I, J) keys of bidegree (p, q) in dimension n."""
    return [
        (I, J)
        for I in combinations(range(n), p)
        for J in combinations(range(n), q)
    ]


def degree_keys(n: int, degree: int) -> list[tuple[tuple, tuple]]:
    """All canonical keys of total degree ``degree`` in dimension ``n``."""
    keys = []
    for p in range(degree + 1):
        keys.extend(bidegree_keys(n, p, degree - p))
    return keys


@dataclass(frozen=True, eq=False)
class GradedSection:
    """Section of ``∧^k L*`` stored as sparse bidegree blocks.

    ``components`` maps canonical keys ``(I, J)`` to complex node arrays;
    missing keys are zero.
    """

    grid: GridSpec
    degree: int
    components: dict

    def __post_init__(self) -> None:
        n = self.grid.n
        clean = {}
        for (I, J), vals in self.components.items():
            I, J = tuple(I), tuple(J)
            if len(I) + len(J) != self.degree:
                raise ValueError(f"key {(I, J)} has wrong total degree")
            if list(I) != sorted(set(I)) or list(J) != sorted(set(J)):
                raise ValueError(f"key {(I, J)} not strictly increasing")
            if any(i >= n for i in I + J):
                raise ValueError(f"key {(I, J)} out of range for n={n}")
            clean[(I, J)] = _as_complex_block(self.grid, vals)
        object.__setattr__(self, "components", clean)

    def get(self, I: tuple, J: tuple) -> np.ndarray:
        """Block for a canonical key, zeros if absent."""
        vals = self.components.get((tuple(I), tuple(J)))
        return vals if vals is not None else _zeros(self.grid)

    def bidegree_part(self, p: int, q: int) -> "GradedSection":
        comp = {
            key: vals
            for key, vals in self.components.items()
            if len(key[0]) == p and len(key[1]) == q
        }
        return GradedSection(self.grid, self.degree, comp)

    def __add__(self, other: "GradedSection") -> "GradedSection":
        if not isinstance(other, GradedSection):
            return NotImplemented
        if other.degree != self.degree or other.grid != self.grid:
            raise ValueError("sections live on different grids or degrees")
        comp = dict(self.components)
        for key, vals in other.components.items():
            comp[key] = comp[key] + vals if key in comp else vals
        return GradedSection(self.grid, self.degree, comp)

    def __sub__(self, other: "GradedSection") -> "GradedSection":
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "GradedSection":
        return GradedSection(
            self.grid,
            self.degree,
            {key: scalar * vals for key, vals in self.components.items()},
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GradedSection":
        return (-1.0) * self


@ck_norm.register
def _(section: GradedSection, k: int, *, k_max: int = K_MAX_DEFAULT) -> float:
    if k > k_max:
        raise ValueError(f"k={k} exceeds k_max={k_max}")
    best = 0.0
    for vals in section.components.values():
        best = max(best, _array_ck_norm(vals, section.grid, k))
    return best


@restrict.register
def _(section: GradedSection, r_new: float) -> GradedSection:
    new_grid = restricted_grid(section.grid, r_new)
    comp = {
        key: resample_values(section.grid, vals, new_grid)
        for key, vals in section.components.items()
    }
    return GradedSection(new_grid, section.degree, comp)


# ---------------------------------------------------------------------------
# Deformations (degree-2 sections, dense graded storage)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Deformation:
    """Degree-2 section split into graded blocks ``eps1``/``eps2``/``eps3``.

    All blocks are stored densely: ``eps2`` holds every ``(i, j)``,
    the antisymmetric blocks hold every ``i < j`` pair (empty for n=1).
    """

    grid: GridSpec
    eps1: dict = field(default_factory=dict)
    eps2: dict = field(default_factory=dict)
    eps3: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = self.grid.n
        pairs = list(combinations(range(n), 2))
        full = lambda src, keys: {
            key: _as_complex_block(self.grid, src[key]) if key in src else _zeros(self.grid)
            for key in keys
        }
        for name, keys in (("eps1", pairs), ("eps3", pairs)):
            src = getattr(self, name)
            extra = set(src) - set(keys)
            if extra:
                raise ValueError(f"{name} has out-of-range keys {extra}")
            object.__setattr__(self, name, full(src, keys))
        sq = [(i, j) for i in range(n) for j in range(n)]
        extra = set(self.eps2) - set(sq)
        if extra:
            raise ValueError(f"eps2 has out-of-range keys {extra}")
        object.__setattr__(self, "eps2", full(self.eps2, sq))

    @classmethod
    def zeros(cls, grid: GridSpec) -> "Deformation":
        return cls(grid)

    def as_section(self) -> GradedSection:
        comp = {}
        for (i, j), vals in self.eps1.items():
            comp[((i, j), ())] = vals
        for (i, j), vals in self.eps2.items():
            comp[((i,), (j,))] = vals
        for (i, j), vals in self.eps3.items():
            comp[((), (i, j))] = vals
        return GradedSection(self.grid, 2, comp)

    @classmethod
    def from_section(cls, section: GradedSection) -> "Deformation":
        if section.degree != 2:
            raise ValueError("deformations are degree-2 sections")
        eps1, eps2, eps3 = {}, {}, {}
        for (I, J), vals in section.components.items():
            if len(I) == 2:
                eps1[I] = vals
            elif len(I) == 1:
                eps2[(I[0], J[0])] = vals
            else:
                eps3[J] = vals
        return cls(section.grid, eps1, eps2, eps3)

    def _zip(self, other: "Deformation", op) -> "Deformation":
        if other.grid != self.grid:
            raise ValueError("deformations live on different grids")
        blocks = {}
        for name in ("eps1", "eps2", "eps3"):
            a, b = getattr(self, name), getattr(other, name)
            blocks[name] = {key: op(a[key], b[key]) for key in a}
        return Deformation(self.grid, **blocks)

    def __add__(self, other):
        if not isinstance(other, Deformation):
            return NotImplemented
        return self._zip(other, np.add)

    def __sub__(self, other):
        if not isinstance(other, Deformation):
            return NotImplemented
        return self._zip(other, np.subtract)

    def __mul__(self, scalar) -> "Deformation":
        return Deformation(
            self.grid,
            **{
                name: {key: scalar * vals for key, vals in getattr(self, name).items()}
                for name in ("eps1", "eps2", "eps3")
            },
        )

    __rmul__ = __mul__

    def __neg__(self) -> "Deformation":
        return (-1.0) * self


def decompose(eps: Deformation) -> tuple[Deformation, Deformation, Deformation]:
    """Split into pure graded parts; their sum recomposes ``eps`` exactly."""
    g = eps.grid
    return (
        Deformation(g, eps1=eps.eps1),
        Deformation(g, eps2=eps.eps2),
        Deformation(g, eps3=eps.eps3),
    )


def zeta(eps: Deformation) -> Deformation:
    """Drop the bivector block: the non-bivector part ``eps2 + eps3``."""
    return Deformation(eps.grid, eps2=eps.eps2, eps3=eps.eps3)


@ck_norm.register
def _(eps: Deformation, k: int, *, k_max: int = K_MAX_DEFAULT) -> float:
    if k > k_max:
        raise ValueError(f"k={k} exceeds k_max={k_max}")
    best = 0.0
    for name in ("eps1", "eps2", "eps3"):
        for vals in getattr(eps, name).values():
            best = max(best, _array_ck_norm(vals, eps.grid, k))
    return best


@restrict.register
def _(eps: Deformation, r_new: float) -> Deformation:
    new_grid = restricted_grid(eps.grid, r_new)
    blocks = {}
    for name in ("eps1", "eps2", "eps3"):
        blocks[name] = {
            key: resample_values(eps.grid, vals, new_grid)
            for key, vals in getattr(eps, name).items()
        }
    return Deformation(new_grid, **blocks)


# ---------------------------------------------------------------------------
# Generalized vector fields (degree-1 sections)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GenVectorField:
    """Section ``v = X + ξ`` of ``L*``: vector part plus (0,1)-form part.

    ``X[i]`` is the coefficient of ``d/dz_i``; ``xi[j]`` the coefficient
    of ``dz̄_j``.  Both dense over ``range(n)``.
    """

    grid: GridSpec
    X: dict = field(default_factory=dict)
    xi: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = self.grid.n
        for name in ("X", "xi"):
            src = getattr(self, name)
            extra = set(src) - set(range(n))
            if extra:
                raise ValueError(f"{name} has out-of-range keys {extra}")
            dense = {
                i: _as_complex_block(self.grid, src[i]) if i in src else _zeros(self.grid)
                for i in range(n)
            }
            object.__setattr__(self, name, dense)

    def as_section(self) -> GradedSection:
        comp = {((i,), ()): vals for i, vals in self.X.items()}
        comp.update({((), (j,)): vals for j, vals in self.xi.items()})
        return GradedSection(self.grid, 1, comp)

    @classmethod
    def from_section(cls, section: GradedSection) -> "GenVectorField":
        if section.degree != 1:
            raise ValueError("generalized vector fields are degree-1 sections")
        X = {I[0]: vals for (I, J), vals in section.components.items() if I}
        xi = {J[0]: vals for (I, J), vals in section.components.items() if J}
        return cls(section.grid, X, xi)

    def __mul__(self, scalar) -> "GenVectorField":
        return GenVectorField(
            self.grid,
            {i: scalar * v for i, v in self.X.items()},
            {j: scalar * v for j, v in self.xi.items()},
        )

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, GenVectorField):
            return NotImplemented
        if other.grid != self.grid:
            raise ValueError("fields live on different grids")
        return GenVectorField(
            self.grid,
            {i: self.X[i] + other.X[i] for i in self.X},
            {j: self.xi[j] + other.xi[j] for j in self.xi},
        )


@ck_norm.register
def _(v: GenVectorField, k: int, *, k_max: int = K_MAX_DEFAULT) -> float:
    if k > k_max:
        raise ValueError(f"k={k} exceeds k_max={k_max}")
    best = 0.0
    for part in (v.X, v.xi):
        for vals in part.values():
            best = max(best, _array_ck_norm(vals, v.grid, k))
    return best


@restrict.register
def _(v: GenVectorField, r_new: float) -> GenVectorField:
    new_grid = restricted_grid(v.grid, r_new)
    return GenVectorField(
        new_grid,
        {i: resample_values(v.grid, vals, new_grid) for i, vals in v.X.items()},
        {j: resample_values(v.grid, vals, new_grid) for j, vals in v.xi.items()},
    )


# ---------------------------------------------------------------------------
# Generalized diffeomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GenDiffeo:
    """Pair (B, φ) of a real closed 2-form and an origin-fixing map.

    ``disp`` stores the displacement ``φ - Id`` per real axis (dense over
    ``range(2n)``); ``B`` stores the 2-form components ``B[(a, b)]`` for
    real axes ``a < b``.  ``factors`` optionally records the composition
    history ``(outermost, ..., innermost)`` of elementary transforms;
    consumers may replay it for an exact group action.
    """

    grid: GridSpec
    disp: dict = field(default_factory=dict)
    B: dict = field(default_factory=dict)
    factors: tuple = ()

    def __post_init__(self) -> None:
        d = 2 * self.grid.n
        extra = set(self.disp) - set(range(d))
        if extra:
            raise ValueError(f"disp has out-of-range keys {extra}")
        dense = {
            a: _as_real_block(self.grid, self.disp[a])
            if a in self.disp
            else np.zeros(self.grid.shape)
            for a in range(d)
        }
        object.__setattr__(self, "disp", dense)
        pairs = list(combinations(range(d), 2))
        extra = set(self.B) - set(pairs)
        if extra:
            raise ValueError(f"B has out-of-range keys {extra}")
        denseB = {
            key: _as_real_block(self.grid, self.B[key])
            if key in self.B
            else np.zeros(self.grid.shape)
            for key in pairs
        }
        object.__setattr__(self, "B", denseB)
        origin = self.grid.origin_index
        worst = max(abs(vals[origin]) for vals in self.disp.values())
        if worst > 1e-9 * max(1.0, self.grid.r):
            raise ValueError(f"map must fix the origin; displacement {worst:.3e} there")

    def phi_values(self) -> np.ndarray:
        """Node images under φ, shape ``grid.shape + (2n,)``."""
        pts = np.array(self.grid.real_points())
        for a, vals in self.disp.items():
            pts[..., a] += vals
        return pts

    def disp_stack(self) -> np.ndarray:
        """Displacement as one array, shape ``grid.shape + (2n,)``."""
        return np.stack([self.disp[a] for a in range(2 * self.grid.n)], axis=-1)

    def is_identity_phi(self, tol: float = 0.0) -> bool:
        return all(np.abs(vals).max() <= tol for vals in self.disp.values())


def identity_gen_diffeo(grid: GridSpec) -> GenDiffeo:
    return GenDiffeo(grid)


def diffeo_norm(phi: GenDiffeo, k: int, *, k_max: int = K_MAX_DEFAULT) -> float:
    """Distance to the identity: ``max(‖B‖_{max(k-1,0)}, ‖φ - Id‖_k)``."""
    if k < 0:
        raise ValueError("derivative order k must be >= 0")
    if k > k_max:
        raise ValueError(f"k={k} exceeds k_max={k_max}")
    kb = max(k - 1, 0)
    best = 0.0
    for vals in phi.B.values():
        best = max(best, _array_ck_norm(vals.astype(np.complex128), phi.grid, kb))
    for vals in phi.disp.values():
        best = max(best, _array_ck_norm(vals.astype(np.complex128), phi.grid, k))
    return best


@restrict.register
def _(phi: GenDiffeo, r_new: float) -> GenDiffeo:
    """Resample both members onto a smaller lattice.

    The composition history is dropped: a restricted transform stands on
    its own resampled pair.
    """
    new_grid = restricted_grid(phi.grid, r_new)
    disp = {
        a: resample_values(phi.grid, vals, new_grid).real
        for a, vals in phi.disp.items()
    }
    B = {
        key: resample_values(phi.grid, vals, new_grid).real
        for key, vals in phi.B.items()
    }
    return GenDiffeo(new_grid, disp, B)


# ---------------------------------------------------------------------------
# Matrix dictionary for deformations
# ---------------------------------------------------------------------------
#
# Per node, a degree-2 section acts on the isotropic half L by contraction,
# landing in the complementary half.  In the frame order
# (d/dz̄_i, dz_i | d/dz_i, dz̄_i) this is a 2n×2n complex matrix
#
#     E = [[-M, -B1], [-W, M^T]]
#
# with M the mixed block (rows i, cols j for d/dz_i ⊗ dz̄_j), B1 the
# antisymmetric bivector matrix and W the antisymmetric form matrix.


def pairing_swap(n: int) -> np.ndarray:
    """Block swap matrix of the L̄–L duality pairing."""
    P = np.zeros((2 * n, 2 * n))
    P[:n, n:] = np.eye(n)
    P[n:, :n] = np.eye(n)
    return P


def _antisym_from_pairs(grid: GridSpec, block: dict) -> np.ndarray:
    n = grid.n
    A = np.zeros(grid.shape + (n, n), dtype=np.complex128)
    for (i, j), vals in block.items():
        A[..., i, j] = vals
        A[..., j, i] = -vals
    return A


def deformation_to_matrix(eps: Deformation) -> np.ndarray:
    """Per-node matrix of the contraction action, shape ``shape + (2n, 2n)``."""
    n = eps.grid.n
    M = np.zeros(eps.grid.shape + (n, n), dtype=np.complex128)
    for (i, j), vals in eps.eps2.items():
        M[..., i, j] = vals
    B1 = _antisym_from_pairs(eps.grid, eps.eps1)
    W = _antisym_from_pairs(eps.grid, eps.eps3)
    E = np.zeros(eps.grid.shape + (2 * n, 2 * n), dtype=np.complex128)
    E[..., :n, :n] = -M
    E[..., :n, n:] = -B1
    E[..., n:, :n] = -W
    E[..., n:, n:] = np.swapaxes(M, -1, -2)
    return E


def project_antisymmetric(E: np.ndarray, n: int) -> np.ndarray:
    """Project a per-node matrix onto the image of the dictionary above."""
    P = pairing_swap(n)
    return 0.5 * (E - P @ np.swapaxes(E, -1, -2) @ P)


def antisymmetry_defect(E: np.ndarray, n: int) -> float:
    """Sup distance of ``E`` from its antisymmetric projection."""
    return float(np.abs(E - project_antisymmetric(E, n)).max())


def matrix_to_deformation(E: np.ndarray, grid: GridSpec) -> Deformation:
    """Invert the dictionary (caller projects first if needed)."""
    n = grid.n
    M = -E[..., :n, :n]
    B1 = -E[..., :n, n:]
    W = -E[..., n:, :n]
    eps2 = {(i, j): M[..., i, j] for i in range(n) for j in range(n)}
    eps1 = {(i, j): B1[..., i, j] for i, j in combinations(range(n), 2)}
    eps3 = {(i, j): W[..., i, j] for i, j in combinations(range(n), 2)}
    return Deformation(grid, eps1, eps2, eps3)
