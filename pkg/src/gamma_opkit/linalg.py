"""Dense complex linear-algebra primitives shared by every module.

All operators are plain ``numpy.ndarray`` of ``complex128``.  Matrices are
validated on entry (finite entries, expected shape); defect operators and
their range bases are produced with a deterministic ordering so repeated
runs yield identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    IndefiniteBeyondTolerance,
    NotAContraction,
    NotHermitian,
)


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used across all modules.

    ``rank_tol`` is an absolute singular-value cutoff (all operators live in
    the closed unit ball, so absolute scale is fixed).  ``algebraic_tol`` and
    ``grid_tol`` are the two membership regimes: exact algebraic tests versus
    grid-limited ones (mu computation, boundary-limit cases).
    """

    rank_tol: float = 1e-10
    residual_tol: float = 1e-8
    convergence_tol: float = 1e-10
    grid_points: int = 64
    algebraic_tol: float = 1e-9
    grid_tol: float = 1e-3

    def __post_init__(self):
        if min(self.rank_tol, self.residual_tol, self.convergence_tol,
               self.algebraic_tol, self.grid_tol) <= 0:
            raise ValueError("tolerances must be strictly positive")
        if self.rank_tol > 1e-6:
            raise ValueError("rank_tol must be <= 1e-6")
        if self.grid_points < 1:
            raise ValueError("grid_points must be positive")


DEFAULT_TOL = Tolerances()


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and return a 2-d complex matrix with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"{name}: expected 2-d array, got ndim={m.ndim}")
    if m.size and not np.all(np.isfinite(m)):
        raise ValueError(f"{name}: entries must be finite")
    return m


def as_square(a, name: str = "matrix") -> np.ndarray:
    m = as_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"{name}: expected square matrix, got {m.shape}")
    return m


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def op_norm(m) -> float:
    """Largest singular value; 0 for degenerate (empty) matrices."""
    m = as_matrix(m, "op_norm")
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def herm_defect(m: np.ndarray) -> float:
    return op_norm(m - dagger(m))


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal column basis of a subspace of an ambient space."""

    ambient_dim: int
    basis: np.ndarray  # ambient_dim x dim, orthonormal columns

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ dagger(self.basis)

    def orthonormality_defect(self) -> float:
        return op_norm(dagger(self.basis) @ self.basis - eye(self.dim))


def full_basis(n: int) -> SubspaceBasis:
    return SubspaceBasis(n, eye(n))


def empty_basis(n: int) -> SubspaceBasis:
    return SubspaceBasis(n, np.zeros((n, 0), dtype=complex))


def _fix_column_phases(v: np.ndarray, tol: float) -> np.ndarray:
    """Rotate each column so its first entry above tol is real positive."""
    v = v.copy()
    for j in range(v.shape[1]):
        col = v[:, j]
        idx = np.flatnonzero(np.abs(col) > tol)
        if idx.size:
            pivot = col[idx[0]]
            v[:, j] = col * (abs(pivot) / pivot)
    return v


def _sorted_eigh(m: np.ndarray, tol: float):
    """Hermitian eigendecomposition, eigenvalues descending, deterministic phases.

    Ties in eigenvalues are broken by lexicographic order of the phase-fixed
    eigenvectors so bases are reproducible across runs.
    """
    w, v = np.linalg.eigh(m)
    w = w[::-1]
    v = _fix_column_phases(v[:, ::-1], tol)
    # stable tie-break: group equal eigenvalues, sort columns lexicographically
    order = np.arange(len(w))
    i = 0
    while i < len(w):
        j = i
        while j + 1 < len(w) and abs(w[j + 1] - w[i]) <= tol:
            j += 1
        if j > i:
            block = order[i:j + 1]
            keys = np.array([
                np.round(np.concatenate([v[:, k].real, v[:, k].imag]), 12)
                for k in block])
            order[i:j + 1] = block[np.lexsort(keys.T[::-1])]
        i = j + 1
    return w[order], v[:, order]


def psd_sqrt(m, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Hermitian PSD square root R of m with R @ R = m.

    Eigenvalues with |lambda| <= rank_tol clamp to 0 before the square root;
    this kills the sqrt-amplified rounding noise that I - P*P carries near
    isometries.  Eigenvalues below -rank_tol raise.
    """
    m = as_square(m, "psd_sqrt")
    if m.size == 0:
        return m.copy()
    if herm_defect(m) > tol.residual_tol:
        raise NotHermitian(f"hermiticity defect {herm_defect(m):.3e}")
    m = (m + dagger(m)) / 2
    w, v = np.linalg.eigh(m)
    if w.min(initial=0.0) < -tol.rank_tol:
        raise IndefiniteBeyondTolerance(f"eigenvalue {w.min():.3e} < -rank_tol")
    w = np.where(np.abs(w) <= tol.rank_tol, 0.0, np.maximum(w, 0.0))
    r = (v * np.sqrt(w)) @ dagger(v)
    return (r + dagger(r)) / 2


def defect(p, tol: Tolerances = DEFAULT_TOL):
    """Defect operator D = (I - P*P)^{1/2} and an orthonormal basis of Ran D.

    The basis is ordered by decreasing singular value of D, with deterministic
    phase fixing.  Raises NotAContraction when ||P|| > 1 + rank_tol.
    """
    p = as_square(p, "defect")
    nrm = op_norm(p)
    if nrm > 1 + tol.rank_tol:
        raise NotAContraction(f"||P|| = {nrm:.12f} > 1 + rank_tol")
    d = psd_sqrt(eye(p.shape[0]) - dagger(p) @ p, tol)
    w, v = _sorted_eigh(d, tol.rank_tol)
    rank = int(np.sum(w > tol.rank_tol))
    return d, SubspaceBasis(p.shape[0], v[:, :rank])


def defect_pinv(d: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of a Hermitian PSD defect operator."""
    d = as_square(d, "defect_pinv")
    if d.size == 0:
        return d.copy()
    w, v = np.linalg.eigh((d + dagger(d)) / 2)
    inv = np.where(w > tol.rank_tol, 1.0 / np.where(w > tol.rank_tol, w, 1.0), 0.0)
    return (v * inv) @ dagger(v)


def compress(t, domain: SubspaceBasis, codomain: SubspaceBasis) -> np.ndarray:
    """Matrix of the compression codomain* . T . domain in orthonormal bases."""
    t = as_matrix(t, "compress")
    if t.shape != (codomain.ambient_dim, domain.ambient_dim):
        raise DimensionMismatch(
            f"operator {t.shape} incompatible with ambient "
            f"({codomain.ambient_dim}, {domain.ambient_dim})")
    return dagger(codomain.basis) @ t @ domain.basis


def commutation_residual(members) -> float:
    """max over pairs of ||T_i T_j - T_j T_i||."""
    ms = [as_square(m, f"member {i}") for i, m in enumerate(members)]
    dims = {m.shape[0] for m in ms}
    if len(dims) > 1:
        raise DimensionMismatch(f"members have mixed dimensions {sorted(dims)}")
    res = 0.0
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            res = max(res, op_norm(ms[i] @ ms[j] - ms[j] @ ms[i]))
    return res


def windowed_norm(m: np.ndarray, rows=None, cols=None) -> float:
    """Operator norm of a sub-block selected by boolean masks (None = all)."""
    m = as_matrix(m, "windowed_norm")
    if rows is not None:
        m = m[np.asarray(rows, dtype=bool), :]
    if cols is not None:
        m = m[:, np.asarray(cols, dtype=bool)]
    return op_norm(m)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary via phase-fixed QR of a Ginibre matrix."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    return q * ph
