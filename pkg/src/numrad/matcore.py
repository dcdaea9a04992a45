"""Complex matrix arithmetic and a self-contained Hermitian eigensolver.

The algebra element is a dense square complex matrix.  All operations are
pure functions on immutable values; the eigensolver is the cyclic complex
Jacobi iteration from :mod:`numrad._kernels`, which keeps the package free
of LAPACK at its core and is deterministic for fixed inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    BasisNotOrthonormal,
    ConvergenceError,
    DimensionMismatch,
    InvalidMatrix,
    NotHermitian,
)

#: Dimensions above this raise InvalidMatrix.  Desk-scale use is n <= 64.
HARD_DIM_CAP = 256

HERMITIAN_TOL = 1e-12
ORTHONORMAL_TOL = 1e-10
CLASSIFY_TOL = 1e-10


def _as_square_complex(entries) -> np.ndarray:
    try:
        arr = np.array(entries, dtype=np.complex128, copy=True)
    except (TypeError, ValueError) as exc:
        raise InvalidMatrix(f"cannot interpret entries as a complex matrix: {exc}") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise InvalidMatrix("empty matrix")
    if arr.shape[0] > HARD_DIM_CAP:
        raise InvalidMatrix(f"dimension {arr.shape[0]} exceeds the hard cap {HARD_DIM_CAP}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise InvalidMatrix("matrix entries must be finite")
    return arr


@dataclass(frozen=True)
class Matrix:
    """Immutable dense square complex matrix."""

    array: np.ndarray

    def __init__(self, entries):
        arr = _as_square_complex(entries)
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @property
    def dim(self) -> int:
        return self.array.shape[0]

    def adjoint(self) -> "Matrix":
        return Matrix(self.array.conj().T)

    def is_zero(self) -> bool:
        return not self.array.any()

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(self.array + other.array)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(self.array - other.array)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.array)

    def __mul__(self, scalar) -> "Matrix":
        return Matrix(self.array * complex(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(self.array @ other.array)

    def _check_dim(self, other: "Matrix") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __repr__(self) -> str:  # pragma: no cover
        return f"Matrix(dim={self.dim})"


def identity(dim: int) -> Matrix:
    return Matrix(np.eye(dim))


def zeros(dim: int) -> Matrix:
    return Matrix(np.zeros((dim, dim)))


def adjoint(m: Matrix) -> Matrix:
    """Conjugate transpose (the *-operation of the algebra)."""
    return m.adjoint()


def hermitian_part(m: Matrix) -> np.ndarray:
    """(m + m*)/2 as an ndarray; exactly Hermitian in floating point."""
    a = m.array
    return (a + a.conj().T) / 2.0


def skew_imag_part(m: Matrix) -> np.ndarray:
    """(m - m*)/(2i) as an ndarray; exactly Hermitian in floating point."""
    a = m.array
    return (a - a.conj().T) / 2.0j


def rotated_real_part(m: Matrix, theta: float) -> Matrix:
    """Re(e^{i theta} m) = (e^{i theta} m + e^{-i theta} m*)/2."""
    theta = float(theta)
    if not np.isfinite(theta):
        raise InvalidMatrix("theta must be finite")
    h = hermitian_part(m)
    k = skew_imag_part(m)
    return Matrix(np.cos(theta) * h - np.sin(theta) * k)


@dataclass(frozen=True)
class HermitianEigen:
    """Spectral decomposition with eigenvalues sorted descending.

    Column i of ``eigenvectors`` is the unit eigenvector paired with
    ``eigenvalues[i]``; the largest-magnitude component of each eigenvector
    is made real positive so the decomposition is deterministic.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps_converged: bool = field(default=True, repr=False)


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    out = vectors.copy()
    for i in range(out.shape[1]):
        col = out[:, i]
        k = int(np.argmax(np.abs(col)))
        pivot = col[k]
        mag = abs(pivot)
        if mag > 0.0:
            out[:, i] = col * (pivot.conjugate() / mag)
    return out


def hermitian_eig(h: Matrix) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix via cyclic complex Jacobi.

    Raises NotHermitian when the relative asymmetry exceeds 1e-12.
    """
    a = h.array
    scale = np.linalg.norm(a)
    asym = np.linalg.norm(a - a.conj().T)
    if asym > HERMITIAN_TOL * (1.0 + scale):
        raise NotHermitian(f"asymmetry {asym:.3e} exceeds tolerance at scale {scale:.3e}")
    sym = np.ascontiguousarray((a + a.conj().T) / 2.0)
    w, v, converged = _kernels.jacobi_eigh(sym, True)
    if not converged:
        raise ConvergenceError("Jacobi sweep cap reached without convergence")
    order = np.argsort(-w, kind="stable")
    values = np.ascontiguousarray(w[order])
    vectors = _fix_phases(np.ascontiguousarray(v[:, order]))
    values.setflags(write=False)
    vectors.setflags(write=False)
    return HermitianEigen(values, vectors)


def operator_norm(m: Matrix) -> float:
    """Largest singular value, computed as sqrt(lambda_max(m* m))."""
    return float(_kernels.opnorm(np.ascontiguousarray(m.array)))


def compress(m: Matrix, basis: np.ndarray) -> Matrix:
    """k x k compression <m b_j, b_i> onto an orthonormal basis.

    ``basis`` holds the k orthonormal vectors as columns of an (n, k) array.
    """
    b = np.asarray(basis, dtype=np.complex128)
    if b.ndim == 1:
        b = b[:, None]
    if b.shape[0] != m.dim:
        raise DimensionMismatch(f"basis lives in dimension {b.shape[0]}, matrix in {m.dim}")
    gram = b.conj().T @ b
    if np.max(np.abs(gram - np.eye(b.shape[1]))) > ORTHONORMAL_TOL:
        raise BasisNotOrthonormal("basis is not orthonormal within 1e-10")
    return Matrix(b.conj().T @ m.array @ b)


@dataclass(frozen=True)
class MatrixFlags:
    """Structure flags decided at tolerance CLASSIFY_TOL."""

    hermitian: bool
    normal: bool
    positive: bool
    nilpotent_square: bool


def classify(m: Matrix) -> MatrixFlags:
    a = m.array
    scale = np.linalg.norm(a)
    hermitian = bool(np.linalg.norm(a - a.conj().T) <= CLASSIFY_TOL * (1.0 + scale))
    normal = bool(
        np.linalg.norm(a.conj().T @ a - a @ a.conj().T) <= CLASSIFY_TOL * max(scale**2, 1e-300)
        if scale > 0.0
        else True
    )
    positive = False
    if hermitian:
        w, _, _ = _kernels.jacobi_eigh(np.ascontiguousarray((a + a.conj().T) / 2.0), False)
        positive = bool(w.min() >= -CLASSIFY_TOL * (1.0 + scale))
    nilpotent_square = bool(
        np.linalg.norm(a @ a) <= CLASSIFY_TOL * max(scale**2, 1e-300) if scale > 0.0 else True
    )
    return MatrixFlags(hermitian, normal, positive, nilpotent_square)
