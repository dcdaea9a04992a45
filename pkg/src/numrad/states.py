"""States on the matrix algebra and the radius-attaining family.

A state is either a pure vector state x -> <a x, x> or a density matrix
state rho -> tr(rho a).  For a nonzero element the set of states whose
value has maximum modulus decomposes by phase: for each maximizing
direction theta* of the support function, the attaining states are exactly
the states supported in the top eigenspace E of Re(e^{i theta*} a) whose
value lies on the touching point of the supporting line, i.e.
Im(e^{i theta*} <a x, x>) = 0.  This module materializes pure witnesses of
that set, one record per phase.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ZeroElement, ZeroVector
from .matcore import Matrix, hermitian_eig, hermitian_part, rotated_real_part, skew_imag_part
from .numrange import FLAT_TOL, maximizing_directions

WITNESS_TOL = 1e-7
#: eigenvalues within this (times 1 + v) of the top one belong to the face
CLUSTER_TOL = 1e-9
#: sphere samples used for faces of dimension >= 3
SPHERE_SAMPLES = 256
_SPHERE_SEED = 0x5EED
_MAX_WITNESSES_PER_FACE = 8
_ARC_FACE_COUNT = 256


@dataclass(frozen=True)
class State:
    """Positive unit-trace functional, pure (vector) or density (matrix)."""

    kind: str
    vector: np.ndarray | None = None
    rho: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.vector.shape[0] if self.kind == "pure" else self.rho.shape[0]


def pure_state(x) -> State:
    """Normalized vector state with a fixed phase convention.

    The input is scaled to unit length and rotated so that its
    largest-magnitude component is real positive.
    """
    v = np.asarray(x, dtype=np.complex128).reshape(-1).copy()
    nrm = np.linalg.norm(v)
    if nrm == 0.0 or not np.isfinite(nrm):
        raise ZeroVector("cannot normalize the zero vector")
    v /= nrm
    k = int(np.argmax(np.abs(v)))
    pivot = v[k]
    v *= pivot.conjugate() / abs(pivot)
    v.setflags(write=False)
    return State("pure", vector=v)


def density_state(rho) -> State:
    """Density-matrix state; validates positivity and unit trace."""
    r = np.asarray(rho, dtype=np.complex128)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ValueError("density matrix must be square")
    if np.linalg.norm(r - r.conj().T) > 1e-12 * (1.0 + np.linalg.norm(r)):
        raise ValueError("density matrix must be Hermitian")
    tr = complex(np.trace(r))
    if abs(tr - 1.0) > 1e-12:
        raise ValueError(f"density matrix must have unit trace, got {tr}")
    eig = hermitian_eig(Matrix(r))
    if eig.eigenvalues[-1] < -1e-12:
        raise ValueError("density matrix must be positive semidefinite")
    r = r.copy()
    r.setflags(write=False)
    return State("density", rho=r)


def evaluate(phi: State, a: Matrix) -> complex:
    """phi(a): <a x, x> for pure states, tr(rho a) for density states."""
    if phi.dim != a.dim:
        raise DimensionMismatch(f"state dimension {phi.dim} != matrix dimension {a.dim}")
    if phi.kind == "pure":
        x = phi.vector
        return complex(np.vdot(x, a.array @ x))
    return complex(np.trace(phi.rho @ a.array))


def random_state(dim: int, seed: int) -> State:
    """Pure state from a standard complex Gaussian vector; seeded."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return pure_state(z)


@dataclass(frozen=True)
class Face:
    """Top eigenspace of Re(e^{i theta} a) at a maximizing direction."""

    theta: float
    basis: np.ndarray  # (n, k) orthonormal columns

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


@dataclass(frozen=True)
class FaceSet:
    value: float
    faces: tuple[Face, ...]
    arc: bool


def maximizing_faces(a: Matrix, grid_size: int | None = None) -> FaceSet:
    """One face per maximizing direction of the support function.

    For flat (disk-like/arc) support the circle is re-sampled at
    _ARC_FACE_COUNT directions and every direction attaining the maximum
    contributes a face.
    """
    dirs = maximizing_directions(a, grid_size)
    v = dirs.value
    scale = max(1.0, v)
    if dirs.whole_circle:
        thetas = np.arange(_ARC_FACE_COUNT) * (2.0 * np.pi / _ARC_FACE_COUNT)
    else:
        thetas = np.asarray(dirs.thetas)
    cluster = CLUSTER_TOL * scale
    faces: list[Face] = []
    for th in thetas:
        eig = hermitian_eig(rotated_real_part(a, float(th)))
        top = eig.eigenvalues[0]
        if dirs.whole_circle and top < v - FLAT_TOL * scale:
            continue  # direction off the flat arc
        k = int(np.searchsorted(-eig.eigenvalues, -(top - cluster), side="right"))
        faces.append(Face(float(th), eig.eigenvectors[:, :k]))
    return FaceSet(v, tuple(faces), dirs.whole_circle)


def _imag_rotated(a: Matrix, theta: float) -> np.ndarray:
    """Im(e^{i theta} a) = sin(theta) Hm + cos(theta) Km as an ndarray."""
    return np.sin(theta) * hermitian_part(a) + np.cos(theta) * skew_imag_part(a)


def _quadratic_zero_mixes(mu: np.ndarray, w: np.ndarray, scale: float) -> list[np.ndarray]:
    """Unit vectors y with sum_i mu_i |<w_i, y>|^2 = 0, mixing extreme eigenvectors."""
    k = mu.shape[0]
    tol = WITNESS_TOL * scale
    out: list[np.ndarray] = []
    mu_hi, mu_lo = mu[0], mu[-1]
    if abs(mu_hi) <= tol and abs(mu_lo) <= tol:
        # the form vanishes on the whole sphere: eigenvectors and a mix
        out.extend(w[:, i] for i in range(k))
        out.append(w @ (np.ones(k) / np.sqrt(k)))
    elif mu_hi >= 0.0 >= mu_lo:
        p = -mu_lo / (mu_hi - mu_lo)
        y = np.sqrt(p) * w[:, 0] + np.sqrt(1.0 - p) * w[:, -1]
        out.append(y)
        if k > 2 or p not in (0.0, 1.0):
            out.append(np.sqrt(p) * w[:, 0] - np.sqrt(1.0 - p) * w[:, -1])
    else:
        # numerically one-signed: best effort, keep the flattest direction
        i = int(np.argmin(np.abs(mu)))
        out.append(w[:, i])
    return out


def _sphere_zeros(mu: np.ndarray, w: np.ndarray, scale: float) -> list[np.ndarray]:
    """Seeded sphere samples rescaled onto the zero set of the quadratic form."""
    k = mu.shape[0]
    tol = WITNESS_TOL * scale
    rng = np.random.default_rng(_SPHERE_SEED)
    out: list[np.ndarray] = []
    pos = mu > tol
    neg = mu < -tol
    for _ in range(SPHERE_SAMPLES):
        if len(out) >= _MAX_WITNESSES_PER_FACE:
            break
        c = rng.standard_normal(k) + 1j * rng.standard_normal(k)
        c /= np.linalg.norm(c)
        p_mass = float(np.sum(mu[pos] * np.abs(c[pos]) ** 2)) if pos.any() else 0.0
        n_mass = float(-np.sum(mu[neg] * np.abs(c[neg]) ** 2)) if neg.any() else 0.0
        if p_mass > 0.0 and n_mass > 0.0:
            c[pos] *= np.sqrt(n_mass)
            c[neg] *= np.sqrt(p_mass)
            c /= np.linalg.norm(c)
        elif abs(float(np.sum(mu * np.abs(c) ** 2))) > tol:
            continue
        out.append(w @ c)
    return out


@dataclass(frozen=True)
class MaximizingFamily:
    """Pure witnesses of |phi(a)| = v(a), grouped by maximizing phase.

    ``exhaustive`` is set only when every face is one-dimensional and the
    maximizing directions are isolated; degenerate faces and flat arcs
    yield representative witnesses, not the whole attaining set.
    """

    element: Matrix
    phase_records: tuple[tuple[float, tuple[State, ...]], ...]
    exhaustive: bool

    @property
    def witnesses(self) -> list[State]:
        return [s for _, states in self.phase_records for s in states]


def maximizing_states(a: Matrix, grid_size: int | None = None) -> MaximizingFamily:
    if a.is_zero():
        raise ZeroElement("the zero element has no maximizing family")
    faceset = maximizing_faces(a, grid_size)
    v = faceset.value
    scale = max(1.0, v)
    records: list[tuple[float, tuple[State, ...]]] = []
    sampled = False
    for face in faceset.faces:
        basis = face.basis
        k = face.dim
        if k == 1:
            cands = [basis[:, 0]]
        else:
            he = hermitian_eig(Matrix(basis.conj().T @ _imag_rotated(a, face.theta) @ basis))
            cands = _quadratic_zero_mixes(he.eigenvalues, he.eigenvectors, scale)
            if k >= 3:
                cands.extend(_sphere_zeros(he.eigenvalues, he.eigenvectors, scale))
                sampled = True
            cands = [basis @ y for y in cands]
        witnesses = []
        arr = a.array
        for x in cands[:_MAX_WITNESSES_PER_FACE]:
            val = complex(np.vdot(x, arr @ x))
            if abs(abs(val) - v) <= WITNESS_TOL * scale:
                witnesses.append(pure_state(x))
        if not witnesses and cands:
            witnesses.append(pure_state(cands[0]))
        records.append((face.theta, tuple(witnesses)))
    exhaustive = (not faceset.arc) and (not sampled) and all(f.dim == 1 for f in faceset.faces)
    return MaximizingFamily(a, tuple(records), exhaustive)
