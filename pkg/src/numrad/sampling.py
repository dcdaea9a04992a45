"""Seeded random matrix generators for the fuzz harness and property suites.

Classes mirror the structure flags: general, hermitian, positive, normal,
nilpotent_square.  All draws go through an explicit numpy Generator so runs
are reproducible from a single seed.
"""

from __future__ import annotations

import numpy as np

from .matcore import Matrix, identity, operator_norm

CLASSES = ("general", "hermitian", "positive", "normal", "nilpotent_square")


def _ginibre(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return z / np.sqrt(2.0 * dim)


def _haar_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_matrix(rng: np.random.Generator, dim: int, kind: str = "general") -> Matrix:
    if kind == "general":
        return Matrix(_ginibre(rng, dim))
    if kind == "hermitian":
        z = _ginibre(rng, dim)
        return Matrix((z + z.conj().T) / 2.0)
    if kind == "positive":
        z = _ginibre(rng, dim)
        return Matrix(z.conj().T @ z)
    if kind == "normal":
        u = _haar_unitary(rng, dim)
        d = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return Matrix(u @ np.diag(d) @ u.conj().T)
    if kind == "nilpotent_square":
        # N = sum_i s_i u_i v_i* with all u orthogonal to all v gives N^2 = 0
        k = max(1, dim // 2)
        q = _haar_unitary(rng, dim)
        u, v = q[:, :k], q[:, k : 2 * k]
        s = rng.uniform(0.2, 1.5, size=k)
        return Matrix((u * s) @ v.conj().T)
    raise ValueError(f"unknown matrix class {kind!r}")


def random_small_radius(rng: np.random.Generator, dim: int, bound: float = 0.9) -> Matrix:
    """General matrix rescaled so its numerical radius is below ``bound``."""
    from .numrange import numerical_radius

    m = random_matrix(rng, dim, "general")
    v = numerical_radius(m)
    target = bound * rng.uniform(0.1, 1.0)
    return (target / v) * m if v > 0 else m


def orthogonal_v_pair(rng: np.random.Generator, dim: int) -> tuple[Matrix, Matrix]:
    """(a, b) with a Birkhoff-James orthogonal to b in the radius norm.

    Shifts a random element to the pencil minimizer: if lambda* minimizes
    v(a0 + lambda c) then a0 + lambda* c is orthogonal to c.
    """
    from .orthkit import NUMERICAL_RADIUS, pencil_min

    a0 = random_matrix(rng, dim, "general")
    c = random_matrix(rng, dim, "general")
    lam, _ = pencil_min(NUMERICAL_RADIUS, a0, c)
    return a0 + lam * c, c


def orthogonal_positive_pair(rng: np.random.Generator, dim: int) -> tuple[Matrix, Matrix]:
    """Positive (a, b) with a radius-attaining state of a annihilating b."""
    x = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    x /= np.linalg.norm(x)
    proj = np.eye(dim) - np.outer(x, x.conj())
    w1 = proj @ _ginibre(rng, dim)
    w2 = proj @ _ginibre(rng, dim)
    rest = w1 @ w1.conj().T
    top = operator_norm(Matrix(rest))
    if top > 0:
        rest = rest * (0.5 / top)
    a = Matrix(np.outer(x, x.conj()) + rest)
    b_arr = w2 @ w2.conj().T
    nb = operator_norm(Matrix(b_arr))
    b = Matrix(b_arr / nb if nb > 0 else np.eye(dim) - np.outer(x, x.conj()))
    return a, b


def orthogonal_op_pair_nilpotent(rng: np.random.Generator, dim: int) -> tuple[Matrix, Matrix]:
    """(a, b) with square-zero a operator-norm orthogonal to b.

    a is rank-one nilpotent u v* with simple top singular pair (u, v);
    orthogonality then means <u, b v> = 0, arranged by projecting b.
    """
    q = _haar_unitary(rng, dim)
    u, v = q[:, 0], q[:, 1]
    a = Matrix(np.outer(u, v.conj()))
    c = _ginibre(rng, dim)
    coeff = complex(np.vdot(u, c @ v))
    b = Matrix(c - coeff * np.outer(u, v.conj()))
    return a, b


def unit_shift_pair(rng: np.random.Generator, dim: int) -> tuple[Matrix, Matrix]:
    """(s, e + s) with v(s) <= 0.9, a family with positive Crawford number."""
    s = random_small_radius(rng, dim)
    return s, identity(dim) + s
