"""Jit-compiled numerical kernels.

Everything here operates on plain ndarrays so the hot loops (support-function
sweeps, golden-section refinement, pencil grids) stay allocation-light and
fast enough for the property suites.  The eigensolver is a cyclic complex
Jacobi iteration: rotations are applied in a fixed row-cyclic order, sweeps
stop once the largest off-diagonal magnitude falls below 1e-13 times the
Frobenius norm, with a hard cap of 100 sweeps.
"""

from __future__ import annotations

import numpy as np
from numba import njit

OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100
GOLDEN_WIDTH = 1e-12

_INV_GOLDEN = 0.6180339887498949  # (sqrt(5) - 1) / 2


@njit(cache=True)
def jacobi_eigh(H, compute_vectors):
    """Cyclic complex Jacobi diagonalization of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors, converged); eigenvalues unsorted,
    eigenvector i stored in column i.  The caller is responsible for
    symmetrizing the input.
    """
    n = H.shape[0]
    A = H.copy()
    V = np.eye(n, dtype=np.complex128)
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += A[i, j].real ** 2 + A[i, j].imag ** 2
    fro = np.sqrt(fro)
    w = np.empty(n)
    if fro == 0.0 or n == 1:
        for i in range(n):
            w[i] = A[i, i].real
        return w, V, True
    thresh = OFFDIAG_TOL * fro
    converged = False
    for _ in range(MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                m = abs(A[p, q])
                if m > off:
                    off = m
        if off <= thresh:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ph = apq / mag
                phc = ph.conjugate()
                for i in range(n):
                    aip = A[i, p]
                    aiq = A[i, q]
                    A[i, p] = c * aip - s * phc * aiq
                    A[i, q] = s * aip + c * phc * aiq
                for j in range(n):
                    apj = A[p, j]
                    aqj = A[q, j]
                    A[p, j] = c * apj - s * ph * aqj
                    A[q, j] = s * apj + c * ph * aqj
                A[q, p] = A[p, q].conjugate()
                if compute_vectors:
                    for i in range(n):
                        vip = V[i, p]
                        viq = V[i, q]
                        V[i, p] = c * vip - s * phc * viq
                        V[i, q] = s * vip + c * phc * viq
    for i in range(n):
        w[i] = A[i, i].real
    return w, V, converged


@njit(cache=True)
def eig_top(H):
    """Largest eigenvalue of a Hermitian matrix."""
    w, _, _ = jacobi_eigh(H, False)
    best = w[0]
    for i in range(1, w.shape[0]):
        if w[i] > best:
            best = w[i]
    return best


@njit(cache=True)
def eig_range(H):
    """(smallest, largest) eigenvalue of a Hermitian matrix."""
    w, _, _ = jacobi_eigh(H, False)
    lo = w[0]
    hi = w[0]
    for i in range(1, w.shape[0]):
        if w[i] > hi:
            hi = w[i]
        if w[i] < lo:
            lo = w[i]
    return lo, hi


@njit(cache=True)
def support_one(Hm, Km, theta):
    """g(theta) = largest eigenvalue of cos(theta)*Hm - sin(theta)*Km."""
    A = np.cos(theta) * Hm - np.sin(theta) * Km
    return eig_top(A)


@njit(cache=True)
def support_sweep(Hm, Km, thetas):
    K = thetas.shape[0]
    out = np.empty(K)
    for k in range(K):
        out[k] = support_one(Hm, Km, thetas[k])
    return out


@njit(cache=True)
def refine_support(Hm, Km, lo, hi, sign):
    """Golden-section search for an extremum of the support function.

    sign=+1.0 maximizes, sign=-1.0 minimizes.  The bracket [lo, hi] is
    shrunk to width GOLDEN_WIDTH; returns (theta, g(theta)).
    """
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1 = sign * support_one(Hm, Km, x1)
    f2 = sign * support_one(Hm, Km, x2)
    while hi - lo > GOLDEN_WIDTH:
        if f1 < f2:
            lo = x1
            x1 = x2
            f1 = f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = sign * support_one(Hm, Km, x2)
        else:
            hi = x2
            x2 = x1
            f2 = f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = sign * support_one(Hm, Km, x1)
    if f1 >= f2:
        return x1, sign * f1
    return x2, sign * f2


@njit(cache=True)
def opnorm(M):
    """Largest singular value, computed as sqrt(lambda_max(M* M))."""
    n = M.shape[0]
    G = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            acc = 0.0 + 0.0j
            for k in range(n):
                acc += M[k, i].conjugate() * M[k, j]
            G[i, j] = acc
    top = eig_top(G)
    if top < 0.0:
        top = 0.0
    return np.sqrt(top)


@njit(cache=True)
def _real_part_product_norm(Ha, Ka, Hb, Kb, theta):
    ct = np.cos(theta)
    st = np.sin(theta)
    P = (ct * Ha - st * Ka) @ (ct * Hb - st * Kb)
    return opnorm(P)


@njit(cache=True)
def product_norm_sweep(Ha, Ka, Hb, Kb, thetas):
    K = thetas.shape[0]
    out = np.empty(K)
    for k in range(K):
        out[k] = _real_part_product_norm(Ha, Ka, Hb, Kb, thetas[k])
    return out


@njit(cache=True)
def refine_product_norm(Ha, Ka, Hb, Kb, lo, hi):
    """Golden-section maximization of theta -> ||Re(e^{it}a) Re(e^{it}b)||."""
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1 = _real_part_product_norm(Ha, Ka, Hb, Kb, x1)
    f2 = _real_part_product_norm(Ha, Ka, Hb, Kb, x2)
    while hi - lo > GOLDEN_WIDTH:
        if f1 < f2:
            lo = x1
            x1 = x2
            f1 = f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = _real_part_product_norm(Ha, Ka, Hb, Kb, x2)
        else:
            hi = x2
            x2 = x1
            f2 = f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = _real_part_product_norm(Ha, Ka, Hb, Kb, x1)
    if f1 >= f2:
        return x1, f1
    return x2, f2


@njit(cache=True)
def pencil_coarse_grid(Ha, Ka, Hb, Kb, lam_re, lam_im, thetas):
    """Coarse values of lambda -> max_theta g_{a+lambda b}(theta).

    No refinement; accuracy is bounded by the theta grid spacing.  Used only
    to locate a starting cell for the descent.
    """
    J = lam_re.shape[0]
    out = np.empty(J)
    for j in range(J):
        u = lam_re[j]
        v = lam_im[j]
        Hm = Ha + u * Hb - v * Kb
        Km = Ka + u * Kb + v * Hb
        best = -1e300
        for k in range(thetas.shape[0]):
            g = support_one(Hm, Km, thetas[k])
            if g > best:
                best = g
        out[j] = best
    return out


@njit(cache=True)
def opnorm_pencil(A, B, u, v):
    """Operator norm of A + (u + iv) B."""
    lam = complex(u, v)
    return opnorm(A + lam * B)


@njit(cache=True)
def extreme_offsets_small(Hc, Kc, phis, want_max):
    """Extreme eigenvalue of cos(phi)*Hc - sin(phi)*Kc for each phi.

    Used on compressed (k x k) faces; want_max selects lambda_max, else
    lambda_min.
    """
    m = phis.shape[0]
    out = np.empty(m)
    for i in range(m):
        A = np.cos(phis[i]) * Hc - np.sin(phis[i]) * Kc
        lo, hi = eig_range(A)
        out[i] = hi if want_max else lo
    return out


def warm_up():
    """Trigger compilation of every kernel on tiny inputs."""
    H = np.eye(2, dtype=np.complex128)
    K = np.zeros((2, 2), dtype=np.complex128)
    th = np.array([0.0, 1.0])
    jacobi_eigh(H, True)
    eig_top(H)
    eig_range(H)
    support_sweep(H, K, th)
    refine_support(H, K, 0.0, 1.0, 1.0)
    opnorm(H)
    product_norm_sweep(H, K, H, K, th)
    refine_product_norm(H, K, H, K, 0.0, 1.0)
    pencil_coarse_grid(H, K, H, K, np.array([0.0]), np.array([0.0]), th)
    opnorm_pencil(H, H, 0.0, 0.0)
    extreme_offsets_small(H, K, th, True)
