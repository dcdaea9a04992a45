"""Numerical range geometry.

The support function g(theta) = lambda_max(Re(e^{i theta} a)) drives
everything: the numerical radius is its maximum over the circle, the
Crawford number is the distance from the origin to the range (decided by
the sign of min_theta g), and boundary points come from top eigenvectors
of the rotated real parts.

The circle is sampled on a uniform grid (default 2048 points) and every
local extremum is refined by golden-section search to bracket width 1e-12.
Disk-like ranges with flat support are detected and flagged instead of
being reported as a cloud of spurious maxima.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ZeroElement
from .matcore import Matrix, hermitian_eig, hermitian_part, rotated_real_part, skew_imag_part

DEFAULT_GRID = 2048
#: fraction of grid samples that must sit at the max for the flat flag
FLAT_FRACTION = 0.25
FLAT_TOL = 1e-9
DIRECTION_TOL = 1e-9
CRAWFORD_ZERO_TOL = 1e-9


def _parts(a: Matrix) -> tuple[np.ndarray, np.ndarray]:
    return (
        np.ascontiguousarray(hermitian_part(a)),
        np.ascontiguousarray(skew_imag_part(a)),
    )


def _grid(grid_size: int | None) -> np.ndarray:
    k = DEFAULT_GRID if grid_size is None else int(grid_size)
    if k < 8:
        raise ValueError("grid size must be at least 8")
    return np.arange(k) * (2.0 * np.pi / k)


def support_value(a: Matrix, theta: float) -> float:
    """g(theta): the support function of the numerical range of ``a``."""
    hm, km = _parts(a)
    return float(_kernels.support_one(hm, km, float(theta)))


def _local_extrema_brackets(values: np.ndarray, mode_max: bool) -> list[int]:
    """Indices of circular local maxima (or minima when mode_max=False)."""
    v = values if mode_max else -values
    left = np.roll(v, 1)
    right = np.roll(v, -1)
    return list(np.nonzero((v >= left) & (v >= right))[0])


@dataclass(frozen=True)
class SupportProfile:
    """Sampled support function with refinement metadata."""

    matrix_dim: int
    grid_size: int
    thetas: np.ndarray
    values: np.ndarray
    refined_maxima: tuple[tuple[float, float], ...]

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.thetas.tolist(), self.values.tolist()))

    @property
    def max_refined(self) -> float:
        return max(v for _, v in self.refined_maxima)


def support_profile(a: Matrix, grid_size: int | None = None) -> SupportProfile:
    thetas = _grid(grid_size)
    hm, km = _parts(a)
    values = _kernels.support_sweep(hm, km, thetas)
    k = thetas.shape[0]
    h = 2.0 * np.pi / k
    gmax = float(values.max())
    scale = max(1.0, abs(gmax))

    refined: list[tuple[float, float]] = []
    if gmax - float(values.min()) <= FLAT_TOL * scale:
        # constant support (disk-like range): nothing to refine
        i = int(values.argmax())
        refined.append((float(thetas[i]), gmax))
    else:
        for i in _local_extrema_brackets(values, True):
            lo = thetas[i] - h
            hi = thetas[i] + h
            th, val = _kernels.refine_support(hm, km, lo, hi, 1.0)
            if val < values[i]:
                th, val = float(thetas[i]), float(values[i])
            refined.append((float(th) % (2.0 * np.pi), float(val)))
    return SupportProfile(a.dim, k, thetas, values, tuple(refined))


def numerical_radius(a: Matrix, grid_size: int | None = None) -> float:
    """v(a) = max_theta g(theta), grid sweep plus local refinement."""
    if a.is_zero():
        return 0.0
    prof = support_profile(a, grid_size)
    return max(float(prof.values.max()), prof.max_refined)


@dataclass(frozen=True)
class MaximizingDirections:
    """Directions theta* where the support function attains its maximum.

    ``whole_circle`` is set when at least FLAT_FRACTION of the grid samples
    sit within FLAT_TOL of the maximum (disk-like or arc-flat ranges); the
    listed directions are then grid representatives of the flat set.
    """

    thetas: tuple[float, ...]
    value: float
    whole_circle: bool


def _cluster_directions(
    candidates: list[tuple[float, float]], step: float
) -> tuple[float, ...]:
    """Merge maximizing directions closer than one grid step (circularly)."""
    if not candidates:
        return ()
    cands = sorted(candidates)
    clusters: list[list[tuple[float, float]]] = [[cands[0]]]
    for th, val in cands[1:]:
        if th - clusters[-1][-1][0] <= step:
            clusters[-1].append((th, val))
        else:
            clusters.append([(th, val)])
    # circular wrap: first and last cluster may be the same maximum
    if len(clusters) > 1 and (cands[0][0] + 2.0 * np.pi) - clusters[-1][-1][0] <= step:
        clusters[0].extend(clusters.pop())
    return tuple(sorted(max(cl, key=lambda tv: tv[1])[0] for cl in clusters))


def maximizing_directions(
    a: Matrix, grid_size: int | None = None
) -> MaximizingDirections:
    if a.is_zero():
        raise ZeroElement("maximizing directions are undefined for the zero element")
    prof = support_profile(a, grid_size)
    v = max(float(prof.values.max()), prof.max_refined)
    scale = max(1.0, abs(v))
    near = prof.values >= v - FLAT_TOL * scale
    if int(near.sum()) >= FLAT_FRACTION * prof.grid_size:
        reps = tuple(float(t) for t in prof.thetas[near])
        return MaximizingDirections(reps, v, True)
    tol = DIRECTION_TOL * scale
    cands = [(th, val) for th, val in prof.refined_maxima if val >= v - tol]
    step = 2.0 * np.pi / prof.grid_size
    return MaximizingDirections(_cluster_directions(cands, step), v, False)


def crawford_number(b: Matrix, grid_size: int | None = None) -> float:
    """Distance from the origin to the numerical range of ``b``.

    Zero when the origin belongs to the range, which happens exactly when
    g(theta) >= 0 for every theta; otherwise -min_theta g(theta).
    """
    if b.is_zero():
        return 0.0
    thetas = _grid(grid_size)
    hm, km = _parts(b)
    values = _kernels.support_sweep(hm, km, thetas)
    h = 2.0 * np.pi / thetas.shape[0]
    gmin = float(values.min())
    scale = max(1.0, float(np.abs(values).max()))
    if float(values.max()) - gmin > FLAT_TOL * scale:
        for i in _local_extrema_brackets(values, False):
            lo = thetas[i] - h
            hi = thetas[i] + h
            _, val = _kernels.refine_support(hm, km, lo, hi, -1.0)
            gmin = min(gmin, float(val))
    if gmin >= -CRAWFORD_ZERO_TOL:
        return 0.0
    return -gmin


@dataclass(frozen=True)
class RangeBoundary:
    """Supporting boundary points <a x_theta, x_theta> of the range.

    Convexity is a structural fact of numerical ranges and is recorded,
    not recomputed.
    """

    points: np.ndarray
    thetas: np.ndarray
    supports: np.ndarray
    convex: bool = True


def boundary_points(a: Matrix, count: int) -> RangeBoundary:
    count = int(count)
    if count < 1:
        raise ValueError("count must be positive")
    thetas = np.arange(count) * (2.0 * np.pi / count)
    points = np.empty(count, dtype=np.complex128)
    supports = np.empty(count)
    arr = a.array
    for k, th in enumerate(thetas):
        eig = hermitian_eig(rotated_real_part(a, th))
        x = eig.eigenvectors[:, 0]
        points[k] = np.vdot(x, arr @ x)
        supports[k] = eig.eigenvalues[0]
    return RangeBoundary(points, thetas, supports)


def boundary_to_csv(boundary: RangeBoundary) -> str:
    """CSV with header theta,re,im,support at 17 significant digits."""
    buf = io.StringIO()
    buf.write("theta,re,im,support\n")
    for th, z, s in zip(boundary.thetas, boundary.points, boundary.supports):
        buf.write(f"{th:.17g},{z.real:.17g},{z.imag:.17g},{s:.17g}\n")
    return buf.getvalue()
