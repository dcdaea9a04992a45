"""Norm-geometry engine.

One-sided derivatives of the operator and numerical-radius norms,
Birkhoff-James orthogonality deciders, convex pencil minimization
min_lambda N(a + lambda b), and the Pythagorean inequality check.

Two independent routes decide numerical-radius orthogonality:

* the per-direction derivative route: a is orthogonal to b exactly when
  rho_plus(a, e^{i psi} b) >= 0 for every psi, where rho_plus is the
  one-sided derivative of the squared norm.  For the numerical radius the
  derivative equals the extremum of Re(conj(phi(a)) phi(b)) over the
  radius-attaining states of a, which reduces on each maximizing face to a
  small compressed eigenproblem.
* the direct route: min over complex lambda of N(a + lambda b) >= N(a),
  solved by a coarse grid plus shrinking-simplex descent.

Both are computed and compared; a disagreement outside the declared
tolerance band raises InconsistentRoutes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    InconsistentRoutes,
    NotPositive,
    PreconditionViolated,
    ZeroElement,
)
from .matcore import Matrix, classify, hermitian_eig, hermitian_part, operator_norm, skew_imag_part
from .numrange import (
    DEFAULT_GRID,
    FLAT_TOL,
    crawford_number,
    numerical_radius,
)
from .states import CLUSTER_TOL, FaceSet, State, maximizing_faces, pure_state

#: dead zone of every orthogonality decision margin
DECISION_TOL = 1e-6
#: positive-real-direction decisions use a tighter threshold
DIRECTION_TOL = 1e-7
#: directions scanned by the full orthogonality decider
THETA_GRID = 256
#: simplex diameter at which the pencil descent stops
PENCIL_DIAM_TOL = 1e-9

_FD_STEPS = tuple(10.0 ** (-k) for k in range(1, 9))
_FD_SETTLE = 1e-6


@dataclass(frozen=True)
class NormFunctional:
    """Dispatch token for the two supported norms."""

    kind: str

    def value(self, m: Matrix, grid_size: int | None = None) -> float:
        if self.kind == "operator_norm":
            return operator_norm(m)
        return numerical_radius(m, grid_size)


OPERATOR_NORM = NormFunctional("operator_norm")
NUMERICAL_RADIUS = NormFunctional("numerical_radius")


def norm_value(norm: NormFunctional, a: Matrix) -> float:
    return norm.value(a)


@dataclass(frozen=True)
class DerivativePair:
    """One-sided derivatives of t -> N(x + t y)^2 / 2 at t = 0.

    Only the requested side is filled.  ``t_trace`` keeps the difference
    quotients used as convergence evidence; ``low_confidence`` marks a
    quotient sequence that never settled below the step-to-step tolerance.
    """

    rho_plus: float | None
    rho_minus: float | None
    method: str
    t_trace: tuple[tuple[float, float], ...] = ()
    low_confidence: bool = False
    exhaustive: bool | None = None

    @property
    def value(self) -> float:
        return self.rho_plus if self.rho_plus is not None else self.rho_minus


@dataclass(frozen=True)
class OrthReport:
    """Decision plus the witnesses that certify it."""

    decision: bool
    margin: float
    route: str
    witness_state: State | None = None
    worst_theta: float | None = None
    minimizer: complex | None = None

    @property
    def marginal(self) -> bool:
        return abs(self.margin) <= DECISION_TOL


# ---------------------------------------------------------------------------
# finite-difference norm derivatives


def rho_fd(norm: NormFunctional, x: Matrix, y: Matrix, side: str) -> DerivativePair:
    """Norm derivative by one-sided difference quotients.

    Quotients are taken at t = 1e-1 ... 1e-8; convexity makes them monotone,
    so the first step where successive quotients differ by less than 1e-6 is
    reported.  If they never settle the smallest-step value is returned with
    ``low_confidence`` set.
    """
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    sgn = 1.0 if side == "plus" else -1.0
    if x.is_zero():
        val = 0.0
        return _pair(side, val, "finite_difference", ())
    nx = norm.value(x)
    trace = []
    for t_mag in _FD_STEPS:
        t = sgn * t_mag
        q = nx * (norm.value(x + t * y) - nx) / t
        trace.append((t, q))
    chosen = trace[-1][1]
    low_confidence = True
    for k in range(len(trace) - 1):
        if abs(trace[k + 1][1] - trace[k][1]) < _FD_SETTLE:
            chosen = trace[k + 1][1]
            low_confidence = False
            break
    return _pair(side, chosen, "finite_difference", tuple(trace), low_confidence)


def _pair(side, value, method, trace, low_confidence=False, exhaustive=None):
    if side == "plus":
        return DerivativePair(value, None, method, trace, low_confidence, exhaustive)
    return DerivativePair(None, value, method, trace, low_confidence, exhaustive)


# ---------------------------------------------------------------------------
# the state-formula route: extremum of Re(conj(phi(a)) phi(b)) over the
# radius-attaining states of a


class _FacePencil:
    """Per-face compressions of b against the maximizing faces of a.

    On the face at direction theta*, every attaining state is a unit vector
    of the face, and Re(conj(phi(a)) phi(e^{i psi} b)) compresses to the
    quadratic form of cos(theta* + psi) Hb_E - sin(theta* + psi) Kb_E scaled
    by v(a).  Extrema over the face are therefore eigenvalues of a k x k
    Hermitian matrix.
    """

    def __init__(self, a: Matrix, faceset: FaceSet, b: Matrix):
        self.a = a
        self.b = b
        self.value = faceset.value
        self.arc = faceset.arc
        hb = hermitian_part(b)
        kb = skew_imag_part(b)
        self._hb = np.ascontiguousarray(hb)
        self._kb = np.ascontiguousarray(kb)
        th1, h1, k1, basis1 = [], [], [], []
        small = []
        for face in faceset.faces:
            e = face.basis
            hbe = e.conj().T @ hb @ e
            kbe = e.conj().T @ kb @ e
            if face.dim == 1:
                th1.append(face.theta)
                h1.append(hbe[0, 0].real)
                k1.append(kbe[0, 0].real)
                basis1.append(e[:, 0])
            else:
                small.append(
                    (face.theta, np.ascontiguousarray(hbe), np.ascontiguousarray(kbe), e)
                )
        self._th1 = np.asarray(th1)
        self._r1 = np.hypot(np.asarray(h1), np.asarray(k1))
        self._d1 = np.arctan2(np.asarray(k1), np.asarray(h1))
        self._basis1 = basis1
        self._small = small

    def values(self, psis: np.ndarray, side: str) -> np.ndarray:
        """Extremum over all faces for each offset psi, times v(a)."""
        want_max = side == "plus"
        acc = np.full(psis.shape, -np.inf if want_max else np.inf)
        if self._th1.size:
            grid = self._r1[None, :] * np.cos(
                self._th1[None, :] + psis[:, None] + self._d1[None, :]
            )
            acc = np.maximum(acc, grid.max(axis=1)) if want_max else np.minimum(
                acc, grid.min(axis=1)
            )
        for theta, hbe, kbe, _ in self._small:
            ext = _kernels.extreme_offsets_small(hbe, kbe, theta + psis, want_max)
            acc = np.maximum(acc, ext) if want_max else np.minimum(acc, ext)
        return self.value * acc

    def value_at(self, psi: float, side: str) -> float:
        return float(self.values(np.array([float(psi)]), side)[0])

    def extremum_at(self, psi: float, side: str) -> tuple[float, np.ndarray, float]:
        """(value, witness vector, theta*) of the extremal face at offset psi."""
        want_max = side == "plus"
        best = -np.inf if want_max else np.inf
        best_x = None
        best_theta = 0.0
        if self._th1.size:
            vals = self._r1 * np.cos(self._th1 + psi + self._d1)
            j = int(vals.argmax() if want_max else vals.argmin())
            best = float(vals[j])
            best_x = self._basis1[j]
            best_theta = float(self._th1[j])
        for theta, hbe, kbe, e in self._small:
            phi = theta + psi
            m = Matrix(np.cos(phi) * hbe - np.sin(phi) * kbe)
            eig = hermitian_eig(m)
            idx = 0 if want_max else -1
            val = float(eig.eigenvalues[idx])
            if (want_max and val > best) or (not want_max and val < best):
                best = val
                best_x = e @ eig.eigenvectors[:, idx]
                best_theta = theta
        if self.arc and self._th1.size:
            ref_val, ref_x, ref_th = self._refine_arc(psi, side, best_theta)
            if (want_max and ref_val > best) or (not want_max and ref_val < best):
                best, best_x, best_theta = ref_val, ref_x, ref_th
        return self.value * best, best_x, best_theta

    # For flat arcs the faces sample a continuum of directions; the
    # extremum over the arc is refined by golden section on the true
    # face objective around the best sampled direction.
    def _refine_arc(self, psi, side, theta0):
        sgn = 1.0 if side == "plus" else -1.0
        step = 2.0 * np.pi / max(len(self._basis1), 1)
        lo, hi = theta0 - step, theta0 + step
        inv = 0.6180339887498949
        cache: dict[float, tuple[float, np.ndarray]] = {}

        def f(th):
            if th not in cache:
                cache[th] = self._face_objective(th, psi, side)
            return sgn * cache[th][0]

        x1 = hi - inv * (hi - lo)
        x2 = lo + inv * (hi - lo)
        f1, f2 = f(x1), f(x2)
        while hi - lo > 1e-10:
            if f1 < f2:
                lo, x1, f1 = x1, x2, f2
                x2 = lo + inv * (hi - lo)
                f2 = f(x2)
            else:
                hi, x2, f2 = x2, x1, f1
                x1 = hi - inv * (hi - lo)
                f1 = f(x1)
        th = x1 if f1 >= f2 else x2
        val, x = cache[th]
        return val, x, th

    def _face_objective(self, theta, psi, side):
        eig = hermitian_eig(
            Matrix(
                np.cos(theta) * hermitian_part(self.a)
                - np.sin(theta) * skew_imag_part(self.a)
            )
        )
        top = eig.eigenvalues[0]
        if top < self.value - FLAT_TOL * max(1.0, self.value):
            return (-np.inf if side == "plus" else np.inf), eig.eigenvectors[:, 0]
        k = int(
            np.searchsorted(
                -eig.eigenvalues, -(top - CLUSTER_TOL * max(1.0, self.value)), side="right"
            )
        )
        e = eig.eigenvectors[:, :k]
        phi = theta + psi
        m = np.cos(phi) * (e.conj().T @ self._hb @ e) - np.sin(phi) * (
            e.conj().T @ self._kb @ e
        )
        sub = hermitian_eig(Matrix(m))
        idx = 0 if side == "plus" else -1
        return float(sub.eigenvalues[idx]), e @ sub.eigenvectors[:, idx]


def rho_v_state_formula(a: Matrix, b: Matrix, side: str) -> DerivativePair:
    """Numerical-radius derivative as an extremum over attaining states.

    rho_plus is the maximum (rho_minus the minimum) of
    Re(conj(phi(a)) phi(b)) over states with |phi(a)| = v(a); per maximizing
    face this is an exact compressed eigenvalue problem.
    """
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    if a.is_zero() or b.is_zero():
        raise ZeroElement("the derivative formula requires nonzero elements")
    faceset = maximizing_faces(a)
    engine = _FacePencil(a, faceset, b)
    val, _, _ = engine.extremum_at(0.0, side)
    exhaustive = (not faceset.arc) and all(f.dim == 1 for f in faceset.faces)
    return _pair(side, float(val), "state_formula", (), False, exhaustive)


# ---------------------------------------------------------------------------
# pencil minimization  min_lambda N(a + lambda b)


class _RadiusPencil:
    """lambda -> v(a + lambda b), full theta sweep plus refinement per call."""

    def __init__(self, a: Matrix, b: Matrix, grid_size: int | None = None):
        self._ha = np.ascontiguousarray(hermitian_part(a))
        self._ka = np.ascontiguousarray(skew_imag_part(a))
        self._hb = np.ascontiguousarray(hermitian_part(b))
        self._kb = np.ascontiguousarray(skew_imag_part(b))
        k = DEFAULT_GRID if grid_size is None else int(grid_size)
        self._thetas = np.arange(k) * (2.0 * np.pi / k)
        self._step = 2.0 * np.pi / k

    def _parts(self, lam: complex):
        u, v = lam.real, lam.imag
        hm = self._ha + u * self._hb - v * self._kb
        km = self._ka + u * self._kb + v * self._hb
        return np.ascontiguousarray(hm), np.ascontiguousarray(km)

    def eval(self, lam: complex) -> float:
        hm, km = self._parts(complex(lam))
        vals = _kernels.support_sweep(hm, km, self._thetas)
        gmax = float(vals.max())
        scale = max(1.0, abs(gmax))
        if gmax - float(vals.min()) <= FLAT_TOL * scale:
            return gmax
        best = gmax
        left = np.roll(vals, 1)
        right = np.roll(vals, -1)
        for i in np.nonzero((vals >= left) & (vals >= right))[0]:
            _, val = _kernels.refine_support(
                hm, km, self._thetas[i] - self._step, self._thetas[i] + self._step, 1.0
            )
            best = max(best, float(val))
        return best

    full = eval


class _OpnormPencil:
    """lambda -> ||a + lambda b||; a single small eigenproblem per call."""

    def __init__(self, a: Matrix, b: Matrix):
        self._a = np.ascontiguousarray(a.array)
        self._b = np.ascontiguousarray(b.array)

    def eval(self, lam: complex) -> float:
        lam = complex(lam)
        return float(_kernels.opnorm_pencil(self._a, self._b, lam.real, lam.imag))

    full = eval


def _nelder_mead(evaluator, start: complex, size: float, max_evals: int = 700):
    """Shrinking-simplex descent in the complex plane.

    Convexity of the objective makes any local minimum global; the simplex
    is shrunk until its diameter falls below PENCIL_DIAM_TOL.
    """
    pts = [start, start + size, start + 1j * size]
    vals = [evaluator.eval(p) for p in pts]
    evals = len(vals)
    while evals < max_evals:
        order = sorted(range(3), key=lambda i: (vals[i], i))
        pts = [pts[i] for i in order]
        vals = [vals[i] for i in order]
        diam = max(abs(pts[0] - pts[1]), abs(pts[0] - pts[2]), abs(pts[1] - pts[2]))
        if diam <= PENCIL_DIAM_TOL:
            break
        centroid = (pts[0] + pts[1]) / 2.0
        reflected = centroid + (centroid - pts[2])
        fr = evaluator.eval(reflected)
        evals += 1
        if fr < vals[0]:
            expanded = centroid + 2.0 * (centroid - pts[2])
            fe = evaluator.eval(expanded)
            evals += 1
            if fe < fr:
                pts[2], vals[2] = expanded, fe
            else:
                pts[2], vals[2] = reflected, fr
        elif fr < vals[1]:
            pts[2], vals[2] = reflected, fr
        else:
            contracted = centroid + 0.5 * (pts[2] - centroid)
            fc = evaluator.eval(contracted)
            evals += 1
            if fc < vals[2]:
                pts[2], vals[2] = contracted, fc
            else:  # shrink toward the best vertex
                pts[1] = pts[0] + 0.5 * (pts[1] - pts[0])
                pts[2] = pts[0] + 0.5 * (pts[2] - pts[0])
                vals[1] = evaluator.eval(pts[1])
                vals[2] = evaluator.eval(pts[2])
                evals += 2
    order = sorted(range(3), key=lambda i: (vals[i], i))
    return pts[order[0]]


def _search_radius(norm: NormFunctional, a: Matrix, b: Matrix) -> float:
    """Disk radius certified to contain every minimizer of N(a + lambda b).

    Coercivity gives two bounds: N(a + lambda b) >= |lambda| C(b) - v(a)
    through the Crawford number, and >= |lambda| N(b) - N(a) through the
    norm triangle inequality.  The tighter of the two is used.
    """
    na = norm.value(a)
    cb = crawford_number(b)
    nb = norm.value(b)
    r_craw = 2.0 * na / cb if cb > 1e-9 else np.inf
    r_norm = 4.0 * na / nb
    return float(max(min(r_craw, r_norm), 1e-6))


def pencil_min(
    norm: NormFunctional,
    a: Matrix,
    b: Matrix,
    start: complex | None = None,
    grid_size: int | None = None,
) -> tuple[complex, float]:
    """Global minimizer of the convex map lambda -> N(a + lambda b).

    Returns (lambda*, N(a + lambda* b)).  With no explicit start a coarse
    grid over the coercivity disk seeds the shrinking-simplex descent.
    """
    if b.is_zero():
        return 0j, norm.value(a)
    if a.is_zero():
        return 0j, 0.0
    radius = _search_radius(norm, a, b)
    if norm.kind == "operator_norm":
        evaluator = _OpnormPencil(a, b)
    else:
        evaluator = _RadiusPencil(a, b, grid_size)
    if start is None:
        side_pts = 11
        axis = np.linspace(-radius, radius, side_pts)
        if norm.kind == "operator_norm":
            best_val, best_lam = np.inf, 0j
            for u in axis:
                for v in axis:
                    val = evaluator.eval(complex(u, v))
                    if val < best_val:
                        best_val, best_lam = val, complex(u, v)
        else:
            uu, vv = np.meshgrid(axis, axis, indexing="ij")
            coarse_th = np.arange(THETA_GRID) * (2.0 * np.pi / THETA_GRID)
            vals = _kernels.pencil_coarse_grid(
                evaluator._ha,
                evaluator._ka,
                evaluator._hb,
                evaluator._kb,
                np.ascontiguousarray(uu.ravel()),
                np.ascontiguousarray(vv.ravel()),
                coarse_th,
            )
            j = int(vals.argmin())
            best_lam = complex(uu.ravel()[j], vv.ravel()[j])
        start = best_lam
        size = 2.0 * radius / (side_pts - 1)
    else:
        start = complex(start)
        size = radius / 8.0
    lam = _nelder_mead(evaluator, start, size)
    value = evaluator.full(lam)
    at_zero = evaluator.full(0j)
    if at_zero <= value:
        # lambda = 0 is feasible and ties broken toward it
        lam, value = 0j, at_zero
    return lam, float(value)


# ---------------------------------------------------------------------------
# orthogonality deciders


def direction_orthogonal(a: Matrix, b: Matrix) -> OrthReport:
    """Does v(a + r b) >= v(a) hold for every positive real r?

    True exactly when some radius-attaining state of a has
    Re(conj(phi(a)) phi(b)) >= 0, i.e. when rho_plus(a, b) is nonnegative.
    """
    if a.is_zero():
        return OrthReport(True, 0.0, "trivial-zero-element")
    if b.is_zero():
        return OrthReport(True, 0.0, "zero-direction")
    faceset = maximizing_faces(a)
    engine = _FacePencil(a, faceset, b)
    val, x, theta = engine.extremum_at(0.0, "plus")
    decision = val >= -DIRECTION_TOL
    witness = pure_state(x) if decision and x is not None else None
    return OrthReport(decision, float(val), "state_derivative", witness, theta)


def _refined_min_over_offsets(engine: _FacePencil, psis: np.ndarray):
    """Global minimum of psi -> rho_plus(a, e^{i psi} b) with refinement."""
    vals = engine.values(psis, "plus")
    k = psis.shape[0]
    step = 2.0 * np.pi / k
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    idx = np.nonzero((vals <= left) & (vals <= right))[0]
    grid_min = float(vals.min())
    scale = max(1.0, float(np.abs(vals).max()))
    inv = 0.6180339887498949
    best = (grid_min, float(psis[int(vals.argmin())]))
    for i in idx:
        if vals[i] > grid_min + 0.01 * scale:
            continue
        lo = psis[i] - step
        hi = psis[i] + step
        x1 = hi - inv * (hi - lo)
        x2 = lo + inv * (hi - lo)
        f1 = engine.value_at(x1, "plus")
        f2 = engine.value_at(x2, "plus")
        while hi - lo > 1e-10:
            if f1 > f2:
                lo, x1, f1 = x1, x2, f2
                x2 = lo + inv * (hi - lo)
                f2 = engine.value_at(x2, "plus")
            else:
                hi, x2, f2 = x2, x1, f1
                x1 = hi - inv * (hi - lo)
                f1 = engine.value_at(x1, "plus")
        cand = (f1, x1) if f1 <= f2 else (f2, x2)
        if cand[0] < best[0]:
            best = cand
    return best[0], best[1] % (2.0 * np.pi)


def bj_orthogonal_v(
    a: Matrix, b: Matrix, grid_size: int | None = None, cross_check: bool = True
) -> OrthReport:
    """Birkhoff-James orthogonality in the numerical-radius norm.

    Decision: min over psi of rho_plus(a, e^{i psi} b) >= -DECISION_TOL,
    scanned on THETA_GRID directions and refined near the minimum.  The
    direct pencil route is run as a cross-check; a confident disagreement
    raises InconsistentRoutes.
    """
    if a.is_zero() or b.is_zero():
        return OrthReport(True, 0.0, "trivial-zero-element", minimizer=0j)
    va = numerical_radius(a, grid_size)
    faceset = maximizing_faces(a, grid_size)
    engine = _FacePencil(a, faceset, b)
    psis = np.arange(THETA_GRID) * (2.0 * np.pi / THETA_GRID)
    margin_rho, worst_psi = _refined_min_over_offsets(engine, psis)
    decision_rho = margin_rho >= -DECISION_TOL

    minimizer = None
    if cross_check:
        lam, minval = pencil_min(NUMERICAL_RADIUS, a, b, grid_size=grid_size)
        minimizer = lam
        margin_pencil = minval - va
        decision_pencil = margin_pencil >= -DECISION_TOL
        if (
            decision_rho != decision_pencil
            and abs(margin_rho) > DECISION_TOL
            and abs(margin_pencil) > DECISION_TOL
        ):
            raise InconsistentRoutes(
                f"derivative route margin {margin_rho:.3e} vs pencil margin {margin_pencil:.3e}"
            )

    witness = None
    if decision_rho:
        _, x, _ = engine.extremum_at(worst_psi, "plus")
        if x is not None:
            witness = pure_state(x)
    return OrthReport(
        decision_rho,
        float(margin_rho),
        "per_theta_derivative",
        witness,
        float(worst_psi),
        minimizer,
    )


def bj_orthogonal_generic(
    norm: NormFunctional, a: Matrix, b: Matrix, grid_size: int | None = None
) -> OrthReport:
    """Birkhoff-James orthogonality for either norm via pencil minimization."""
    if b.is_zero():
        return OrthReport(True, 0.0, "zero-direction", minimizer=0j)
    na = norm.value(a)
    lam, minval = pencil_min(norm, a, b, grid_size=grid_size)
    margin = minval - na
    return OrthReport(margin >= -DECISION_TOL, float(margin), "pencil", minimizer=lam)


def positive_cone_orth(a: Matrix, b: Matrix) -> OrthReport:
    """Orthogonality decider on the positive cone.

    For positive a and b the relation holds exactly when a radius-attaining
    state of a annihilates b; on the top eigenspace E of a that reads
    lambda_min(compress(b, E)) = 0.
    """
    if not classify(a).positive:
        raise NotPositive("first argument is not positive")
    if not classify(b).positive:
        raise NotPositive("second argument is not positive")
    if a.is_zero():
        return OrthReport(True, 0.0, "trivial-zero-element")
    eig = hermitian_eig(Matrix(hermitian_part(a)))
    top = eig.eigenvalues[0]
    k = int(
        np.searchsorted(-eig.eigenvalues, -(top - CLUSTER_TOL * max(1.0, top)), side="right")
    )
    e = eig.eigenvectors[:, :k]
    sub = hermitian_eig(Matrix(e.conj().T @ b.array @ e))
    lam_min = float(sub.eigenvalues[-1])
    decision = lam_min <= DECISION_TOL
    witness = pure_state(e @ sub.eigenvectors[:, -1]) if decision else None
    return OrthReport(decision, -lam_min, "positive_cone_annihilator", witness, 0.0)


@dataclass(frozen=True)
class PythagoreanReport:
    ok: bool
    worst_slack: float
    samples: int


def pythagorean_check(a: Matrix, b: Matrix, lambda_samples: int = 32) -> PythagoreanReport:
    """Sampled check of v^2(a + lambda b) >= v^2(a) + |lambda|^2 C^2(b).

    Requires a to be numerical-radius orthogonal to b; samples lambda on
    rings |lambda| in {0.1, 0.5, 1, 2, 10}.  ``worst_slack`` is the most
    negative value of the inequality residual, allowed down to
    -1e-6 (1 + |lambda|^2).
    """
    if not bj_orthogonal_v(a, b).decision:
        raise PreconditionViolated("inequality requires numerical-radius orthogonality")
    va2 = numerical_radius(a) ** 2
    cb2 = crawford_number(b) ** 2
    worst = np.inf
    ok = True
    count = 0
    for r in (0.1, 0.5, 1.0, 2.0, 10.0):
        for j in range(lambda_samples):
            lam = r * np.exp(2j * np.pi * j / lambda_samples)
            resid = numerical_radius(a + lam * b) ** 2 - va2 - (abs(lam) ** 2) * cb2
            worst = min(worst, resid)
            if resid < -DECISION_TOL * (1.0 + abs(lam) ** 2):
                ok = False
            count += 1
    return PythagoreanReport(ok, float(worst), count)
