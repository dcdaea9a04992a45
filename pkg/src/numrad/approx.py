"""Best approximation in span{b} under the numerical-radius norm.

The minimizer zeta of lambda -> v(a + lambda b) gives the best
approximation -zeta b of a; it is unique whenever the Crawford number of b
is positive, with the quantitative separation
v^2(a + eta b) >= v^2(a + zeta b) + |eta - zeta|^2 C^2(b).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import CertificateViolation, PreconditionViolated, ZeroDirection
from .matcore import Matrix
from .numrange import crawford_number, numerical_radius
from .orthkit import NUMERICAL_RADIUS, _search_radius, pencil_min

#: Crawford numbers below this give no uniqueness claim
CRAWFORD_FLOOR = 1e-8
AGREEMENT_TOL = 1e-6
SEPARATION_SLACK = 1e-6


@dataclass(frozen=True)
class ApproxResult:
    """Minimizer, distance and uniqueness evidence.

    ``restarts_agreement`` is the largest pairwise distance between the
    minimizers returned by the independent descent starts; ``unique`` holds
    when the Crawford number is positive and all restarts agreed.
    """

    zeta: complex
    distance: float
    unique: bool
    restarts_agreement: float
    crawford_b: float


def _certify(a: Matrix, b: Matrix, zeta: complex, cb: float) -> None:
    """Sampled strict improvement and Pythagorean lower bound at the minimizer."""
    base = numerical_radius(a + zeta * b)
    for r in (1e-3, 0.1, 1.0):
        for j in range(8):
            eta = zeta + r * cmath.exp(2j * cmath.pi * j / 8)
            if numerical_radius(a + eta * b) <= base:
                raise CertificateViolation(
                    f"no strict improvement at |eta - zeta| = {r}"
                )
    base2 = base**2
    for r in (0.1, 1.0):
        for j in range(8):
            lam = r * cmath.exp(2j * cmath.pi * j / 8)
            lhs = numerical_radius((a + zeta * b) + lam * b) ** 2
            if lhs < base2 + (abs(lam) ** 2) * cb**2 - SEPARATION_SLACK:
                raise CertificateViolation("Pythagorean lower bound failed at the minimizer")


def best_approximation(a: Matrix, b: Matrix, grid_size: int | None = None) -> ApproxResult:
    """Unique best approximation of a in span{b} for the radius norm.

    Runs the pencil descent from five starts (zero and the four compass
    points of the coercivity disk); ties between restarts are broken
    lexicographically on (distance, |zeta|, arg zeta).
    """
    if b.is_zero():
        raise ZeroDirection("approximation direction must be nonzero")
    radius = _search_radius(NUMERICAL_RADIUS, a, b)
    starts = [0j, complex(radius), 1j * radius, complex(-radius), -1j * radius]
    runs = []
    for s in starts:
        lam, val = pencil_min(NUMERICAL_RADIUS, a, b, start=s, grid_size=grid_size)
        runs.append((val, abs(lam), cmath.phase(lam) % (2.0 * np.pi), lam))
    runs.sort(key=lambda t: (t[0], t[1], t[2]))
    zeta = runs[0][3]
    distance = runs[0][0]
    agreement = max(
        abs(r1[3] - r2[3]) for i, r1 in enumerate(runs) for r2 in runs[i + 1 :]
    )
    cb = crawford_number(b)
    unique = cb > CRAWFORD_FLOOR and agreement <= AGREEMENT_TOL
    if cb > CRAWFORD_FLOOR:
        _certify(a, b, zeta, cb)
    return ApproxResult(zeta, float(distance), unique, float(agreement), float(cb))


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    worst_slack: float
    samples: int


def uniqueness_certificate(
    a: Matrix, b: Matrix, result: ApproxResult, angles: int = 16
) -> CertificateReport:
    """Quantitative separation around the minimizer.

    Verifies v^2(a + eta b) >= v^2(a + zeta b) + |eta - zeta|^2 C^2(b) minus
    slack for eta on rings around zeta.  Requires C(b) > CRAWFORD_FLOOR;
    the separation is what forces uniqueness of the minimizer.
    """
    if result.crawford_b <= CRAWFORD_FLOOR:
        raise PreconditionViolated("no uniqueness claim when the Crawford number vanishes")
    zeta = result.zeta
    base2 = numerical_radius(a + zeta * b) ** 2
    cb2 = result.crawford_b**2
    worst = np.inf
    ok = True
    count = 0
    for r in (0.1, 0.5, 1.0, 2.0):
        for j in range(angles):
            eta = zeta + r * cmath.exp(2j * cmath.pi * j / angles)
            resid = (
                numerical_radius(a + eta * b) ** 2
                - base2
                - (abs(eta - zeta) ** 2) * cb2
            )
            worst = min(worst, resid)
            if resid < -SEPARATION_SLACK:
                ok = False
            count += 1
    return CertificateReport(ok, float(worst), count)
