"""Triangle-equality detectors and the refined triangle bound.

v(a + b) = v(a) + v(b) holds exactly when some state phi satisfies
conj(phi(a)) phi(b) = v(a) v(b); any radius-attaining state of the sum is
such a witness, so detection extracts one from the maximizing family of
a + b and verifies the product equation.  The refined bound

    v(a+b) <= (v(a)+v(b))/2 + sqrt((v(a)-v(b))^2 + 4 S)/2,
    S = sup_theta ||Re(e^{i theta} a) Re(e^{i theta} b)||

sandwiches between v(a+b) and v(a)+v(b).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CertificateViolation, ZeroElement
from .matcore import Matrix, hermitian_part, skew_imag_part
from .numrange import DEFAULT_GRID, numerical_radius
from .states import State, maximizing_states

EQUALITY_TOL = 1e-6
WITNESS_TOL = 1e-5


@dataclass(frozen=True)
class EqualityReport:
    """Verdict of a triangle-equality test with its witness evidence."""

    equal: bool
    lhs: float
    rhs: float
    witness_state: State | None = None
    witness_product: complex | None = None
    ratio_check: tuple[complex, complex, complex] | None = None
    sup_product: float | None = None


def _sup_product(a: Matrix, b: Matrix, grid_size: int | None = None) -> float:
    """sup_theta ||Re(e^{i theta} a) Re(e^{i theta} b)|| with refinement."""
    k = DEFAULT_GRID if grid_size is None else int(grid_size)
    thetas = np.arange(k) * (2.0 * np.pi / k)
    ha = np.ascontiguousarray(hermitian_part(a))
    ka = np.ascontiguousarray(skew_imag_part(a))
    hb = np.ascontiguousarray(hermitian_part(b))
    kb = np.ascontiguousarray(skew_imag_part(b))
    vals = _kernels.product_norm_sweep(ha, ka, hb, kb, thetas)
    best = float(vals.max())
    scale = max(1.0, best)
    if best - float(vals.min()) > 1e-9 * scale:
        h = 2.0 * np.pi / k
        left = np.roll(vals, 1)
        right = np.roll(vals, -1)
        for i in np.nonzero((vals >= left) & (vals >= right))[0]:
            if vals[i] < best - 0.01 * scale:
                continue
            _, val = _kernels.refine_product_norm(
                ha, ka, hb, kb, thetas[i] - h, thetas[i] + h
            )
            best = max(best, float(val))
    return best


def _first_witness(m: Matrix) -> State:
    fam = maximizing_states(m)
    for _, states in fam.phase_records:
        if states:
            return states[0]
    raise CertificateViolation("no maximizing witness found")  # pragma: no cover


def triangle_equality_two(a: Matrix, b: Matrix) -> EqualityReport:
    """Detect v(a + b) = v(a) + v(b) and certify it with a state.

    The witness is a radius-attaining state of the sum; its product
    conj(phi(a)) phi(b) must equal v(a) v(b), which forces the individual
    moduli |phi(a)| = v(a), |phi(b)| = v(b).  When either radius vanishes
    the equality is automatic and no witness is synthesized.
    """
    va = numerical_radius(a)
    vb = numerical_radius(b)
    lhs = numerical_radius(a + b)
    rhs = va + vb
    equal = abs(lhs - rhs) <= EQUALITY_TOL * (1.0 + rhs)
    if not equal or a.is_zero() or b.is_zero():
        return EqualityReport(equal, lhs, rhs)
    phi = _first_witness(a + b)
    x = phi.vector
    phi_a = complex(np.vdot(x, a.array @ x))
    phi_b = complex(np.vdot(x, b.array @ x))
    product = phi_a.conjugate() * phi_b
    if abs(product - va * vb) > WITNESS_TOL * (1.0 + va * vb):
        raise CertificateViolation(
            f"witness product {product} misses v(a)v(b) = {va * vb}"
        )
    return EqualityReport(equal, lhs, rhs, phi, product, None, _sup_product(a, b))


def triangle_equality_three(a: Matrix, b: Matrix, c: Matrix) -> EqualityReport:
    """Detect v(a+b+c) = v(a)+v(b)+v(c) with an equal-ratio witness.

    A radius-attaining state psi of the sum must align all three elements:
    the ratios psi(x)/v(x) coincide and have unit modulus, and the pairwise
    products conj(psi(x)) psi(y) equal v(x) v(y).
    """
    if a.is_zero() or b.is_zero() or c.is_zero():
        raise ZeroElement("three-element equality requires nonzero elements")
    va, vb, vc = (numerical_radius(m) for m in (a, b, c))
    lhs = numerical_radius(a + b + c)
    rhs = va + vb + vc
    equal = abs(lhs - rhs) <= EQUALITY_TOL * (1.0 + rhs)
    if not equal:
        return EqualityReport(equal, lhs, rhs)
    psi = _first_witness(a + b + c)
    x = psi.vector
    psi_a = complex(np.vdot(x, a.array @ x))
    psi_b = complex(np.vdot(x, b.array @ x))
    psi_c = complex(np.vdot(x, c.array @ x))
    ratios = (psi_a / va, psi_b / vb, psi_c / vc)
    for r in ratios:
        if abs(abs(r) - 1.0) > WITNESS_TOL:
            raise CertificateViolation(f"witness ratio modulus {abs(r)} is not 1")
    for r, s in ((0, 1), (0, 2), (1, 2)):
        if abs(ratios[r] - ratios[s]) > WITNESS_TOL:
            raise CertificateViolation("witness ratios differ")
    pairs = (
        (psi_a, psi_b, va * vb),
        (psi_a, psi_c, va * vc),
        (psi_b, psi_c, vb * vc),
    )
    for u, w, target in pairs:
        if abs(u.conjugate() * w - target) > WITNESS_TOL * (1.0 + target):
            raise CertificateViolation("pairwise witness product failed")
    return EqualityReport(equal, lhs, rhs, psi, psi_a.conjugate() * psi_b, ratios)


def refined_bound(a: Matrix, b: Matrix, grid_size: int | None = None) -> tuple[float, float]:
    """(bound, sup_product) of the refined triangle inequality.

    Guarantees v(a+b) <= bound <= v(a) + v(b) up to tolerance.
    """
    va = numerical_radius(a)
    vb = numerical_radius(b)
    sup = _sup_product(a, b, grid_size)
    bound = 0.5 * (va + vb) + 0.5 * np.sqrt((va - vb) ** 2 + 4.0 * sup)
    return float(bound), float(sup)
