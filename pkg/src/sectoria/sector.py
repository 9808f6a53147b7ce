"""Sector membership, the canonical congruence decomposition, and the
boundary of the numerical range."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotSectorialError

# The real part counts as positive definite above this relative floor.
PD_RTOL = 1e-12
# Default slack granted to boundary eigenvalues in membership tests.
MEMBERSHIP_TOL = 1e-9


def validate_sector_angle(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 <= a < math.pi / 2:
        raise ValueError(f"sector half-angle must lie in [0, pi/2), got {alpha}")
    return a


def rotated_real_part(a, beta: float) -> np.ndarray:
    """Hermitian part of e^{i beta} A, i.e. (e^{i beta} A + e^{-i beta} A*)/2."""
    m = linalg.as_square_matrix(a)
    w = complex(math.cos(beta), math.sin(beta))
    return (w * m + np.conj(w) * m.conj().T) / 2.0


@dataclass(frozen=True)
class SectorWitness:
    """Certificate that some unit vector leaves the sector."""

    rotation: float        # half-plane direction beta whose test failed
    eigenvalue: float      # offending eigenvalue of the rotated real part
    vector: np.ndarray     # corresponding unit eigenvector x
    point: complex         # x* A x, a numerical-range point outside the sector


@dataclass(frozen=True)
class SectorMembership:
    inside: bool
    witness: SectorWitness | None = None

    def __bool__(self) -> bool:
        return self.inside


def _witness(m: np.ndarray, h: np.ndarray, beta: float) -> SectorWitness:
    w, v = np.linalg.eigh(h)
    x = v[:, 0]
    return SectorWitness(beta, float(w[0]), x, complex(x.conj() @ m @ x))


def in_sector(a, alpha: float, tol: float = MEMBERSHIP_TOL) -> SectorMembership:
    """Does the numerical range of ``a`` lie in the sector of half-angle alpha?

    Membership holds when min-eig(Re(e^{i beta} A)) >= -tol * ||A||_F for
    both beta = +-(pi/2 - alpha) and the plain real part is strictly
    positive definite (the sector excludes the imaginary axis).  On failure
    the violating eigenpair is returned as a witness.
    """
    m = linalg.as_square_matrix(a)
    alpha = validate_sector_angle(alpha)
    scale = linalg.frobenius(m)
    floor = -tol * scale
    for beta in (math.pi / 2 - alpha, alpha - math.pi / 2):
        h = rotated_real_part(m, beta)
        if float(np.linalg.eigvalsh(h)[0]) < floor:
            return SectorMembership(False, _witness(m, h, beta))
    h = rotated_real_part(m, 0.0)
    if float(np.linalg.eigvalsh(h)[0]) <= PD_RTOL * scale:
        return SectorMembership(False, _witness(m, h, 0.0))
    return SectorMembership(True)


@dataclass(frozen=True)
class SectorialDecomposition:
    """Invertible factor X and angles theta with A = X diag(e^{i theta}) X*."""

    x: np.ndarray
    thetas: np.ndarray  # sorted descending, |theta_j| < pi/2

    @property
    def z(self) -> np.ndarray:
        """The diagonal unitary carrying the phases."""
        return np.diag(np.exp(1j * self.thetas))

    @property
    def angle(self) -> float:
        """max_j |theta_j|, the half-angle of the smallest enclosing sector."""
        return float(np.max(np.abs(self.thetas)))

    def reconstruct(self) -> np.ndarray:
        return (self.x * np.exp(1j * self.thetas)) @ self.x.conj().T


def sectorial_decompose(a) -> SectorialDecomposition:
    """Canonical congruence diagonalization A = X diag(e^{i theta_j}) X*.

    With H = Re A (required positive definite) and K = Im A, the angles are
    atan of the eigenvalues of H^{-1/2} K H^{-1/2}; column j of H^{1/2} U is
    rescaled by cos(theta_j)^{-1/2} so the diagonal unitary carries all the
    phase and X Z X* reproduces A.
    """
    m = linalg.as_square_matrix(a)
    re, im = linalg.cartesian_split(m)
    scale = linalg.frobenius(m)
    hw, hv = linalg.hermitian_eigen(re)
    if float(hw[0]) <= PD_RTOL * scale:
        raise NotSectorialError(
            f"real part is not positive definite (min eigenvalue {hw[0]:.3e})"
        )
    root = (hv * np.sqrt(hw)) @ hv.conj().T
    root_inv = (hv * (1.0 / np.sqrt(hw))) @ hv.conj().T
    c = root_inv @ im @ root_inv.conj().T
    d, u = linalg.hermitian_eigen(c)
    thetas = np.arctan(d)
    x = (root @ u) / np.sqrt(np.cos(thetas))
    order = np.argsort(-thetas, kind="stable")
    return SectorialDecomposition(x[:, order], thetas[order])


def sector_angle(a) -> float:
    """Half-angle of the smallest sector containing W(A)."""
    return sectorial_decompose(a).angle


def sector_angle_bisect(a, tol: float = 1e-13, iters: int = 60) -> float:
    """Bisection of ``in_sector`` over [0, pi/2); independent of the
    decomposition route."""
    m = linalg.as_square_matrix(a)
    hi = math.pi / 2 - 1e-12
    if not in_sector(m, hi, tol):
        raise NotSectorialError("no admissible sector half-angle below pi/2")
    lo = 0.0
    if in_sector(m, lo, tol):
        return 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if in_sector(m, mid, tol):
            hi = mid
        else:
            lo = mid
    return hi


def numerical_range_boundary(a, m_points: int) -> np.ndarray:
    """Boundary points of W(A) by the support-function construction.

    For each direction phi_t = 2 pi t / m the top eigenvector v of
    Re(e^{-i phi_t} A) supports the numerical range, and v* A v is the
    matching boundary point.
    """
    mat = linalg.as_square_matrix(a)
    if m_points < 3:
        raise ValueError("at least 3 boundary points are required")
    points = np.empty(m_points, dtype=np.complex128)
    for t in range(m_points):
        phi = 2.0 * math.pi * t / m_points
        _, v = np.linalg.eigh(rotated_real_part(mat, -phi))
        top = v[:, -1]
        points[t] = top.conj() @ mat @ top
    return points
