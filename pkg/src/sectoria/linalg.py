"""Dense complex matrix kernel.

Every operation is a pure function of its inputs and never mutates its
arguments.  All tolerances are relative to the Frobenius norm, so the
contracts are invariant under the rescaling A -> c*A.
"""

from __future__ import annotations

import warnings
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import NotConvergedError, NotPositiveDefiniteError, SingularMatrixError

# Pivot magnitudes below PIVOT_RTOL * ||A||_F count as singular.
PIVOT_RTOL = 1e-13
# Residual / orthonormality contract of the Hermitian eigensolver.
EIGEN_RTOL = 1e-11
# How far from exact symmetry a "Hermitian" input may be.
HERMITIAN_RTOL = 1e-10


def as_square_matrix(a) -> np.ndarray:
    """Coerce ``a`` to an n-by-n complex128 array, validating shape and finiteness."""
    m = np.array(a, dtype=np.complex128, order="C")
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(a))


class CartesianPair(NamedTuple):
    """Hermitian halves of the split A = re + 1j*im."""

    re: np.ndarray
    im: np.ndarray


def cartesian_split(a) -> CartesianPair:
    """Return ((A + A*)/2, (A - A*)/(2i)); both parts are exactly Hermitian."""
    m = as_square_matrix(a)
    mh = m.conj().T
    return CartesianPair((m + mh) / 2.0, (m - mh) / 2.0j)


class HermitianEigenResult(NamedTuple):
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigen(h) -> HermitianEigenResult:
    """Eigendecomposition H = V diag(w) V* of a Hermitian matrix.

    The input may deviate from exact symmetry by at most
    ``HERMITIAN_RTOL * ||H||_F``; it is symmetrized before factoring.
    """
    m = as_square_matrix(h)
    scale = frobenius(m)
    if frobenius(m - m.conj().T) > HERMITIAN_RTOL * max(scale, np.finfo(float).tiny):
        raise ValueError("input is not Hermitian within tolerance")
    sym = (m + m.conj().T) / 2.0
    try:
        w, v = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NotConvergedError(str(exc)) from exc
    return HermitianEigenResult(w, v)


def hermitian_eigenvalues(h) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (no eigenvectors)."""
    m = as_square_matrix(h)
    scale = frobenius(m)
    if frobenius(m - m.conj().T) > HERMITIAN_RTOL * max(scale, np.finfo(float).tiny):
        raise ValueError("input is not Hermitian within tolerance")
    try:
        return np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise NotConvergedError(str(exc)) from exc


def _lu_factor(m: np.ndarray):
    """LU with partial pivoting; rejects pivots below the relative threshold."""
    scale = frobenius(m)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    if scale == 0.0 or float(np.min(np.abs(np.diag(lu)))) < PIVOT_RTOL * scale:
        raise SingularMatrixError(
            f"pivot below {PIVOT_RTOL:g} * ||A||_F; matrix is numerically singular"
        )
    return lu, piv


def solve(a, b) -> np.ndarray:
    """Solve A X = B via LU with partial pivoting."""
    m = as_square_matrix(a)
    lu, piv = _lu_factor(m)
    rhs = np.asarray(b, dtype=np.complex128)
    return scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)


def inverse(a) -> np.ndarray:
    """Inverse of A via LU with partial pivoting."""
    m = as_square_matrix(a)
    lu, piv = _lu_factor(m)
    eye = np.eye(m.shape[0], dtype=np.complex128)
    return scipy.linalg.lu_solve((lu, piv), eye, check_finite=False)


def determinant(a) -> complex:
    """det(A) as the signed product of LU pivots (0-ish for singular input)."""
    m = as_square_matrix(a)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    swaps = int(np.sum(piv != np.arange(m.shape[0])))
    sign = -1.0 if swaps % 2 else 1.0
    return complex(sign * np.prod(np.diag(lu)))


def leading_principal_submatrix(a, k: int) -> np.ndarray:
    """Top-left k-by-k block A_k."""
    m = as_square_matrix(a)
    if not 1 <= k <= m.shape[0]:
        raise IndexError(f"k must be in 1..{m.shape[0]}, got {k}")
    return m[:k, :k].copy()


def hermitian_sqrt(h) -> np.ndarray:
    """Principal square root of a Hermitian positive definite matrix."""
    w, v = hermitian_eigen(h)
    if float(w[0]) <= 0.0:
        raise NotPositiveDefiniteError(
            f"minimum eigenvalue {w[0]:.3e} is not positive"
        )
    s = (v * np.sqrt(w)) @ v.conj().T
    return (s + s.conj().T) / 2.0


def singular_values(a) -> np.ndarray:
    """Singular values of A in descending order."""
    m = as_square_matrix(a)
    return np.linalg.svd(m, compute_uv=False)
