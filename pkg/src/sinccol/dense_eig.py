"""Dense real nonsymmetric eigensolver with verified residuals.

Delegates the decomposition itself to LAPACK's dgeev (balancing,
Hessenberg reduction, shifted QR) through scipy, but verifies the
per-pair residual contract here: every returned pair must satisfy
||A v - lambda v||_inf <= 1e-8 * ||A||_inf * ||v||_inf.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = ["EigenDecomposition", "EigenSolveError", "RESIDUAL_TOL", "eig"]

RESIDUAL_TOL = 1e-8


class EigenSolveError(RuntimeError):
    """Raised when an eigensolve fails to converge or violates its contract."""


@dataclass(frozen=True)
class EigenDecomposition:
    """All K eigenpairs of a real K x K matrix, in no particular order.

    ``eigenvectors[:, j]`` belongs to ``eigenvalues[j]``; ``residuals[j]``
    is the relative infinity-norm residual of that pair.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray


def _pair_residuals(A: np.ndarray, w: np.ndarray, V: np.ndarray) -> np.ndarray:
    # Split the complex GEMM into real parts; for real spectra the
    # imaginary part is exactly zero and half the work is skipped.
    R = (A @ V.real).astype(complex)
    if np.any(V.imag):
        R += 1j * (A @ V.imag)
    R -= V * w[None, :]
    norm_a = np.max(np.sum(np.abs(A), axis=1))
    vec_inf = np.max(np.abs(V), axis=0)
    denom = np.maximum(norm_a * vec_inf, np.finfo(float).tiny)
    return np.max(np.abs(R), axis=0) / denom


def eig(matrix: np.ndarray) -> EigenDecomposition:
    """Solve A v = lambda v for a real square matrix, all K pairs.

    Raises EigenSolveError if the QR iteration fails to converge or any
    returned pair misses the residual contract; never returns a silent
    partial result.
    """
    A = np.asarray(matrix, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"matrix must be square with K >= 1, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must all be finite")

    try:
        w, V = scipy.linalg.eig(A)
    except scipy.linalg.LinAlgError as exc:
        raise EigenSolveError(f"QR iteration failed to converge: {exc}") from exc

    if np.any(np.max(np.abs(V), axis=0) == 0.0):
        raise EigenSolveError("eigensolver returned a zero eigenvector")

    residuals = _pair_residuals(A, w, V)
    worst = float(np.max(residuals))
    if worst > RESIDUAL_TOL:
        raise EigenSolveError(
            f"residual contract violated: max relative residual {worst:.3e} "
            f"exceeds {RESIDUAL_TOL:.1e}"
        )
    return EigenDecomposition(eigenvalues=w, eigenvectors=V, residuals=residuals)
