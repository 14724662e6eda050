"""Sinc collocation of -f'' + q(x) f = lambda f on (0, inf).

Enforcing the equation at the sinc points turns it into a dense real
nonsymmetric matrix eigenproblem.  With the chain rule factors phi' and
phi'' expressed through e^(-2ma), the assembled matrix is

    A[n, m] = q(x_m) d0[n, m] + (e^(-2ma)/a) d1[n, m]
              - ((1 + e^(-2ma))/a^2) d2[n, m],

where the exponential prefactors are attached to the column (summation)
index m.  Because d1 is antisymmetric and d2 symmetric, this matrix is
exactly the transpose of the system satisfied by the nodal samples
f(x_m), in which the prefactors sit on the row (collocation) index with
the opposite d1 orientation.  Both have identical spectra; ``solve``
diagonalizes the transpose so the returned coefficient vectors are the
nodal values f(x_m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dense_eig import EigenSolveError, eig
from .sinc import SincGrid, _evaluate_on_points, build_deltas, interpolate

__all__ = [
    "CollocationProblem",
    "EigenPair",
    "REALITY_TOL",
    "assemble",
    "solve",
    "reconstruct",
]

# Discretizing a self-adjoint operator can leak spurious complex pairs;
# eigenvalues with |Im| beyond this relative threshold are discarded.
REALITY_TOL = 1e-8


@dataclass(frozen=True)
class CollocationProblem:
    """A potential discretized on a sinc grid.

    ``potential`` is the full multiplicative term of the reduced radial
    equation, e.g. (4*l^2 - 1)/(4*x^2) + V(x).  ``matrix`` is the dense
    collocation matrix described in the module docstring.
    """

    grid: SincGrid
    potential: Callable[[np.ndarray], np.ndarray]
    matrix: np.ndarray


@dataclass(frozen=True)
class EigenPair:
    """One retained eigenpair of a collocation problem.

    ``coefficients`` holds the nodal values f(x_m) with the
    largest-magnitude entry normalized to positive sign.  ``residual`` is
    the relative residual reported by the dense eigensolver and
    ``imag_leak`` the magnitude of the discarded imaginary part of the
    raw eigenvalue.
    """

    eigenvalue: float
    coefficients: np.ndarray
    residual: float
    imag_leak: float


def assemble(grid: SincGrid, potential: Callable[[np.ndarray], np.ndarray]) -> CollocationProblem:
    """Build the collocation matrix for ``potential`` on ``grid``.

    The potential must be finite at every sinc point.
    """
    pot_vals = _evaluate_on_points(potential, grid.points)
    if not np.all(np.isfinite(pot_vals)):
        bad = grid.points[~np.isfinite(pot_vals)][0]
        raise ValueError(f"potential is not finite at sinc point x={bad!r}")

    deltas = build_deltas(grid)
    e2m = -grid.phi2  # e^(-2ma), stored on the grid as phi''(x_m) = -e^(-2ma)
    col1 = e2m / grid.a
    col2 = (1.0 + e2m) / grid.a**2
    matrix = np.diag(pot_vals) + deltas.d1 * col1[None, :] - deltas.d2 * col2[None, :]
    if not np.all(np.isfinite(matrix)):
        raise ValueError("collocation matrix has nonfinite entries; reduce M")
    return CollocationProblem(grid=grid, potential=potential, matrix=matrix)


def _ordered_real_indices(w: np.ndarray) -> np.ndarray:
    keep = np.flatnonzero(np.abs(w.imag) <= REALITY_TOL * np.maximum(1.0, np.abs(w.real)))
    return keep[np.argsort(w.real[keep], kind="stable")]


def solve(problem: CollocationProblem, count: int) -> list[EigenPair]:
    """Return the ``count`` smallest real eigenpairs, sorted ascending.

    Raw eigenvalues whose imaginary magnitude exceeds
    REALITY_TOL * max(1, |Re|) are discarded as discretization artifacts;
    if fewer than ``count`` survive, an EigenSolveError reports how many
    did.  Coefficient vectors are the nodal values f(x_m) (right
    eigenvectors of the transposed stored matrix, see module docstring),
    sign-normalized so the largest-magnitude entry is positive.
    """
    K = problem.grid.size
    if not 1 <= count <= K:
        raise ValueError(f"count must lie in [1, {K}], got {count}")

    decomp = eig(problem.matrix.T)
    order = _ordered_real_indices(decomp.eigenvalues)
    if len(order) < count:
        raise EigenSolveError(
            f"only {len(order)} of {K} eigenvalues passed the reality filter, "
            f"need {count}"
        )

    chosen = _break_ties(decomp, order[:count].tolist(), order[count:].tolist())
    pairs = []
    for idx in chosen:
        lam = decomp.eigenvalues[idx]
        vec = np.real(decomp.eigenvectors[:, idx]).copy()
        top = np.argmax(np.abs(vec))
        if vec[top] < 0.0:
            vec = -vec
        pairs.append(
            EigenPair(
                eigenvalue=float(lam.real),
                coefficients=vec,
                residual=float(decomp.residuals[idx]),
                imag_leak=float(abs(lam.imag)),
            )
        )
    return pairs


def _break_ties(decomp, chosen: list[int], rest: list[int]) -> list[int]:
    """Order exact eigenvalue ties by their coefficient vectors.

    The flagship spectra are simple, so this is a determinism safety net
    for degenerate synthetic problems only.
    """
    lams = decomp.eigenvalues.real
    if len(set(lams[chosen].tolist())) == len(chosen):
        return chosen
    groups: dict[float, list[int]] = {}
    for idx in chosen + [r for r in rest if lams[r] == lams[chosen[-1]]]:
        groups.setdefault(lams[idx], []).append(idx)
    ordered: list[int] = []
    for lam in sorted(groups):
        members = sorted(groups[lam], key=lambda i: tuple(np.real(decomp.eigenvectors[:, i])))
        ordered.extend(members)
    return ordered[: len(chosen)]


def reconstruct(grid: SincGrid, pair: EigenPair, x: np.ndarray | float) -> np.ndarray | float:
    """Evaluate the eigenfunction interpolant of ``pair`` at x > 0."""
    return interpolate(grid, pair.coefficients, x)
