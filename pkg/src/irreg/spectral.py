"""Largest eigenvalues of the adjacency matrix A and signless Laplacian D + A.

Both matrices are symmetric and entrywise nonnegative, so shifted power
iteration from the all-ones vector converges to the top eigenvalue without
deflation. The shift keeps bipartite spectra (where -mu is also an
eigenvalue) from oscillating.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, UnsupportedSizeError
from .graph import Graph

DENSE_CAP = 2000
MAX_ITER = 100_000
RQ_RTOL = 1e-12
RESIDUAL_RTOL = 1e-10


@dataclass(frozen=True)
class SpectralResult:
    value: float
    residual: float
    witness: np.ndarray


def largest_eigenpair(M: np.ndarray, shift: float = 1.0, max_iter: int = MAX_ITER) -> SpectralResult:
    """Top eigenpair of a symmetric nonnegative matrix by shifted power iteration."""
    n = M.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    S = M + shift * np.eye(n)
    prev = None
    residual = np.inf
    for _ in range(max_iter):
        y = S @ x
        lam = float(x @ y) - shift
        residual = float(np.linalg.norm(y - (lam + shift) * x))
        scale = max(1.0, abs(lam))
        if (prev is not None and abs(lam - prev) <= RQ_RTOL * scale
                and residual <= RESIDUAL_RTOL * scale):
            return SpectralResult(lam, residual, x)
        prev = lam
        x = y / np.linalg.norm(y)
    raise ConvergenceError("power iteration did not converge", residual)


def _check_size(g: Graph) -> None:
    if g.n < 1:
        raise UnsupportedSizeError("spectral radius needs n >= 1")
    if g.n > DENSE_CAP:
        raise UnsupportedSizeError(f"n={g.n} exceeds dense solver cap {DENSE_CAP}")


def adjacency_spectral_radius(g: Graph) -> SpectralResult:
    _check_size(g)
    res = largest_eigenpair(g.adjacency_matrix(), shift=1.0)
    assert res.value * g.n >= 2 * g.m - 1e-9 * max(1, g.n), "mu below mean degree"
    return res


def signless_laplacian_spectral_radius(g: Graph) -> SpectralResult:
    _check_size(g)
    Q = g.adjacency_matrix() + np.diag(np.asarray(g.degrees, dtype=float))
    res = largest_eigenpair(Q, shift=1.0)
    assert res.value * g.n >= 4 * g.m - 1e-9 * max(1, g.n), "q below twice the mean degree"
    return res
