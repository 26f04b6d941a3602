"""Dense symmetric-matrix core: validation, spectral decompositions, Schatten
norms, exact PSD projections, and deterministic random-matrix generation.

Matrices are plain ``numpy.ndarray`` objects. Functions that require a
symmetric operand validate it with :func:`require_symmetric`; asymmetric
input is rejected rather than silently repaired, and callers opt in to
repair through :func:`symmetrize`.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AsymmetricMatrixError, ConvergenceFailure, NonSquareError

SYM_TOL_FACTOR = 1e-10


def rng_from_seed(seed):
    """Deterministic random stream for a 64-bit unsigned seed.

    Identical seeds produce identical draw sequences within one build.
    ``numpy.random.Generator`` instances pass through unchanged so that
    callers can hand an already-advanced stream to a subroutine.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def symmetrize(a):
    """Return the symmetric part (A + A^T)/2 of a square matrix."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {a.shape}")
    return (a + a.T) / 2.0


def require_symmetric(a, tol=None):
    """Validate that ``a`` is a symmetric matrix and return it as float64.

    The symmetry defect max |a_ij - a_ji| must not exceed
    ``tol`` (default ``SYM_TOL_FACTOR * max(1, max|a_ij|)``).
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise NonSquareError("matrix dimension must be at least 1")
    if tol is None:
        tol = SYM_TOL_FACTOR * max(1.0, float(np.max(np.abs(a))) if a.size else 1.0)
    defect = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if defect > tol:
        raise AsymmetricMatrixError(
            f"matrix is not symmetric: max asymmetry {defect:.3e} exceeds tolerance {tol:.3e}"
        )
    return a


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral factorization X = U diag(values) U^T with values sorted descending."""

    values: np.ndarray
    vectors: np.ndarray


def eigh(x):
    """Full eigen-decomposition of a symmetric matrix.

    Eigenvalues are returned in descending order. Each eigenvector is
    oriented so that its entry of largest magnitude is positive (first such
    entry on ties), which makes decompositions reproducible across runs.
    """
    x = require_symmetric(x)
    try:
        w, v = np.linalg.eigh(x)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigen-decomposition failed: {exc}") from exc
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    anchor = np.argmax(np.abs(v), axis=0)
    signs = np.sign(v[anchor, np.arange(v.shape[1])])
    signs[signs == 0] = 1.0
    v *= signs
    return EigenDecomposition(values=w, vectors=v)


def frobenius_norm(x):
    """Frobenius norm sqrt(sum of squared entries)."""
    return float(np.linalg.norm(np.asarray(x, dtype=float)))


def spectral_norm(x):
    """Largest singular value of a symmetric matrix, via full decomposition."""
    dec = eigh(x)
    return float(np.max(np.abs(dec.values))) if dec.values.size else 0.0


def schatten_norm(x, p):
    """Schatten norm of a symmetric matrix for p in {"frobenius", "spectral"}."""
    if p == "frobenius":
        return frobenius_norm(require_symmetric(x))
    if p == "spectral":
        return spectral_norm(x)
    raise ValueError(f"unsupported Schatten norm {p!r}; use 'frobenius' or 'spectral'")


def exact_psd_projection(x):
    """Frobenius-nearest PSD matrix: eigen-decompose and clip negative eigenvalues."""
    dec = eigh(x)
    clipped = np.maximum(dec.values, 0.0)
    proj = (dec.vectors * clipped) @ dec.vectors.T
    return (proj + proj.T) / 2.0


def polar_psd_projection(x):
    """PSD projection through the polar decomposition, (X + (X^T X)^{1/2})/2.

    The matrix square root is taken through the eigen-decomposition of
    X^T X, with small negative eigenvalues (numerical noise) clamped to zero.
    """
    x = require_symmetric(x)
    gram = x.T @ x
    dec = eigh(symmetrize(gram))
    root = (dec.vectors * np.sqrt(np.maximum(dec.values, 0.0))) @ dec.vectors.T
    proj = (x + root) / 2.0
    return (proj + proj.T) / 2.0


def gaussian_matrix(rows, cols, rng):
    """Matrix with iid standard-normal entries drawn from ``rng``."""
    if rows < 1 or cols < 1:
        raise ValueError("gaussian_matrix requires rows, cols >= 1")
    return rng.standard_normal((rows, cols))


def random_orthogonal(n, rng):
    """Haar-distributed n-by-n orthogonal matrix (QR of a Gaussian, sign-fixed)."""
    g = gaussian_matrix(n, n, rng)
    q, r = np.linalg.qr(g)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def spectrum_matrix(eigenvalues, rng):
    """Symmetric matrix with prescribed eigenvalues in a random orthogonal basis."""
    eigenvalues = np.asarray(eigenvalues, dtype=float).ravel()
    if eigenvalues.size < 1:
        raise ValueError("need at least one eigenvalue")
    y = random_orthogonal(eigenvalues.size, rng)
    return symmetrize((y * eigenvalues) @ y.T)
