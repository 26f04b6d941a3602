"""Randomized range finding with the power scheme, power iteration for the
dominant singular value, and the shift trick for the minimal-eigenvalue
magnitude."""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, RankDeficientSample
from .symmetric import gaussian_matrix

RANK_TRUNCATION_FACTOR = 1e-12


@dataclass(frozen=True)
class RangeParams:
    """Sketch configuration: target rank k, oversampling l, power exponent q.

    ``seed`` is optional and only consulted by callers that build their own
    random stream (e.g. the CLI); the sampling routines below take an
    explicit generator.
    """

    k: int
    l: int = 10
    q: int = 0
    seed: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParams(f"target rank k must be >= 1, got {self.k}")
        if self.l < 0:
            raise InvalidParams(f"oversampling l must be >= 0, got {self.l}")
        if self.q < 0:
            raise InvalidParams(f"power exponent q must be >= 0, got {self.q}")

    @property
    def width(self):
        return self.k + self.l


def orthonormality_defect(q):
    """Frobenius distance of Q^T Q from the identity (0 for an orthonormal basis)."""
    q = np.asarray(q, dtype=float)
    r = q.shape[1]
    return float(np.linalg.norm(q.T @ q - np.eye(r)))


def _orth(y):
    return np.linalg.qr(y, mode="reduced")[0]


def range_finder(x, params, rng, strict=False):
    """Orthonormal basis approximating the range of (X X^T)^q X.

    Draws a Gaussian test matrix with ``k + l`` columns, applies the power
    scheme as 2q+1 alternating multiplications, and orthonormalizes the
    sample with an economy QR. For q >= 2 the intermediate block is
    re-orthonormalized after every multiply to prevent loss of column
    independence.

    Sample columns whose R-diagonal falls below ``1e-12 * ||Y||_F`` are
    dropped (the basis is narrower than requested); with ``strict=True``
    this raises :class:`RankDeficientSample` instead.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 2:
        raise InvalidParams(f"expected a matrix, got shape {x.shape}")
    m, n = x.shape
    width = params.width
    if width > min(m, n):
        raise InvalidParams(f"k+l = {width} exceeds min(m, n) = {min(m, n)}")

    stabilize = params.q >= 2
    y = x @ gaussian_matrix(n, width, rng)
    for _ in range(params.q):
        if stabilize:
            y = _orth(y)
        z = x.T @ y
        if stabilize:
            z = _orth(z)
        y = x @ z

    scale = np.linalg.norm(y)
    q_full, r_full = np.linalg.qr(y, mode="reduced")
    keep = np.abs(np.diag(r_full)) > RANK_TRUNCATION_FACTOR * scale
    if not np.all(keep):
        if strict:
            raise RankDeficientSample(
                f"sampled matrix has numerical rank {int(np.count_nonzero(keep))} < {width}"
            )
        q_full = q_full[:, keep]
    return q_full


def power_iteration(x, n_iter, rng):
    """Estimate of the largest singular value of a symmetric matrix.

    Runs exactly ``n_iter`` normalized multiplications from a Gaussian start
    and returns ||X v||_2 at the final iterate. Returns 0 when the iterate
    is annihilated (X numerically zero).
    """
    x = np.asarray(x, dtype=float)
    if n_iter < 1:
        raise InvalidParams(f"power iteration needs n_iter >= 1, got {n_iter}")
    v = rng.standard_normal(x.shape[0])
    floor = np.finfo(float).tiny * x.shape[0]
    for _ in range(n_iter):
        w = x @ v
        nrm = np.linalg.norm(w)
        if nrm <= floor:
            return 0.0
        v = w / nrm
    return float(np.linalg.norm(x @ v))


def min_eig_magnitude(x, n_iter, rng):
    """Estimate of |lambda_min| of a symmetric matrix via two power iterations.

    The dominant singular value sigma_1 is estimated first; shifting by
    -sigma_1 I makes the spectrum nonpositive, so the dominant singular
    value of the shifted matrix reveals the minimal eigenvalue through
    |sigma_1 - sigma_2|.
    """
    x = np.asarray(x, dtype=float)
    s1 = power_iteration(x, n_iter, rng)
    shifted = x - s1 * np.eye(x.shape[0])
    s2 = power_iteration(shifted, n_iter, rng)
    return abs(s1 - s2)
