"""Randomized PSD projection (plain and scaled variants) and a dispatcher
over all projection methods."""

import time
from dataclasses import dataclass, field

import numpy as np

from .errors import AlphaTooSmall, InvalidParams
from .sketch import RangeParams, min_eig_magnitude, range_finder
from .symmetric import (
    eigh,
    exact_psd_projection,
    frobenius_norm,
    polar_psd_projection,
    require_symmetric,
    rng_from_seed,
    symmetrize,
)

METHODS = ("exact", "polar", "randomized", "scaled_randomized")


@dataclass
class ProjectorConfig:
    """Selects a projection method and its parameters.

    ``params`` is required by the randomized methods. The scaled method
    estimates alpha = |lambda_min| with ``power_N`` power-iteration steps
    unless ``alpha_override`` is given; ``scale_factor`` multiplies the
    alpha passed to the scaled projection (1.0 uses alpha as estimated,
    0.5 reproduces the alpha/2 call variant).
    """

    method: str = "exact"
    params: RangeParams | None = None
    power_N: int = 10
    alpha_override: float | None = None
    scale_factor: float = 1.0
    collect_diagnostics: bool = False
    return_factors: bool = False

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidParams(f"unknown projection method {self.method!r}")
        if self.method in ("randomized", "scaled_randomized") and self.params is None:
            raise InvalidParams(f"method {self.method!r} requires RangeParams")
        if self.method == "scaled_randomized" and self.alpha_override is None and self.power_N < 1:
            raise InvalidParams("scaled method needs power_N >= 1 or alpha_override")


@dataclass
class ProjectionReport:
    """Result of a projection call plus diagnostics.

    ``factors`` (present when requested) is a pair (W, d) with
    result = W diag(d) W^T, W having orthonormal columns and d > 0.
    ``residual_frob`` is ||X - Q Q^T X||_F, collected only on request.
    """

    result: np.ndarray
    method: str
    effective_rank: int
    alpha_used: float | None = None
    residual_frob: float | None = None
    wall_time: float = 0.0
    factors: tuple[np.ndarray, np.ndarray] | None = None
    fallback: bool = False
    basis_width: int = 0


def _assemble_clipped(basis, vectors, clipped, scale=1.0):
    """Dense matrix scale * (basis @ vectors) diag(clipped) (basis @ vectors)^T."""
    w = basis @ vectors
    keep = clipped > 0.0
    w_kept = w[:, keep]
    d_kept = clipped[keep] * scale
    return symmetrize((w_kept * d_kept) @ w_kept.T), w_kept, d_kept


def _zero_report(x, method, t0):
    n = x.shape[0]
    return ProjectionReport(
        result=np.zeros((n, n)),
        method=method,
        effective_rank=0,
        wall_time=time.perf_counter() - t0,
        factors=(np.zeros((n, 0)), np.zeros(0)),
    )


def ran_proj(x, params, rng, collect_diagnostics=False, return_factors=False):
    """Randomized PSD projection: sketch X, eigen-clip in the compressed space.

    Computes Q from the range finder, the eigen-decomposition of Q^T X Q,
    and returns Q U max(D, 0) U^T Q^T. The result is PSD with rank at most
    k + l.
    """
    t0 = time.perf_counter()
    x = require_symmetric(x)
    basis = range_finder(x, params, rng)
    if basis.shape[1] == 0:
        return _zero_report(x, "randomized", t0)
    compressed = symmetrize(basis.T @ x @ basis)
    dec = eigh(compressed)
    clipped = np.maximum(dec.values, 0.0)
    result, w, d = _assemble_clipped(basis, dec.vectors, clipped)
    residual = None
    if collect_diagnostics:
        residual = frobenius_norm(x - basis @ (basis.T @ x))
    return ProjectionReport(
        result=result,
        method="randomized",
        effective_rank=int(d.size),
        residual_frob=residual,
        wall_time=time.perf_counter() - t0,
        factors=(w, d) if return_factors else None,
        basis_width=basis.shape[1],
    )


def ran_proj_scal(x, params, alpha, rng, collect_diagnostics=False, return_factors=False):
    """Scaled randomized PSD projection through B = (X + alpha I)/alpha.

    Scaling makes B PSD so its singular values align with the shifted
    eigenvalues of X; the projection is recovered as
    alpha * Q U (max(D, 1) - I) U^T Q^T. Raises :class:`AlphaTooSmall` when
    alpha is numerically zero relative to X (X already PSD), in which case
    callers should fall back to the unscaled method.
    """
    t0 = time.perf_counter()
    x = require_symmetric(x)
    alpha_tol = 1e-12 * max(1.0, float(np.max(np.abs(x))))
    if alpha <= alpha_tol:
        raise AlphaTooSmall(
            f"alpha = {alpha:.3e} is at or below tolerance {alpha_tol:.3e}; input is numerically PSD"
        )
    n = x.shape[0]
    b = (x + alpha * np.eye(n)) / alpha
    basis = range_finder(b, params, rng)
    if basis.shape[1] == 0:
        return _zero_report(x, "scaled_randomized", t0)
    compressed = symmetrize(basis.T @ b @ basis)
    dec = eigh(compressed)
    clipped = np.maximum(dec.values - 1.0, 0.0)
    result, w, d = _assemble_clipped(basis, dec.vectors, clipped, scale=alpha)
    residual = None
    if collect_diagnostics:
        residual = frobenius_norm(x - basis @ (basis.T @ x))
    return ProjectionReport(
        result=result,
        method="scaled_randomized",
        effective_rank=int(d.size),
        alpha_used=float(alpha),
        residual_frob=residual,
        wall_time=time.perf_counter() - t0,
        factors=(w, d) if return_factors else None,
        basis_width=basis.shape[1],
    )


def _exact_report(x, method, t0):
    dec = eigh(x)
    clipped = np.maximum(dec.values, 0.0)
    if method == "exact":
        result = symmetrize((dec.vectors * clipped) @ dec.vectors.T)
    else:
        result = polar_psd_projection(x)
    keep = clipped > 0.0
    return ProjectionReport(
        result=result,
        method=method,
        effective_rank=int(np.count_nonzero(keep)),
        wall_time=time.perf_counter() - t0,
        factors=(dec.vectors[:, keep], clipped[keep]) if method == "exact" else None,
        basis_width=x.shape[0],
    )


def project(x, cfg, rng=None):
    """Project X onto the PSD cone with the configured method.

    For the scaled method alpha is taken from ``cfg.alpha_override`` or
    estimated with the power-iteration shift trick, then multiplied by
    ``cfg.scale_factor``. If alpha is numerically zero the call falls back
    to the unscaled randomized method and flags the fallback in the report.
    """
    t0 = time.perf_counter()
    x = require_symmetric(x)
    if cfg.method in ("exact", "polar"):
        return _exact_report(x, cfg.method, t0)

    rng = rng_from_seed(rng if rng is not None else (cfg.params.seed if cfg.params else None))
    if cfg.method == "randomized":
        report = ran_proj(
            x, cfg.params, rng,
            collect_diagnostics=cfg.collect_diagnostics,
            return_factors=cfg.return_factors,
        )
        report.wall_time = time.perf_counter() - t0
        return report

    if cfg.alpha_override is not None:
        alpha = float(cfg.alpha_override)
    else:
        alpha = min_eig_magnitude(x, cfg.power_N, rng)
    alpha *= cfg.scale_factor
    try:
        report = ran_proj_scal(
            x, cfg.params, alpha, rng,
            collect_diagnostics=cfg.collect_diagnostics,
            return_factors=cfg.return_factors,
        )
    except AlphaTooSmall:
        report = ran_proj(
            x, cfg.params, rng,
            collect_diagnostics=cfg.collect_diagnostics,
            return_factors=cfg.return_factors,
        )
        report.fallback = True
        report.alpha_used = float(alpha)
    report.wall_time = time.perf_counter() - t0
    return report
