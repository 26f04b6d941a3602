"""Synthetic experiment drivers: the four-block benchmark matrix, the
two-constraint random SDLS instance, and projection-error sweeps."""

from dataclasses import dataclass

import numpy as np

from .bounds import (
    BoundParams,
    SpectrumSummary,
    four_block_eigenvalues,
    frob_bound_scaled,
    frob_bound_unscaled,
    spectral_bound_scaled,
    spectral_bound_unscaled,
)
from .projection import ran_proj, ran_proj_scal
from .sdls import SdlsProblem
from .sketch import RangeParams
from .symmetric import (
    exact_psd_projection,
    frobenius_norm,
    gaussian_matrix,
    random_orthogonal,
    rng_from_seed,
    spectral_norm,
    spectrum_matrix,
    symmetrize,
)

FOUR_BLOCK_BETAS = (3.0, 1.0, 6.0, 2.0)


def four_block_matrix(n, beta=FOUR_BLOCK_BETAS, rng=None):
    """Symmetric benchmark matrix with the four-block spectrum in a random basis.

    Its n/4-fold eigenvalue blocks (beta3, beta4, -beta2, -beta1) make the
    second singular block belong to negative eigenvalues, the regime where
    scaling the projection pays off for large sketch widths.
    """
    eigenvalues = four_block_eigenvalues(n, beta)
    return spectrum_matrix(eigenvalues, rng_from_seed(rng))


def random_sdls_instance(n, m=2, rng=None):
    """Random feasible SDLS instance: normalized symmetric data, b from a PSD point.

    Constraint matrices and C are symmetrized Gaussians scaled to unit
    Frobenius norm; b_i = Tr(A_i^T X0) for a random PSD X0 (orthogonal
    conjugation of a uniform diagonal), which makes the problem feasible by
    construction. Returns the problem and X0.
    """
    rng = rng_from_seed(rng)
    mats = []
    for _ in range(m):
        raw = symmetrize(gaussian_matrix(n, n, rng))
        mats.append(raw / frobenius_norm(raw))
    v = random_orthogonal(n, rng)
    x0 = symmetrize((v * rng.uniform(0.0, 1.0, size=n)) @ v.T)
    c_raw = symmetrize(gaussian_matrix(n, n, rng))
    c = c_raw / frobenius_norm(c_raw)
    constraints = [(a_i, float(np.sum(a_i * x0))) for a_i in mats]
    return SdlsProblem(c, 1.0, constraints), x0


@dataclass
class SweepRow:
    """One (k, method) cell of a projection-error sweep."""

    k: int
    method: str
    mean_frob_error: float
    mean_spectral_error: float
    frob_bound: float | None
    spectral_bound: float | None


def projection_error_sweep(
    n,
    beta,
    l,
    q,
    k_grid,
    trials,
    seed,
    alpha=None,
    compute_spectral=True,
):
    """Mean projection errors of both randomized algorithms over sketch seeds.

    One benchmark matrix is generated from ``seed`` and projected exactly
    once; each trial re-runs both randomized projections with the derived
    seed ``seed + 1 + trial``. ``alpha`` defaults to beta1 (the exact
    magnitude of the most negative eigenvalue). Bounds columns are evaluated
    from the spectrum alone; the Frobenius bounds exist only for q = 0.
    """
    beta = tuple(float(b) for b in beta)
    x = four_block_matrix(n, beta, rng_from_seed(seed))
    x_plus = exact_psd_projection(x)
    alpha = beta[0] if alpha is None else float(alpha)
    spectrum = SpectrumSummary.from_eigenvalues(four_block_eigenvalues(n, beta))

    rows = []
    for k in k_grid:
        params = RangeParams(k=int(k), l=int(l), q=int(q))
        errors = {"randomized": [], "scaled_randomized": []}
        for trial in range(trials):
            rng = rng_from_seed(seed + 1 + trial)
            plain = ran_proj(x, params, rng).result
            scal = ran_proj_scal(x, params, alpha, rng).result
            for tag, approx in (("randomized", plain), ("scaled_randomized", scal)):
                frob = frobenius_norm(x_plus - approx)
                spec = spectral_norm(x_plus - approx) if compute_spectral else np.nan
                errors[tag].append((frob, spec))

        bound_params = BoundParams(k=int(k), l=int(l), q=int(q))
        frob_bounds = {"randomized": None, "scaled_randomized": None}
        if q == 0:
            frob_bounds["randomized"] = frob_bound_unscaled(spectrum, bound_params)
            frob_bounds["scaled_randomized"] = frob_bound_scaled(spectrum, bound_params, alpha)
        spectral_bounds = {
            "randomized": spectral_bound_unscaled(spectrum, bound_params),
            "scaled_randomized": spectral_bound_scaled(spectrum, bound_params, alpha),
        }
        for tag in ("randomized", "scaled_randomized"):
            arr = np.asarray(errors[tag])
            rows.append(
                SweepRow(
                    k=int(k),
                    method=tag,
                    mean_frob_error=float(arr[:, 0].mean()),
                    mean_spectral_error=float(arr[:, 1].mean()),
                    frob_bound=frob_bounds[tag],
                    spectral_bound=spectral_bounds[tag],
                )
            )
    return rows
