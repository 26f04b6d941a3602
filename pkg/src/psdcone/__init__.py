"""Randomized low-rank projections onto the PSD cone, probabilistic error
bounds, and a dual-ascent solver for regularized semidefinite programs."""

from .bounds import (
    BoundParams,
    E1E2Report,
    RangeResidualBounds,
    SpectrumSummary,
    e1_e2_compare,
    eps1,
    eps2,
    four_block_eigenvalues,
    frob_bound_scaled,
    frob_bound_unscaled,
    grad_error_bound,
    range_residual_bounds,
    spectral_bound_scaled,
    spectral_bound_unscaled,
)
from .errors import (
    AlphaTooSmall,
    AsymmetricMatrixError,
    ConvergenceFailure,
    DegreeTooHigh,
    DimensionMismatch,
    InvalidParams,
    MatrixFormatError,
    NonSquareError,
    PsdconeError,
    RankDeficientSample,
)
from .experiments import (
    FOUR_BLOCK_BETAS,
    four_block_matrix,
    projection_error_sweep,
    random_sdls_instance,
)
from .projection import ProjectionReport, ProjectorConfig, project, ran_proj, ran_proj_scal
from .sdls import (
    SdlsProblem,
    SolveReport,
    assemble_dual_matrix,
    constraint_traces,
    dual_argmin,
    dual_gradient,
    dual_objective,
    feasibility_residual,
    from_regularized_sdp,
    solve,
)
from .sketch import (
    RangeParams,
    min_eig_magnitude,
    orthonormality_defect,
    power_iteration,
    range_finder,
)
from .sos import (
    MonomialBasis,
    Polynomial,
    SosProgram,
    compile_sos_min,
    eval_poly,
    evaluate_basis,
    extract_gamma,
    gram_polynomial,
    monomial_basis,
    random_instance,
)
from .symmetric import (
    EigenDecomposition,
    eigh,
    exact_psd_projection,
    frobenius_norm,
    gaussian_matrix,
    polar_psd_projection,
    random_orthogonal,
    require_symmetric,
    rng_from_seed,
    schatten_norm,
    spectral_norm,
    spectrum_matrix,
    symmetrize,
)

__version__ = "0.1.0"
