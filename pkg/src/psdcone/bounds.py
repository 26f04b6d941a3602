"""Closed-form evaluation of the probabilistic error bounds for randomized
range finding and randomized PSD projection, computed from spectra alone.

All bounds are expectations over the Gaussian test matrix; Monte-Carlo
validation against them lives in the test suite. Logarithms in the spectral
bounds are natural logs.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams
from .symmetric import eigh, require_symmetric


@dataclass(frozen=True)
class SpectrumSummary:
    """Descending eigenvalues and/or singular values of a symmetric matrix."""

    n: int
    eigenvalues: np.ndarray | None = None
    singular_values: np.ndarray | None = None

    def __post_init__(self):
        if self.eigenvalues is None and self.singular_values is None:
            raise InvalidParams("need eigenvalues or singular values")
        for name in ("eigenvalues", "singular_values"):
            arr = getattr(self, name)
            if arr is None:
                continue
            arr = np.asarray(arr, dtype=float).ravel()
            if arr.size != self.n:
                raise InvalidParams(f"{name} must have length n = {self.n}")
            if np.any(np.diff(arr) > 0):
                raise InvalidParams(f"{name} must be sorted in descending order")
            object.__setattr__(self, name, arr)
        if self.singular_values is not None and np.any(self.singular_values < 0):
            raise InvalidParams("singular values must be nonnegative")
        if self.eigenvalues is not None and self.singular_values is not None:
            from_eigs = np.sort(np.abs(self.eigenvalues))[::-1]
            if np.max(np.abs(from_eigs - self.singular_values)) > 1e-9 * max(
                1.0, float(self.singular_values[0])
            ):
                raise InvalidParams("|eigenvalues| and singular values disagree")

    @classmethod
    def from_eigenvalues(cls, eigenvalues):
        eigenvalues = np.sort(np.asarray(eigenvalues, dtype=float).ravel())[::-1]
        sigmas = np.sort(np.abs(eigenvalues))[::-1]
        return cls(n=eigenvalues.size, eigenvalues=eigenvalues, singular_values=sigmas)

    @classmethod
    def from_matrix(cls, x):
        return cls.from_eigenvalues(eigh(require_symmetric(x)).values)

    @property
    def sigmas(self):
        if self.singular_values is not None:
            return self.singular_values
        return np.sort(np.abs(self.eigenvalues))[::-1]


@dataclass(frozen=True)
class BoundParams:
    """Sketch parameters in the domain of the error-bound theory.

    The expectation theorems are stated for k >= 2 and k + l <= n; the
    formulas themselves are well defined for any 1 <= k < n, and only
    l >= 2 is structurally required (the tail weight divides by l - 1).
    """

    k: int
    l: int
    q: int = 0
    alpha: float | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParams(f"bounds require k >= 1, got {self.k}")
        if self.l < 2:
            raise InvalidParams(f"bounds require l >= 2, got {self.l}")
        if self.q < 0:
            raise InvalidParams(f"power exponent q must be >= 0, got {self.q}")
        if self.alpha is not None and self.alpha <= 0:
            raise InvalidParams("alpha must be positive when supplied")


def _check_k(k, n):
    if not 1 <= k < n:
        raise InvalidParams(f"need 1 <= k < n, got k = {k}, n = {n}")


def eps1(sigmas, k, l):
    """Frobenius tail term sqrt((1 + k/(l-1)) * sum_{j>k} sigma_j^2)."""
    sigmas = np.asarray(sigmas, dtype=float).ravel()
    if l < 2:
        raise InvalidParams(f"eps1 requires l >= 2, got {l}")
    if not 1 <= k < sigmas.size:
        raise InvalidParams(f"eps1 requires 1 <= k < n, got k={k}, n={sigmas.size}")
    tail = float(np.sum(sigmas[k:] ** 2))
    return math.sqrt((1.0 + k / (l - 1.0)) * tail)


def eps2(sigma_k_plus_1, k, l, q, n):
    """Spectral tail term (1 + sqrt(k/(l-1)) + e sqrt(k+l)/l sqrt(n-k))^{1/(2q+1)} sigma_{k+1}."""
    if l < 2:
        raise InvalidParams(f"eps2 requires l >= 2, got {l}")
    if q < 0:
        raise InvalidParams(f"eps2 requires q >= 0, got {q}")
    _check_k(k, n)
    base = 1.0 + math.sqrt(k / (l - 1.0)) + math.e * math.sqrt(k + l) / l * math.sqrt(n - k)
    return base ** (1.0 / (2 * q + 1)) * float(sigma_k_plus_1)


def frob_bound_unscaled(spectrum, params):
    """Expected Frobenius projection error bound (1 + sqrt(k+l)) eps1, stated for q = 0."""
    if params.q != 0:
        raise InvalidParams("the Frobenius projection bound is only stated for q = 0")
    _check_k(params.k, spectrum.n)
    return (1.0 + math.sqrt(params.k + params.l)) * eps1(spectrum.sigmas, params.k, params.l)


def spectral_bound_unscaled(spectrum, params):
    """Expected spectral projection error bound: minimum of two branch expressions."""
    sigmas = spectrum.sigmas
    _check_k(params.k, spectrum.n)
    sigma1 = float(sigmas[0])
    if sigma1 <= 0:
        raise InvalidParams("spectral bound requires sigma_1 > 0")
    e2 = eps2(sigmas[params.k], params.k, params.l, params.q, spectrum.n)
    n = spectrum.n
    first = (1.0 + math.sqrt(n)) * e2
    second = (1.0 + 4.0 / math.pi + (2.0 / math.pi) * math.log(2.0 * sigma1)) * e2 + (
        1.0 / math.pi
    ) * min(math.exp(-1.0), math.sqrt(2.0 * e2))
    return min(first, second)


def frob_bound_scaled(spectrum, params, alpha):
    """Expected Frobenius error bound of the scaled projection, stated for q = 0.

    Evaluates alpha sqrt(n-k) + (1 + sqrt(k+l)) eps1 over the shifted
    eigenvalues lambda_i + alpha, sorted descending before the tail sum.
    """
    if params.q != 0:
        raise InvalidParams("the scaled Frobenius bound is only stated for q = 0")
    if alpha <= 0:
        raise InvalidParams("alpha must be positive")
    if spectrum.eigenvalues is None:
        raise InvalidParams("the scaled bound needs eigenvalues, not just singular values")
    _check_k(params.k, spectrum.n)
    shifted = np.sort(spectrum.eigenvalues + alpha)[::-1]
    return alpha * math.sqrt(spectrum.n - params.k) + (
        1.0 + math.sqrt(params.k + params.l)
    ) * eps1(shifted, params.k, params.l)


def spectral_bound_scaled(spectrum, params, alpha):
    """Expected spectral error bound of the scaled projection (any q)."""
    if alpha <= 0:
        raise InvalidParams("alpha must be positive")
    if spectrum.eigenvalues is None:
        raise InvalidParams("the scaled bound needs eigenvalues, not just singular values")
    _check_k(params.k, spectrum.n)
    sigma1 = float(spectrum.sigmas[0])
    if sigma1 <= 0:
        raise InvalidParams("spectral bound requires sigma_1 > 0")
    n = spectrum.n
    e2 = eps2(
        float(spectrum.eigenvalues[params.k]) + alpha, params.k, params.l, params.q, n
    )
    first = (1.0 + math.sqrt(n)) * (e2 + alpha / 2.0)
    second = (0.5 + 2.0 / math.pi + (1.0 / math.pi) * math.log(2.0 * sigma1)) * (
        2.0 * e2 + alpha
    ) + (1.0 / math.pi) * min(math.exp(-1.0), math.sqrt(2.0 * e2 + alpha))
    return min(first, second)


def grad_error_bound(a_norms, spectrum, params):
    """Expected dual-gradient deviation bound (sum ||A_i||_F) (1 + sqrt(k+l)) eps1."""
    a_norms = np.asarray(a_norms, dtype=float).ravel()
    if a_norms.size == 0:
        return 0.0
    return float(np.sum(a_norms)) * frob_bound_unscaled(spectrum, params)


@dataclass(frozen=True)
class RangeResidualBounds:
    """Expected range-finder residual bounds; the Frobenius bound exists only for q = 0."""

    spectral: float
    frobenius: float | None


def range_residual_bounds(spectrum, params):
    """Expected bounds on ||X - Q Q^T X|| for the randomized range finder."""
    sigmas = spectrum.sigmas
    _check_k(params.k, spectrum.n)
    spectral = eps2(sigmas[params.k], params.k, params.l, params.q, spectrum.n)
    frob = eps1(sigmas, params.k, params.l) if params.q == 0 else None
    return RangeResidualBounds(spectral=spectral, frobenius=frob)


def four_block_eigenvalues(n, beta):
    """Descending eigenvalues of the four-block benchmark matrix.

    The spectrum consists of n/4 copies each of beta3, beta4, -beta2 and
    -beta1, which under beta3 > beta1 > beta4 > beta2 > 0 makes the second
    singular block correspond to negative eigenvalues.
    """
    b1, b2, b3, b4 = (float(b) for b in beta)
    if not (b3 > b1 > b4 > b2 > 0):
        raise InvalidParams("betas must satisfy beta3 > beta1 > beta4 > beta2 > 0")
    if n % 4 != 0 or n < 4:
        raise InvalidParams(f"n must be a positive multiple of 4, got {n}")
    quarter = n // 4
    return np.repeat([b3, b4, -b2, -b1], quarter).astype(float)


@dataclass(frozen=True)
class E1E2Report:
    """Comparison of the unscaled (E1) and scaled (E2) Frobenius bounds."""

    e1: float
    e2: float
    n_threshold: float
    scaled_wins: bool


def e1_e2_compare(beta, n, l):
    """Evaluate E1, E2 and the dimension threshold for the four-block matrix.

    E1 and E2 are computed generically from the spectrum through the bound
    operations (k fixed at n/2, alpha = beta1), not from simplified closed
    forms. ``scaled_wins`` reports whether E2 <= E1; the threshold is a
    sufficient condition only.
    """
    eigenvalues = four_block_eigenvalues(n, beta)
    b1, b2, _, b4 = (float(b) for b in beta)
    spectrum = SpectrumSummary.from_eigenvalues(eigenvalues)
    params = BoundParams(k=n // 2, l=int(l), q=0)
    e1 = frob_bound_unscaled(spectrum, params)
    e2 = frob_bound_scaled(spectrum, params, alpha=b1)
    gap = math.sqrt(b4**2 + b2**2) - abs(b1 - b2)
    n_threshold = 2.0 * (l - 1.0) * (2.0 * b1**2 / gap**2 - 1.0)
    return E1E2Report(e1=e1, e2=e2, n_threshold=n_threshold, scaled_wins=e2 <= e1)
