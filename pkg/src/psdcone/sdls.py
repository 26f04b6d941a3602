"""Semidefinite least-squares problems and the dual gradient-ascent solver.

The primal problem minimizes (1/2)||X - C/rho||_F^2 over the PSD cone
subject to trace equality constraints Tr(A_i^T X) = b_i. Its dual is an
unconstrained concave maximization whose gradient needs one PSD projection
per evaluation; any projector from :mod:`psdcone.projection` can be
plugged in.
"""

import time
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidParams
from .projection import ProjectorConfig, project
from .sketch import min_eig_magnitude
from .symmetric import exact_psd_projection, require_symmetric, rng_from_seed


class SdlsProblem:
    """Problem data (C, rho, {(A_i, b_i)}).

    Constraint matrices are stacked into one (m, n, n) array so traces and
    dual assembly run as single BLAS-friendly contractions. Instances are
    treated as immutable during a solve.
    """

    def __init__(self, c, rho, constraints=()):
        self.c = require_symmetric(c)
        if rho <= 0:
            raise InvalidParams(f"rho must be positive, got {rho}")
        self.rho = float(rho)
        n = self.c.shape[0]
        mats, vals = [], []
        for a_i, b_i in constraints:
            a_i = require_symmetric(a_i)
            if a_i.shape[0] != n:
                raise DimensionMismatch(
                    f"constraint matrix is {a_i.shape[0]}x{a_i.shape[0]}, expected {n}x{n}"
                )
            mats.append(a_i)
            vals.append(float(b_i))
        self.a_stack = np.stack(mats) if mats else np.zeros((0, n, n))
        self.b = np.asarray(vals, dtype=float)

    @property
    def n(self):
        return self.c.shape[0]

    @property
    def m(self):
        return self.b.size

    def constraints(self):
        return list(zip(self.a_stack, self.b))


def from_regularized_sdp(c_tilde, rho, constraints=()):
    """SDLS form of the Tikhonov-regularized SDP min Tr(C~^T X) + (rho/2)||X||_F^2.

    The two objectives differ by a constant once C = -C~, so both problems
    share minimizers over the same feasible set.
    """
    c_tilde = require_symmetric(c_tilde)
    return SdlsProblem(-c_tilde, rho, constraints)


def _check_y(problem, y):
    y = np.asarray(y, dtype=float).ravel()
    if y.size != problem.m:
        raise DimensionMismatch(f"y has length {y.size}, expected m = {problem.m}")
    return y


def constraint_traces(problem, x):
    """Vector of Tr(A_i^T X) for all constraints."""
    if problem.m == 0:
        return np.zeros(0)
    return np.einsum("mij,ij->m", problem.a_stack, x)


def assemble_dual_matrix(problem, y):
    """Dual candidate matrix (1/rho) C + sum_i y_i A_i."""
    y = _check_y(problem, y)
    x = problem.c / problem.rho
    if problem.m:
        x = x + np.einsum("m,mij->ij", y, problem.a_stack)
    return x


def dual_argmin(problem, y, proj=None, rng=None):
    """Inner minimizer X*(y): the PSD projection of the assembled dual matrix.

    With the default exact projector this is the analytical solution of the
    inner problem; randomized projectors give the approximation used by the
    stochastic-gradient variant of the solver.
    """
    proj = proj or ProjectorConfig(method="exact")
    return project(assemble_dual_matrix(problem, y), proj, rng).result


def _lagrangian(problem, x, y):
    misfit = x - problem.c / problem.rho
    value = 0.5 * float(np.sum(misfit * misfit))
    if problem.m:
        value -= float(y @ (constraint_traces(problem, x) - problem.b))
    return value


def dual_objective(problem, y):
    """Dual function theta(y) = L(X*(y); y), evaluated with exact projection."""
    y = _check_y(problem, y)
    x_star = exact_psd_projection(assemble_dual_matrix(problem, y))
    return _lagrangian(problem, x_star, y)


def dual_gradient(problem, y, proj=None, rng=None):
    """Gradient of theta: the negated constraint residual at X*(y).

    With a randomized projector the returned vector is the biased gradient
    estimate whose expected deviation obeys the gradient error bound.
    """
    y = _check_y(problem, y)
    x_star = dual_argmin(problem, y, proj, rng)
    return problem.b - constraint_traces(problem, x_star)


def feasibility_residual(problem, x):
    """Euclidean norm of the constraint violations sqrt(sum (Tr(A_i^T X) - b_i)^2)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n, problem.n):
        raise DimensionMismatch(f"X has shape {x.shape}, expected {(problem.n, problem.n)}")
    if problem.m == 0:
        return 0.0
    return float(np.linalg.norm(constraint_traces(problem, x) - problem.b))


@dataclass
class TrajectoryPoint:
    iteration: int
    grad_norm: float
    feasibility_residual: float


@dataclass
class SolveReport:
    """Outcome of a dual gradient-ascent run."""

    x_solution: np.ndarray
    y_final: np.ndarray
    iterations: int
    grad_norm_final: float
    feasibility_residual: float
    objective: float
    projection_method: str
    converged: bool
    wall_time: float
    trajectory: list[TrajectoryPoint] | None = None
    y_trajectory: list[np.ndarray] | None = None
    exact_feasibility_residual: float | None = None


def solve(
    problem,
    proj=None,
    *,
    beta=0.5,
    epsilon=1e-8,
    max_iter=100,
    y0=None,
    rng=None,
    alpha_refresh=1,
    keep_trajectory=False,
    exact_check_dim=2000,
):
    """Dual gradient ascent on theta(y) with a pluggable PSD projector.

    Iterates y <- y + beta * grad until ||grad||_2 <= epsilon or ``max_iter``
    iterations. The gradient uses whatever projection the config selects;
    for the scaled method alpha is re-estimated every ``alpha_refresh``
    iterations. Hitting the iteration cap is reported, not raised.

    When a randomized projector is active and n does not exceed
    ``exact_check_dim``, the report also carries the feasibility residual of
    the exactly-projected final iterate for reference.
    """
    if epsilon <= 0 or beta <= 0 or max_iter < 1:
        raise InvalidParams("need epsilon > 0, beta > 0, max_iter >= 1")
    proj = proj or ProjectorConfig(method="exact")
    rng = rng_from_seed(rng)
    t0 = time.perf_counter()

    randomized = proj.method in ("randomized", "scaled_randomized")
    scaled = proj.method == "scaled_randomized"

    if problem.m == 0:
        y = np.zeros(0)
        x_current = project(assemble_dual_matrix(problem, y), proj, rng).result
        return SolveReport(
            x_solution=x_current,
            y_final=y,
            iterations=0,
            grad_norm_final=0.0,
            feasibility_residual=0.0,
            objective=_lagrangian(problem, x_current, y),
            projection_method=proj.method,
            converged=True,
            wall_time=time.perf_counter() - t0,
        )

    y = rng.standard_normal(problem.m) if y0 is None else _check_y(problem, y0)
    trajectory = [] if keep_trajectory else None
    y_trajectory = [] if keep_trajectory else None
    x_current = None
    grad = np.zeros(problem.m)
    iterations = 0
    converged = False
    alpha_cached = None

    for it in range(1, max_iter + 1):
        x_dual = assemble_dual_matrix(problem, y)
        step_cfg = proj
        if scaled and proj.alpha_override is None:
            if alpha_cached is None or (it - 1) % max(1, alpha_refresh) == 0:
                alpha_cached = min_eig_magnitude(x_dual, proj.power_N, rng)
            step_cfg = ProjectorConfig(
                method="scaled_randomized",
                params=proj.params,
                power_N=proj.power_N,
                alpha_override=alpha_cached,
                scale_factor=proj.scale_factor,
                collect_diagnostics=proj.collect_diagnostics,
            )
        x_current = project(x_dual, step_cfg, rng).result
        grad = problem.b - constraint_traces(problem, x_current)
        grad_norm = float(np.linalg.norm(grad))
        iterations = it
        if keep_trajectory:
            trajectory.append(TrajectoryPoint(it, grad_norm, grad_norm))
            y_trajectory.append(y.copy())
        if grad_norm <= epsilon:
            converged = True
            break
        y = y + beta * grad

    exact_residual = None
    if randomized and problem.n <= exact_check_dim:
        x_exact = exact_psd_projection(assemble_dual_matrix(problem, y))
        exact_residual = feasibility_residual(problem, x_exact)

    return SolveReport(
        x_solution=x_current,
        y_final=y,
        iterations=iterations,
        grad_norm_final=float(np.linalg.norm(grad)),
        feasibility_residual=feasibility_residual(problem, x_current),
        objective=_lagrangian(problem, x_current, y),
        projection_method=proj.method,
        converged=converged,
        wall_time=time.perf_counter() - t0,
        trajectory=trajectory,
        y_trajectory=y_trajectory,
        exact_feasibility_residual=exact_residual,
    )
