"""Sparse multivariate polynomials, monomial bases, and compilation of
sum-of-squares polynomial minimization into a regularized SDLS problem.

A polynomial p is bounded below by -gamma* where gamma* is the least gamma
making p + gamma a sum of squares; membership is certified by a PSD Gram
matrix X with p(x) + gamma = z_d(x)^T X z_d(x) over the monomial basis z_d.
The compiler eliminates gamma by folding it into the constant Gram entry,
so the search is a pure SDLS problem over X.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from .errors import DegreeTooHigh, DimensionMismatch, InvalidParams
from .sdls import SdlsProblem, from_regularized_sdp
from .symmetric import frobenius_norm, gaussian_matrix


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial: map from exponent vectors to real coefficients."""

    nvars: int
    terms: dict

    def __post_init__(self):
        if self.nvars < 1:
            raise InvalidParams(f"nvars must be >= 1, got {self.nvars}")
        clean = {}
        for exps, coeff in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise InvalidParams(f"bad exponent vector {exps} for nvars = {self.nvars}")
            coeff = float(coeff)
            if coeff != 0.0:
                clean[exps] = clean.get(exps, 0.0) + coeff
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0.0})

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def constant(self):
        return self.terms.get((0,) * self.nvars, 0.0)


def eval_poly(poly, x):
    """Evaluate a polynomial at a point."""
    x = np.asarray(x, dtype=float).ravel()
    if x.size != poly.nvars:
        raise DimensionMismatch(f"point has {x.size} coordinates, expected {poly.nvars}")
    total = 0.0
    for exps, coeff in poly.terms.items():
        total += coeff * float(np.prod(x ** np.array(exps)))
    return total


def _grlex_key(exps):
    # graded lexicographic with x1 > x2 > ...: constant first, then by degree
    return (sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class MonomialBasis:
    """All monomials of total degree <= d in graded-lex order, constant first."""

    nvars: int
    degree: int
    monomials: tuple
    index: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.monomials)


def monomial_basis(nvars, d):
    """Monomial basis z_d: exponent vectors of total degree <= d, graded-lex ordered."""
    if nvars < 1 or d < 0:
        raise InvalidParams(f"need nvars >= 1 and d >= 0, got {nvars}, {d}")
    monos = []
    for deg in range(d + 1):
        for combo in combinations_with_replacement(range(nvars), deg):
            exps = [0] * nvars
            for var in combo:
                exps[var] += 1
            monos.append(tuple(exps))
    monos = sorted(set(monos), key=_grlex_key)
    assert len(monos) == math.comb(nvars + d, d)
    index = {exps: i for i, exps in enumerate(monos)}
    return MonomialBasis(nvars=nvars, degree=d, monomials=tuple(monos), index=index)


def evaluate_basis(basis, x):
    """Vector z_d(x) of all basis monomials evaluated at a point."""
    x = np.asarray(x, dtype=float).ravel()
    if x.size != basis.nvars:
        raise DimensionMismatch(f"point has {x.size} coordinates, expected {basis.nvars}")
    return np.array([np.prod(x ** np.array(e)) for e in basis.monomials])


@dataclass
class SosProgram:
    """Compiled SOS minimization: Gram-matrix SDLS problem plus decoding data.

    The optimal gamma is read off the solved Gram matrix as
    X[0, 0] - p_const, since the constant-coefficient match gives
    gamma = X_00 - p(0)-coefficient.
    """

    basis: MonomialBasis
    problem: SdlsProblem
    p_const: float
    gamma_index: tuple = (0, 0)


def compile_sos_min(poly, d, rho=0.1):
    """Compile min gamma s.t. p + gamma in SOS into a regularized SDLS problem.

    Coefficient matching: for every monomial beta with 0 < |beta| <= 2d the
    Gram entries over pairs with exp_i + exp_j = beta must sum to the
    coefficient of beta in p. Each match becomes one trace constraint with a
    symmetric 0/1-patterned matrix; the matrices have disjoint supports and
    are mutually orthogonal. Minimizing gamma = X_00 - p_const is the SDP
    objective Tr(C~^T X) with C~ = e_0 e_0^T, regularized with the supplied
    rho.
    """
    basis = monomial_basis(poly.nvars, d)
    if poly.degree() > 2 * d:
        raise DegreeTooHigh(
            f"polynomial degree {poly.degree()} exceeds 2d = {2 * d} for the requested basis"
        )
    nb = len(basis)

    pairs_by_target = {}
    for i, j in combinations_with_replacement(range(nb), 2):
        target = tuple(a + b for a, b in zip(basis.monomials[i], basis.monomials[j]))
        pairs_by_target.setdefault(target, []).append((i, j))

    constraints = []
    for target in monomial_basis(poly.nvars, 2 * d).monomials[1:]:
        a_mat = np.zeros((nb, nb))
        for i, j in pairs_by_target[target]:
            a_mat[i, j] = 1.0
            a_mat[j, i] = 1.0
        constraints.append((a_mat, poly.terms.get(target, 0.0)))

    c_tilde = np.zeros((nb, nb))
    c_tilde[0, 0] = 1.0
    problem = from_regularized_sdp(c_tilde, rho, constraints)
    return SosProgram(basis=basis, problem=problem, p_const=poly.constant())


def extract_gamma(program, x):
    """Decode gamma from a solved Gram matrix."""
    x = np.asarray(x, dtype=float)
    nb = len(program.basis)
    if x.shape != (nb, nb):
        raise DimensionMismatch(f"Gram matrix has shape {x.shape}, expected {(nb, nb)}")
    i, j = program.gamma_index
    return float(x[i, j]) - program.p_const


def gram_polynomial(basis, gram):
    """Expand z_d(x)^T X z_d(x) symbolically into a Polynomial."""
    gram = np.asarray(gram, dtype=float)
    nb = len(basis)
    if gram.shape != (nb, nb):
        raise DimensionMismatch(f"Gram matrix has shape {gram.shape}, expected {(nb, nb)}")
    terms = {}
    for i in range(nb):
        for j in range(i, nb):
            weight = gram[i, j] if i == j else gram[i, j] + gram[j, i]
            if weight == 0.0:
                continue
            target = tuple(a + b for a, b in zip(basis.monomials[i], basis.monomials[j]))
            terms[target] = terms.get(target, 0.0) + weight
    return Polynomial(nvars=basis.nvars, terms=terms)


def random_instance(nvars, d, offset, rng):
    """Random SOS minimization instance with known optimum.

    Draws a PSD Gram matrix X0 = G^T G normalized to unit Frobenius norm and
    expands p = z_d^T X0 z_d - offset symbolically; the compiled program's
    optimal gamma is the offset (up to the tiny slack by which the random
    Gram certificate can be tightened).
    """
    if d < 1:
        raise InvalidParams(f"need d >= 1, got {d}")
    basis = monomial_basis(nvars, d)
    nb = len(basis)
    g = gaussian_matrix(nb, nb, rng)
    x0 = g.T @ g
    x0 /= frobenius_norm(x0)
    poly = gram_polynomial(basis, x0)
    terms = dict(poly.terms)
    const = (0,) * nvars
    terms[const] = terms.get(const, 0.0) - float(offset)
    return Polynomial(nvars=nvars, terms=terms), float(offset)
