"""Lanczos (Krylov projection) filtering.

The short three-term recurrence builds an orthonormal basis of the Krylov
space span{s, Ls, L^2 s, ...} together with the projected tridiagonal
matrix; the filtered signal is recovered by applying the filter to the
small projected problem.  Full reorthogonalization (against all previous
vectors, twice) keeps the basis orthonormal to round-off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, ZeroStartVector
from .graphs import estimate_lambda_max
from .oracle import evaluate_filter

__all__ = [
    "TridiagonalMatrix",
    "KrylovBasis",
    "LanczosResult",
    "IncrementalLanczos",
    "lanczos_basis",
    "tridiagonal_eigendecomposition",
    "lanczos_filter_apply",
    "lanczos_filter_adaptive",
]

BREAKDOWN_RTOL = 1e-12


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Symmetric tridiagonal projection: diagonal alpha, off-diagonal beta."""

    alpha: np.ndarray  # length m
    beta: np.ndarray  # length m - 1, nonnegative

    @property
    def order(self):
        return len(self.alpha)

    def toarray(self):
        h = np.diag(self.alpha)
        if len(self.beta):
            h += np.diag(self.beta, 1) + np.diag(self.beta, -1)
        return h


@dataclass(frozen=True)
class KrylovBasis:
    """Orthonormal Krylov basis V with its projected tridiagonal matrix."""

    V: np.ndarray  # n x m, orthonormal columns
    H: TridiagonalMatrix
    s_norm: float
    breakdown_at: Optional[int] = None  # 1-based step where beta vanished

    @property
    def order(self):
        return self.V.shape[1]


@dataclass(frozen=True)
class LanczosResult:
    approximation: np.ndarray
    order_used: int
    error_estimates: np.ndarray
    converged: bool


def tridiagonal_eigendecomposition(H: TridiagonalMatrix):
    """Eigen-pairs of the projected matrix, ascending."""
    if H.order == 1:
        return np.array([H.alpha[0]]), np.array([[1.0]])
    return scipy.linalg.eigh_tridiagonal(H.alpha, H.beta)


class IncrementalLanczos:
    """Grows a single Lanczos basis on demand and evaluates projected filters.

    Used both for one-shot application and for the adaptive stopping rule,
    where approximations of several orders share one basis.
    """

    def __init__(self, op, s, reorth=True, lambda_max=None):
        s = np.asarray(s, dtype=float)
        if s.shape != (op.n,):
            raise DimensionMismatch(f"operator is {op.n}-dim, signal {s.shape}")
        self.s_norm = float(np.linalg.norm(s))
        if self.s_norm == 0.0:
            raise ZeroStartVector("Lanczos start vector must be nonzero")
        self.op = op
        self.reorth = reorth
        self.lambda_max = (
            float(lambda_max) if lambda_max is not None else estimate_lambda_max(op)
        )
        self._breakdown_tol = BREAKDOWN_RTOL * max(self.lambda_max, 1e-300)
        self._vs = [s / self.s_norm]
        self._alphas = []
        self._betas = []
        self.breakdown_at = None

    @property
    def order(self):
        return len(self._alphas)

    def extend(self, target_order):
        """Run Lanczos steps until the basis has target_order vectors."""
        while self.order < target_order and self.breakdown_at is None:
            j = self.order  # 0-based index of the vector being processed
            v = self._vs[j]
            w = self.op.apply(v)
            alpha = float(v @ w)
            w = w - alpha * v
            if j > 0:
                w = w - self._betas[-1] * self._vs[j - 1]
            if self.reorth:
                # two passes against the whole basis; the classic fix for
                # floating-point loss of orthogonality
                for _ in range(2):
                    for b in self._vs:
                        w = w - (b @ w) * b
            self._alphas.append(alpha)
            beta = float(np.linalg.norm(w))
            if beta < self._breakdown_tol:
                self.breakdown_at = j + 1  # happy breakdown: space is invariant
                return
            self._betas.append(beta)
            self._vs.append(w / beta)

    def basis(self, order=None) -> KrylovBasis:
        order = self.order if order is None else min(order, self.order)
        H = TridiagonalMatrix(
            alpha=np.asarray(self._alphas[:order]),
            beta=np.asarray(self._betas[: max(order - 1, 0)]),
        )
        V = np.column_stack(self._vs[:order])
        bdown = self.breakdown_at if self.breakdown_at is not None and self.breakdown_at <= order else None
        return KrylovBasis(V=V, H=H, s_norm=self.s_norm, breakdown_at=bdown)

    def approximation(self, g, order=None):
        """||s|| V g(H) e_1 at the requested (or current) order.

        The filter is evaluated at the Ritz values clamped to the spectral
        interval [0, lambda_max]; round-off can push them marginally outside.
        """
        order = self.order if order is None else min(order, self.order)
        H = TridiagonalMatrix(
            alpha=np.asarray(self._alphas[:order]),
            beta=np.asarray(self._betas[: max(order - 1, 0)]),
        )
        theta, Q = tridiagonal_eigendecomposition(H)
        theta = np.clip(theta, 0.0, self.lambda_max)
        gvals = evaluate_filter(g, theta)
        coeffs = Q @ (gvals * Q[0, :])  # g(H) e_1
        V = np.column_stack(self._vs[:order])
        return self.s_norm * (V @ coeffs)


def lanczos_basis(op, s, M, reorth=True, lambda_max=None) -> KrylovBasis:
    """Orthonormal Krylov basis of order M (fewer on happy breakdown)."""
    if M < 1:
        raise ValueError(f"order must be >= 1, got {M}")
    it = IncrementalLanczos(op, s, reorth=reorth, lambda_max=lambda_max)
    it.extend(M)
    return it.basis()


def lanczos_filter_apply(op, g, s, M, reorth=True, lambda_max=None):
    """Krylov approximation of the filtered signal at fixed order M.

    On happy breakdown before M the projected problem is exact and the
    smaller order is used.
    """
    it = IncrementalLanczos(op, s, reorth=reorth, lambda_max=lambda_max)
    it.extend(M)
    return it.approximation(g)


def lanczos_filter_adaptive(
    op, g, s, eps, j=3, M_max=200, step=1, reorth=True, lambda_max=None
) -> LanczosResult:
    """Grow the Krylov order until the lookahead error estimate drops below eps.

    The estimate at order M is ||approx(M + j) - approx(M)||_2, computed on
    one shared basis.  The returned approximation is the order-(M + j) one,
    which is already available and at least as accurate.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if j < 1 or step < 1:
        raise ValueError("j and step must be >= 1")
    it = IncrementalLanczos(op, s, reorth=reorth, lambda_max=lambda_max)
    estimates = []
    M = 1
    while True:
        it.extend(M + j)
        if it.breakdown_at is not None and it.order < M + j:
            # invariant subspace reached: the approximation is exact
            m = it.order
            if m > M:
                est = float(np.linalg.norm(it.approximation(g, m) - it.approximation(g, M)))
            else:
                est = 0.0
            estimates.append(est)
            return LanczosResult(
                approximation=it.approximation(g),
                order_used=m,
                error_estimates=np.asarray(estimates),
                converged=True,
            )
        approx_hi = it.approximation(g, M + j)
        est = float(np.linalg.norm(approx_hi - it.approximation(g, M)))
        estimates.append(est)
        if est <= eps:
            return LanczosResult(
                approximation=approx_hi,
                order_used=M,
                error_estimates=np.asarray(estimates),
                converged=True,
            )
        if M + step > M_max:
            return LanczosResult(
                approximation=approx_hi,
                order_used=M,
                error_estimates=np.asarray(estimates),
                converged=False,
            )
        M += step
