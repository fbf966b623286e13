"""Chebyshev-series filtering.

Coefficients come from a midpoint cosine quadrature of the series integral
on [0, lambda_max]; the filter is then applied with the shifted three-term
recurrence, costing exactly M operator applications and a constant number
of working vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .oracle import evaluate_filter

__all__ = [
    "ChebyshevExpansion",
    "chebyshev_coefficients",
    "chebyshev_apply",
    "chebyshev_uniform_error",
]


@dataclass(frozen=True)
class ChebyshevExpansion:
    """Coefficients c_0..c_M of a shifted Chebyshev series on [0, lambda_max].

    lambda_max is stored alongside the coefficients because the apply-time
    spectral mapping must match the one used in the quadrature.
    """

    coefficients: np.ndarray
    lambda_max: float

    @property
    def order(self):
        return len(self.coefficients) - 1

    def evaluate(self, x):
        """Evaluate the truncated series pointwise via the scalar recurrence."""
        x = np.asarray(x, dtype=float)
        y = 2.0 * x / self.lambda_max - 1.0
        c = self.coefficients
        out = 0.5 * c[0] * np.ones_like(y)
        t_prev, t_cur = np.ones_like(y), y
        for m in range(1, len(c)):
            out = out + c[m] * t_cur
            t_prev, t_cur = t_cur, 2.0 * y * t_cur - t_prev
        return out


def chebyshev_coefficients(g, lambda_max, M, K=None) -> ChebyshevExpansion:
    """Series coefficients by the K-point midpoint cosine rule.

    c_m = (2/K) sum_k cos(m theta_k) g(lambda_max/2 (cos theta_k + 1)),
    theta_k = pi (k - 1/2) / K.  The default K = max(2(M+1), 64) is
    spectrally accurate for smooth filters.
    """
    if M < 0:
        raise ValueError(f"order must be >= 0, got {M}")
    if not lambda_max > 0:
        raise ValueError(f"lambda_max must be positive, got {lambda_max}")
    if K is None:
        K = max(2 * (M + 1), 64)
    theta = np.pi * (np.arange(1, K + 1) - 0.5) / K
    gvals = evaluate_filter(g, 0.5 * lambda_max * (np.cos(theta) + 1.0))
    m = np.arange(M + 1)
    coeffs = (2.0 / K) * np.cos(np.outer(m, theta)) @ gvals
    return ChebyshevExpansion(coefficients=coeffs, lambda_max=float(lambda_max))


def chebyshev_apply(op, exp: ChebyshevExpansion, s):
    """Apply the truncated series to a signal via the matrix recurrence.

    Requires the spectrum of op to be contained in [0, exp.lambda_max];
    uses exactly exp.order operator applications.
    """
    s = np.asarray(s, dtype=float)
    if s.shape != (op.n,):
        raise DimensionMismatch(f"operator is {op.n}-dim, signal {s.shape}")
    c = exp.coefficients
    out = 0.5 * c[0] * s
    if exp.order == 0:
        return out
    a = 2.0 / exp.lambda_max
    t_prev = s
    t_cur = a * op.apply(s) - s  # shifted T_1(L) s
    out = out + c[1] * t_cur
    for m in range(2, len(c)):
        t_next = 2.0 * (a * op.apply(t_cur) - t_cur) - t_prev
        out = out + c[m] * t_next
        t_prev, t_cur = t_cur, t_next
    return out


def chebyshev_uniform_error(g, exp: ChebyshevExpansion, grid_points=10000):
    """Max deviation |g - truncated series| on a uniform grid of the interval."""
    grid = np.linspace(0.0, exp.lambda_max, grid_points)
    return float(np.max(np.abs(evaluate_filter(g, grid) - exp.evaluate(grid))))
