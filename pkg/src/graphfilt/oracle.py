"""Exact dense eigendecomposition, graph Fourier transform and exact filtering.

This is the ground truth every fast backend is compared against.  Cost is
O(n^3), so it is capped (default 2000 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, FilterDomainError, TooLargeForOracle

__all__ = [
    "Spectrum",
    "DEFAULT_ORACLE_CAP",
    "full_eigendecomposition",
    "fourier_transform",
    "inverse_fourier_transform",
    "exact_filter",
]

DEFAULT_ORACLE_CAP = 2000


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues and orthonormal eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self):
        return len(self.eigenvalues)

    @property
    def lambda_max(self):
        return float(self.eigenvalues[-1])


def full_eigendecomposition(op, oracle_cap=DEFAULT_ORACLE_CAP) -> Spectrum:
    """Dense symmetric eigendecomposition with a fixed sign convention.

    The sign of each eigenvector is chosen so its largest-magnitude entry
    is positive (first such entry on ties), which keeps fixtures stable.
    """
    if op.n > oracle_cap:
        raise TooLargeForOracle(f"n={op.n} exceeds oracle cap {oracle_cap}")
    dense = op.matrix.toarray()
    evals, evecs = np.linalg.eigh(dense)
    for c in range(evecs.shape[1]):
        col = evecs[:, c]
        lead = np.argmax(np.abs(col))
        if col[lead] < 0:
            evecs[:, c] = -col
    return Spectrum(eigenvalues=evals, eigenvectors=evecs)


def _check_dim(spec, v):
    v = np.asarray(v, dtype=float)
    if v.shape != (spec.n,):
        raise DimensionMismatch(f"expected length {spec.n}, got shape {v.shape}")
    return v


def fourier_transform(spec: Spectrum, s):
    """Graph Fourier transform: coefficients of s in the eigenbasis."""
    return spec.eigenvectors.T @ _check_dim(spec, s)


def inverse_fourier_transform(spec: Spectrum, s_hat):
    return spec.eigenvectors @ _check_dim(spec, s_hat)


def evaluate_filter(g, x):
    """Evaluate a filter on an array of eigenvalues, checking finiteness."""
    x = np.asarray(x, dtype=float)
    try:
        vals = np.asarray(g(x), dtype=float)
        if vals.shape != x.shape:
            raise ValueError("filter did not broadcast")
    except FilterDomainError:
        raise
    except Exception:
        try:
            vals = np.asarray([float(g(xi)) for xi in x])
        except Exception as exc:
            raise FilterDomainError(f"filter evaluation failed: {exc}") from exc
    if not np.all(np.isfinite(vals)):
        bad = x[~np.isfinite(vals)][0]
        raise FilterDomainError(f"filter returned non-finite value at {bad}")
    return vals


def exact_filter(spec: Spectrum, g, s):
    """Ground-truth filtering: scale each Fourier coefficient by g(eigenvalue)."""
    s = _check_dim(spec, s)
    gvals = evaluate_filter(g, spec.eigenvalues)
    return spec.eigenvectors @ (gvals * (spec.eigenvectors.T @ s))
