"""Filters and filterbanks: itersine translates (uniform and
spectrum-adapted), the mexican-hat pair, and bank application helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSpectrum, EmptySpectrum, InvalidCount
from .chebyshev import chebyshev_apply, chebyshev_coefficients
from .lanczos import IncrementalLanczos
from .oracle import exact_filter

__all__ = [
    "Filter",
    "Filterbank",
    "itersine_window",
    "uniform_translates",
    "adapted_translates",
    "spectral_cdf",
    "adapt_filterbank",
    "mexican_hat_bank",
    "filterbank_apply",
]


@dataclass(frozen=True)
class Filter:
    """A named scalar function on [0, lambda_max]."""

    name: str
    func: object  # callable, vectorized over numpy arrays
    params: dict = field(default_factory=dict)

    def __call__(self, x):
        return self.func(x)

    def describe(self):
        """One-line text form: ``name param=value ...``."""
        parts = [self.name]
        for k in sorted(self.params):
            parts.append(f"{k}={self.params[k]:.17g}")
        return " ".join(parts)


@dataclass(frozen=True)
class Filterbank:
    filters: tuple
    lambda_max: float
    adapted: bool = False

    def __len__(self):
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def describe(self):
        return "\n".join(f.describe() for f in self.filters) + "\n"


def itersine_window(t):
    """Half-cosine-squared sine window supported on [-1/2, 1/2].

    Half-overlapped translates of this window have squares summing to one,
    which is what makes the uniform filterbank a tight frame.
    """
    t = np.asarray(t, dtype=float)
    # strict inequality: the window is mathematically zero at t = +/-1/2 but
    # round-off in cos(pi/2) would otherwise leave a ~1e-33 residue
    inside = np.abs(t) < 0.5
    vals = np.sin(0.5 * np.pi * np.cos(np.pi * np.where(inside, t, 0.0)) ** 2)
    return np.where(inside, vals, 0.0)


def uniform_translates(num_filters, lambda_max) -> Filterbank:
    """R half-overlapping itersine translates covering [0, lambda_max]."""
    if num_filters < 2:
        raise InvalidCount(f"need at least 2 filters, got {num_filters}")
    if not lambda_max > 0:
        raise InvalidCount(f"lambda_max must be positive, got {lambda_max}")
    delta = 2.0 * lambda_max / (num_filters + 1)
    filters = []
    for k in range(num_filters):
        shift = (k + 1) / 2.0

        def func(x, _shift=shift, _delta=delta):
            return itersine_window(np.asarray(x, dtype=float) / _delta - _shift)

        filters.append(
            Filter(
                name="itersine",
                func=func,
                params={"center": shift * delta, "width": delta},
            )
        )
    return Filterbank(filters=tuple(filters), lambda_max=float(lambda_max), adapted=False)


def spectral_cdf(eigenvalues):
    """Piecewise-linear normalized empirical spectral CDF.

    Maps [0, lambda_max] onto [0, 1]; regions dense with eigenvalues are
    stretched, sparse regions compressed.
    """
    ev = np.asarray(eigenvalues, dtype=float)
    if ev.size == 0:
        raise EmptySpectrum("need at least one eigenvalue")
    ev = np.sort(ev)
    lam_max = ev[-1]
    if lam_max - ev[0] <= 0 or lam_max <= 0:
        raise DegenerateSpectrum("spectrum has zero width; cannot build a CDF")
    # average the empirical CDF over repeated eigenvalues so the node set
    # is strictly increasing in x
    ranks = np.arange(ev.size) / max(ev.size - 1, 1)
    xs, inverse = np.unique(ev, return_inverse=True)
    ys = np.zeros_like(xs)
    counts = np.zeros_like(xs)
    np.add.at(ys, inverse, ranks)
    np.add.at(counts, inverse, 1.0)
    ys /= counts
    if xs[0] > 0.0:
        xs = np.concatenate([[0.0], xs])
        ys = np.concatenate([[0.0], ys])
    ys[0], ys[-1] = 0.0, 1.0

    def cdf(x):
        return np.interp(np.asarray(x, dtype=float), xs, ys)

    return cdf, float(lam_max)


def adapt_filterbank(bank: Filterbank, eigenvalues) -> Filterbank:
    """Warp a bank by the empirical spectral CDF.

    Each filter is composed with lambda -> C(lambda) * lambda_max, so the
    translates align with eigenvalue density instead of the raw interval.
    """
    cdf, lam_max = spectral_cdf(eigenvalues)
    warped = []
    for f in bank.filters:
        def func(x, _f=f.func, _cdf=cdf, _scale=bank.lambda_max):
            return _f(_cdf(x) * _scale)

        warped.append(Filter(name=f.name + "-adapted", func=func, params=dict(f.params)))
    return Filterbank(filters=tuple(warped), lambda_max=lam_max, adapted=True)


def adapted_translates(num_filters, eigenvalues) -> Filterbank:
    """Itersine translates warped by the spectral CDF (tight in the warped
    coordinate)."""
    ev = np.asarray(eigenvalues, dtype=float)
    if ev.size == 0:
        raise EmptySpectrum("need at least one eigenvalue")
    base = uniform_translates(num_filters, 1.0)
    return adapt_filterbank(base, ev)


def mexican_hat_bank(lambda_max, num_scales=1) -> Filterbank:
    """Low-pass exp(-x^4) plus scaled mexican-hat wavelets x exp(-x^2).

    The first scale is 2/lambda_max so the wavelet peak (at x = 1/sqrt(2)
    in scaled coordinates) sits inside the spectrum; further scales double.
    """
    if not lambda_max > 0:
        raise InvalidCount(f"lambda_max must be positive, got {lambda_max}")

    def lowpass(x):
        return np.exp(-np.asarray(x, dtype=float) ** 4)

    filters = [Filter(name="mexican-hat-lowpass", func=lowpass)]
    t1 = 2.0 / lambda_max
    for j in range(num_scales):
        t = t1 * (2.0**j)

        def wavelet(x, _t=t):
            y = _t * np.asarray(x, dtype=float)
            return y * np.exp(-(y**2))

        filters.append(Filter(name="mexican-hat", func=wavelet, params={"scale": t}))
    return Filterbank(filters=tuple(filters), lambda_max=float(lambda_max), adapted=False)


def filterbank_apply(method, op, bank: Filterbank, s, M, spectrum=None, lambda_max=None):
    """Filter one signal with every filter in the bank.

    method is one of {"exact", "chebyshev", "lanczos"}.  The Lanczos basis
    depends only on the operator and the signal, so it is built once and
    shared by all filters; the bank costs M operator applications, not
    len(bank) * M.
    """
    if method == "exact":
        if spectrum is None:
            raise ValueError("exact method needs a Spectrum")
        return [exact_filter(spectrum, f, s) for f in bank]
    if method == "chebyshev":
        lam = bank.lambda_max if lambda_max is None else lambda_max
        return [
            chebyshev_apply(op, chebyshev_coefficients(f, lam, M), s) for f in bank
        ]
    if method == "lanczos":
        it = IncrementalLanczos(op, s, lambda_max=lambda_max)
        it.extend(M)
        return [it.approximation(f) for f in bank]
    raise ValueError(f"unknown method {method!r}")
