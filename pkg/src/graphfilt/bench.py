"""Experiment harness: error sweeps against the exact oracle, emitted as CSV.

Every CSV starts with ``#`` comment lines carrying the package version and
the full configuration, so rerunning the same configuration reproduces the
file byte for byte.  All error columns are measured against the dense
spectral oracle, never against the other approximate method.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .chebyshev import chebyshev_apply, chebyshev_coefficients
from .errors import ConfigError
from .filters import (
    Filter,
    Filterbank,
    adapt_filterbank,
    mexican_hat_bank,
    uniform_translates,
)
from .generators import erdos_renyi, sensor_graph
from .graphs import combinatorial_laplacian, estimate_lambda_max
from .lanczos import IncrementalLanczos
from .oracle import DEFAULT_ORACLE_CAP, exact_filter, full_eigendecomposition

__all__ = [
    "BankSpec",
    "build_bank",
    "make_graph",
    "test_signals",
    "run_filter",
    "error_vs_order",
    "error_vs_estimate",
    "error_vs_p",
    "spectrum_histogram",
]

_FMT = "%.17g"


@dataclass(frozen=True)
class BankSpec:
    """Named filterbank recipe resolvable once lambda_max (and, when
    adapted, the spectrum) is known."""

    name: str = "itersine"  # {itersine, mexican-hat, identity}
    num_filters: int = 8
    num_scales: int = 1
    adapted: bool = False

    def describe(self):
        return (
            f"bank={self.name} num_filters={self.num_filters} "
            f"num_scales={self.num_scales} adapted={self.adapted}"
        )


def build_bank(spec: BankSpec, lambda_max, eigenvalues=None) -> Filterbank:
    if spec.name == "itersine":
        bank = uniform_translates(spec.num_filters, lambda_max)
    elif spec.name == "mexican-hat":
        bank = mexican_hat_bank(lambda_max, num_scales=spec.num_scales)
    elif spec.name == "identity":
        bank = Filterbank(
            filters=(Filter(name="identity", func=lambda x: np.ones_like(np.asarray(x, dtype=float))),),
            lambda_max=float(lambda_max),
        )
    else:
        raise ConfigError(f"unknown filterbank {spec.name!r}")
    if spec.adapted:
        if eigenvalues is None:
            raise ConfigError("adapted banks need oracle eigenvalues")
        bank = adapt_filterbank(bank, eigenvalues)
    return bank


def make_graph(family, n, seed, p=None, k=None):
    if family == "er":
        if p is None:
            raise ConfigError("family 'er' needs p")
        return erdos_renyi(n, p, seed)
    if family == "sensor":
        return sensor_graph(n, seed, k=6 if k is None else k)
    raise ConfigError(f"unknown graph family {family!r}")


def test_signals(n, num_signals, seed):
    """Unit-norm standard-normal signals, seed-controlled."""
    rng = np.random.default_rng([seed, 0x5160])
    sigs = rng.standard_normal((num_signals, n))
    return sigs / np.linalg.norm(sigs, axis=1, keepdims=True)


def _rel_err(approx, exact):
    denom = np.linalg.norm(exact)
    if denom == 0.0:
        return float(np.linalg.norm(approx))
    return float(np.linalg.norm(approx - exact) / denom)


def _header(kind, config: dict):
    cfg = " ".join(f"{k}={v}" for k, v in config.items())
    return [f"# graphfilt {__version__}", f"# experiment: {kind}", f"# config: {cfg}"]


def _run_seeds(seeds, worker, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(worker, seeds))
    else:
        results = [worker(s) for s in seeds]
    rows = []
    for r in results:
        rows.extend(r)
    return rows


def run_filter(graph, signal, bank_spec: BankSpec, method, M=30, eps=None, j=3,
               M_max=200, oracle_cap=DEFAULT_ORACLE_CAP):
    """Filter one signal with a named bank; returns one vector per filter.

    The exact method (and any adapted bank) consults the dense oracle and
    is therefore subject to the oracle cap.  With ``eps`` set, the Lanczos
    order is chosen adaptively on one shared basis.
    """
    op = combinatorial_laplacian(graph)
    spectrum = None
    if method == "exact" or bank_spec.adapted:
        spectrum = full_eigendecomposition(op, oracle_cap=oracle_cap)
    # The bank lives on [0, lambda_max_estimate] for every method so that
    # results from different methods approximate the same filters.
    lam_est = estimate_lambda_max(op)
    bank = build_bank(
        bank_spec,
        lam_est,
        eigenvalues=spectrum.eigenvalues if spectrum is not None else None,
    )
    if method == "exact":
        return [exact_filter(spectrum, f, signal) for f in bank]
    if method == "chebyshev":
        return [
            chebyshev_apply(op, chebyshev_coefficients(f, lam_est, M), signal)
            for f in bank
        ]
    if method == "lanczos":
        it = IncrementalLanczos(op, signal, lambda_max=lam_est)
        if eps is None:
            it.extend(M)
            return [it.approximation(f) for f in bank]
        order = 1
        while True:
            it.extend(order + j)
            done = it.breakdown_at is not None and it.order < order + j
            if not done:
                est = max(
                    float(np.linalg.norm(it.approximation(f, order + j) - it.approximation(f, order)))
                    for f in bank
                )
                done = est <= eps or order + 1 > M_max
            if done:
                return [it.approximation(f) for f in bank]
            order += 1
    raise ConfigError(f"unknown method {method!r}")


def error_vs_order(family="er", n=500, p=0.04, k=6, seeds=(1,), bank_spec=BankSpec(adapted=True),
                   M_min=2, M_max=60, step=2, num_signals=10,
                   oracle_cap=DEFAULT_ORACLE_CAP, threads=1):
    """Chebyshev vs Lanczos error as a function of the approximation order.

    Row error = mean over signals of the max over the bank of the relative
    2-norm error against the exact oracle.
    """
    if M_min > M_max or M_min < 1 or step < 1:
        raise ConfigError(f"bad order range [{M_min}, {M_max}] step {step}")
    orders = list(range(M_min, M_max + 1, step))

    def worker(seed):
        g = make_graph(family, n, seed, p=p, k=k)
        op = combinatorial_laplacian(g)
        spec = full_eigendecomposition(op, oracle_cap=oracle_cap)
        lam_est = estimate_lambda_max(op)
        bank = build_bank(bank_spec, lam_est, eigenvalues=spec.eigenvalues)
        signals = test_signals(n, num_signals, seed)
        cheb_errs = np.zeros((len(orders), num_signals))
        lanc_errs = np.zeros((len(orders), num_signals))
        for si, s in enumerate(signals):
            exact = [exact_filter(spec, f, s) for f in bank]
            it = IncrementalLanczos(op, s, lambda_max=lam_est)
            it.extend(max(orders))
            for mi, M in enumerate(orders):
                cheb_errs[mi, si] = max(
                    _rel_err(chebyshev_apply(op, chebyshev_coefficients(f, lam_est, M), s), ex)
                    for f, ex in zip(bank, exact)
                )
                lanc_errs[mi, si] = max(
                    _rel_err(it.approximation(f, M), ex) for f, ex in zip(bank, exact)
                )
        return [
            (seed, M, cheb_errs[mi].mean(), lanc_errs[mi].mean())
            for mi, M in enumerate(orders)
        ]

    rows = _run_seeds(list(seeds), worker, threads)
    lines = _header("error-vs-order", dict(
        family=family, n=n, p=p, k=k, seeds=",".join(map(str, seeds)),
        **_bank_cfg(bank_spec), M_min=M_min, M_max=M_max, step=step,
        num_signals=num_signals, oracle_cap=oracle_cap,
    ))
    lines.append("seed,M,chebyshev_error,lanczos_error")
    for seed, M, ce, le in sorted(rows):
        lines.append(f"{seed},{M},{_FMT % ce},{_FMT % le}")
    return "\n".join(lines) + "\n"


def error_vs_estimate(family="er", n=500, p=0.04, k=6, seeds=(1,),
                      bank_spec=BankSpec(adapted=True), j=3,
                      M_min=2, M_max=60, step=2, num_signals=1,
                      oracle_cap=DEFAULT_ORACLE_CAP, threads=1):
    """True Lanczos error vs the lookahead estimate ||g_{M+j} - g_M||.

    Both columns are absolute 2-norms (signals are unit norm), maximized
    over the bank, averaged over signals.
    """
    if M_min > M_max or M_min < 1 or step < 1 or j < 1:
        raise ConfigError("bad order range or lookahead")
    orders = list(range(M_min, M_max + 1, step))

    def worker(seed):
        g = make_graph(family, n, seed, p=p, k=k)
        op = combinatorial_laplacian(g)
        spec = full_eigendecomposition(op, oracle_cap=oracle_cap)
        lam_est = estimate_lambda_max(op)
        bank = build_bank(bank_spec, lam_est, eigenvalues=spec.eigenvalues)
        signals = test_signals(n, num_signals, seed)
        true_err = np.zeros((len(orders), num_signals))
        est_err = np.zeros((len(orders), num_signals))
        for si, s in enumerate(signals):
            exact = [exact_filter(spec, f, s) for f in bank]
            it = IncrementalLanczos(op, s, lambda_max=lam_est)
            it.extend(max(orders) + j)
            avail = it.order
            for mi, M in enumerate(orders):
                m_lo = min(M, avail)
                m_hi = min(M + j, avail)
                true_err[mi, si] = max(
                    float(np.linalg.norm(it.approximation(f, m_lo) - ex))
                    for f, ex in zip(bank, exact)
                )
                est_err[mi, si] = max(
                    float(np.linalg.norm(it.approximation(f, m_hi) - it.approximation(f, m_lo)))
                    for f in bank
                )
        return [
            (seed, M, true_err[mi].mean(), est_err[mi].mean())
            for mi, M in enumerate(orders)
        ]

    rows = _run_seeds(list(seeds), worker, threads)
    lines = _header("error-vs-estimate", dict(
        family=family, n=n, p=p, k=k, seeds=",".join(map(str, seeds)),
        **_bank_cfg(bank_spec), j=j, M_min=M_min, M_max=M_max, step=step,
        num_signals=num_signals, oracle_cap=oracle_cap,
    ))
    lines.append("seed,M,true_error,estimate")
    for seed, M, te, ee in sorted(rows):
        lines.append(f"{seed},{M},{_FMT % te},{_FMT % ee}")
    return "\n".join(lines) + "\n"


def error_vs_p(n=1000, p_list=(0.02, 0.05, 0.1, 0.2, 0.3), M=30,
               bank_spec=BankSpec(name="mexican-hat"), seeds=(1,),
               num_signals=10, oracle_cap=DEFAULT_ORACLE_CAP, threads=1):
    """Fixed-order error as a function of the edge probability p."""
    if not p_list:
        raise ConfigError("p_list must be nonempty")
    for p in p_list:
        if not (0.0 <= p <= 1.0):
            raise ConfigError(f"p={p} outside [0, 1]")

    cells = [(p, seed) for p in p_list for seed in seeds]

    def worker(cell):
        p, seed = cell
        g = erdos_renyi(n, p, seed)
        op = combinatorial_laplacian(g)
        spec = full_eigendecomposition(op, oracle_cap=oracle_cap)
        lam_est = estimate_lambda_max(op)
        bank = build_bank(bank_spec, lam_est, eigenvalues=spec.eigenvalues)
        signals = test_signals(n, num_signals, seed)
        cheb = np.zeros(num_signals)
        lanc = np.zeros(num_signals)
        exps = [chebyshev_coefficients(f, lam_est, M) for f in bank]
        for si, s in enumerate(signals):
            exact = [exact_filter(spec, f, s) for f in bank]
            it = IncrementalLanczos(op, s, lambda_max=lam_est)
            it.extend(M)
            cheb[si] = max(
                _rel_err(chebyshev_apply(op, e, s), ex) for e, ex in zip(exps, exact)
            )
            lanc[si] = max(
                _rel_err(it.approximation(f, M), ex) for f, ex in zip(bank, exact)
            )
        return [(p, seed, cheb.mean(), lanc.mean())]

    rows = _run_seeds(cells, worker, threads)
    lines = _header("error-vs-p", dict(
        n=n, p_list=",".join(_FMT % p for p in p_list),
        seeds=",".join(map(str, seeds)), **_bank_cfg(bank_spec), M=M,
        num_signals=num_signals, oracle_cap=oracle_cap,
    ))
    lines.append("p,seed,chebyshev_error,lanczos_error")
    for p, seed, ce, le in sorted(rows):
        lines.append(f"{_FMT % p},{seed},{_FMT % ce},{_FMT % le}")
    return "\n".join(lines) + "\n"


def spectrum_histogram(graph, bins=50, oracle_cap=DEFAULT_ORACLE_CAP):
    """Oracle eigenvalues plus a histogram, with the spectral-gap ratio."""
    op = combinatorial_laplacian(graph)
    spec = full_eigendecomposition(op, oracle_cap=oracle_cap)
    ev = spec.eigenvalues
    lam_max = spec.lambda_max
    gap_ratio = float(ev[1] / lam_max) if len(ev) > 1 and lam_max > 0 else 0.0
    counts, edges = np.histogram(ev, bins=bins, range=(0.0, max(lam_max, 1e-300)))
    lines = _header("spectrum", dict(n=graph.n, num_edges=graph.num_edges, bins=bins))
    lines.append(f"# gap_ratio: {_FMT % gap_ratio}")
    lines.append("index,eigenvalue")
    for i, lam in enumerate(ev):
        lines.append(f"{i},{_FMT % lam}")
    lines.append("# histogram")
    lines.append("bin_lo,bin_hi,count")
    for b in range(bins):
        lines.append(f"{_FMT % edges[b]},{_FMT % edges[b + 1]},{counts[b]}")
    return "\n".join(lines) + "\n"


def _bank_cfg(spec: BankSpec):
    return dict(
        bank=spec.name,
        num_filters=spec.num_filters,
        num_scales=spec.num_scales,
        adapted=spec.adapted,
    )
