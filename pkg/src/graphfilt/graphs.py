"""Graph representation, Laplacian construction and the sparse operator.

A graph is stored as a canonical weighted edge list (i < j, no duplicates);
the Laplacians are exposed as symmetric CSR operators that every filtering
backend consumes through a single mat-vec entry point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    IndexOutOfRange,
    NonPositiveWeight,
    SelfLoop,
)

__all__ = [
    "Graph",
    "SparseSymmetricOperator",
    "CountingOperator",
    "build_graph",
    "degree_vector",
    "adjacency_csr",
    "combinatorial_laplacian",
    "normalized_laplacian",
    "apply_operator",
    "estimate_lambda_max",
]


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph with a canonical edge list (i < j)."""

    n: int
    edges: tuple  # tuple of (i, j, w), sorted lexicographically, i < j

    @property
    def num_edges(self):
        return len(self.edges)


def build_graph(n, edges):
    """Validate and canonicalize an edge list into a Graph.

    Each edge (i, j, w) is stored with i < j; supplying both orientations
    of the same pair is rejected as a duplicate.
    """
    if n < 1:
        raise IndexOutOfRange(f"vertex count must be >= 1, got {n}")
    canonical = []
    seen = set()
    for i, j, w in edges:
        i, j = int(i), int(j)
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        w = float(w)
        if not w > 0:
            raise NonPositiveWeight(f"edge ({i}, {j}) has weight {w}")
        if i > j:
            i, j = j, i
        if (i, j) in seen:
            raise DuplicateEdge(f"duplicate edge ({i}, {j})")
        seen.add((i, j))
        canonical.append((i, j, w))
    canonical.sort()
    return Graph(n=n, edges=tuple(canonical))


def adjacency_csr(g: Graph) -> sp.csr_array:
    """Symmetric weight matrix W in canonical CSR form."""
    if g.num_edges == 0:
        return sp.csr_array((g.n, g.n))
    e = np.asarray(g.edges)
    rows = np.concatenate([e[:, 0], e[:, 1]]).astype(np.int64)
    cols = np.concatenate([e[:, 1], e[:, 0]]).astype(np.int64)
    vals = np.concatenate([e[:, 2], e[:, 2]])
    w = sp.coo_array((vals, (rows, cols)), shape=(g.n, g.n)).tocsr()
    w.sum_duplicates()
    w.sort_indices()
    return w


def degree_vector(g: Graph) -> np.ndarray:
    """Degrees d(i) = sum of incident edge weights, ascending neighbor order."""
    d = np.zeros(g.n)
    for i, j, w in g.edges:
        d[i] += w
        d[j] += w
    return d


@dataclass(frozen=True)
class SparseSymmetricOperator:
    """Symmetric sparse matrix with a deterministic mat-vec.

    Column indices are sorted within each row, so the accumulation order of
    the product is fixed and results are bit-reproducible.
    """

    n: int
    matrix: sp.csr_array
    kind: str = "generic"  # {combinatorial, normalized, generic}

    def apply(self, s):
        s = np.asarray(s, dtype=float)
        if s.shape != (self.n,):
            raise DimensionMismatch(
                f"operator is {self.n}x{self.n}, signal has shape {s.shape}"
            )
        return self.matrix @ s

    def infinity_norm(self):
        """Max absolute row sum; a cheap upper bound on the spectral radius."""
        return float(abs(self.matrix).sum(axis=1).max()) if self.n else 0.0

    def max_abs_entry(self):
        return float(np.abs(self.matrix.data).max()) if self.matrix.nnz else 0.0


class CountingOperator:
    """Wrapper that counts mat-vec applications; used to audit mat-vec budgets."""

    def __init__(self, op: SparseSymmetricOperator):
        self.op = op
        self.count = 0

    @property
    def n(self):
        return self.op.n

    @property
    def kind(self):
        return self.op.kind

    def apply(self, s):
        self.count += 1
        return self.op.apply(s)

    def infinity_norm(self):
        return self.op.infinity_norm()

    def max_abs_entry(self):
        return self.op.max_abs_entry()


def _csr_operator(mat: sp.csr_array, n, kind) -> SparseSymmetricOperator:
    mat.sort_indices()
    return SparseSymmetricOperator(n=n, matrix=mat, kind=kind)


def combinatorial_laplacian(g: Graph) -> SparseSymmetricOperator:
    """L = D - W."""
    w = adjacency_csr(g)
    d = degree_vector(g)
    lap = sp.diags_array(d).tocsr() - w
    return _csr_operator(lap.tocsr(), g.n, "combinatorial")


def normalized_laplacian(g: Graph) -> SparseSymmetricOperator:
    """Normalized Laplacian D^{-1/2} (D - W) D^{-1/2}.

    Rows and columns of isolated vertices (degree zero) are all zero.
    """
    w = adjacency_csr(g)
    d = degree_vector(g)
    with np.errstate(divide="ignore"):
        dinv = np.where(d > 0, 1.0 / np.sqrt(np.where(d > 0, d, 1.0)), 0.0)
    lap = sp.diags_array(d).tocsr() - w
    scale = sp.diags_array(dinv)
    ln = (scale @ lap @ scale).tocsr()
    return _csr_operator(ln, g.n, "normalized")


def apply_operator(op, s):
    """Sparse symmetric mat-vec with fixed accumulation order."""
    return op.apply(s)


def estimate_lambda_max(op, tol=1e-10):
    """Upper bound on the largest eigenvalue of a symmetric PSD operator.

    Runs a short Lanczos iteration (order min(n, 50), seeded random start)
    and inflates the extremal Ritz value by a 1.01 safety factor so the
    Chebyshev mapping interval always contains the spectrum.  Dimensions
    n <= 2 are handled exactly (no safety factor needed there).
    """
    n = op.n
    if n <= 2:
        dense = op.matrix.toarray() if hasattr(op, "matrix") else op.op.matrix.toarray()
        return float(np.linalg.eigvalsh(dense).max()) if n else 0.0
    if op.max_abs_entry() == 0.0:
        return 0.0

    rng = np.random.default_rng(0x1A57)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    order = min(n, 50)
    alphas, betas = [], []
    v_prev = np.zeros(n)
    beta_prev = 0.0
    ritz_prev = -np.inf
    basis = [v]
    for j in range(order):
        w = op.apply(v)
        alpha = float(v @ w)
        w = w - alpha * v - beta_prev * v_prev
        # full reorthogonalization keeps the extremal Ritz value trustworthy
        for b in basis:
            w -= (b @ w) * b
        alphas.append(alpha)
        beta = float(np.linalg.norm(w))
        h = sp.diags_array(
            [betas, alphas, betas], offsets=[-1, 0, 1]
        ).toarray() if betas else np.array([[alphas[0]]])
        ritz = float(np.linalg.eigvalsh(h).max())
        if beta <= 1e-14 * max(abs(ritz), 1.0):
            return 1.01 * ritz
        if ritz_prev > -np.inf and abs(ritz - ritz_prev) <= tol * abs(ritz):
            return 1.01 * ritz
        ritz_prev = ritz
        betas.append(beta)
        v_prev, v = v, w / beta
        basis.append(v)
        beta_prev = beta
    return 1.01 * ritz
