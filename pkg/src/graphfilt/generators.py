"""Seeded random graph generators: Erdos-Renyi and k-NN sensor graphs."""

from __future__ import annotations

import numpy as np

from .errors import InvalidK, InvalidProbability
from .graphs import Graph, build_graph

__all__ = ["erdos_renyi", "sensor_graph"]


def _pair_from_linear(m, n):
    """Map linear indices over lexicographic (i, j) pairs, i < j, back to pairs."""
    # row i starts at offset i*n - i*(i+1)/2 - i  (i.e. cumulative count of pairs)
    i_range = np.arange(n, dtype=np.int64)
    starts = np.cumsum(np.concatenate([[0], n - 1 - i_range[:-1]]))
    i = np.searchsorted(starts, m, side="right") - 1
    j = m - starts[i] + i + 1
    return i, j


def erdos_renyi(n, p, seed):
    """G(n, p) with unit weights, deterministic for a given seed.

    Pairs are traversed in lexicographic order using geometric skip
    sampling, so the generator stays O(edges) even for large n.
    """
    if n < 1:
        raise InvalidProbability(f"n must be >= 1, got {n}")
    if not (0.0 <= p <= 1.0):
        raise InvalidProbability(f"p must lie in [0, 1], got {p}")
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return build_graph(n, [])
    if p == 1.0:
        i, j = np.triu_indices(n, k=1)
        return Graph(n=n, edges=tuple(zip(i.tolist(), j.tolist(), [1.0] * total)))

    rng = np.random.default_rng(seed)
    picks = []
    pos = -1
    # expected number of edges plus slack per draw batch
    batch = max(int(1.2 * total * p) + 16, 64)
    while pos < total:
        gaps = rng.geometric(p, size=batch)
        pos_batch = pos + np.cumsum(gaps)
        picks.append(pos_batch[pos_batch < total])
        pos = int(pos_batch[-1])
    m = np.concatenate(picks)
    i, j = _pair_from_linear(m, n)
    edges = tuple(zip(i.tolist(), j.tolist(), [1.0] * len(m)))
    return Graph(n=n, edges=edges)


def sensor_graph(n, seed, k=6, sigma=None):
    """Random geometric sensor graph on the unit square.

    n points are placed uniformly at random; each connects to its k nearest
    Euclidean neighbors and the edge set is symmetrized.  Weights are
    Gaussian, w = exp(-dist^2 / (2 sigma^2)), with sigma defaulting to the
    mean k-NN distance.  The seed is split into one sub-stream for the
    coordinates and one reserved for edge randomness (currently unused:
    given the coordinates, the k-NN construction is deterministic).
    """
    if not (1 <= k < n):
        raise InvalidK(f"need n > k >= 1, got n={n}, k={k}")
    coord_seq, _edge_seq = np.random.SeedSequence(seed).spawn(2)
    rng = np.random.default_rng(coord_seq)
    pts = rng.uniform(size=(n, 2))

    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=-1))
    np.fill_diagonal(dist, np.inf)
    nearest = np.argsort(dist, axis=1, kind="stable")[:, :k]

    knn_dists = np.take_along_axis(dist, nearest, axis=1)
    if sigma is None:
        sigma = float(knn_dists.mean())
    denom = 2.0 * sigma * sigma

    pairs = {}
    for i in range(n):
        for j in nearest[i]:
            a, b = (i, int(j)) if i < j else (int(j), i)
            if (a, b) not in pairs:
                pairs[(a, b)] = float(np.exp(-dist[a, b] ** 2 / denom))
    edges = [(i, j, w) for (i, j), w in sorted(pairs.items())]
    return build_graph(n, edges)
