import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphfilt import (
    build_graph,
    combinatorial_laplacian,
    exact_filter,
    fourier_transform,
    full_eigendecomposition,
    inverse_fourier_transform,
)
from graphfilt.errors import DimensionMismatch, FilterDomainError, TooLargeForOracle
from graphfilt.graphs import SparseSymmetricOperator

from conftest import random_graph
import scipy.sparse as sp


def _zero_op(n):
    return SparseSymmetricOperator(n=n, matrix=sp.csr_array((n, n)), kind="generic")


class TestEigendecomposition:
    def test_p2(self, p2_laplacian):
        spec = full_eigendecomposition(p2_laplacian)
        assert np.allclose(spec.eigenvalues, [0.0, 2.0])
        r = 1.0 / np.sqrt(2.0)
        assert np.allclose(np.abs(spec.eigenvectors[:, 0]), r)
        assert np.allclose(np.abs(spec.eigenvectors[:, 1]), r)
        # sign convention: leading-magnitude entry positive
        assert spec.eigenvectors[0, 0] > 0 and spec.eigenvectors[np.argmax(np.abs(spec.eigenvectors[:, 1])), 1] > 0

    def test_zero_operator(self):
        spec = full_eigendecomposition(_zero_op(3))
        assert np.array_equal(spec.eigenvalues, np.zeros(3))

    def test_k3(self, triangle):
        spec = full_eigendecomposition(combinatorial_laplacian(triangle))
        assert np.allclose(spec.eigenvalues, [0.0, 3.0, 3.0])

    def test_cap(self):
        with pytest.raises(TooLargeForOracle):
            full_eigendecomposition(_zero_op(10), oracle_cap=5)

    def test_spectrum_invariants_on_corpus(self):
        for i in range(12):
            g = random_graph(i, max_n=120)
            L = combinatorial_laplacian(g)
            spec = full_eigendecomposition(L)
            u = spec.eigenvectors
            assert np.abs(u.T @ u - np.eye(g.n)).max() <= 1e-10
            recon = u @ np.diag(spec.eigenvalues) @ u.T
            lam_max = max(spec.lambda_max, 1e-12)
            assert np.abs(L.matrix.toarray() - recon).max() <= 1e-8 * lam_max
            assert np.all(np.diff(spec.eigenvalues) >= 0)


class TestFourier:
    def test_eigenvector_maps_to_unit_vector(self, triangle):
        spec = full_eigendecomposition(combinatorial_laplacian(triangle))
        shat = fourier_transform(spec, spec.eigenvectors[:, 2])
        assert np.allclose(shat, [0.0, 0.0, 1.0], atol=1e-12)

    def test_round_trip(self):
        g = random_graph(2, max_n=60)
        spec = full_eigendecomposition(combinatorial_laplacian(g))
        s = np.random.default_rng(1).standard_normal(g.n)
        back = inverse_fourier_transform(spec, fourier_transform(spec, s))
        assert np.linalg.norm(back - s) <= 1e-12 * np.linalg.norm(s)

    @given(st.integers(min_value=0, max_value=9))
    @settings(max_examples=10, deadline=None)
    def test_parseval(self, idx):
        g = random_graph(idx, max_n=80)
        spec = full_eigendecomposition(combinatorial_laplacian(g))
        s = np.random.default_rng(idx).standard_normal(g.n)
        assert np.isclose(
            np.linalg.norm(fourier_transform(spec, s)),
            np.linalg.norm(s),
            rtol=1e-12,
        )

    def test_dimension_mismatch(self, p2_laplacian):
        spec = full_eigendecomposition(p2_laplacian)
        with pytest.raises(DimensionMismatch):
            fourier_transform(spec, np.zeros(5))


class TestExactFilter:
    def test_identity_filter(self):
        g = random_graph(1, max_n=40)
        spec = full_eigendecomposition(combinatorial_laplacian(g))
        s = np.random.default_rng(2).standard_normal(g.n)
        out = exact_filter(spec, lambda x: np.ones_like(x), s)
        assert np.linalg.norm(out - s) <= 1e-12 * np.linalg.norm(s)

    def test_linear_filter_equals_laplacian(self):
        g = random_graph(5, max_n=60)
        L = combinatorial_laplacian(g)
        spec = full_eigendecomposition(L)
        s = np.random.default_rng(3).standard_normal(g.n)
        out = exact_filter(spec, lambda x: x, s)
        lnorm = np.abs(L.matrix.toarray()).max()
        assert np.linalg.norm(out - L.apply(s)) <= 1e-10 * lnorm * np.linalg.norm(s)

    def test_p2_heat_kernel(self, p2_laplacian):
        spec = full_eigendecomposition(p2_laplacian)
        # hand value for s = (1, 0), g = exp(-x)
        out = exact_filter(spec, lambda x: np.exp(-x), np.array([1.0, 0.0]))
        expected = np.array([(1 + np.exp(-2)) / 2, (1 - np.exp(-2)) / 2])
        assert np.allclose(out, expected, atol=1e-14)

    def test_linearity(self):
        g = random_graph(7, max_n=60)
        spec = full_eigendecomposition(combinatorial_laplacian(g))
        rng = np.random.default_rng(4)
        s, t = rng.standard_normal((2, g.n))
        f = lambda x: np.exp(-x)
        lhs = exact_filter(spec, f, 2.5 * s - 0.5 * t)
        rhs = 2.5 * exact_filter(spec, f, s) - 0.5 * exact_filter(spec, f, t)
        assert np.linalg.norm(lhs - rhs) <= 1e-12 * max(np.linalg.norm(rhs), 1.0)

    def test_multiplicativity(self):
        g = random_graph(9, max_n=60)
        spec = full_eigendecomposition(combinatorial_laplacian(g))
        s = np.random.default_rng(5).standard_normal(g.n)
        g1 = lambda x: np.exp(-x)
        g2 = lambda x: 1.0 / (1.0 + x)
        lhs = exact_filter(spec, lambda x: g1(x) * g2(x), s)
        rhs = exact_filter(spec, g1, exact_filter(spec, g2, s))
        assert np.linalg.norm(lhs - rhs) <= 1e-10 * max(np.linalg.norm(rhs), 1.0)

    def test_filter_domain_error(self, p2_laplacian):
        spec = full_eigendecomposition(p2_laplacian)
        with pytest.raises(FilterDomainError):
            exact_filter(spec, lambda x: np.full_like(x, np.nan), np.array([1.0, 0.0]))
