import numpy as np
import pytest

from graphfilt import (
    adapted_translates,
    combinatorial_laplacian,
    exact_filter,
    filterbank_apply,
    full_eigendecomposition,
    itersine_window,
    mexican_hat_bank,
    uniform_translates,
)
from graphfilt.errors import DegenerateSpectrum, EmptySpectrum, InvalidCount
from graphfilt.filters import Filter, Filterbank
from graphfilt.graphs import CountingOperator, estimate_lambda_max

from conftest import random_graph


class TestItersineWindow:
    def test_center(self):
        assert np.isclose(itersine_window(0.0), 1.0)

    def test_edges(self):
        assert itersine_window(0.5) == 0.0
        assert itersine_window(-0.5) == 0.0

    def test_outside_support(self):
        assert itersine_window(0.7) == 0.0
        assert itersine_window(-3.0) == 0.0


class TestUniformTranslates:
    def test_invalid_count(self):
        with pytest.raises(InvalidCount):
            uniform_translates(1, 2.0)

    def test_centers_and_overlap(self):
        lam_max = 2.0
        bank = uniform_translates(2, lam_max)
        delta = 2.0 * lam_max / 3.0
        assert np.isclose(bank.filters[0](delta / 2.0), 1.0)
        assert np.isclose(bank.filters[1](delta), 1.0)
        # half-overlap: neighboring filters meet at equal height
        mid = 0.75 * delta
        assert np.isclose(bank.filters[0](mid), bank.filters[1](mid))

    def test_tight_frame_interior(self):
        for R, lam_max in ((4, 1.0), (8, 11.3), (13, 40.0)):
            bank = uniform_translates(R, lam_max)
            delta = 2.0 * lam_max / (R + 1)
            grid = np.linspace(delta / 2 + 1e-9, lam_max - delta / 2 - 1e-9, 500)
            total = sum(np.asarray(f(grid)) ** 2 for f in bank)
            assert np.abs(total - 1.0).max() <= 1e-12

    def test_zero_outside_interval(self):
        bank = uniform_translates(5, 3.0)
        for f in bank:
            assert f(-0.5) == 0.0
            assert f(3.6) == 0.0


class TestAdaptedTranslates:
    def test_equispaced_matches_uniform(self):
        lam_max = 6.0
        ev = np.linspace(0.0, lam_max, 40)
        adapted = adapted_translates(6, ev)
        uniform = uniform_translates(6, lam_max)
        grid = np.linspace(0.0, lam_max, 400)
        for fa, fu in zip(adapted, uniform):
            assert np.abs(np.asarray(fa(grid)) - np.asarray(fu(grid))).max() <= 1e-10

    def test_concentrated_mass(self):
        ev = np.concatenate([np.linspace(0.0, 1.0, 200), [10.0]])
        bank = adapted_translates(8, ev)
        grid = np.linspace(1.5, 10.0, 800)
        inside = sum(1 for f in bank if np.abs(np.asarray(f(grid))).max() == 0.0)
        assert inside > 4

    def test_empty_spectrum(self):
        with pytest.raises(EmptySpectrum):
            adapted_translates(4, np.array([]))

    def test_degenerate_spectrum(self):
        with pytest.raises(DegenerateSpectrum):
            adapted_translates(4, np.full(5, 2.0))

    def test_tight_frame_in_warped_coordinate(self):
        rng = np.random.default_rng(0)
        ev = np.sort(np.concatenate([[0.0], rng.uniform(0.0, 5.0, 99)]))
        bank = adapted_translates(8, ev)
        from graphfilt.filters import spectral_cdf

        cdf, lam_max = spectral_cdf(ev)
        delta = 2.0 / 9
        grid = np.linspace(0.0, lam_max, 2000)
        warped = cdf(grid)
        keep = (warped > delta / 2) & (warped < 1.0 - delta / 2)
        total = sum(np.asarray(f(grid[keep])) ** 2 for f in bank)
        assert np.abs(total - 1.0).max() <= 1e-12


class TestMexicanHat:
    def test_wavelet_vanishes_at_zero(self):
        bank = mexican_hat_bank(4.0)
        assert bank.filters[1](0.0) == 0.0

    def test_wavelet_peak(self):
        # peak of x exp(-x^2) is at 1/sqrt(2), height exp(-1/2)/sqrt(2)
        bank = mexican_hat_bank(4.0)
        t = bank.filters[1].params["scale"]
        peak_x = (1.0 / np.sqrt(2.0)) / t
        assert peak_x <= 4.0
        grid = np.linspace(0.0, 4.0, 20000)
        vals = np.asarray(bank.filters[1](grid))
        assert np.isclose(vals.max(), np.exp(-0.5) / np.sqrt(2.0), atol=1e-6)
        assert np.isclose(grid[np.argmax(vals)], peak_x, atol=1e-3)

    def test_lowpass_monotone(self):
        bank = mexican_hat_bank(4.0)
        lp = bank.filters[0]
        assert lp(0.0) == 1.0
        grid = np.linspace(0.0, 4.0, 500)
        assert np.all(np.diff(np.asarray(lp(grid))) <= 0.0)

    def test_all_filters_finite_on_grid(self):
        for lam_max in (0.5, 4.0, 55.0):
            bank = mexican_hat_bank(lam_max, num_scales=3)
            grid = np.linspace(0.0, lam_max, 10000)
            for f in bank:
                assert np.all(np.isfinite(np.asarray(f(grid))))


class TestFilterbankApply:
    def _identity_bank(self, lam_max):
        return Filterbank(
            filters=(Filter(name="identity", func=lambda x: np.ones_like(np.asarray(x, dtype=float))),),
            lambda_max=lam_max,
        )

    def test_identity_exact(self):
        g = random_graph(0, max_n=40)
        op = combinatorial_laplacian(g)
        spec = full_eigendecomposition(op)
        s = np.random.default_rng(0).standard_normal(g.n)
        out = filterbank_apply("exact", op, self._identity_bank(spec.lambda_max), s, 5, spectrum=spec)
        assert len(out) == 1
        assert np.linalg.norm(out[0] - s) <= 1e-12 * np.linalg.norm(s)

    def test_lanczos_full_order_matches_exact(self):
        g = random_graph(1, max_n=50)
        op = combinatorial_laplacian(g)
        spec = full_eigendecomposition(op)
        bank = mexican_hat_bank(spec.lambda_max)
        s = np.random.default_rng(1).standard_normal(g.n)
        approx = filterbank_apply("lanczos", op, bank, s, g.n, lambda_max=spec.lambda_max)
        for f, a in zip(bank, approx):
            exact = exact_filter(spec, f, s)
            assert np.linalg.norm(a - exact) <= 1e-8 * max(np.linalg.norm(exact), 1e-12)

    def test_lanczos_basis_reused_across_bank(self):
        g = random_graph(2, max_n=60)
        op = CountingOperator(combinatorial_laplacian(g))
        lam = estimate_lambda_max(op)
        bank = uniform_translates(6, lam)
        s = np.random.default_rng(2).standard_normal(g.n)
        op.count = 0
        M = min(15, g.n - 1)
        filterbank_apply("lanczos", op, bank, s, M, lambda_max=lam)
        assert op.count == M  # one shared basis, not len(bank) * M

    def test_chebyshev_count_scales_with_bank(self):
        g = random_graph(2, max_n=60)
        op = CountingOperator(combinatorial_laplacian(g))
        lam = estimate_lambda_max(op)
        bank = uniform_translates(3, lam)
        op.count = 0
        filterbank_apply("chebyshev", op, bank, np.ones(g.n), 10, lambda_max=lam)
        assert op.count == 3 * 10

    def test_unknown_method(self):
        g = random_graph(0, max_n=20)
        op = combinatorial_laplacian(g)
        with pytest.raises(ValueError):
            filterbank_apply("magic", op, self._identity_bank(1.0), np.ones(g.n), 3)


def test_bank_describe():
    bank = mexican_hat_bank(2.0)
    text = bank.describe()
    lines = text.strip().splitlines()
    assert lines[0] == "mexican-hat-lowpass"
    assert lines[1].startswith("mexican-hat scale=")
