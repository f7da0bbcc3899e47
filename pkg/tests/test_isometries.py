"""Re-indexing isometries onto the bidisc spaces."""

import numpy as np
import pytest

from hartogs import quadrature
from hartogs.coeffspace import LaurentCoeffs, bergman_norm_sq, dirichlet_norm_sq, hardy_norm_sq
from hartogs.isometries import (
    BidiscCoeffs,
    bergman_pullback,
    bergman_pullback_inverse,
    bidisc_to_dirichlet,
    bidisc_to_hardy,
    dirichlet_bidisc_norm_sq,
    dirichlet_to_bidisc,
    hardy_bidisc_norm_sq,
    hardy_to_bidisc,
)
from hartogs.specfun import DomainError
from hartogs.verify import _random_laurent


class TestHardyIsometry:
    def test_examples(self):
        assert hardy_to_bidisc(LaurentCoeffs({(0, -1): 1.0})) == BidiscCoeffs({(0, 0): 1.0})
        assert hardy_to_bidisc(LaurentCoeffs({(1, 0): 1.0})) == BidiscCoeffs({(1, 2): 1.0})
        assert bidisc_to_hardy(BidiscCoeffs({(0, 0): 1.0})) == LaurentCoeffs({(0, -1): 1.0})
        assert bidisc_to_hardy(BidiscCoeffs({(1, 1): 1.0})) == LaurentCoeffs({(1, -1): 1.0})

    def test_norm_preserved_exactly(self):
        rng = np.random.default_rng(60)
        for _ in range(100):
            f = _random_laurent(rng, -1.0, n_terms=7, normalize=False)
            g = hardy_to_bidisc(f)
            assert hardy_bidisc_norm_sq(g) == hardy_norm_sq(f)

    def test_round_trip(self):
        rng = np.random.default_rng(61)
        for _ in range(100):
            f = _random_laurent(rng, -1.0, n_terms=6, normalize=False)
            assert bidisc_to_hardy(hardy_to_bidisc(f)) == f

    def test_support_violation(self):
        with pytest.raises(DomainError):
            hardy_to_bidisc(LaurentCoeffs({(0, -2): 1.0}))


class TestDirichletIsometry:
    def test_examples(self):
        g = dirichlet_to_bidisc(LaurentCoeffs({(0, 0): 1.0}))
        assert g == BidiscCoeffs({(0, 0): 1.0})
        assert dirichlet_bidisc_norm_sq(g) == pytest.approx(1.0)
        g = dirichlet_to_bidisc(LaurentCoeffs({(1, -1): 1.0}))
        assert g == BidiscCoeffs({(1, 0): 1.0})
        assert dirichlet_bidisc_norm_sq(g) == pytest.approx(2.0)

    def test_norm_preserved_exactly(self):
        rng = np.random.default_rng(62)
        for _ in range(100):
            f = _random_laurent(rng, -2.0, n_terms=7, normalize=False)
            g = dirichlet_to_bidisc(f)
            assert dirichlet_bidisc_norm_sq(g) == dirichlet_norm_sq(f)
            assert bidisc_to_dirichlet(g) == f

    def test_support_violation(self):
        with pytest.raises(DomainError):
            dirichlet_to_bidisc(LaurentCoeffs({(2, -3): 1.0}))


class TestBergmanPullback:
    def test_image_holomorphic_for_small_nu(self):
        rng = np.random.default_rng(63)
        for nu in (-0.9, -0.5, 0.0):
            for _ in range(50):
                f = _random_laurent(rng, nu, n_terms=6)
                g = bergman_pullback(nu, f)
                assert all(k >= 0 for (_, k), _ in g.items())

    def test_negative_powers_for_positive_nu(self):
        f = LaurentCoeffs({(0, -2): 1.0})  # in I_2
        g = bergman_pullback(2.0, f)
        assert g == LaurentCoeffs({(0, -1): 1.0})

    def test_constant_image_example(self):
        # z2^(-1) pulls back to the constant 1; both norms equal 2 at nu = 0
        f = LaurentCoeffs({(0, -1): 1.0})
        g = bergman_pullback(0.0, f)
        assert g == LaurentCoeffs({(0, 0): 1.0})
        assert bergman_norm_sq(0.0, f) == pytest.approx(2.0, rel=1e-12)
        rule = quadrature.build_rule(0.0, radial_order=16, angular_count=4)
        quad = quadrature.integrate_bidisc(
            0.0, lambda w1, w2: np.ones(np.broadcast(w1, w2).shape), rule
        ).real
        assert quad == pytest.approx(2.0, rel=1e-10)

    def test_norm_matches_quadrature(self):
        rng = np.random.default_rng(64)
        for nu in (-0.5, 0.0, 1.0):
            rule = quadrature.build_rule(nu, radial_order=32, angular_count=25)
            for _ in range(5):
                f = _random_laurent(rng, nu, n_terms=5)
                g = bergman_pullback(nu, f)
                gf = quadrature.as_grid_fn(g)
                quad = quadrature.integrate_bidisc(
                    nu, lambda w1, w2: np.abs(gf(w1, w2)) ** 2, rule
                ).real
                assert quad == pytest.approx(bergman_norm_sq(nu, f), rel=1e-8)

    def test_round_trip(self):
        rng = np.random.default_rng(65)
        for _ in range(50):
            f = _random_laurent(rng, 0.7, n_terms=6, normalize=False)
            assert bergman_pullback_inverse(0.7, bergman_pullback(0.7, f)) == f

    def test_support_violation(self):
        with pytest.raises(DomainError):
            bergman_pullback(0.0, LaurentCoeffs({(0, -2): 1.0}))
        with pytest.raises(DomainError):
            bergman_pullback_inverse(0.0, LaurentCoeffs({(0, -1): 1.0}))


class TestBidiscContainer:
    def test_validation(self):
        with pytest.raises(DomainError):
            BidiscCoeffs({(0, -1): 1.0})
        with pytest.raises(DomainError):
            BidiscCoeffs({(-1, 0): 1.0})
