"""The integration oracle itself: exactness, normalization, Monte Carlo."""

import numpy as np
import pytest
from scipy.special import roots_legendre

from hartogs import quadrature
from hartogs.coeffspace import LaurentCoeffs, MixedPoly, monomial_norm_sq
from hartogs.geometry import DiscAutomorphism, HartogsAutomorphism
from hartogs.specfun import DomainError, beta_fn
from hartogs.verify import _bump


class TestBuildRule:
    def test_flat_case_is_legendre(self):
        rule = quadrature.build_rule(0.0, radial_order=16, angular_count=8)
        x, w = roots_legendre(16)
        np.testing.assert_allclose(rule.u_nodes, 0.5 * (x + 1.0), atol=1e-14)
        np.testing.assert_allclose(rule.u_weights, 0.5 * w, atol=1e-14)

    def test_gauss_exactness_against_beta(self):
        for nu in (-0.5, 0.7, 2.0):
            rule = quadrature.build_rule(nu, radial_order=16, angular_count=4)
            for m in range(0, 31, 5):
                val = float(np.dot(rule.u_weights, rule.u_nodes**m))
                assert val == pytest.approx(beta_fn(m + 1.0, nu + 1.0), rel=1e-13)

    def test_singular_weight_mass(self):
        rule = quadrature.build_rule(-0.5, radial_order=8, angular_count=4)
        assert float(np.sum(rule.u_weights)) == pytest.approx(2.0, rel=1e-13)

    def test_nodes_interior_weights_positive(self):
        rule = quadrature.build_rule(0.7, radial_order=32, angular_count=8)
        for nodes, weights in (
            (rule.u_nodes, rule.u_weights),
            (rule.v_nodes, rule.v_weights),
        ):
            assert np.all(nodes > 0.0) and np.all(nodes < 1.0)
            assert np.all(weights > 0.0)

    def test_invalid_parameters(self):
        with pytest.raises(DomainError):
            quadrature.build_rule(-1.0)
        with pytest.raises(DomainError):
            quadrature.build_rule(0.0, radial_order=0)


class TestIntegrateMu:
    def test_normalization(self):
        for nu in (-0.5, -0.1, 0.0, 0.7, 2.0, 3.5):
            rule = quadrature.build_rule(nu, radial_order=48, angular_count=4)
            val = quadrature.integrate_mu(nu, lambda z1, z2: np.ones_like(z2), rule)
            assert val.real == pytest.approx(1.0, rel=1e-10)
            assert abs(val.imag) <= 1e-14

    def test_monomial_norms(self):
        for nu in (-0.5, 0.7):
            rule = quadrature.build_rule(nu, radial_order=48, angular_count=4)
            for j, k in ((0, 0), (1, -1), (3, 2), (0, -1)):
                mono = LaurentCoeffs({(j, k): 1.0})
                val = quadrature.inner_product_quad(nu, mono, mono, rule).real
                assert val == pytest.approx(monomial_norm_sq(nu, j, k), rel=1e-12)

    def test_angular_orthogonality_exact(self):
        rule = quadrature.build_rule(0.0, radial_order=24, angular_count=17)
        a = LaurentCoeffs({(1, 0): 1.0})
        b = LaurentCoeffs({(2, -1): 1.0})
        val = quadrature.inner_product_quad(0.0, a, b, rule)
        assert abs(val) <= 1e-12

    def test_polynomial_exactness(self):
        # pullback polynomial times trig monomial within the rule budget
        rule = quadrature.build_rule(0.7, radial_order=24, angular_count=17)

        def integrand(z1, z2):
            return np.abs(z1 * z2) ** 2 + 0.3 * (z1 / z2) ** 2 * np.conj(z2)

        # the trig parts integrate to zero; the radial part is a monomial norm
        expected = quadrature.inner_product_quad(
            0.7, LaurentCoeffs({(1, 1): 1.0}), LaurentCoeffs({(1, 1): 1.0}), rule
        ).real
        val = quadrature.integrate_mu(0.7, integrand, rule)
        assert val.real == pytest.approx(expected, rel=1e-12)
        assert abs(val.imag) <= 1e-13

    def test_rule_mismatch_rejected(self):
        rule = quadrature.build_rule(0.0)
        with pytest.raises(DomainError):
            quadrature.integrate_mu(0.7, lambda z1, z2: z2, rule)


class TestInnerProduct:
    def test_conjugate_pairing_example(self):
        # <conj(z2), z2^(-1)> integrates the constant 1
        rule = quadrature.build_rule(0.0, radial_order=24, angular_count=9)
        f = MixedPoly({(0, 0, 0, 1): 1.0})
        g = LaurentCoeffs({(0, -1): 1.0})
        val = quadrature.inner_product_quad(0.0, f, g, rule)
        assert val.real == pytest.approx(1.0, rel=1e-12)

    def test_orthogonality_and_positivity(self):
        rule = quadrature.build_rule(0.0, radial_order=24, angular_count=17)
        a = LaurentCoeffs({(0, 1): 1.0})
        b = LaurentCoeffs({(0, 2): 1.0})
        assert abs(quadrature.inner_product_quad(0.0, a, b, rule)) <= 1e-13
        assert quadrature.inner_product_quad(0.0, a, a, rule).real > 0.0


class TestMonteCarlo:
    def test_normalization_within_error(self):
        est, se = quadrature.mc_integrate_mu(0.7, lambda z1, z2: np.ones_like(z2), 20_000, seed=5)
        assert abs(est.real - 1.0) <= max(3.0 * se, 1e-12)

    def test_cross_oracle(self):
        rule = quadrature.build_rule(0.0, radial_order=32, angular_count=4)
        fn = lambda z1, z2: np.abs(z1) ** 2
        tensor = quadrature.integrate_mu(0.0, fn, rule).real
        est, se = quadrature.mc_integrate_mu(0.0, fn, 40_000, seed=6)
        assert abs(est.real - tensor) <= 3.0 * se

    def test_deterministic_repeat(self):
        a = quadrature.mc_integrate_mu(0.0, lambda z1, z2: np.abs(z2), 2000, seed=7)
        b = quadrature.mc_integrate_mu(0.0, lambda z1, z2: np.abs(z2), 2000, seed=7)
        assert a == b

    def test_sample_count_guard(self):
        with pytest.raises(DomainError):
            quadrature.mc_integrate_mu(0.0, lambda z1, z2: z2, 100, seed=1)


class TestTau:
    def test_identity_automorphism_exact(self):
        rule = quadrature.build_tau_rule(radial_order=32, angular_count=16)
        ident = HartogsAutomorphism(DiscAutomorphism(0.0j, 1.0), 1.0)
        base = quadrature.integrate_tau(_bump, rule).real
        moved = quadrature.integrate_tau(_bump, rule, automorphism=ident).real
        assert moved == base

    def test_rotation_exact(self):
        rule = quadrature.build_tau_rule(radial_order=32, angular_count=16)
        rot = HartogsAutomorphism(DiscAutomorphism(0.0j, np.exp(0.9j)), np.exp(0.4j))
        base = quadrature.integrate_tau(_bump, rule).real
        moved = quadrature.integrate_tau(_bump, rule, automorphism=rot).real
        assert moved == pytest.approx(base, rel=1e-12)

    def test_moebius_invariance_sample(self):
        rule = quadrature.build_tau_rule(
            radial_order=56, angular_count=24, r1_range=(0.08, 0.8), r2_range=(0.24, 0.91)
        )
        psi = HartogsAutomorphism(DiscAutomorphism(0.15 + 0.1j, np.exp(0.3j)), np.exp(1.2j))
        base = quadrature.integrate_tau(_bump, rule).real
        moved = quadrature.integrate_tau(_bump, rule, automorphism=psi).real
        assert abs(moved - base) <= 1e-6

    def test_shell_validation(self):
        with pytest.raises(DomainError):
            quadrature.build_tau_rule(shell_eps=0.7)
        with pytest.raises(DomainError):
            quadrature.build_tau_rule(r1_range=(0.0, 0.99))

    def test_support_leak_warning(self):
        rule = quadrature.build_tau_rule(radial_order=16, angular_count=8)
        with pytest.warns(UserWarning, match="shell edge"):
            quadrature.integrate_tau(lambda z1, z2: np.ones(np.broadcast(z1, z2).shape), rule)
