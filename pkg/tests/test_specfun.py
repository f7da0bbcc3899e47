"""Special-function layer: values, properties, failure modes."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import hyp2f1

from hartogs.specfun import (
    DomainError,
    HypergeometricParams,
    beta_fn,
    gamma_ratio,
    gamma_ratio_signed,
    gauss_2f1,
    log_gamma,
    log_gamma_signed,
)


class TestLogGamma:
    def test_classical_values(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-13)

    def test_against_libm(self):
        rng = np.random.default_rng(1)
        for x in rng.uniform(0.01, 1e4, size=500):
            assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-13, abs=1e-12)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            log_gamma(-1.5)

    def test_signed_negative_arguments(self):
        # Gamma is negative on (-1, 0) and positive on (-2, -1)
        s, l = log_gamma_signed(-0.25)
        assert s == -1.0 and math.exp(l) == pytest.approx(4.901666809860711, rel=1e-12)
        s, _ = log_gamma_signed(-1.5)
        assert s == 1.0
        s, l = log_gamma_signed(-2.0)
        assert s == 0.0 and math.isinf(l)


class TestGammaRatio:
    def test_trivial_values(self):
        assert gamma_ratio([3.0], [1.0, 2.0]) == pytest.approx(2.0, rel=1e-13)
        assert gamma_ratio([1.0], [1.0]) == pytest.approx(1.0, rel=1e-14)
        assert gamma_ratio([5.0, 1.0], [3.0, 3.0]) == pytest.approx(6.0, rel=1e-13)

    def test_reciprocal_property(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            nums = list(rng.uniform(0.1, 50.0, size=3))
            dens = list(rng.uniform(0.1, 50.0, size=2))
            prod = gamma_ratio(nums, dens) * gamma_ratio(dens, nums)
            assert prod == pytest.approx(1.0, rel=1e-12)

    def test_no_overflow_for_large_arguments(self):
        # Gamma(9000)/Gamma(9001) would overflow termwise; the log route is fine
        assert gamma_ratio([9000.0], [9001.0]) == pytest.approx(1.0 / 9000.0, rel=1e-11)

    def test_signed_ratio_matches_positive_route(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            nums = list(rng.uniform(0.1, 20.0, size=2))
            dens = list(rng.uniform(0.1, 20.0, size=2))
            assert gamma_ratio_signed(nums, dens) == pytest.approx(
                gamma_ratio(nums, dens), rel=1e-12
            )

    def test_signed_pole_in_denominator_gives_zero(self):
        assert gamma_ratio_signed([1.0], [-1.0]) == 0.0


class TestBeta:
    def test_trivial_values(self):
        assert beta_fn(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)
        assert beta_fn(2.0, 1.0) == pytest.approx(0.5, rel=1e-14)

    def test_against_integral_oracle(self):
        # B(1.5, 2.5) = int_0^1 x^0.5 (1-x)^1.5 dx, evaluated independently
        oracle, _ = quad(lambda x: x**0.5 * (1.0 - x) ** 1.5, 0.0, 1.0, epsabs=1e-14)
        val = beta_fn(1.5, 2.5)
        assert val == pytest.approx(oracle, rel=1e-10)
        assert val == pytest.approx(math.pi / 16.0, rel=1e-12)

    def test_symmetry(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            a, b = rng.uniform(0.05, 30.0, size=2)
            assert beta_fn(a, b) == pytest.approx(beta_fn(b, a), rel=1e-13)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            beta_fn(0.0, 1.0)
        with pytest.raises(DomainError):
            beta_fn(1.0, -2.0)


class TestGauss2F1:
    def test_binomial_identity(self):
        # F(a, b; b; z) = (1-z)^(-a)
        params = HypergeometricParams(3.0, 1.0, 1.0)
        assert gauss_2f1(params, 0.5) == pytest.approx(8.0, rel=1e-12)

    def test_value_at_zero(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a, b = rng.uniform(-3.0, 5.0, size=2)
            g = rng.uniform(0.05, 5.0)
            assert gauss_2f1(HypergeometricParams(a, b, g), 0.0) == pytest.approx(1.0)

    def test_even_weight_reduction(self):
        # the nu = 2 kernel factor: F(4, 1; 1; z) = (1-z)^(-4)
        val = gauss_2f1(HypergeometricParams(4.0, 1.0, 1.0), 0.3)
        assert val == pytest.approx(0.7**-4, rel=1e-12)
        assert val == pytest.approx(4.16493128, rel=1e-8)

    def test_parameter_symmetry(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            a, b = rng.uniform(-2.0, 4.0, size=2)
            g = rng.uniform(0.1, 5.0)
            z = rng.uniform(-0.7, 0.7) + 1j * rng.uniform(-0.3, 0.3)
            lhs = gauss_2f1(HypergeometricParams(a, b, g), z)
            rhs = gauss_2f1(HypergeometricParams(b, a, g), z)
            assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1.0)

    def test_euler_transformation_consistency(self):
        # direct and transformed series agree where both converge well
        rng = np.random.default_rng(7)
        for _ in range(100):
            a = rng.uniform(-1.5, 3.0)
            b = rng.uniform(0.2, 2.0)
            g = rng.uniform(0.3, 4.0)
            z = rng.uniform(0.0, 0.8) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            params = HypergeometricParams(a, b, g)
            direct = gauss_2f1(params, z, euler_radius=1.0)
            transformed = gauss_2f1(params, z, euler_radius=0.0)
            assert abs(direct - transformed) <= 1e-9 * max(abs(direct), 1.0)

    def test_against_scipy(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            a = rng.uniform(-2.0, 4.0)
            b = rng.uniform(0.1, 3.0)
            g = rng.uniform(0.2, 5.0)
            z = rng.uniform(-0.95, 0.95)
            mine = gauss_2f1(HypergeometricParams(a, b, g), z)
            ref = hyp2f1(a, b, g, z)
            assert abs(mine - ref) <= 1e-9 * max(abs(ref), 1.0)

    def test_near_boundary_accuracy(self):
        # kernel-shaped parameters stay accurate out to |z| = 0.999
        nu = 0.7
        c = math.ceil(nu / 2)
        params = HypergeometricParams(1.5 * nu - c + 2.0, 1.0, 0.5 * nu - c + 1.0)
        for z in (0.95, 0.99, 0.999):
            mine = gauss_2f1(params, z)
            ref = hyp2f1(params.alpha, params.beta, params.gamma, z)
            assert abs(mine - ref) <= 1e-10 * abs(ref)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            HypergeometricParams(1.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            HypergeometricParams(1.0, 1.0, -3.0)
        with pytest.raises(DomainError):
            gauss_2f1(HypergeometricParams(1.0, 1.0, 2.0), 1.0 + 0.0j)
