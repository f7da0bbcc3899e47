"""Projection operators and the critical L^p exponent machinery.

The weighted Bergman projection P_nu acts on finite mixed polynomials
z1^a conj(z1)^b z2^c conj(z2)^d exactly: angular selection keeps only the
holomorphic monomial z1^(a-b) z2^(c-d), and the surviving coefficient is
a ratio of Beta integrals against the reciprocal monomial norm.  The
coefficient rule is a derived formula, so a mandatory self-test against
the quadrature oracle guards its first use in any CLI run.

The Szego projection is a Fourier multiplier on the torus with symbol the
indicator of {j >= 0, j + k + 1 >= 0} (sgn(0) := +1, which the series
definition of the projection forces; the literal sgn(0) = 0 reading would
break idempotence).  A spectral grid realization via the FFT doubles it.

The boundedness range of P_nu on L^p_nu is computed in both the
case-dispatched floor form and the unified ceiling form, together with
the Schur-test feasibility region and the endpoint blow-up scan that
witnesses divergence outside the range.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import roots_legendre

from . import coeffspace, quadrature
from .coeffspace import LaurentCoeffs, MixedPoly, TorusSeries
from .geometry import normalization_C
from .specfun import DomainError, beta_fn

__all__ = [
    "IntegrabilityError",
    "CriticalRange",
    "SchurParams",
    "BlowupScan",
    "project_bergman",
    "projection_self_test",
    "szego_multiplier",
    "project_szego",
    "project_szego_grid",
    "lp_norm_torus",
    "critical_range",
    "critical_range_unified",
    "schur_feasible",
    "blowup_scan",
    "classical_estimate_check",
]

_EVEN_TOL = 1e-12


class IntegrabilityError(DomainError):
    """A mixed-polynomial term is not integrable for the requested weight."""


def _ceil_half(nu):
    """ceil(nu/2) with a 1e-12 snap onto even integers (CLI floats)."""
    n = round(0.5 * nu)
    if abs(nu - 2.0 * n) < _EVEN_TOL:
        return int(n)
    return math.ceil(0.5 * nu)


def project_bergman(nu, f):
    """Weighted Bergman projection of a finite mixed polynomial.

    Each term z1^a conj(z1)^b z2^c conj(z2)^d maps to

        lambda * z1^(a-b) z2^(c-d),
        lambda = C_nu 2^(nu/2) pi^2 B(a+1, nu+1) B(a+c+nu/2+2, nu+1)
                 / || z1^(a-b) z2^(c-d) ||^2_{A^2_nu}

    when a >= b and (a-b, c-d) lies in I_nu, and to zero otherwise.
    Raises IntegrabilityError, naming the term, when a term is not in
    L^1(dmu_nu) or its surviving Beta moment diverges.
    """
    if not nu > -1.0:
        raise DomainError(f"the Bergman projection requires nu > -1, got {nu}")
    if not isinstance(f, MixedPoly):
        raise DomainError("project_bergman expects a MixedPoly input")
    front = normalization_C(nu) * 2.0 ** (0.5 * nu) * math.pi**2
    out = {}
    for (a, b, c, d), coef in f.items():
        if not 2 * a + 2 * b + c + d + nu + 4.0 > 0.0:
            raise IntegrabilityError(f"term (a={a}, b={b}, c={c}, d={d}) is not in L^1(dmu_{nu})")
        j, k = a - b, c - d
        if j < 0 or not coeffspace.index_member(nu, j, k):
            continue
        second = a + c + 0.5 * nu + 2.0
        if not second > 0.0:
            raise IntegrabilityError(
                f"term (a={a}, b={b}, c={c}, d={d}) has a divergent moment against z1^{j} z2^{k}"
            )
        if b == 0 and d == 0:
            # already a basis monomial: lambda = 1 exactly, keep the
            # projection idempotent at the coefficient level
            lam = 1.0
        else:
            lam = front * beta_fn(a + 1.0, nu + 1.0) * beta_fn(second, nu + 1.0)
            lam /= coeffspace.monomial_norm_sq(nu, j, k)
        out[(j, k)] = out.get((j, k), 0.0j) + coef * lam
    return LaurentCoeffs(out)


_SELF_TEST_PASSED = set()
_SELF_TEST_TERMS = (
    (1, 0, 0, 0),
    (0, 0, 0, 1),
    (1, 1, 2, 0),
    (2, 1, -1, 0),
    (0, 0, 2, 3),
    (1, 0, 0, 2),
)


def projection_self_test(nu, tol=1e-7, radial_order=32, angular_count=33):
    """Compare the Beta coefficient rule against the quadrature oracle.

    Runs once per nu (results are cached) on a fixed corpus of mixed
    monomials: for each term the oracle coefficient is
    <term, e> / ||e||^2 with e the surviving basis monomial, both sides
    by tensor quadrature.  Raises on disagreement beyond tol.
    """
    key = round(float(nu), 12)
    if key in _SELF_TEST_PASSED:
        return True
    rule = quadrature.build_rule(nu, radial_order, angular_count)
    for a, b, c, d in _SELF_TEST_TERMS:
        term = MixedPoly({(a, b, c, d): 1.0})
        j, k = a - b, c - d
        if j < 0 or not coeffspace.index_member(nu, j, k):
            continue
        basis = LaurentCoeffs({(j, k): 1.0})
        num = quadrature.inner_product_quad(nu, term, basis, rule)
        den = quadrature.inner_product_quad(nu, basis, basis, rule).real
        lam_quad = num / den
        lam_rule = project_bergman(nu, term).get((j, k))
        if abs(lam_quad - lam_rule) > tol * max(1.0, abs(lam_rule)):
            raise ArithmeticError(
                f"projection self-test failed at nu={nu}, term ({a},{b},{c},{d}): "
                f"rule {lam_rule}, quadrature {lam_quad}"
            )
    _SELF_TEST_PASSED.add(key)
    return True


def szego_multiplier(j, k):
    """Multiplier symbol: 1 on {j >= 0, j + k + 1 >= 0}, else 0."""
    return 1 if (j >= 0 and j + k + 1 >= 0) else 0


def project_szego(f):
    """Coefficient-wise Szego projection of a torus Fourier series."""
    return TorusSeries({key: a for key, a in f.items() if szego_multiplier(*key)})


def project_szego_grid(samples):
    """Spectral realization of the Szego projection on an N x N torus grid.

    Forward FFT, multiplier mask in the signed frequency convention
    (frequencies in [-floor(N/2), ceil(N/2) - 1]), inverse FFT.  Exact on
    trigonometric polynomials of degree below N/2.
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.ndim != 2 or samples.shape[0] != samples.shape[1]:
        raise DomainError(f"expected a square grid, got shape {samples.shape}")
    n = samples.shape[0]
    freq = np.fft.fftfreq(n, d=1.0 / n)
    jj, kk = np.meshgrid(freq, freq, indexing="ij")
    mask = (jj >= 0) & (jj + kk + 1 >= 0)
    return np.fft.ifft2(np.fft.fft2(samples) * mask)


def lp_norm_torus(p, samples):
    """Discrete L^p norm on the torus: (sum |v|^p (2 pi / N)^2)^(1/p)."""
    samples = np.asarray(samples)
    n = samples.shape[0]
    return float(np.sum(np.abs(samples) ** p) * (2.0 * np.pi / n) ** 2) ** (1.0 / p)


@dataclass(frozen=True)
class CriticalRange:
    """Open interval (p_minus, p_plus) of L^p boundedness, conjugate-symmetric."""

    p_minus: float
    p_plus: float

    def __contains__(self, p):
        return self.p_minus < p < self.p_plus


def critical_range(nu):
    """Boundedness range of P_nu in the case-dispatched form:

    (i)   nu > 0, nu != 2n:  (2 - x/(2+nu-floor(nu/2)), 2 + x/(2+floor(nu/2))),
          x = nu - 2 floor(nu/2);
    (ii)  nu = 2n, n >= 0:   (2 - 2/(3+n), 2 + 2/(1+n));
    (iii) -1 < nu < 0:       (2 - (2+nu)/(3+nu), 4 + nu).

    Even integers are detected with absolute tolerance 1e-12.
    """
    if not nu > -1.0:
        raise DomainError(f"critical_range requires nu > -1, got {nu}")
    n = round(0.5 * nu)
    if n >= 0 and abs(nu - 2.0 * n) < _EVEN_TOL:
        return CriticalRange(2.0 - 2.0 / (3.0 + n), 2.0 + 2.0 / (1.0 + n))
    if nu > 0.0:
        fl = math.floor(0.5 * nu)
        x = nu - 2.0 * fl
        return CriticalRange(2.0 - x / (2.0 + nu - fl), 2.0 + x / (2.0 + fl))
    return CriticalRange(2.0 - (2.0 + nu) / (3.0 + nu), 4.0 + nu)


def critical_range_unified(nu):
    """The same range in the unified ceiling form used by the necessity
    argument: with A = 1 + ceil(nu/2) and B = nu - ceil(nu/2) + 3,

        ( (A+B)/B, (A+B)/A ) = ( 2 - (B-A)/B, 2 + (B-A)/A ).
    """
    if not nu > -1.0:
        raise DomainError(f"critical_range_unified requires nu > -1, got {nu}")
    c = _ceil_half(nu)
    a = 1.0 + c
    b = nu - c + 3.0
    return CriticalRange(2.0 - (b - a) / b, 2.0 + (b - a) / a)


@dataclass(frozen=True)
class SchurParams:
    """Exponents of the Schur test function
    (1-|z1/z2|^2)^(-alpha) (1-|z2|^2)^(-beta) |z2|^(-gamma)."""

    alpha: float
    beta: float
    gamma: float


def schur_feasible(nu, p):
    """Midpoints of the Schur windows when they are all nonempty, else None.

    The alpha and beta windows (0, (nu+1) min(1/p, 1/p')) are never empty
    for nu > -1; feasibility is decided by the gamma window

        ( (1+ceil(nu/2)) max(1/p, 1/p'),  (3+nu-ceil(nu/2)) min(1/p, 1/p') ),

    which is nonempty exactly when p lies in the unified critical range.
    """
    if not nu > -1.0:
        raise DomainError(f"schur_feasible requires nu > -1, got {nu}")
    if not p > 1.0:
        raise DomainError(f"schur_feasible requires p > 1, got {p}")
    pp = p / (p - 1.0)
    lo_inv = min(1.0 / p, 1.0 / pp)
    hi_inv = max(1.0 / p, 1.0 / pp)
    c = _ceil_half(nu)
    gamma_lo = (1.0 + c) * hi_inv
    gamma_hi = (3.0 + nu - c) * lo_inv
    if not gamma_lo < gamma_hi:
        return None
    ab_hi = (nu + 1.0) * lo_inv
    return SchurParams(0.5 * ab_hi, 0.5 * ab_hi, 0.5 * (gamma_lo + gamma_hi))


def _tail_integral(s, nu, eps, order=64):
    """T(eps) = int_eps^1 rho^s (1 - rho^2)^nu drho, split at 1/2.

    The inner piece goes through rho = e^x (handles strongly negative s),
    the outer piece through v = rho^2 against a Jacobi (1-v)^nu rule that
    absorbs the endpoint singularity for nu < 0.
    """
    x, w = roots_legendre(order)
    total = 0.0
    cut = max(eps, 0.5)
    if eps < 0.5:
        lo, hi = math.log(eps), math.log(0.5)
        xs = lo + (hi - lo) * 0.5 * (x + 1.0)
        vals = np.exp((s + 1.0) * xs) * (1.0 - np.exp(2.0 * xs)) ** nu
        total += float(np.dot(w, vals)) * 0.5 * (hi - lo)
    a = cut * cut
    xj, wj = quadrature._jacobi01(order, nu, 0.0)
    v = a + (1.0 - a) * xj
    vals = 0.5 * v ** (0.5 * (s - 1.0))
    total += float(np.dot(wj, vals)) * (1.0 - a) ** (nu + 1.0)
    return total


@dataclass(frozen=True)
class BlowupScan:
    """Result of the endpoint blow-up scan for P_nu at exponent p."""

    nu: float
    p: float
    s: float
    epsilons: tuple
    values: tuple
    fitted_slope: float
    regime: str


def blowup_scan(nu, p, epsilons):
    """Truncated-integral scan of the necessity-proof blow-up.

    With s = nu - (1 + ceil(nu/2)) p + 3, the integral T(eps) =
    int_eps^1 rho^s (1-rho^2)^nu drho diverges like eps^(s+1) when
    s < -1 (p beyond the critical endpoint (4+nu)/(1+ceil(nu/2))),
    logarithmically at s = -1, and converges for s > -1.  The slope of
    log T against log eps is fitted on the last half of the epsilon list
    (the asymptotic regime).
    """
    if not nu > -1.0:
        raise DomainError(f"blowup_scan requires nu > -1, got {nu}")
    epsilons = tuple(sorted((float(e) for e in epsilons), reverse=True))
    if len(epsilons) < 2 or not 0.0 < epsilons[-1] < epsilons[0] < 1.0:
        raise DomainError("epsilons must be a decreasing list inside (0, 1)")
    s = nu - (1.0 + _ceil_half(nu)) * p + 3.0
    values = tuple(_tail_integral(s, nu, e) for e in epsilons)
    half = len(epsilons) // 2
    if len(epsilons) - half < 2:
        half = 0
    xs = np.log(np.asarray(epsilons[half:]))
    ys = np.log(np.asarray(values[half:]))
    slope = float(np.polyfit(xs, ys, 1)[0])
    if s < -1.0 - 1e-9:
        regime = "divergent"
    elif s <= -1.0 + 1e-9:
        regime = "marginal"
    else:
        regime = "convergent"
    return BlowupScan(nu, p, s, epsilons, values, slope, regime)


def _angular_integral(rho, exponent):
    """int_0^{2pi} |1 - rho e^(i theta)|^(-exponent) d theta, adaptive."""

    def f(theta):
        return ((1.0 - rho) ** 2 + 4.0 * rho * math.sin(0.5 * theta) ** 2) ** (-0.5 * exponent)

    val, _ = quad(f, 0.0, math.pi, epsabs=0.0, epsrel=1e-10, limit=400)
    return 2.0 * val


def classical_estimate_check(which, params, grid, order=64):
    """Numerical ratio scan of the two classical one-variable estimates.

    which = "cl-estimate": params is tau > 0, grid lists rho in (0, 1);
    the left side is the angular integral of |1 - rho e^(i theta)|^(-1-tau)
    and the right side (1-rho)^(-tau).

    which = "cl-estimate2": params is (gamma, delta), grid lists |z|;
    the left side is int_D (1-|w|^2)^gamma |1 - z conj(w)|^(-2-gamma-delta) dw
    and the right side (1-|z|^2)^(-delta).

    Returns a dict with the per-point ratios and their min/max spread.
    """
    rows = []
    if which == "cl-estimate":
        tau = float(params)
        if not tau > 0.0:
            raise DomainError(f"cl-estimate requires tau > 0, got {tau}")
        for rho in grid:
            left = _angular_integral(rho, 1.0 + tau)
            right = (1.0 - rho) ** (-tau)
            rows.append((rho, left, right, left / right))
    elif which == "cl-estimate2":
        gamma, delta = params
        if not (gamma > -1.0 and delta > 0.0):
            raise DomainError(f"cl-estimate2 requires gamma > -1 and delta > 0, got {params}")
        vj, wj = quadrature._jacobi01(order, gamma, 0.0)
        for mod_z in grid:
            inner = np.array(
                [_angular_integral(mod_z * math.sqrt(v), 2.0 + gamma + delta) for v in vj]
            )
            left = 0.5 * float(np.dot(wj, inner))
            right = (1.0 - mod_z * mod_z) ** (-delta)
            rows.append((mod_z, left, right, left / right))
    else:
        raise DomainError(f"unknown estimate {which!r}")
    ratios = [r[-1] for r in rows]
    return {
        "rows": rows,
        "min_ratio": min(ratios),
        "max_ratio": max(ratios),
        "spread": max(ratios) / min(ratios),
    }
