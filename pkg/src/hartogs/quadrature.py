"""Independent numerical oracle: integration over the triangle.

Every integral over H is computed in pullback coordinates on D x D*,
where the triangle constraint disappears and the measure mu_nu becomes

    C_nu 2^(nu/2) |w2|^(nu+2) (1 - |w1|^2)^nu (1 - |w2|^2)^nu dw.

Radial directions use Gauss-Jacobi rules in the squared radii u = r^2,
v = rho^2, which absorb the (1-u)^nu endpoint singularity exactly; the
w2 rule additionally carries the fractional power v^(nu/2 - ceil(nu/2))
so that every monomial of the family's index set pulls back to a plain
polynomial (the leftover integer power v^(1 + ceil(nu/2)) multiplies the
integrand).  Angular directions use uniform trapezoid grids, exact for
trigonometric polynomials below the grid frequency.

Integrands are numpy-vectorized callables (z1_array, z2_array) -> values;
coefficient objects from :mod:`hartogs.coeffspace` are adapted
automatically.  A Monte Carlo importance sampler doubles as a second,
structurally different oracle.
"""

import math
import os
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .coeffspace import LaurentCoeffs, MixedPoly, evaluate_grid
from .geometry import normalization_C
from .specfun import DomainError

__all__ = [
    "QuadRule",
    "TauRule",
    "build_rule",
    "build_tau_rule",
    "integrate_mu",
    "integrate_tau",
    "integrate_bidisc",
    "mc_integrate_mu",
    "inner_product_quad",
    "as_grid_fn",
]

_MAX_BLOCK = 4_000_000  # complex evaluations per chunk


@dataclass(frozen=True)
class QuadRule:
    """Tensor rule for mu_nu integrals: radial Jacobi x angular trapezoid."""

    nu: float
    u_nodes: np.ndarray
    u_weights: np.ndarray
    v_nodes: np.ndarray
    v_weights: np.ndarray
    v_shift: int
    angular: int


@dataclass(frozen=True)
class TauRule:
    """Plain-radius Legendre x trapezoid rule on a compact shell.

    The two radial directions may carry different intervals: the tau
    density blows up only at |w_i| = 1, so each interval just has to
    cover the integrand's support with a margin off the outer boundary.
    """

    r1_nodes: np.ndarray
    r1_weights: np.ndarray
    r2_nodes: np.ndarray
    r2_weights: np.ndarray
    angular: int
    shell_eps: float


def _jacobi01(order, alpha, beta):
    """Nodes and weights for the weight (1-t)^alpha t^beta on (0, 1)."""
    x, w = roots_jacobi(order, alpha, beta)
    return 0.5 * (x + 1.0), w / 2.0 ** (alpha + beta + 1.0)


def build_rule(nu, radial_order=None, angular_count=65):
    """Gauss-Jacobi x trapezoid rule for integrals against mu_nu.

    The default radial order is 64, overridable through the
    HARTOGS_QUAD_ORDER environment variable.
    """
    if radial_order is None:
        radial_order = int(os.environ.get("HARTOGS_QUAD_ORDER", 64))
    if not nu > -1.0:
        raise DomainError(f"mu_nu rules need nu > -1, got {nu}")
    if radial_order < 1 or angular_count < 1:
        raise DomainError("rule orders must be positive")
    shift = 1 + math.ceil(0.5 * nu)
    frac = 0.5 * nu - math.ceil(0.5 * nu)
    u_nodes, u_weights = _jacobi01(radial_order, nu, 0.0)
    v_nodes, v_weights = _jacobi01(radial_order, nu, frac)
    return QuadRule(nu, u_nodes, u_weights, v_nodes, v_weights, shift, angular_count)


def as_grid_fn(obj):
    """Adapt a coefficient object or callable to a vectorized integrand."""
    if isinstance(obj, LaurentCoeffs):
        return lambda z1, z2: evaluate_grid(obj, z1, z2)
    if isinstance(obj, MixedPoly):

        def mixed(z1, z2):
            total = 0.0
            for (a, b, c, d), coef in obj.items():
                total = total + coef * z1**a * np.conj(z1) ** b * z2**c * np.conj(z2) ** d
            return total

        return mixed
    if callable(obj):
        return obj
    raise DomainError(f"cannot integrate object of type {type(obj)!r}")


def _tensor_sum(fn, radial_nodes_1, radial_w1, radial_nodes_2, radial_w2, angular, pair_points):
    """Deterministic weighted sum of fn over the 4D tensor grid.

    ``pair_points(r1, theta, r2, gamma)`` maps broadcast-ready polar
    pieces to the (z1, z2) arrays the integrand expects.  Chunks over the
    first radial axis keep memory bounded; summation order is fixed.
    """
    m = angular
    theta = 2.0 * np.pi * np.arange(m) / m
    gamma = 2.0 * np.pi * np.arange(m) / m
    e1 = np.exp(1j * theta)
    e2 = np.exp(1j * gamma)
    n1 = radial_nodes_1.size
    n2 = radial_nodes_2.size
    block = max(1, _MAX_BLOCK // max(1, m * m * n2))
    total = 0.0j
    for start in range(0, n1, block):
        stop = min(start + block, n1)
        r1 = radial_nodes_1[start:stop]
        # axes: (i1, theta, i2, gamma)
        a1 = r1[:, None, None, None] * e1[None, :, None, None]
        a2 = radial_nodes_2[None, None, :, None] * e2[None, None, None, :]
        z1, z2 = pair_points(a1, a2)
        vals = fn(z1, z2)
        vals = np.asarray(vals) + np.zeros_like(z1)
        inner = np.einsum("k,ijkl->i", radial_w2, vals)
        total += complex(np.dot(radial_w1[start:stop], inner))
    return total * (2.0 * np.pi / m) ** 2


def integrate_mu(nu, integrand, rule=None):
    """Integral of a black-box function against the probability measure mu_nu.

    The integrand is evaluated at full complex points of the triangle
    (built from the pullback grid), so it needs no knowledge of the
    parametrization.
    """
    if rule is None:
        rule = build_rule(nu)
    if rule.nu != nu:
        raise DomainError(f"rule was built for nu = {rule.nu}, asked for {nu}")
    fn = as_grid_fn(integrand)
    sr_u = np.sqrt(rule.u_nodes)
    sr_v = np.sqrt(rule.v_nodes)

    def pair_points(a1, a2):
        z2 = a2
        z1 = a1 * a2
        return z1, z2

    weighted_v = rule.v_weights * rule.v_nodes**rule.v_shift
    total = _tensor_sum(fn, sr_u, rule.u_weights, sr_v, weighted_v, rule.angular, pair_points)
    scale = normalization_C(nu) * 2.0 ** (0.5 * nu) / 4.0
    return scale * total


def integrate_bidisc(nu, integrand, rule=None):
    """Weighted integral over D x D* used by the pullback spaces:

        c_nu * int |w2|^nu (1-|w1|^2)^nu (1-|w2|^2)^nu integrand(w1, w2) dw

    with c_nu = 2^(nu/2) C_nu.  The integrand gets the product-domain
    coordinates (w1, w2) directly.
    """
    if rule is None:
        rule = build_rule(nu)
    if rule.nu != nu:
        raise DomainError(f"rule was built for nu = {rule.nu}, asked for {nu}")
    fn = as_grid_fn(integrand)
    sr_u = np.sqrt(rule.u_nodes)
    sr_v = np.sqrt(rule.v_nodes)

    def pair_points(a1, a2):
        return a1, a2

    # here the leftover integer power is ceil(nu/2): |w2|^nu rho drho
    # pulls back to v^(nu/2) dv / 2 against the same fractional rule
    weighted_v = rule.v_weights * rule.v_nodes ** (rule.v_shift - 1)
    total = _tensor_sum(fn, sr_u, rule.u_weights, sr_v, weighted_v, rule.angular, pair_points)
    scale = normalization_C(nu) * 2.0 ** (0.5 * nu) / 4.0
    return scale * total


def build_tau_rule(radial_order=48, angular_count=40, shell_eps=0.05, r1_range=None, r2_range=None):
    """Legendre x trapezoid rule on the shell eps <= |w_i| <= 1 - eps.

    ``r1_range`` / ``r2_range`` optionally trim the radial intervals to a
    tighter bracket of the integrand's support (the defaults cover the
    whole shell).
    """
    if not 0.0 < shell_eps < 0.5:
        raise DomainError(f"shell epsilon must lie in (0, 1/2), got {shell_eps}")
    x, w = roots_legendre(radial_order)

    def mapped(rng):
        lo, hi = rng
        if not shell_eps <= lo < hi <= 1.0 - shell_eps:
            raise DomainError(f"radial range {rng} leaves the shell")
        return lo + (hi - lo) * 0.5 * (x + 1.0), w * 0.5 * (hi - lo)

    full = (shell_eps, 1.0 - shell_eps)
    r1, w1 = mapped(r1_range or full)
    r2, w2 = mapped(r2_range or full)
    return TauRule(r1, w1, r2, w2, angular_count, shell_eps)


def integrate_tau(integrand, rule=None, automorphism=None):
    """Shell integral of a compactly supported function against tau.

    tau pulls back to the product of the two disc-invariant densities
    (1-|w1|^2)^(-2) (1-|w2|^2)^(-2) dw; the integrand must vanish near
    the shell edges for the result to mean anything.  When
    ``automorphism`` is given, integrand o automorphism is integrated
    instead (the composition happens inside the triangle).
    """
    if rule is None:
        rule = build_tau_rule()
    fn = as_grid_fn(integrand)

    def pair_points(a1, a2):
        z2 = a2
        z1 = a1 * a2
        return z1, z2

    identity = automorphism is None or (
        automorphism.disc_map.a == 0.0
        and automorphism.disc_map.lam == 1.0
        and automorphism.c == 1.0
    )
    if identity:
        composed = fn
    else:
        disc_map = automorphism.disc_map
        c = automorphism.c

        def composed(z1, z2):
            ratio = z1 / z2
            w = disc_map.lam * (ratio - disc_map.a) / (1.0 - np.conj(disc_map.a) * ratio)
            return fn(z2 * w, c * z2)

    r1, r2 = rule.r1_nodes, rule.r2_nodes
    w1_weights = rule.r1_weights * r1 * (1.0 - r1 * r1) ** -2
    w2_weights = rule.r2_weights * r2 * (1.0 - r2 * r2) ** -2
    _warn_if_support_leaks(composed, r1, r2, rule.angular)
    return _tensor_sum(composed, r1, w1_weights, r2, w2_weights, rule.angular, pair_points)


def _warn_if_support_leaks(fn, r1, r2, angular):
    """Emit a warning when the integrand is non-negligible at the radial
    edges of the shell (its mass there would be silently dropped)."""
    ang = np.exp(2j * np.pi * np.arange(angular) / angular)
    mid1 = r1[r1.size // 2]
    mid2 = r2[r2.size // 2]
    interior = np.max(np.abs(fn(mid1 * ang[:, None] * mid2 * ang[None, :], mid2 * ang[None, :])))
    scale = max(float(interior), 1e-30)
    for edge1 in (r1[0], r1[-1]):
        z2 = mid2 * ang[None, :]
        vals = fn(edge1 * ang[:, None] * z2, z2)
        if np.max(np.abs(vals)) > 1e-9 * scale:
            warnings.warn(f"tau integrand is non-negligible at the |w1| = {edge1:.3f} shell edge")
            break
    for edge2 in (r2[0], r2[-1]):
        z2 = edge2 * ang[None, :]
        vals = fn(mid1 * ang[:, None] * z2, z2)
        if np.max(np.abs(vals)) > 1e-9 * scale:
            warnings.warn(f"tau integrand is non-negligible at the |w2| = {edge2:.3f} shell edge")
            break


def mc_integrate_mu(nu, integrand, sample_count, seed):
    """Monte Carlo importance-sampled integral against mu_nu.

    The squared radii are drawn from the exact radial laws of the
    pullback weight (u ~ Beta(1, nu+1), v ~ Beta(nu/2+2, nu+1)), angles
    uniformly; since mu_nu is a probability measure the estimator is the
    plain sample mean.  Returns (estimate, standard_error); bit-identical
    under a fixed seed.
    """
    if sample_count < 1000:
        raise DomainError(f"sample_count must be at least 1000, got {sample_count}")
    if not nu > -1.0:
        raise DomainError(f"mc_integrate_mu requires nu > -1, got {nu}")
    rng = np.random.default_rng(seed)
    u = rng.beta(1.0, nu + 1.0, size=sample_count)
    v = rng.beta(0.5 * nu + 2.0, nu + 1.0, size=sample_count)
    theta = rng.uniform(0.0, 2.0 * np.pi, size=sample_count)
    gamma = rng.uniform(0.0, 2.0 * np.pi, size=sample_count)
    z2 = np.sqrt(v) * np.exp(1j * gamma)
    z1 = np.sqrt(u) * np.exp(1j * theta) * z2
    vals = np.asarray(as_grid_fn(integrand)(z1, z2)) + np.zeros(sample_count, dtype=complex)
    est = complex(np.mean(vals))
    var = np.var(vals.real, ddof=1) + np.var(vals.imag, ddof=1)
    return est, math.sqrt(var / sample_count)


def inner_product_quad(nu, f, g, rule=None):
    """L^2_nu pairing <f, g> = int f conj(g) dmu_nu by tensor quadrature."""
    ff = as_grid_fn(f)
    gg = as_grid_fn(g)
    return integrate_mu(nu, lambda z1, z2: ff(z1, z2) * np.conj(gg(z1, z2)), rule)
