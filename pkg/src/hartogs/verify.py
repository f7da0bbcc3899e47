"""Cross-validation suites: every closed form against an independent route.

Each suite compares a family of exact values (Gamma/Beta closed forms,
coefficient algebra, interval arithmetic) against an independent oracle
(tensor quadrature, Monte Carlo, brute-force series, FFT grids) and
returns a :class:`SuiteResult` whose rows all share the CSV schema

    (case, closed_form, quadrature, abs_err, rel_err).

The suites double as the acceptance battery: the CLI ``verify`` command
and the acceptance test module both run them with their documented
tolerances.  All randomness is drawn from seeds derived from a single
base seed, so repeated runs are byte-identical.
"""

import cmath
import inspect
import math
from dataclasses import dataclass, field

import numpy as np

from . import coeffspace, isometries, kernels, projections, quadrature
from .coeffspace import LaurentCoeffs, MixedPoly, TorusSeries
from .geometry import HartogsPoint, random_automorphism

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    rows: list = field(default_factory=list)
    message: str = ""

    def row(self, case, closed_form, oracle, tol=None):
        a = abs(closed_form - oracle)
        r = a / max(abs(closed_form), abs(oracle), 1e-300)
        self.rows.append((case, closed_form, oracle, a, r))
        if tol is not None and not r <= tol:
            self.fail(f"{case}: rel err {r:.3e} exceeds {tol:.1e}")
        return r

    def check(self, ok, message):
        if not ok:
            self.fail(message)

    def fail(self, message):
        self.passed = False
        if self.message:
            self.message += "; "
        self.message += message


def _rng(seed, salt):
    return np.random.default_rng([int(seed), salt])


def _random_point(rng, r2_range=(0.25, 0.9), ratio_max=0.85):
    rho = rng.uniform(*r2_range)
    ratio = math.sqrt(rng.uniform(0.0, 1.0)) * ratio_max
    ang1, ang2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    z2 = rho * cmath.exp(1j * ang2)
    return HartogsPoint(ratio * z2 * cmath.exp(1j * ang1), z2)


def _random_laurent(rng, nu, n_terms=6, jmax=4, kmax=4, normalize=True):
    """Random polynomial supported in I_nu with unit coefficient energy."""
    terms = {}
    kmin_base = coeffspace.min_total_degree(nu)
    while len(terms) < n_terms:
        j = int(rng.integers(0, jmax + 1))
        k = int(rng.integers(max(kmin_base - j, -jmax - 4), kmax + 1))
        if coeffspace.index_member(nu, j, k):
            terms[(j, k)] = complex(rng.normal(), rng.normal())
    if normalize:
        scale = math.sqrt(sum(abs(a) ** 2 for a in terms.values()))
        terms = {key: a / scale for key, a in terms.items()}
    return LaurentCoeffs(terms)


def _random_mixed(rng, nu, n_terms=4, max_exp=3):
    """Random mixed polynomial with every term integrable for mu_nu."""
    terms = {}
    while len(terms) < n_terms:
        a = int(rng.integers(0, max_exp + 1))
        b = int(rng.integers(0, max_exp + 1))
        c = int(rng.integers(-2, max_exp + 1))
        d = int(rng.integers(0, max_exp + 1))
        if not 2 * a + 2 * b + c + d + nu + 4.0 > 0.0:
            continue
        if a >= b and coeffspace.index_member(nu, a - b, c - d):
            if not a + c + 0.5 * nu + 2.0 > 0.0:
                continue
        terms[(a, b, c, d)] = complex(rng.normal(), rng.normal())
    return MixedPoly(terms)


# ----------------------------------------------------------------------
# individual suites
# ----------------------------------------------------------------------


def suite_normalization(seed=0, tol=1e-10, nus=(-0.5, -0.1, 0.0, 0.7, 2.0, 3.5)):
    """integral of 1 against mu_nu must be exactly 1."""
    res = SuiteResult("normalization", True)
    for nu in nus:
        rule = quadrature.build_rule(nu, radial_order=48, angular_count=4)
        val = quadrature.integrate_mu(nu, lambda z1, z2: np.ones_like(z2), rule)
        res.row(f"nu={nu}", 1.0, val.real, tol)
    return res


def suite_monomials(seed=0, tol=1e-8, nus=(-0.5, 0.0, 0.7, 2.0), jmax=4, kmax=4, nu0_tol=1e-12):
    """Gamma closed form of the monomial norms against tensor quadrature."""
    res = SuiteResult("monomials", True)
    for nu in nus:
        rule = quadrature.build_rule(nu, radial_order=48, angular_count=4)
        for j in range(jmax + 1):
            for k in range(-kmax, kmax + 1):
                if not coeffspace.index_member(nu, j, k):
                    continue
                closed = coeffspace.monomial_norm_sq(nu, j, k)
                mono = LaurentCoeffs({(j, k): 1.0})
                quad = quadrature.inner_product_quad(nu, mono, mono, rule).real
                res.row(f"nu={nu},j={j},k={k}", closed, quad, tol)
                if nu == 0.0:
                    exact = 2.0 / ((j + 1.0) * (j + k + 2.0))
                    res.row(f"nu=0 exact,j={j},k={k}", closed, exact, nu0_tol)
    return res


_REGIMES = (-2.0, -1.5, -1.0, -0.5, 0.0, 0.7, 2.0, 3.5)


def suite_kernel_agreement(seed=0, tol=1e-8, nus=_REGIMES, pairs=100, even_tol=1e-10):
    """Closed kernels against the brute-force basis series, all regimes."""
    res = SuiteResult("kernel-agreement", True)
    for nu in nus:
        rng = _rng(seed, 101 + _REGIMES.index(nu) if nu in _REGIMES else 100)
        worst = 0.0
        for _ in range(pairs):
            z = _random_point(rng)
            w = _random_point(rng)
            closed = kernels.kernel(nu, z, w)
            series = kernels.kernel_series(nu, z, w)
            worst = max(worst, abs(closed - series) / max(abs(closed), 1e-300))
        res.rows.append((f"nu={nu} worst pair", 0.0, worst, worst, worst))
        res.check(worst <= tol, f"kernel series mismatch at nu={nu}: {worst:.3e}")
        if nu > -1.0:
            z = _random_point(_rng(seed, 150))
            w = _random_point(_rng(seed, 151))
            res.row(
                f"nu={nu} k-sum oracle",
                abs(kernels.kernel_nu(nu, z, w)),
                abs(kernels.kernel_nu_series_k(nu, z, w)),
                tol,
            )
    # even-integer reduction of the hypergeometric factor
    rng = _rng(seed, 160)
    for n in (0, 1, 2):
        nu = 2.0 * n
        worst = 0.0
        for _ in range(40):
            z = _random_point(rng)
            w = _random_point(rng)
            y = z.z2 * w.z2.conjugate()
            x = z.z1 * w.z1.conjugate() / y
            reduced = (
                kernels.prefactor_a(nu)
                * y ** (-1 - n)
                * (1.0 - x) ** (-(nu + 2.0))
                * (1.0 - y) ** (-2.0 * n - 2.0)
            )
            val = kernels.kernel_nu(nu, z, w)
            worst = max(worst, abs(val - reduced) / abs(reduced))
        res.rows.append((f"even reduction nu={nu}", 0.0, worst, worst, worst))
        res.check(worst <= even_tol, f"even reduction failed at nu={nu}: {worst:.3e}")
    return res


def _space_weight(nu, j, k):
    """Coefficient weight of the inner product of the regime at nu."""
    if nu > -1.0:
        return coeffspace.monomial_norm_sq(nu, j, k)
    if nu == -1.0:
        return 1.0
    if nu > -2.0:
        return coeffspace.weighted_dirichlet_weight(nu, j, k)
    return (j + 1.0) * (j + k + 1.0)


def suite_reproducing(seed=0, tol=1e-8, nus=_REGIMES, n_funcs=20, n_points=20):
    """<f, K(., w)> = f(w) through the coefficient pairing, all regimes.

    The kernel side is expanded from the closed form (binomial times
    hypergeometric recurrences), the weights come from the Gamma-ratio
    norms; the identity holds exactly when weight * coefficient = 1, so
    the pairing cross-checks the two routes.
    """
    res = SuiteResult("reproducing", True)
    for salt, nu in enumerate(nus):
        rng = _rng(seed, 200 + salt)
        worst = 0.0
        for _ in range(n_funcs):
            f = _random_laurent(rng, nu)
            for _ in range(n_points):
                w = _random_point(rng, r2_range=(0.3, 0.8), ratio_max=0.8)
                inner = 0.0j
                for (j, k), a in f.items():
                    weight = _space_weight(nu, j, k)
                    # Laurent coefficient of K(., w) at (j, k)
                    kern = kernels.kernel_coeff_closed(nu, j, k) * (w.z1**j * w.z2**k).conjugate()
                    inner += weight * a * kern.conjugate()
                direct = coeffspace.evaluate(f, w)
                worst = max(worst, abs(inner - direct) / max(abs(direct), 1.0))
        res.rows.append((f"nu={nu} reproducing worst", 0.0, worst, worst, worst))
        res.check(worst <= tol, f"reproducing identity failed at nu={nu}: {worst:.3e}")
    return res


def suite_kernel_estimate(seed=0, samples=10_000, nus=(-1.5, -0.5, 0.7, 1.3, 3.5)):
    """Boundary ratio of every kernel under its derived majorant constant."""
    res = SuiteResult("kernel-estimate", True)
    rng = _rng(seed, 300)
    # boundary-concentrated y = z2 conj(w2): moduli pushed toward 1
    mod = 1.0 - 10.0 ** rng.uniform(-6.0, -0.3, size=samples)
    ang = rng.uniform(0.0, 2.0 * math.pi, size=samples)
    y = np.clip(mod, 0.0, 0.998) * np.exp(1j * ang)
    for nu in nus:
        cstar = kernels.bound_constant(nu)
        ratios = kernels.bound_ratio_profile(nu, y)
        res.row(f"nu={nu} sup ratio vs C*", cstar, float(np.max(ratios)))
        res.check(
            float(np.max(ratios)) <= cstar,
            f"kernel estimate violated at nu={nu}: {np.max(ratios):.6f} > {cstar:.6f}",
        )
        # spot-check the profile against the full kernel on a few pairs
        for i in range(5):
            z = _random_point(_rng(seed, 310 + i), r2_range=(0.8, 0.95), ratio_max=0.95)
            w = _random_point(_rng(seed, 320 + i), r2_range=(0.8, 0.95), ratio_max=0.95)
            full = kernels.kernel_bound_ratio(nu, z, w)
            prof = float(kernels.bound_ratio_profile(nu, np.array([z.z2 * w.z2.conjugate()]))[0])
            res.row(f"nu={nu} ratio path {i}", full, prof, 1e-9)
    for nu, const in ((0.0, 0.5), (-1.0, 1.0)):
        rng2 = _rng(seed, 330)
        worst = 0.0
        for _ in range(200):
            z = _random_point(rng2)
            w = _random_point(rng2)
            worst = max(worst, abs(kernels.kernel_bound_ratio(nu, z, w) - const))
        res.row(f"nu={nu} constant ratio", const, const + worst, 1e-12)
    return res


def suite_critical_range(seed=0, tol=1e-12, count=1000):
    """Case-form and unified ceiling-form ranges agree everywhere."""
    res = SuiteResult("critical-range", True)
    rng = _rng(seed, 400)
    checked = 0
    while checked < count:
        nu = float(rng.uniform(-1.0 + 1e-6, 20.0))
        if abs(nu - 2.0 * round(0.5 * nu)) < 1e-9:
            continue
        a = projections.critical_range(nu)
        b = projections.critical_range_unified(nu)
        if abs(a.p_minus - b.p_minus) > tol or abs(a.p_plus - b.p_plus) > tol:
            res.fail(f"range mismatch at nu={nu}")
        checked += 1
    res.rows.append(("random nu agreement", float(count), float(checked), 0.0, 0.0))
    for n in range(6):
        nu = 2.0 * n
        a = projections.critical_range(nu)
        b = projections.critical_range_unified(nu)
        res.row(f"even nu={nu} p-", a.p_minus, b.p_minus, tol)
        res.row(f"even nu={nu} p+", a.p_plus, b.p_plus, tol)
    for nu, lo, hi in ((0.0, 4.0 / 3.0, 4.0), (2.0, 1.5, 3.0), (-0.5, 1.4, 3.5)):
        r = projections.critical_range(nu)
        res.row(f"spot nu={nu} p-", lo, r.p_minus, tol)
        res.row(f"spot nu={nu} p+", hi, r.p_plus, tol)
    return res


def suite_schur(seed=0, grid=50):
    """Schur feasibility coincides with the critical range on a (nu, p) grid.

    Grid points falling within an ulp of an open interval endpoint are
    nudged off it: there the two (mathematically identical) predicates
    can disagree by a rounding tie.
    """
    res = SuiteResult("schur-feasibility", True)
    disagreements = 0
    for i in range(grid):
        nu = -0.95 + 6.0 * i / (grid - 1.0)
        rng_range = projections.critical_range_unified(nu)
        for j in range(grid):
            p = 1.05 + 5.0 * j / (grid - 1.0)
            if min(abs(p - rng_range.p_minus), abs(p - rng_range.p_plus)) < 1e-9:
                p += 1e-6
            feasible = projections.schur_feasible(nu, p) is not None
            inside = p in rng_range
            if feasible != inside:
                disagreements += 1
    res.rows.append(("feasible iff in range", 0.0, float(disagreements), float(disagreements), 0.0))
    res.check(disagreements == 0, f"{disagreements} grid disagreements")
    return res


def suite_blowup(seed=0, rel_tol=0.05, cases=((0.0, 5.0), (0.7, 5.0), (2.0, 4.0))):
    """Endpoint blow-up exponents match the fitted truncation slopes."""
    res = SuiteResult("blowup", True)
    epsilons = [10.0 ** (-m) for m in range(1, 7)]
    for nu, p in cases:
        scan = projections.blowup_scan(nu, p, epsilons)
        expected = scan.s + 1.0
        res.row(f"nu={nu},p={p} slope", expected, scan.fitted_slope)
        res.check(
            abs(scan.fitted_slope - expected) <= rel_tol * abs(expected),
            f"blow-up slope off at (nu={nu}, p={p}): {scan.fitted_slope} vs {expected}",
        )
        res.check(scan.regime == "divergent", f"(nu={nu}, p={p}) should be divergent")
    # interior exponents: p below the endpoint (4+nu)/(1+ceil(nu/2))
    for nu, p in ((0.0, 2.0), (0.7, 2.0), (2.0, 2.5)):
        scan = projections.blowup_scan(nu, p, epsilons)
        res.row(f"nu={nu},p={p} convergent slope", 0.0, scan.fitted_slope)
        res.check(scan.regime == "convergent", f"(nu={nu}, p={p}) should be convergent")
        res.check(abs(scan.fitted_slope) < 0.02, f"(nu={nu}, p={p}) slope {scan.fitted_slope}")
    return res


def suite_projection(seed=0, tol=1e-7, nus=(-0.5, 0.0, 0.7, 2.0), pairs=50):
    """P_nu fixes the basis, maps conj(z2)-powers per the necessity
    computation, and is self-adjoint under the quadrature pairing."""
    res = SuiteResult("projection", True)
    for nu in nus:
        projections.projection_self_test(nu)
        rule = quadrature.build_rule(nu, radial_order=32, angular_count=25)
        for j, k in ((0, 0), (1, -1), (2, 1), (0, 2)):
            if not coeffspace.index_member(nu, j, k):
                continue
            out = projections.project_bergman(nu, MixedPoly({(j, 0, k, 0): 1.0}))
            res.row(f"nu={nu} fixes ({j},{k})", 1.0, out.get((j, k)).real, 1e-12)
            res.check(len(out) == 1, f"unexpected support at nu={nu}")
        # the conj(z2)^(1+ceil(nu/2)) test input and its d_nu
        m = 1 + math.ceil(0.5 * nu)
        f = MixedPoly({(0, 0, 0, m): 1.0})
        image = projections.project_bergman(nu, f)
        d_beta = image.get((0, -m))
        res.check(abs(d_beta.imag) < 1e-14 and d_beta.real > 0.0, f"d_nu not positive at nu={nu}")
        basis = LaurentCoeffs({(0, -m): 1.0})
        num = quadrature.inner_product_quad(nu, f, basis, rule)
        den = quadrature.inner_product_quad(nu, basis, basis, rule).real
        res.row(f"nu={nu} d_nu", d_beta.real, (num / den).real, tol)
    rng = _rng(seed, 500)
    nu = 0.7
    rule = quadrature.build_rule(nu, radial_order=24, angular_count=33)
    worst = 0.0
    for _ in range(pairs):
        f = _random_mixed(rng, nu)
        g = _random_mixed(rng, nu)
        pf = projections.project_bergman(nu, f)
        pg = projections.project_bergman(nu, g)
        lhs = quadrature.inner_product_quad(nu, pf, g, rule)
        rhs = quadrature.inner_product_quad(nu, f, pg, rule)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))
    res.rows.append((f"self-adjointness nu={nu}", 0.0, worst, worst, worst))
    res.check(worst <= tol, f"self-adjointness broke: {worst:.3e}")
    return res


def _random_torus(rng, degree, n_terms=12):
    terms = {}
    while len(terms) < n_terms:
        j = int(rng.integers(-degree, degree + 1))
        k = int(rng.integers(-degree, degree + 1))
        terms[(j, k)] = complex(rng.normal(), rng.normal())
    return TorusSeries(terms)


def _torus_samples(f, n):
    theta = 2.0 * np.pi * np.arange(n) / n
    z1 = np.exp(1j * theta)[:, None]
    z2 = np.exp(1j * theta)[None, :]
    total = np.zeros((n, n), dtype=complex)
    for (j, k), a in f.items():
        total += a * z1**j * z2**k
    return total


def suite_szego(seed=0, grid_tol=1e-11, degrees=(8, 32), ps=(1.5, 3.0), n_polys=200, growth_cap=1.2):
    """Idempotence, L^2 contraction, FFT/grid agreement and the bounded
    p-norm ratio study across degrees."""
    res = SuiteResult("szego", True)
    rng = _rng(seed, 600)
    for trial in range(20):
        f = _random_torus(rng, 6)
        sf = projections.project_szego(f)
        res.check(projections.project_szego(sf) == sf, "idempotence failed")
        mass_in = sum(abs(a) ** 2 for _, a in f.items())
        mass_out = sum(abs(a) ** 2 for _, a in sf.items())
        res.check(mass_out <= mass_in + 1e-15, "L2 contraction failed")
    worst = 0.0
    for trial in range(10):
        f = _random_torus(rng, 6)
        n = 2 * 6 + 3
        direct = _torus_samples(projections.project_szego(f), n)
        via_grid = projections.project_szego_grid(_torus_samples(f, n))
        worst = max(worst, float(np.max(np.abs(direct - via_grid))))
    res.rows.append(("grid vs coefficients", 0.0, worst, worst, worst))
    res.check(worst <= grid_tol, f"grid projection mismatch {worst:.2e}")
    ratio_stats = {}
    for degree in degrees:
        n = 4 * degree + 5
        worst_ratio = {p: 0.0 for p in ps}
        rng_d = _rng(seed, 610 + degree)
        for _ in range(n_polys):
            f = _random_torus(rng_d, degree, n_terms=16)
            samples = _torus_samples(f, n)
            projected = projections.project_szego_grid(samples)
            for p in ps:
                denom = projections.lp_norm_torus(p, samples)
                numer = projections.lp_norm_torus(p, projected)
                worst_ratio[p] = max(worst_ratio[p], numer / denom)
        ratio_stats[degree] = worst_ratio
        for p in ps:
            res.rows.append(
                (f"degree {degree} p={p} max ratio", 0.0, worst_ratio[p], 0.0, 0.0)
            )
    lo, hi = min(degrees), max(degrees)
    for p in ps:
        res.check(
            ratio_stats[hi][p] <= growth_cap * ratio_stats[lo][p],
            f"p={p} ratio grew: {ratio_stats[hi][p]:.4f} vs {ratio_stats[lo][p]:.4f}",
        )
    return res


def suite_hardy_limit(seed=0, tol=1e-3, n_funcs=20):
    """Bergman norms converge to the Hardy norm along nu -> -1."""
    res = SuiteResult("hardy-limit", True)
    rng = _rng(seed, 700)
    for idx in range(n_funcs):
        f = _random_laurent(rng, -1.0, n_terms=5, jmax=4, kmax=4)
        target = coeffspace.hardy_norm_sq(f)
        diffs = []
        for m in (1, 2, 3, 4):
            nu = -1.0 + 10.0**-m
            diffs.append(abs(coeffspace.bergman_norm_sq(nu, f) - target))
        res.check(
            all(diffs[i + 1] < diffs[i] for i in range(3)),
            f"function {idx}: differences not decreasing {diffs}",
        )
        res.row(f"f{idx} at nu=-1+1e-4", 0.0, diffs[-1])
        res.check(diffs[-1] <= tol, f"function {idx}: final gap {diffs[-1]:.2e}")
    return res


def suite_isometries(seed=0, count=100, quad_tol=1e-8, quad_nus=(-0.5, 0.0, 1.0)):
    """Exact norm preservation plus the quadrature check of the pullback."""
    res = SuiteResult("isometries", True)
    rng = _rng(seed, 800)
    worst_h = worst_d = 0.0
    for _ in range(count):
        f = _random_laurent(rng, -1.0, n_terms=6, normalize=False)
        g = isometries.hardy_to_bidisc(f)
        worst_h = max(
            worst_h,
            abs(coeffspace.hardy_norm_sq(f) - isometries.hardy_bidisc_norm_sq(g)),
        )
        res.check(isometries.bidisc_to_hardy(g) == f, "hardy round trip failed")
        fd = _random_laurent(rng, -2.0, n_terms=6, normalize=False)
        gd = isometries.dirichlet_to_bidisc(fd)
        worst_d = max(
            worst_d,
            abs(coeffspace.dirichlet_norm_sq(fd) - isometries.dirichlet_bidisc_norm_sq(gd)),
        )
        res.check(isometries.bidisc_to_dirichlet(gd) == fd, "dirichlet round trip failed")
    res.rows.append(("hardy norm gap", 0.0, worst_h, worst_h, worst_h))
    res.rows.append(("dirichlet norm gap", 0.0, worst_d, worst_d, worst_d))
    # identical float multisets summed in identical order: gaps are exact zeros
    res.check(worst_h <= 1e-15, f"hardy isometry gap {worst_h:.2e}")
    res.check(worst_d <= 1e-15, f"dirichlet isometry gap {worst_d:.2e}")
    for nu in quad_nus:
        rng_nu = _rng(seed, 810 + int(10 * nu))
        rule = quadrature.build_rule(nu, radial_order=32, angular_count=25)
        for idx in range(8):
            f = _random_laurent(rng_nu, nu, n_terms=5)
            g = isometries.bergman_pullback(nu, f)
            if nu <= 0.0:
                res.check(
                    all(k >= 0 for (j, k), _ in g.items()),
                    f"pullback support dips below zero at nu={nu}",
                )
            gf = quadrature.as_grid_fn(g)
            quad = quadrature.integrate_bidisc(
                nu, lambda w1, w2: np.abs(gf(w1, w2)) ** 2, rule
            ).real
            res.row(f"nu={nu} pullback norm {idx}", coeffspace.bergman_norm_sq(nu, f), quad, quad_tol)
            res.check(isometries.bergman_pullback_inverse(nu, g) == f, "pullback round trip")
    return res


def suite_tsplit(seed=0, tol=1e-7, nus=(-0.5, 0.0, 1.0), n_funcs=20, ratio_funcs=200, ratio_cap=1e3):
    """Beta closed form of the T-split norms against quadrature, and the
    bounded star-norm/Bergman-norm comparability ratio."""
    res = SuiteResult("t-split", True)
    for nu in nus:
        rng = _rng(seed, 900 + int(10 * nu))
        rule = quadrature.build_rule(nu, radial_order=32, angular_count=33)
        worst = 0.0
        for _ in range(n_funcs):
            f = _random_laurent(rng, nu, n_terms=5)
            parts = coeffspace.split_f123(f)[:3]
            for which, part in enumerate(parts, start=1):
                closed = coeffspace.t_norm_sq(nu, which, part)
                fn = quadrature.as_grid_fn(part)

                def t_sq(z1, z2, fn=fn):
                    ratio2 = np.abs(z1 / z2) ** 2
                    moda = np.abs(z2)
                    tfac = moda * (1.0 - ratio2) * (1.0 - moda * moda)
                    return (tfac * np.abs(fn(z1, z2))) ** 2

                quad = quadrature.integrate_mu(nu, t_sq, rule).real
                if abs(closed) < 1e-14 and abs(quad) < 1e-12:
                    continue
                worst = max(worst, abs(closed - quad) / max(abs(closed), abs(quad)))
        res.rows.append((f"nu={nu} T-norm worst rel err", 0.0, worst, worst, worst))
        res.check(worst <= tol, f"T-norm mismatch at nu={nu}: {worst:.3e}")
        ratios = []
        for _ in range(ratio_funcs):
            f = _random_laurent(rng, nu, n_terms=6, jmax=6, kmax=6)
            star = coeffspace.star_norm(nu, f)
            berg = math.sqrt(coeffspace.bergman_norm_sq(nu, f))
            ratios.append(star / berg)
        spread = max(ratios) / min(ratios)
        res.rows.append((f"nu={nu} star/bergman spread", 0.0, spread, 0.0, 0.0))
        res.check(
            math.isfinite(spread) and spread < ratio_cap,
            f"norm equivalence spread {spread:.1f} at nu={nu}",
        )
    return res


def _bump(z1, z2):
    """Fixed compactly supported bump in pullback coordinates, documented
    for reproducibility: with x = |z1/z2|^2 and y = |z2|,

        b = [4 (x - 0.09)(0.3025 - x) / 0.2125^2]_+^12
          * [4 (y - 0.25)(0.9  - y) / 0.65^2  ]_+^12,

    i.e. power windows supported on 0.3 < |z1/z2| < 0.55 and
    0.25 < |z2| < 0.9 with C^11 contact at the edges (the flat-edge
    exponential bump defeats Gauss rules; a high-order power window
    reaches the same tolerances at a fraction of the nodes).
    """
    x = np.abs(z1 / z2) ** 2
    y = np.abs(z2)
    w1 = np.clip((x - 0.09) * (0.3025 - x), 0.0, None) / (0.5 * (0.3025 - 0.09)) ** 2
    w2 = np.clip((y - 0.25) * (0.9 - y), 0.0, None) / (0.5 * (0.9 - 0.25)) ** 2
    return w1**12 * w2**12


# Moebius centers are capped at 0.2 so that automorphism images of the
# bump stay inside the trimmed integration brackets below.
_TAU_CENTER_CAP = 0.2
_TAU_R1_RANGE = (0.08, 0.80)
_TAU_R2_RANGE = (0.24, 0.91)


def suite_tau_invariance(seed=0, tol=1e-6, n_autos=20):
    """The density K(z, z) dz is unchanged by every automorphism."""
    res = SuiteResult("tau-invariance", True)
    # Moebius harmonics of the composed integrand decay like 0.2^n, so a
    # small angular grid suffices; radial resolution is the binding side.
    rule = quadrature.build_tau_rule(
        radial_order=56,
        angular_count=24,
        shell_eps=0.05,
        r1_range=_TAU_R1_RANGE,
        r2_range=_TAU_R2_RANGE,
    )
    base = quadrature.integrate_tau(_bump, rule).real
    res.rows.append(("bump mass", base, base, 0.0, 0.0))
    rng = _rng(seed, 1000)
    worst = 0.0
    for idx in range(n_autos):
        psi = random_automorphism(rng, max_center=_TAU_CENTER_CAP)
        moved = quadrature.integrate_tau(_bump, rule, automorphism=psi).real
        worst = max(worst, abs(moved - base))
        res.row(f"automorphism {idx}", base, moved)
    res.check(worst <= tol, f"tau invariance discrepancy {worst:.2e}")
    return res


SUITES = {
    "normalization": suite_normalization,
    "monomials": suite_monomials,
    "kernel-agreement": suite_kernel_agreement,
    "reproducing": suite_reproducing,
    "kernel-estimate": suite_kernel_estimate,
    "critical-range": suite_critical_range,
    "schur-feasibility": suite_schur,
    "blowup": suite_blowup,
    "projection": suite_projection,
    "szego": suite_szego,
    "hardy-limit": suite_hardy_limit,
    "isometries": suite_isometries,
    "t-split": suite_tsplit,
    "tau-invariance": suite_tau_invariance,
}


def run_suite(name, seed=0, tolerance=None, **kwargs):
    fn = SUITES[name]
    if tolerance is not None and "tol" in inspect.signature(fn).parameters:
        kwargs["tol"] = tolerance
    return fn(seed=seed, **kwargs)


def run_all(seed=0, tolerance=None):
    """Run every suite; returns the list of results in registry order."""
    results = []
    for name in SUITES:
        try:
            results.append(run_suite(name, seed=seed, tolerance=tolerance))
        except Exception as exc:  # surface the failure, keep going
            results.append(SuiteResult(name, False, [], f"crashed: {exc}"))
    return results
