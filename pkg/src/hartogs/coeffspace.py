"""Coefficient-space representation of functions on the triangle and all norms.

Holomorphic functions on the Hartogs triangle expand as Laurent series

    f(z1, z2) = sum_{j >= 0} sum_k a_{jk} z1^j z2^k,

and membership in every space of the one-parameter family is a weighted
square-summability condition on the coefficients.  This module holds the
coefficient containers, the index set I_nu, the exact Gamma/Beta closed
forms of the space norms, the three-way coefficient split feeding the
multiplier operator T, and the restriction of a function to the torus grid
used by the Hardy-side machinery.

Out-of-space inputs produce the +inf sentinel rather than an error: the
divergence of a norm is a mathematical outcome that callers test for.
"""

import math
from dataclasses import dataclass

from .specfun import DomainError, beta_fn, gamma_ratio_signed

__all__ = [
    "SpaceParam",
    "LaurentCoeffs",
    "MixedPoly",
    "TorusSeries",
    "index_member",
    "min_total_degree",
    "monomial_norm_sq",
    "weighted_dirichlet_weight",
    "bergman_norm_sq",
    "hardy_norm_sq",
    "dirichlet_norm_sq",
    "weighted_dirichlet_norm_sq",
    "split_f123",
    "t_norm_sq",
    "star_norm",
    "evaluate",
    "restrict_to_torus",
    "hardy_sup_check",
]


@dataclass(frozen=True)
class SpaceParam:
    """The family parameter nu in [-2, inf) with its regime classification."""

    nu: float

    def __post_init__(self):
        if not self.nu >= -2.0:
            raise DomainError(f"the space family needs nu >= -2, got {self.nu}")

    @property
    def kind(self):
        if self.nu > -1.0:
            return "bergman"
        if self.nu == -1.0:
            return "hardy"
        if self.nu > -2.0:
            return "weighted-dirichlet"
        return "dirichlet"


class _CoeffMap:
    """Finite complex coefficient map on integer pairs, value semantics."""

    __slots__ = ("terms",)
    _key_names = ("j", "k")

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, val in dict(terms).items():
                key = tuple(int(x) for x in key)
                self._check_key(key)
                val = complex(val)
                if val != 0.0:
                    data[key] = val
        self.terms = data

    def _check_key(self, key):
        pass

    def items(self):
        """Deterministic (sorted) iteration over (key, coefficient)."""
        return sorted(self.terms.items())

    def get(self, key, default=0.0j):
        return self.terms.get(tuple(key), default)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"{type(self).__name__}({{{body}}})"

    def to_json(self):
        names = self._key_names
        rows = []
        for key, val in self.items():
            row = {name: int(x) for name, x in zip(names, key)}
            row["re"] = val.real
            row["im"] = val.imag
            rows.append(row)
        return {"terms": rows}

    @classmethod
    def from_json(cls, obj):
        names = cls._key_names
        terms = {}
        for row in obj["terms"]:
            key = tuple(int(row[name]) for name in names)
            terms[key] = terms.get(key, 0.0j) + complex(row["re"], row.get("im", 0.0))
        return cls(terms)


class LaurentCoeffs(_CoeffMap):
    """Finite map (j >= 0, k in Z) -> coefficient of z1^j z2^k."""

    def _check_key(self, key):
        if len(key) != 2 or key[0] < 0:
            raise DomainError(f"Laurent key needs j >= 0, got {key}")


class TorusSeries(_CoeffMap):
    """Finite map (j, k) in Z^2 -> Fourier coefficient on the 2-torus."""

    def _check_key(self, key):
        if len(key) != 2:
            raise DomainError(f"torus key must be a pair, got {key}")


class MixedPoly(_CoeffMap):
    """Finite sum of monomials z1^a conj(z1)^b z2^c conj(z2)^d.

    a, b >= 0 while c, d range over Z; these are the natural
    non-holomorphic test inputs for the projection operators.
    """

    _key_names = ("a", "b", "c", "d")

    def _check_key(self, key):
        if len(key) != 4 or key[0] < 0 or key[1] < 0:
            raise DomainError(f"mixed key needs a, b >= 0, got {key}")


def index_member(nu, j, k):
    """Membership of (j, k) in I_nu = {j >= 0, j + k + nu/2 + 2 > 0}."""
    return j >= 0 and j + k + 0.5 * nu + 2.0 > 0.0


def min_total_degree(nu):
    """Smallest integer value of j + k over I_nu, i.e. -1 - ceil(nu/2)."""
    return -1 - math.ceil(0.5 * nu)


def _gamma_weight(nu, j, k):
    """The Gamma-form monomial weight shared by the nu > -1 and the
    weighted-Dirichlet regimes:

        Gamma(nu+2) Gamma(3nu/2+3) / Gamma(nu/2+2)
        * Gamma(j+1) Gamma(j+k+nu/2+2) / (Gamma(j+nu+2) Gamma(j+k+3nu/2+3)).

    For -2 < nu < -1 the last denominator Gamma can be negative (its
    argument dips below zero when j + k = -1 and nu < -4/3), so the ratio
    is evaluated with sign tracking.
    """
    return gamma_ratio_signed(
        [nu + 2.0, 1.5 * nu + 3.0, j + 1.0, j + k + 0.5 * nu + 2.0],
        [0.5 * nu + 2.0, j + nu + 2.0, j + k + 1.5 * nu + 3.0],
    )


def monomial_norm_sq(nu, j, k):
    """Squared A^2_nu norm of z1^j z2^k for nu > -1; +inf outside I_nu.

    At nu = 0 this reduces to 2 / ((j+1)(j+k+2)).
    """
    if not nu > -1.0:
        raise DomainError(f"monomial_norm_sq requires nu > -1, got {nu}")
    if not index_member(nu, j, k):
        return math.inf
    return _gamma_weight(nu, j, k)


def weighted_dirichlet_weight(nu, j, k):
    """Coefficient weight of the weighted Dirichlet pairing, -2 < nu < -1.

    Same Gamma closed form as the Bergman-range weight; the overall
    prefactor is positive on this range but individual weights at
    j + k = -1 turn negative for nu < -4/3 (the pairing is then
    indefinite; see the kernel module for the matching signed kernel
    coefficients).  Returns +inf outside I_nu.
    """
    if not -2.0 < nu < -1.0:
        raise DomainError(f"weighted_dirichlet_weight requires -2 < nu < -1, got {nu}")
    if not index_member(nu, j, k):
        return math.inf
    return _gamma_weight(nu, j, k)


def bergman_norm_sq(nu, f):
    """Squared A^2_nu norm of a Laurent polynomial; +inf if the support
    leaks outside I_nu."""
    total = 0.0
    for (j, k), a in f.items():
        w = monomial_norm_sq(nu, j, k)
        if math.isinf(w):
            return math.inf
        total += w * abs(a) ** 2
    return total


def hardy_norm_sq(f):
    """Squared Hardy norm: plain Parseval sum over I_{-1}."""
    total = 0.0
    for (j, k), a in f.items():
        if not (j >= 0 and j + k + 1 >= 0):
            return math.inf
        total += abs(a) ** 2
    return total


def dirichlet_norm_sq(f):
    """Squared Dirichlet norm sum (j+1)(j+k+1)|a_{jk}|^2 over {k >= -j}."""
    total = 0.0
    for (j, k), a in f.items():
        if not (j >= 0 and j + k >= 0):
            return math.inf
        total += (j + 1.0) * (j + k + 1.0) * abs(a) ** 2
    return total


def weighted_dirichlet_norm_sq(nu, f):
    """The signed weighted sum defining the D_nu pairing, -2 < nu < -1.

    The value is real but may be negative for supports hitting the
    indefinite indices; +inf if the support leaves I_nu.
    """
    total = 0.0
    for (j, k), a in f.items():
        w = weighted_dirichlet_weight(nu, j, k)
        if math.isinf(w):
            return math.inf
        total += w * abs(a) ** 2
    return total


def space_norm_sq(nu, f):
    """Dispatch the coefficient norm of the regime that nu selects."""
    kind = SpaceParam(nu).kind
    if kind == "bergman":
        return bergman_norm_sq(nu, f)
    if kind == "hardy":
        return hardy_norm_sq(f)
    if kind == "weighted-dirichlet":
        return weighted_dirichlet_norm_sq(nu, f)
    return dirichlet_norm_sq(f)


def split_f123(f):
    """Three-way coefficient split feeding the multiplier operator T.

    Returns (f1, f2, f3, a00) where

        f1 = sum_{j>=1, k != -j} j (j+k) a_{jk} z1^j z2^(k-1),
        f2 = sum_{k != 0}        k a_{0k}      z2^(k-1),
        f3 = sum_{j>=1}          j a_{j,-j}    z1^j z2^(-j-1),

    and a00 is the constant coefficient, returned separately.
    """
    t1, t2, t3 = {}, {}, {}
    a00 = 0.0j
    for (j, k), a in f.items():
        if j == 0 and k == 0:
            a00 = a
        elif j == 0:
            t2[(0, k - 1)] = k * a
        elif k == -j:
            t3[(j, -j - 1)] = j * a
        else:
            t1[(j, k - 1)] = j * (j + k) * a
    return LaurentCoeffs(t1), LaurentCoeffs(t2), LaurentCoeffs(t3), a00


def _tsplit_prefactor(nu):
    """2^(nu/2) C_nu continued below nu = -1:

        (nu+1)^2 Gamma(3nu/2+3) / (pi^2 Gamma(nu+2) Gamma(nu/2+2)),

    which is analytic on (-3, inf) except for a removable 0/0 at nu = -2
    (limit 2 / (3 pi^2)) and a genuine pole at nu = -8/3.
    """
    if not nu > -3.0:
        raise DomainError(f"T-split norms need nu > -3, got {nu}")
    if abs(nu + 2.0) < 1e-12:
        return 2.0 / (3.0 * math.pi**2)
    ratio = gamma_ratio_signed([1.5 * nu + 3.0], [nu + 2.0, 0.5 * nu + 2.0])
    return (nu + 1.0) ** 2 * ratio / math.pi**2


def t_norm_sq(nu, which, f_i):
    """Exact squared L^2_nu norm of T f_i through Beta integrals.

    T multiplies a function by |z2| (1 - |z1/z2|^2)(1 - |z2|^2), and for a
    Laurent monomial with exponents (J, K) the norm contribution is

        pi^2 2^(nu/2) C_nu |c|^2 B(J+1, nu+3) B(J+K+nu/2+3, nu+3),

    the same Beta form for all three split components (``which`` only
    labels the component).  A term is finite iff nu > -3 and
    J + K + nu/2 + 3 > 0; otherwise the +inf sentinel is returned.
    """
    if which not in (1, 2, 3):
        raise DomainError(f"which must be 1, 2 or 3, got {which}")
    pref = _tsplit_prefactor(nu)
    total = 0.0
    for (J, K), c in f_i.items():
        second = J + K + 0.5 * nu + 3.0
        if not second > 0.0:
            return math.inf
        total += abs(c) ** 2 * beta_fn(J + 1.0, nu + 3.0) * beta_fn(second, nu + 3.0)
    return math.pi**2 * pref * total


def star_norm(nu, f):
    """|a00| + sum_i || T f_i ||_{L^2_nu}; +inf on any divergent part.

    For nu > -1 this is the equivalent Bergman-space norm, for
    -2 < nu < -1 it defines the weighted Dirichlet space and at nu = -2
    the Dirichlet space.
    """
    f1, f2, f3, a00 = split_f123(f)
    total = abs(a00)
    for which, part in ((1, f1), (2, f2), (3, f3)):
        sq = t_norm_sq(nu, which, part)
        if math.isinf(sq):
            return math.inf
        total += math.sqrt(max(sq, 0.0))
    return total


def evaluate(f, q):
    """Value of a Laurent polynomial at a point of the triangle."""
    z1, z2 = complex(q.z1), complex(q.z2)
    total = 0.0j
    for (j, k), a in f.items():
        total += a * z1**j * z2**k
    return total


def evaluate_grid(f, z1, z2):
    """Vectorized Laurent evaluation on numpy arrays (used by quadrature)."""
    total = 0.0
    for (j, k), a in f.items():
        total = total + a * z1**j * z2**k
    return total


def restrict_to_torus(f, s, t):
    """Fourier data of f(s t e^(i th), t e^(i ga)) on the torus.

    The coefficient at (j, k) is a_{jk} s^j t^(j+k).
    """
    if not (0.0 < s < 1.0 and 0.0 < t < 1.0):
        raise DomainError(f"(s, t) must lie in (0,1)^2, got ({s}, {t})")
    return TorusSeries({(j, k): a * s**j * t ** (j + k) for (j, k), a in f.items()})


def hardy_sup_check(f, grid):
    """Max over an (s, t) grid of the dilated boundary L^2 mass.

    The value at (s, t) is sum |a_{jk}|^2 s^(2j+1) t^(2(j+k+1)); it is
    bounded by the Hardy norm and increases to it as (s, t) -> (1, 1).
    The support of f must lie in I_{-1}.
    """
    if math.isinf(hardy_norm_sq(f)):
        raise DomainError("hardy_sup_check needs support inside the Hardy index set")
    best = 0.0
    for s, t in grid:
        val = 0.0
        for (j, k), a in f.items():
            val += abs(a) ** 2 * s ** (2 * j + 1) * t ** (2 * (j + k + 1))
        best = max(best, val)
    return best
