"""
Closed-Form Gamma-Euler Characteristics
Direct evaluators for circle, O(2), dihedral and symplectic-quotient formulas.
Every value is an exact Python int; divisions go through exact_div.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator, Mapping, Optional, Sequence, Tuple, Union

from euler_errors import FreeEllOne, RejectsZeroWeight, SubsetBudgetExceeded, exact_div
from euler_settings import load_settings
from groups import (FREE, ZPOW, GammaGroup, IsotropyClass, chi_hom_to_circle, chi_orbit_hom,
                    hom_count_to_cyclic)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """Circle weights a_1..a_n, stored as given (zeros and signs allowed)"""
    weights: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'weights', tuple(int(a) for a in self.weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def nonzero(self) -> Tuple[int, ...]:
        return tuple(a for a in self.weights if a)

    @property
    def absolute(self) -> Tuple[int, ...]:
        return tuple(abs(a) for a in self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)


Weights = Union[WeightVector, Sequence[int]]


def as_weights(v: Weights) -> WeightVector:
    return v if isinstance(v, WeightVector) else WeightVector(tuple(v))


@dataclass(frozen=True)
class O2Representation:
    """
    V = (sum of tau_alpha_i) + d det (+ a trivial summand of dimension trivial_dim).
    With real_points set, the object is the real form V_R.
    """
    alphas: Tuple[int, ...] = ()
    det_multiplicity: int = 0
    real_points: bool = False
    trivial_dim: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'alphas', tuple(int(a) for a in self.alphas))
        for alpha in self.alphas:
            if alpha < 1:
                raise ValueError(f"O(2) weights must be positive, got {alpha}")
        if self.det_multiplicity < 0:
            raise ValueError(f"det multiplicity must be nonnegative, got {self.det_multiplicity}")
        if self.trivial_dim < 0:
            raise ValueError(f"trivial dimension must be nonnegative, got {self.trivial_dim}")

    @property
    def n(self) -> int:
        return len(self.alphas)

    def circle_weights(self) -> WeightVector:
        """Weights of the restriction to SO(2)"""
        weights = []
        for alpha in self.alphas:
            weights.extend((alpha, -alpha))
        weights.extend([0] * (self.det_multiplicity + self.trivial_dim))
        return WeightVector(tuple(weights))


def power_sum(values: Sequence[int], ell: int) -> int:
    return sum(abs(v) ** ell for v in values)


def dihedral_p(m: int) -> int:
    return 2 if m % 2 == 0 else 1


def sign_power(k: int) -> int:
    """(-1)^k"""
    return -1 if k % 2 else 1


def check_subset_cap(size: int, cap: Optional[int] = None):
    if cap is None:
        cap = load_settings().subset_cap
    if size > cap:
        raise SubsetBudgetExceeded(size, cap)


def nonempty_subsets(n: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty subsets of 0..n-1 in bitmask order"""
    for mask in range(1, 1 << n):
        yield tuple(i for i in range(n) if mask >> i & 1)


def subset_gcd(values: Sequence[int], subset: Sequence[int]) -> int:
    g = 0
    for i in subset:
        g = gcd(g, values[i])
    return g


def _check_zl_fl(ell: int, kind: str):
    if kind not in (ZPOW, FREE):
        raise ValueError(f"kind must be {ZPOW!r} or {FREE!r}, got {kind!r}")
    if ell < 1:
        raise ValueError(f"l must be positive, got {ell}")


# -- circle representations ---------------------------------------------------------------

def chi_gamma_s1_rep(v: Weights, gamma: GammaGroup) -> int:
    """chi_Gamma(S^1 x| V) for a unitary circle representation with weights v"""
    v = as_weights(v)
    return chi_hom_to_circle(gamma) - chi_gamma_s1_sphere(v, gamma)


def chi_gamma_s1_rep_real(w: Weights, d: int, gamma: GammaGroup) -> int:
    """
    chi_Gamma(S^1 x| V) for the real representation V = W + R^d, where W has no fixed vectors.

    The trivial factor R^d multiplies every stratum by (-1)^d, so the value is
    (-1)^d chi_Gamma(S^1 x| W) = (-1)^d chi(Hom(Gamma,S^1)) + (-1)^(d+1) sum chi(Hom(Gamma,Z/a_i)).
    """
    w = as_weights(w)
    if 0 in w.weights:
        raise RejectsZeroWeight(f"Real circle representation with weights {w.weights} has a zero weight; "
                                f"put fixed directions into d instead")
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    return sign_power(d) * chi_gamma_s1_rep(w, gamma)


def chi_zl_fl_s1(v: Weights, ell: int, kind: str, d: Optional[int] = None) -> int:
    """Z^l and F_l agree here: -sum |a_i|^l, or (-1)^(d+1) sum |a_i|^l for the real form"""
    _check_zl_fl(ell, kind)
    v = as_weights(v)
    total = power_sum(v.weights, ell)
    if d is None:
        return -total
    if 0 in v.weights:
        raise RejectsZeroWeight(f"Real circle representation with weights {v.weights} has a zero weight")
    return sign_power(d + 1) * total


def chi_gamma_s1_sphere(v: Weights, gamma: GammaGroup) -> int:
    v = as_weights(v)
    return sum(hom_count_to_cyclic(gamma, abs(a)) for a in v.nonzero)


def chi_gamma_s1_ball(v: Weights, gamma: GammaGroup) -> int:
    return chi_hom_to_circle(gamma)


def chi_gamma_s1_level_set(v: Weights, coefficients: Sequence[int], gamma: GammaGroup) -> int:
    """S^1-invariant level set sum b_i |x_i|^p_i = 0; same value as the shell"""
    v = as_weights(v)
    if len(coefficients) != v.n:
        raise ValueError(f"{len(coefficients)} coefficients for {v.n} weights")
    if any(b == 0 for b in coefficients):
        raise ValueError(f"Level-set coefficients must be nonzero, got {tuple(coefficients)}")
    return chi_orbit_hom(gamma, IsotropyClass.circle())


# -- O(2) and dihedral Hom spaces ------------------------------------------------------------

def o2_free_formula(ell: int) -> int:
    """chi(O(2)\\Hom(F_l,O(2))) = 2^(l-2)(2^l + 1), stated for l >= 2"""
    if ell < 2:
        raise FreeEllOne(f"The free-group O(2) formula needs l >= 2, got {ell}; F1 is Z")
    return 2 ** (ell - 2) * (2 ** ell + 1)


def chi_orbit_hom_o2_closed(ell: int, kind: str) -> int:
    """chi(O(2)\\Hom(Gamma,O(2))) for Gamma = Z^l (2^(2l-1)) or F_l"""
    _check_zl_fl(ell, kind)
    if kind == FREE and ell >= 2:
        return o2_free_formula(ell)
    return 2 ** (2 * ell - 1)


def dihedral_free_formula(m: int, ell: int) -> int:
    if ell < 2:
        raise FreeEllOne(f"The free-group dihedral formula needs l >= 2, got {ell}; F1 is Z")
    p = dihedral_p(m)
    numerator = (2 * p) ** ell + p * m ** (ell - 1) * (2 ** ell - 1) + m ** ell
    return exact_div(numerator, 2, f"dihedral F-formula at m={m}, l={ell}")


def chi_orbit_hom_dihedral_closed(m: int, ell: int, kind: str) -> int:
    """chi(D_2m\\Hom(Gamma,D_2m)) for Gamma = Z^l or F_l"""
    _check_zl_fl(ell, kind)
    if m < 1:
        raise ValueError(f"Dihedral index must be positive, got {m}")
    if kind == FREE and ell >= 2:
        return dihedral_free_formula(m, ell)
    p = dihedral_p(m)
    return exact_div(m ** ell + p ** ell * (2 ** (ell + 1) - 1), 2, f"dihedral Z-formula at m={m}, l={ell}")


# -- O(2) representations ---------------------------------------------------------------------

def chi_gamma_o2_rep(rep: O2Representation, gamma: GammaGroup,
                     o2_values: Optional[Mapping[GammaGroup, int]] = None) -> int:
    """
    chi_Gamma(O(2) x| V) for the complex representation; independent of d and of the
    trivial summand
    """
    o2_term = chi_orbit_hom(gamma, IsotropyClass.full_o2(), o2_values)
    return o2_term - sum(hom_count_to_cyclic(gamma, alpha) for alpha in rep.alphas)


def chi_gamma_o2_real_rep(rep: O2Representation, gamma: GammaGroup,
                          o2_values: Optional[Mapping[GammaGroup, int]] = None,
                          subset_cap: Optional[int] = None, budget: Optional[int] = None) -> int:
    """chi_Gamma(O(2) x| V_R) for the real points of V"""
    check_subset_cap(rep.n, subset_cap)
    if budget is None:
        budget = load_settings().enumeration_budget
    odd = rep.det_multiplicity % 2

    def dihedral_term(subset) -> int:
        return chi_orbit_hom(gamma, IsotropyClass.dihedral(subset_gcd(rep.alphas, subset)), budget=budget)

    value = chi_orbit_hom(gamma, IsotropyClass.full_o2(), o2_values)
    value -= odd * chi_hom_to_circle(gamma)
    value -= sum((-2) ** (len(subset) - 1) * dihedral_term(subset) for subset in nonempty_subsets(rep.n))
    value -= sum(dihedral_term(pair) for pair in combinations(range(rep.n), 2))
    value += odd * sum(hom_count_to_cyclic(gamma, alpha) for alpha in rep.alphas)
    return sign_power(rep.trivial_dim) * value


def chi_gamma_o2(rep: O2Representation, gamma: GammaGroup,
                 o2_values: Optional[Mapping[GammaGroup, int]] = None) -> int:
    """Dispatch on rep.real_points"""
    if rep.real_points:
        return chi_gamma_o2_real_rep(rep, gamma, o2_values)
    return chi_gamma_o2_rep(rep, gamma, o2_values)


def chi_zl_fl_o2_rep(rep: O2Representation, ell: int, kind: str) -> int:
    """2^(2l-1) - sum alpha_i^l for Z^l; the F_l variant swaps in the free O(2) value"""
    return chi_orbit_hom_o2_closed(ell, kind) - power_sum(rep.alphas, ell)


def chi_zl_fl_o2_real_rep(rep: O2Representation, ell: int, kind: str,
                          subset_cap: Optional[int] = None) -> int:
    check_subset_cap(rep.n, subset_cap)
    odd = rep.det_multiplicity % 2

    def dihedral_term(subset) -> int:
        return chi_orbit_hom_dihedral_closed(subset_gcd(rep.alphas, subset), ell, kind)

    # chi(Hom(Z^l,S^1)) = chi(Hom(F_l,S^1)) = 0
    value = chi_orbit_hom_o2_closed(ell, kind)
    value -= sum((-2) ** (len(subset) - 1) * dihedral_term(subset) for subset in nonempty_subsets(rep.n))
    value -= sum(dihedral_term(pair) for pair in combinations(range(rep.n), 2))
    value += odd * power_sum(rep.alphas, ell)
    return sign_power(rep.trivial_dim) * value


# -- symplectic quotients ------------------------------------------------------------------------

def chi_gamma_symplectic_quotient(g: IsotropyClass, gamma: GammaGroup,
                                  o2_values: Optional[Mapping[GammaGroup, int]] = None) -> int:
    """The level-0 symplectic quotient depends only on the group: chi(G\\Hom(Gamma,G))"""
    return chi_orbit_hom(gamma, g, o2_values)


def chi_gamma_z2_quotient(gamma: GammaGroup) -> int:
    """chi_Gamma(Z/2 x| (S^1\\V)) = |Hom(Gamma,Z/2)|"""
    return hom_count_to_cyclic(gamma, 2)
