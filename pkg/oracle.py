"""
Brute-Force Oracles
Exhaustive re-derivations of the counting results used by the closed forms: dihedral and O(2)
tuple-type censuses, Burnside orbit counts, and weight-recovery scans.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from euler_errors import BudgetExceeded, NonIntegralBurnside
from euler_settings import load_settings
from formulas import (O2Representation, chi_gamma_o2_rep, chi_gamma_s1_rep, chi_gamma_s1_sphere,
                      chi_gamma_z2_quotient, sign_power)
from groups import (FiniteGroup, GammaGroup, Hom, chi_hom_to_circle, conjugation_orbits,
                    enumerate_homs)

logger = logging.getLogger(__name__)

TYPE_I = 'i'
TYPE_II = 'ii'
TYPE_III = 'iii'
TYPE_IV = 'iv'
TUPLE_TYPES = (TYPE_I, TYPE_II, TYPE_III, TYPE_IV)


@dataclass
class TupleCensus:
    """
    Per-type census of l-tuples in a target group under simultaneous conjugation.

    tuples: raw tuple counts (finite targets only)
    orbits: orbit count, or orbit-space chi for O(2), per type
    commuting_orbits: the same restricted to pairwise commuting tuples
    """
    ell: int
    target: str
    tuples: Dict[str, int] = field(default_factory=dict)
    orbits: Dict[str, int] = field(default_factory=dict)
    commuting_orbits: Dict[str, int] = field(default_factory=dict)

    def tuple_total(self) -> int:
        return sum(self.tuples.values())

    def orbit_total(self) -> int:
        """chi(H\\Hom(F_l,H))"""
        return sum(self.orbits.values())

    def commuting_orbit_total(self) -> int:
        """chi(H\\Hom(Z^l,H))"""
        return sum(self.commuting_orbits.values())

    def to_json(self) -> Dict:
        return {
            'ell': self.ell,
            'target': self.target,
            'tuples': {k: str(v) for k, v in self.tuples.items()},
            'orbits': {k: str(v) for k, v in self.orbits.items()},
            'commuting_orbits': {k: str(v) for k, v in self.commuting_orbits.items()},
        }


def classify_tuple(h: FiniteGroup, rotations: int, center: Sequence[int], t: Hom) -> str:
    """
    Type of a tuple in a dihedral group whose rotations are the ids below `rotations`:
    (i) all central, (ii) all rotations, (iii) some reflection in the tuple commutes with every
    entry, (iv) everything else
    """
    if all(x in center for x in t):
        return TYPE_I
    if all(x < rotations for x in t):
        return TYPE_II
    for s in t:
        if s >= rotations and all(h.commute(s, x) for x in t):
            return TYPE_III
    return TYPE_IV


def _pairwise_commuting(h: FiniteGroup, t: Hom) -> bool:
    return all(h.commute(a, b) for i, a in enumerate(t) for b in t[i + 1:])


def dihedral_tuple_census(m: int, ell: int, budget: Optional[int] = None) -> TupleCensus:
    """Classify every l-tuple of D_2m by type and count conjugation orbits per type"""
    h = FiniteGroup.dihedral(m)
    if budget is None:
        budget = load_settings().census_budget
    tuples = enumerate_homs(GammaGroup.free(ell), h, budget)
    center = set(h.center)

    census = TupleCensus(ell, h.name,
                         {t: 0 for t in TUPLE_TYPES},
                         {t: 0 for t in TUPLE_TYPES},
                         {t: 0 for t in TUPLE_TYPES})
    for t in tuples:
        census.tuples[classify_tuple(h, m, center, t)] += 1
    for orbit in conjugation_orbits(h, tuples):
        kind = classify_tuple(h, m, center, orbit[0])
        census.orbits[kind] += 1
        if _pairwise_commuting(h, orbit[0]):
            census.commuting_orbits[kind] += 1
    logger.debug("D%d census l=%d: %s", 2 * m, ell, census.orbits)
    return census


def o2_tuple_type_counts(ell: int) -> TupleCensus:
    """
    Orbit-space Euler characteristics of the four tuple types in O(2), assembled type by type.
    A type (iv) tuple is a type (ii) or (iii) prefix of length l - 1 plus one last element.
    """
    if ell < 1:
        raise ValueError(f"l must be positive, got {ell}")

    def type_ii(k: int) -> int:
        # SO(2)^k minus 2^k central points, covered 2-to-1
        return -2 ** (k - 1)

    def type_iii(k: int) -> int:
        # first reflection normalized to s_0 at position r
        return sum(2 ** (r - 1) * 4 ** (k - r) for r in range(1, k + 1))

    census = TupleCensus(ell, 'O(2)')
    census.orbits[TYPE_I] = 2 ** ell
    census.orbits[TYPE_II] = type_ii(ell)
    census.orbits[TYPE_III] = type_iii(ell)
    census.commuting_orbits = dict(census.orbits)
    if ell >= 2:
        # a type (iv) prefix times O(2) has chi 0, so only two extensions count: a type (ii)
        # prefix plus a reflection, or a type (iii) prefix plus one of two open arcs outside
        # the centralizer. At l = 2 these are the intervals (s_0, s_t), (s_0, r_t), (r_t, s_0).
        census.orbits[TYPE_IV] = type_ii(ell - 1) - 2 * type_iii(ell - 1)
    return census


def burnside_orbit_count(h: FiniteGroup, homs: Sequence[Hom]) -> int:
    """(1/|h|) sum over g of the homs fixed by conjugation by g"""
    space = set(homs)
    for hom in space:
        for x in hom:
            if not 0 <= x < h.order:
                raise ValueError(f"{hom} has entry {x} outside {h.name}")
    fixed = 0
    for g in range(h.order):
        fixed += sum(1 for hom in space if all(h.conjugate(g, x) == x for x in hom))
    if fixed % h.order:
        raise NonIntegralBurnside(f"{h.name}: {fixed} fixed points over {h.order} elements")
    return fixed // h.order


def _recovery_scan(what: str, signature: Callable[[Tuple[int, ...]], Tuple[int, ...]],
                   max_n: int, bound: int, budget: Optional[int]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    if budget is None:
        budget = load_settings().scan_budget
    multisets = sum(comb(bound + k - 1, k) for k in range(1, max_n + 1))
    pairs = multisets * (multisets - 1) // 2
    if pairs > budget:
        raise BudgetExceeded(what, pairs, budget)

    buckets: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = defaultdict(list)
    for k in range(1, max_n + 1):
        for values in combinations_with_replacement(range(1, bound + 1), k):
            buckets[signature(values)].append(values)
    collisions = []
    for group in buckets.values():
        for i, first in enumerate(group):
            for second in group[i + 1:]:
                collisions.append((first, second))
    logger.info("%s: %d multisets, %d collisions", what, multisets, len(collisions))
    return collisions


def weight_recovery_scan(max_n: int, weight_bound: int,
                         budget: Optional[int] = None) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Pairs of distinct |weight| multisets (size <= max_n, entries <= weight_bound) whose circle
    values chi_{Z^l}(S^1 x| V) agree for l = 1..max_n. Expected to be empty.
    """
    gammas = [GammaGroup.z_pow(ell) for ell in range(1, max_n + 1)]
    return _recovery_scan("weight recovery scan",
                          lambda values: tuple(chi_gamma_s1_rep(values, gamma) for gamma in gammas),
                          max_n, weight_bound, budget)


def o2_alpha_recovery_scan(max_n: int, alpha_bound: int,
                           budget: Optional[int] = None) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """The O(2) counterpart: chi_{Z^l}(O(2) x| V), l = 1..max_n, should determine the alphas"""
    gammas = [GammaGroup.z_pow(ell) for ell in range(1, max_n + 1)]
    return _recovery_scan("O(2) weight recovery scan",
                          lambda values: tuple(chi_gamma_o2_rep(O2Representation(values), gamma)
                                               for gamma in gammas),
                          max_n, alpha_bound, budget)


def exact_sequence_report(alphas: Sequence[int], ell: int, d: int = 0) -> Dict[str, Dict]:
    """
    For Gamma = Z^l and F_l, the values along 1 -> S^1 -> O(2) -> Z/2 -> 1 acting on V, and whether
    the O(2) value is the product of the S^1 and Z/2 values
    """
    rep = O2Representation(tuple(alphas), d)
    report = {}
    for gamma in (GammaGroup.z_pow(ell), GammaGroup.free(ell)):
        s1_value = chi_gamma_s1_rep(rep.circle_weights(), gamma)
        z2_value = chi_gamma_z2_quotient(gamma)
        o2_value = chi_gamma_o2_rep(rep, gamma)
        report[gamma.describe()] = {
            'trivial': 1,
            's1': s1_value,
            'z2_quotient': z2_value,
            'o2': o2_value,
            'product': s1_value * z2_value,
            'multiplicative': o2_value == s1_value * z2_value,
        }
    return report


def literal_real_s1_reading(w: Sequence[int], d: int, gamma: GammaGroup) -> int:
    """
    Adds the three-term expansion to (-1)^d chi_Gamma(S^1 x| W) instead of using it as the value;
    always twice the adopted chi_gamma_s1_rep_real
    """
    sign = sign_power(d)
    return (sign * chi_gamma_s1_rep(w, gamma) + sign * chi_hom_to_circle(gamma)
            - sign * chi_gamma_s1_sphere(w, gamma))
