"""
Orbit-Type Stratifications
Builds the orbit-type pieces of circle and O(2) representation spaces, attaches the Euler
characteristic of each orbit-space piece and its isotropy class, and sums chi * chi(H\\Hom(Gamma,H)).

Strata whose orbit space carries a circle action with finite intersection, or a C minus 0 factor,
contribute nothing; they are kept with chi = 0 and a zeroed_by tag so the rule can be re-checked.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from euler_errors import CrossCheckMismatch, RejectsZeroWeight
from euler_settings import load_settings
from formulas import (O2Representation, Weights, as_weights, check_subset_cap, nonempty_subsets,
                      sign_power, subset_gcd)
from groups import GammaGroup, IsotropyClass, chi_orbit_hom

logger = logging.getLogger(__name__)

# Stratum kinds
ORIGIN = 'origin'
S1_PIECE = 's1'
SHELL_PIECE = 'shell'
O2_XI = 'x_i'
O2_XSTAR = 'x_star'
O2_XCROSS = 'x_cross'
O2_XPLAIN = 'x_plain'
O2_YJ = 'y_j'
O2_XIJ = 'x_ij'

# Zeroing tags
SCALAR_CIRCLE = 'scalar_circle'
SIGNED_CIRCLE = 'signed_circle'
TORUS_FACTOR = 'torus_factor'


def _index_set(indices: Sequence[int]) -> str:
    return '{' + ','.join(str(i) for i in indices) + '}'


@dataclass(frozen=True)
class Stratum:
    """One orbit-type piece; I and J hold 1-based coordinate indices"""
    kind: str
    chi: int
    isotropy: IsotropyClass
    I: Tuple[int, ...] = ()
    J: Tuple[int, ...] = ()
    zeroed_by: Optional[str] = None
    empty: bool = False

    def __post_init__(self):
        if (self.zeroed_by or self.empty) and self.chi != 0:
            raise ValueError(f"{self.label}: zeroed or empty stratum carries chi = {self.chi}")

    @property
    def label(self) -> str:
        if self.kind == ORIGIN:
            return "origin"
        if self.kind == S1_PIECE:
            return f"V{_index_set(self.I)}"
        if self.kind == SHELL_PIECE:
            return f"shell{_index_set(self.I)}"
        if self.kind == O2_XI:
            return f"X_{self.I[0]}"
        if self.kind == O2_XSTAR:
            return f"X*{_index_set(self.I)}"
        if self.kind == O2_XCROSS:
            return f"Xx{_index_set(self.I)}"
        if self.kind == O2_XPLAIN:
            return f"X{_index_set(self.I)}"
        if self.kind == O2_YJ:
            return f"Y{_index_set(self.J)}"
        return f"X{_index_set(self.I)}Y{_index_set(self.J)}"

    def to_json(self) -> Dict:
        return {
            'label': self.label,
            'kind': self.kind,
            'I': list(self.I),
            'J': list(self.J),
            'chi': str(self.chi),
            'isotropy': self.isotropy.to_json(),
            'zeroed_by': self.zeroed_by,
            'empty': self.empty,
        }


@dataclass(frozen=True)
class Stratification:
    """Strata of one space; weights are the values the zeroing rules read (circle weights or alphas)"""
    source: str
    strata: Tuple[Stratum, ...]
    weights: Tuple[int, ...] = ()
    parameters: Dict = field(default_factory=dict, compare=False)

    def __iter__(self) -> Iterator[Stratum]:
        return iter(self.strata)

    def __len__(self) -> int:
        return len(self.strata)

    def nonempty(self) -> List[Stratum]:
        return [s for s in self.strata if not s.empty]

    def total_chi(self) -> int:
        """chi of the orbit space itself"""
        return sum(s.chi for s in self.strata)

    def find(self, kind: str, I: Sequence[int] = (), J: Sequence[int] = ()) -> Optional[Stratum]:
        key = (kind, tuple(I), tuple(J))
        return next((s for s in self.strata if (s.kind, s.I, s.J) == key), None)

    def to_json(self) -> Dict:
        return {
            'source': self.source,
            'parameters': dict(self.parameters),
            'strata': [s.to_json() for s in self.strata],
        }


def evaluate_gamma_euler(s: Stratification, gamma: GammaGroup,
                         o2_values: Optional[Mapping[GammaGroup, int]] = None,
                         budget: Optional[int] = None) -> int:
    """Sum of chi(stratum) * chi(H\\Hom(Gamma,H)); strata with chi = 0 never touch the Hom factor"""
    if budget is None:
        budget = load_settings().enumeration_budget
    total = 0
    for stratum in s.strata:
        if stratum.chi == 0:
            continue
        total += stratum.chi * chi_orbit_hom(gamma, stratum.isotropy, o2_values, budget)
    return total


def _one_based(subset: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i + 1 for i in subset)


def _cyclic_isotropy(g: int) -> IsotropyClass:
    """R(g), with R(0) the circle and R(1) the trivial group"""
    if g == 1:
        return IsotropyClass.trivial()
    return IsotropyClass.cyclic(g)


def _gcd_isotropy(weights: Sequence[int], subset: Sequence[int]) -> IsotropyClass:
    return _cyclic_isotropy(subset_gcd(weights, subset))


def _circle_tag(values: Sequence[int]) -> str:
    if not any(values):
        return TORUS_FACTOR
    if len(set(values)) == 1:
        return SIGNED_CIRCLE
    return SCALAR_CIRCLE


def _circle_strata(weights: Tuple[int, ...], origin: Stratum, singleton_chi: int,
                   singleton_tagged: bool = True) -> List[Stratum]:
    strata = [origin]
    for subset in nonempty_subsets(len(weights)):
        values = [weights[i] for i in subset]
        isotropy = _gcd_isotropy(weights, subset)
        I = _one_based(subset)
        if len(values) == 1 and values[0]:
            strata.append(Stratum(S1_PIECE, singleton_chi, isotropy, I))
        else:
            strata.append(Stratum(S1_PIECE, 0, isotropy, I, zeroed_by=_circle_tag(values)))
    return strata


def stratify_s1_rep(v: Weights, subset_cap: Optional[int] = None) -> Stratification:
    """
    Pieces V_I (x_i != 0 exactly for i in I) of a unitary circle representation.

    The origin is a point; a single moving coordinate gives an open interval (chi -1); every
    other piece is zeroed.
    """
    v = as_weights(v)
    check_subset_cap(v.n, subset_cap)
    origin = Stratum(S1_PIECE, 1, IsotropyClass.circle())
    strata = _circle_strata(v.weights, origin, -1)
    logger.debug("S1 rep %s: %d strata", v.weights, len(strata))
    return Stratification('s1_rep', tuple(strata), v.weights, {'weights': list(v.weights)})


def stratify_s1_real_rep(w: Weights, d: int, subset_cap: Optional[int] = None) -> Stratification:
    """Strata of W + R^d: the strata of W, each times the trivial factor R^d"""
    w = as_weights(w)
    if 0 in w.weights:
        raise RejectsZeroWeight(f"Real circle representation with weights {w.weights} has a zero weight")
    base = stratify_s1_rep(w, subset_cap)
    sign = sign_power(d)
    strata = tuple(replace(s, chi=sign * s.chi) for s in base.strata)
    return Stratification('s1_real_rep', strata, w.weights, {'weights': list(w.weights), 'd': d})


def stratify_s1_sphere(v: Weights, subset_cap: Optional[int] = None) -> Stratification:
    """Unit sphere: no origin, and a single moving coordinate leaves one orbit (a point)"""
    v = as_weights(v)
    check_subset_cap(v.n, subset_cap)
    origin = Stratum(S1_PIECE, 0, IsotropyClass.circle(), empty=True)
    strata = _circle_strata(v.weights, origin, 1)
    return Stratification('s1_sphere', tuple(strata), v.weights, {'weights': list(v.weights)})


def stratify_s1_ball(v: Weights, subset_cap: Optional[int] = None) -> Stratification:
    """Closed unit ball: single moving coordinates give half-open intervals (chi 0)"""
    v = as_weights(v)
    check_subset_cap(v.n, subset_cap)
    origin = Stratum(S1_PIECE, 1, IsotropyClass.circle())
    strata = _circle_strata(v.weights, origin, 0)
    return Stratification('s1_ball', tuple(strata), v.weights, {'weights': list(v.weights)})


def shell_piece_nonempty(coefficients: Sequence[int]) -> bool:
    """sum b_i t_i = 0 has a solution with every t_i > 0: all b_i zero, or both signs present"""
    if not any(coefficients):
        return True
    return any(b > 0 for b in coefficients) and any(b < 0 for b in coefficients)


def positive_kernel_vector(coefficients: Sequence[int]) -> Optional[Tuple[Fraction, ...]]:
    """Explicit t > 0 with sum b_i t_i = 0, or None"""
    positive = sum(b for b in coefficients if b > 0)
    negative = -sum(b for b in coefficients if b < 0)
    t = tuple(Fraction(negative) if b > 0 else Fraction(positive) if b < 0 else Fraction(1)
              for b in coefficients)
    if all(x > 0 for x in t) and sum(b * x for b, x in zip(coefficients, t)) == 0:
        return t
    return None


def stratify_s1_shell(v: Weights, coefficients: Optional[Sequence[int]] = None,
                      subset_cap: Optional[int] = None) -> Stratification:
    """
    Shell mu^-1(0) = {sum a_i |x_i|^2 = 0}, or with coefficients b the level set
    {sum b_i |x_i|^p_i = 0}. Emptiness reads b, isotropy reads a.
    """
    v = as_weights(v)
    check_subset_cap(v.n, subset_cap)
    if coefficients is None:
        b = v.weights
    else:
        b = tuple(int(x) for x in coefficients)
        if len(b) != v.n:
            raise ValueError(f"{len(b)} coefficients for {v.n} weights")
        if 0 in b:
            raise ValueError(f"Level-set coefficients must be nonzero, got {b}")

    strata = [Stratum(SHELL_PIECE, 1, IsotropyClass.circle())]
    for subset in nonempty_subsets(v.n):
        b_I = [b[i] for i in subset]
        nonempty = shell_piece_nonempty(b_I)
        if nonempty != (positive_kernel_vector(b_I) is not None):
            raise CrossCheckMismatch(f"shell emptiness of {b_I}", nonempty, not nonempty)
        isotropy = _gcd_isotropy(v.weights, subset)
        I = _one_based(subset)
        if nonempty:
            tag = _circle_tag([v.weights[i] for i in subset])
            strata.append(Stratum(SHELL_PIECE, 0, isotropy, I, zeroed_by=tag))
        else:
            strata.append(Stratum(SHELL_PIECE, 0, isotropy, I, empty=True))

    parameters = {'weights': list(v.weights)}
    if coefficients is not None:
        parameters['coefficients'] = list(b)
    return Stratification('s1_shell', tuple(strata), v.weights, parameters)


def stratify_o2_rep(rep: O2Representation, subset_cap: Optional[int] = None) -> Stratification:
    """Orbit-type pieces of the complex O(2)-representation V"""
    alphas = rep.alphas
    check_subset_cap(rep.n + rep.det_multiplicity, subset_cap)

    strata = [Stratum(ORIGIN, 1, IsotropyClass.full_o2())]
    for i, alpha in enumerate(alphas):
        strata.append(Stratum(O2_XI, -1, _cyclic_isotropy(alpha), (i + 1,)))
    for subset in nonempty_subsets(rep.n):
        g = subset_gcd(alphas, subset)
        I = _one_based(subset)
        strata.append(Stratum(O2_XSTAR, 0, IsotropyClass.dihedral(g), I, zeroed_by=SCALAR_CIRCLE))
        if len(subset) >= 2:
            equal = len({alphas[i] for i in subset}) == 1
            strata.append(Stratum(O2_XCROSS, 0, _cyclic_isotropy(g), I,
                                  zeroed_by=TORUS_FACTOR if equal else SCALAR_CIRCLE))
        strata.append(Stratum(O2_XPLAIN, 0, _cyclic_isotropy(g), I, zeroed_by=SCALAR_CIRCLE))
    for det_subset in nonempty_subsets(rep.det_multiplicity):
        strata.append(Stratum(O2_YJ, 0, IsotropyClass.circle(), J=_one_based(det_subset),
                              zeroed_by=SCALAR_CIRCLE))
    for subset, det_subset in product(nonempty_subsets(rep.n), nonempty_subsets(rep.det_multiplicity)):
        strata.append(Stratum(O2_XIJ, 0, _cyclic_isotropy(subset_gcd(alphas, subset)),
                              _one_based(subset), _one_based(det_subset), zeroed_by=SCALAR_CIRCLE))
    logger.debug("O(2) rep %s, d=%d: %d strata", alphas, rep.det_multiplicity, len(strata))
    return Stratification('o2_rep', tuple(strata), alphas, _o2_parameters(rep))


def stratify_o2_real_rep(rep: O2Representation, subset_cap: Optional[int] = None) -> Stratification:
    """
    Orbit-type pieces of the real points V_R. X_i and Xx_I miss V_R entirely, as does X_I for a
    single index; the trivial summand R^t multiplies everything by (-1)^t.
    """
    alphas = rep.alphas
    check_subset_cap(rep.n + rep.det_multiplicity, subset_cap)
    sign = sign_power(rep.trivial_dim)

    strata = [Stratum(ORIGIN, sign, IsotropyClass.full_o2())]
    for i, alpha in enumerate(alphas):
        strata.append(Stratum(O2_XI, 0, _cyclic_isotropy(alpha), (i + 1,), empty=True))
    for subset in nonempty_subsets(rep.n):
        k = len(subset)
        g = subset_gcd(alphas, subset)
        I = _one_based(subset)
        # (0,1) x ((0,1) + (0,1))^(k-1)
        strata.append(Stratum(O2_XSTAR, -sign * (-2) ** (k - 1), IsotropyClass.dihedral(g), I))
        if k >= 2:
            strata.append(Stratum(O2_XCROSS, 0, _cyclic_isotropy(g), I, empty=True))
        if k == 1:
            strata.append(Stratum(O2_XPLAIN, 0, _cyclic_isotropy(g), I, empty=True))
        elif k == 2:
            strata.append(Stratum(O2_XPLAIN, -sign, IsotropyClass.dihedral(g), I))
        else:
            strata.append(Stratum(O2_XPLAIN, 0, _cyclic_isotropy(g), I, zeroed_by=TORUS_FACTOR))
    for det_subset in nonempty_subsets(rep.det_multiplicity):
        # R x (R minus 0)^(|J|-1)
        strata.append(Stratum(O2_YJ, -sign * (-2) ** (len(det_subset) - 1), IsotropyClass.circle(),
                              J=_one_based(det_subset)))
    for subset, det_subset in product(nonempty_subsets(rep.n), nonempty_subsets(rep.det_multiplicity)):
        I, J = _one_based(subset), _one_based(det_subset)
        if len(subset) == 1:
            strata.append(Stratum(O2_XIJ, sign * (-2) ** (len(det_subset) - 1),
                                  _cyclic_isotropy(alphas[subset[0]]), I, J))
        else:
            strata.append(Stratum(O2_XIJ, 0, _cyclic_isotropy(subset_gcd(alphas, subset)), I, J,
                                  zeroed_by=TORUS_FACTOR))
    return Stratification('o2_real_rep', tuple(strata), alphas, _o2_parameters(rep))


def stratify_o2(rep: O2Representation, subset_cap: Optional[int] = None) -> Stratification:
    if rep.real_points:
        return stratify_o2_real_rep(rep, subset_cap)
    return stratify_o2_rep(rep, subset_cap)


def _o2_parameters(rep: O2Representation) -> Dict:
    return {'alphas': list(rep.alphas), 'd': rep.det_multiplicity,
            'real': rep.real_points, 'trivial_dim': rep.trivial_dim}


def zeroing_rule_holds(stratum: Stratum, weights: Sequence[int]) -> bool:
    """
    Re-check the hypothesis behind a zeroing tag. weights are the circle weights for circle
    strata and the alphas for O(2) strata.
    """
    tag = stratum.zeroed_by
    if tag is None:
        return True
    if stratum.chi != 0 or tag not in (SCALAR_CIRCLE, SIGNED_CIRCLE, TORUS_FACTOR):
        return False
    values = [weights[i - 1] for i in stratum.I]

    if stratum.kind in (S1_PIECE, SHELL_PIECE):
        if tag == TORUS_FACTOR:
            return bool(values) and not any(values)
        if tag == SIGNED_CIRCLE:
            return len(values) >= 2 and values[0] != 0 and len(set(values)) == 1
        return len(values) >= 2 and any(values) and len(set(values)) > 1

    if tag == SIGNED_CIRCLE:
        return False
    if stratum.kind == O2_XCROSS:
        equal = len(set(values)) == 1
        return len(values) >= 2 and (equal if tag == TORUS_FACTOR else not equal)
    if tag == TORUS_FACTOR:
        if stratum.kind == O2_XPLAIN:
            return len(values) >= 3
        if stratum.kind == O2_XIJ:
            return len(values) >= 2 and bool(stratum.J)
        return False
    return stratum.kind in (O2_XSTAR, O2_XPLAIN, O2_YJ, O2_XIJ) and bool(stratum.I or stratum.J)
