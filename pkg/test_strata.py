import random
from fractions import Fraction
from itertools import product

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings as hypothesis_settings

from euler_errors import RejectsZeroWeight, SubsetBudgetExceeded
from formulas import (O2Representation, chi_gamma_o2, chi_gamma_s1_ball, chi_gamma_s1_rep,
                      chi_gamma_s1_rep_real, chi_gamma_s1_sphere)
from gamma_spec import parse_gamma
from groups import GammaGroup, IsotropyClass, chi_orbit_hom
from strata import (O2_XCROSS, O2_XI, O2_XPLAIN, O2_XSTAR, O2_YJ, S1_PIECE, SCALAR_CIRCLE,
                    SIGNED_CIRCLE, TORUS_FACTOR, Stratum, evaluate_gamma_euler, positive_kernel_vector,
                    shell_piece_nonempty, stratify_o2, stratify_o2_real_rep, stratify_o2_rep,
                    stratify_s1_ball, stratify_s1_real_rep, stratify_s1_rep, stratify_s1_shell,
                    stratify_s1_sphere, zeroing_rule_holds)

Z, Z2, F2 = GammaGroup.z_pow(1), GammaGroup.z_pow(2), GammaGroup.free(2)
CIRCLE_GAMMAS = ['Z', 'Z^2', 'Z^3', 'F2', 'F3', 'fp:a|aa', 'fp:a|aaaa', 'fp:a|aaaaaa', 'fp:a,b|aa,bb,abab']
O2_GAMMAS = ['Z', 'Z^2', 'Z^3', 'F2', 'F3']

weights = st.lists(st.integers(min_value=-9, max_value=9), max_size=6)


def test_stratum_rejects_chi_on_zeroed_piece():
    with pytest.raises(ValueError):
        Stratum(S1_PIECE, 1, IsotropyClass.cyclic(2), (1, 2), zeroed_by=SCALAR_CIRCLE)
    with pytest.raises(ValueError):
        Stratum(S1_PIECE, -1, IsotropyClass.cyclic(2), (1,), empty=True)


def test_s1_rep_strata_layout():
    s = stratify_s1_rep((2, 3))
    assert [stratum.label for stratum in s] == ["V{}", "V{1}", "V{2}", "V{1,2}"]
    assert [stratum.chi for stratum in s] == [1, -1, -1, 0]
    assert s.find(S1_PIECE, (1, 2)).zeroed_by == SCALAR_CIRCLE
    assert s.find(S1_PIECE, (1,)).isotropy == IsotropyClass.cyclic(2)
    assert evaluate_gamma_euler(s, Z) == -5


def test_zero_weights_are_torus_factors():
    s = stratify_s1_rep((0, 0))
    assert s.find(S1_PIECE, (1,)).zeroed_by == TORUS_FACTOR
    assert s.find(S1_PIECE, (1, 2)).isotropy == IsotropyClass.circle()


def test_equal_weights_are_signed_circles():
    assert stratify_s1_rep((2, 2)).find(S1_PIECE, (1, 2)).zeroed_by == SIGNED_CIRCLE


@pytest.mark.parametrize('text', CIRCLE_GAMMAS)
@hypothesis_settings(deadline=None)
@given(v=weights)
def test_circle_strata_match_formula(text, v):
    gamma = parse_gamma(text)
    assert evaluate_gamma_euler(stratify_s1_rep(v), gamma) == chi_gamma_s1_rep(v, gamma)
    assert evaluate_gamma_euler(stratify_s1_sphere(v), gamma) == chi_gamma_s1_sphere(v, gamma)
    assert evaluate_gamma_euler(stratify_s1_ball(v), gamma) == chi_gamma_s1_ball(v, gamma)


@pytest.mark.slow
def test_circle_strata_exhaustive():
    gammas = [parse_gamma(text) for text in CIRCLE_GAMMAS[:4]]
    for n in range(5):
        for v in product(range(-5, 6), repeat=n):
            s = stratify_s1_rep(v, 20)
            assert all(zeroing_rule_holds(stratum, v) for stratum in s)
            for gamma in gammas:
                assert evaluate_gamma_euler(s, gamma) == chi_gamma_s1_rep(v, gamma)


@hypothesis_settings(deadline=None)
@given(weights)
def test_circle_zeroing_rules_hold(v):
    for stratification in (stratify_s1_rep(v), stratify_s1_sphere(v), stratify_s1_shell(v)):
        assert all(zeroing_rule_holds(stratum, v) for stratum in stratification)


def test_real_s1_strata():
    s = stratify_s1_real_rep((2, 3), 1)
    assert [stratum.chi for stratum in s] == [-1, 1, 1, 0]
    assert evaluate_gamma_euler(s, Z) == chi_gamma_s1_rep_real((2, 3), 1, Z) == 5
    with pytest.raises(RejectsZeroWeight):
        stratify_s1_real_rep((0, 1), 0)


def test_sphere_origin_is_empty():
    s = stratify_s1_sphere((1,))
    assert s.strata[0].empty
    assert s.total_chi() == 1


def test_subset_cap_applies():
    with pytest.raises(SubsetBudgetExceeded):
        stratify_s1_rep((1, 2, 3), subset_cap=2)
    with pytest.raises(SubsetBudgetExceeded):
        stratify_o2_rep(O2Representation((1, 2), 1), subset_cap=2)


# -- shells and level sets --------------------------------------------------------------------

def test_shell_emptiness():
    assert shell_piece_nonempty((0, 0))
    assert shell_piece_nonempty((-6, 2))
    assert not shell_piece_nonempty((2, 3))
    assert not shell_piece_nonempty((0, 3))
    t = positive_kernel_vector((-6, 2, 3))
    assert all(x > 0 for x in t)
    assert -6 * t[0] + 2 * t[1] + 3 * t[2] == 0
    assert isinstance(t[0], Fraction)
    assert positive_kernel_vector((2, 3)) is None


def test_shell_623():
    shell = stratify_s1_shell((-6, 2, 3))
    found = {s.I: s.isotropy.label for s in shell.nonempty()}
    assert found == {(): 'SO(2)', (1, 2): 'Z/2', (1, 3): 'Z/3', (1, 2, 3): '1'}
    assert evaluate_gamma_euler(shell, Z) == 0


def test_level_set_uses_coefficient_signs():
    shell = stratify_s1_shell((2, 3), (1, -1))
    assert len(shell.nonempty()) == 2
    assert shell.parameters['coefficients'] == [1, -1]
    with pytest.raises(ValueError):
        stratify_s1_shell((2, 3), (1, 0))


def test_shell_independence(klein, z4):
    rng = random.Random(623)
    gammas = [Z, Z2, F2, z4, klein]
    targets = [chi_orbit_hom(gamma, IsotropyClass.circle()) for gamma in gammas]
    assert targets == [0, 0, 0, 4, 4]
    for _ in range(100):
        v = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 6)))
        shell = stratify_s1_shell(v)
        for gamma, target in zip(gammas, targets):
            assert evaluate_gamma_euler(shell, gamma) == target


# -- O(2) ---------------------------------------------------------------------------------------

def test_o2_rep_strata():
    s = stratify_o2_rep(O2Representation((2, 3), 1))
    assert [(t.label, t.chi) for t in s if t.chi] == [('origin', 1), ('X_1', -1), ('X_2', -1)]
    assert s.find(O2_XI, (1,)).isotropy == IsotropyClass.cyclic(2)
    assert s.find(O2_XSTAR, (1, 2)).isotropy == IsotropyClass.dihedral(1)
    assert s.find(O2_YJ, (), (1,)).isotropy == IsotropyClass.circle()


def test_o2_equal_alphas_cross_piece():
    cross = stratify_o2_rep(O2Representation((1, 1))).find(O2_XCROSS, (1, 2))
    assert cross.chi == 0
    assert cross.isotropy == IsotropyClass.trivial()
    assert cross.zeroed_by == TORUS_FACTOR


def test_o2_real_strata():
    s = stratify_o2_real_rep(O2Representation((2, 3), 0, True))
    assert [t.chi for t in s if t.kind == O2_XSTAR] == [-1, -1, 2]
    assert s.find(O2_XPLAIN, (1, 2)).chi == -1
    assert s.find(O2_XPLAIN, (1, 2)).isotropy == IsotropyClass.dihedral(1)
    assert s.find(O2_XI, (1,)).empty


@pytest.mark.parametrize('text', O2_GAMMAS)
@hypothesis_settings(deadline=None)
@given(a=st.lists(st.integers(min_value=1, max_value=6), max_size=4),
       d=st.integers(min_value=0, max_value=3),
       real=st.booleans(),
       t=st.integers(min_value=0, max_value=1))
def test_o2_strata_match_formula(text, a, d, real, t):
    gamma = parse_gamma(text)
    rep = O2Representation(a, d, real, t)
    s = stratify_o2(rep)
    assert all(zeroing_rule_holds(stratum, rep.alphas) for stratum in s)
    assert evaluate_gamma_euler(s, gamma) == chi_gamma_o2(rep, gamma)


def test_o2_fixed_values():
    rep = O2Representation((2, 3))
    assert evaluate_gamma_euler(stratify_o2(rep), Z2) == -5
    assert evaluate_gamma_euler(stratify_o2(rep), F2) == -8


def test_o2_strata_with_user_value():
    z3 = parse_gamma('fp:a|aaa')
    s = stratify_o2(O2Representation((1,)))
    assert evaluate_gamma_euler(s, z3, {z3: 2}) == 1


def test_zeroing_rule_rejects_wrong_tag():
    wrong = Stratum(S1_PIECE, 0, IsotropyClass.cyclic(1), (1, 2), zeroed_by=SIGNED_CIRCLE)
    assert not zeroing_rule_holds(wrong, (2, 3))


def test_to_json_shape():
    record = stratify_s1_rep((2,)).to_json()
    assert record['source'] == 's1_rep'
    assert record['strata'][1] == {
        'label': 'V{1}', 'kind': 's1', 'I': [1], 'J': [], 'chi': '-1',
        'isotropy': {'kind': 'cyclic', 'order': 2, 'label': 'Z/2'},
        'zeroed_by': None, 'empty': False,
    }
