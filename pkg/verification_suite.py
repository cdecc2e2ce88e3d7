#!/usr/bin/env python3
"""
Gamma-Euler Verification Suite
Runs every closed form against its independent brute-force or stratification path over the
acceptance corpora and saves a timestamped JSON report
"""

import json
import logging
import os
import random
import time
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from euler_errors import (EXIT_MISMATCH, EXIT_OK, EXIT_UNSUPPORTED, CrossCheckMismatch, GammaEulerError,
                          UnsupportedGroup, exit_code_for)
from euler_settings import EulerSettings, load_settings
from formulas import (O2Representation, chi_gamma_o2, chi_gamma_o2_real_rep, chi_gamma_o2_rep,
                      chi_gamma_s1_ball, chi_gamma_s1_level_set, chi_gamma_s1_rep,
                      chi_gamma_s1_rep_real, chi_gamma_s1_sphere, chi_gamma_symplectic_quotient,
                      chi_gamma_z2_quotient, chi_orbit_hom_dihedral_closed, chi_orbit_hom_o2_closed,
                      chi_zl_fl_o2_real_rep, chi_zl_fl_o2_rep, chi_zl_fl_s1)
from gamma_spec import parse_gamma, parse_group
from groups import (FREE, ZPOW, FiniteGroup, GammaGroup, IsotropyClass, abelianization,
                    chi_hom_to_circle, chi_orbit_hom, conjugation_orbit_count, enumerate_homs,
                    hom_count_to_cyclic)
from oracle import (TYPE_III, TYPE_IV, burnside_orbit_count, dihedral_tuple_census,
                    exact_sequence_report, literal_real_s1_reading, o2_alpha_recovery_scan,
                    o2_tuple_type_counts, weight_recovery_scan)
from strata import (evaluate_gamma_euler, stratify_o2, stratify_s1_ball, stratify_s1_real_rep,
                    stratify_s1_rep, stratify_s1_shell, stratify_s1_sphere, zeroing_rule_holds)

logger = logging.getLogger(__name__)

SUITES = ('groups', 'formulas', 'strata', 'oracle')

GAMMA_CORPUS = {
    'Z': 'Z',
    'Z^2': 'Z^2',
    'Z^3': 'Z^3',
    'F2': 'F2',
    'F3': 'F3',
    'Z/2': 'fp:a|aa',
    'Z/4': 'fp:a|aaaa',
    'Z/6': 'fp:a|aaaaaa',
    'Klein': 'fp:a,b|aa,bb,abab',
}


def gamma_corpus(*names: str) -> Dict[str, GammaGroup]:
    """Named test groups; all of them when no names are given"""
    return {name: parse_gamma(GAMMA_CORPUS[name]) for name in (names or GAMMA_CORPUS)}


def expect(what: str, expected, actual):
    if expected != actual:
        raise CrossCheckMismatch(what, expected, actual)


def alpha_lists(max_n: int, bound: int):
    for n in range(max_n + 1):
        yield from combinations_with_replacement(range(1, bound + 1), n)


def weight_vectors(max_n: int, bound: int):
    for n in range(max_n + 1):
        yield from product(range(-bound, bound + 1), repeat=n)


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str
    elapsed: float


class VerificationSuite:
    """Acceptance corpora grouped into the groups / formulas / strata / oracle suites"""

    def __init__(self, settings: Optional[EulerSettings] = None,
                 echo: Optional[Callable[[str], None]] = None):
        self.settings = settings or load_settings()
        self.echo = echo or logger.info
        self.cap = self.settings.subset_cap

    def evaluate(self, strata, gamma) -> int:
        return evaluate_gamma_euler(strata, gamma, budget=self.settings.enumeration_budget)

    def registry(self) -> Dict[str, List[Tuple[str, Callable[[], str]]]]:
        return {
            'groups': [
                ('hom_enumeration_examples', self.check_hom_examples),
                ('abelianization_examples', self.check_abelianization_examples),
                ('orbit_hom_examples', self.check_orbit_hom_examples),
                ('burnside_matches_union_find', self.check_burnside_agreement),
                ('cyclic_counts_match_abelianization', self.check_cyclic_counts),
                ('zpow_homs_are_commuting_free_homs', self.check_zpow_inside_free),
                ('dihedral_one_matches_cyclic_two', self.check_dihedral_one),
            ],
            'formulas': [
                ('formula_examples', self.check_formula_examples),
                ('dihedral_closed_forms', self.check_dihedral_closed_forms),
                ('dihedral_integrality', self.check_dihedral_integrality),
                ('specialization_coherence', self.check_specialization),
                ('det_multiplicity_dependence', self.check_d_dependence),
                ('non_multiplicativity', self.check_non_multiplicativity),
                ('real_circle_reconciliation', self.check_real_s1_reconciliation),
                ('circle_additivity', self.check_additivity),
            ],
            'strata': [
                ('strata_examples', self.check_strata_examples),
                ('circle_strata_match_formula', self.check_circle_strata),
                ('o2_strata_match_formula', self.check_o2_strata),
                ('shell_independence', self.check_shell_independence),
                ('shell_623_isotropies', self.check_623_example),
                ('symplectic_constants', self.check_symplectic_constants),
            ],
            'oracle': [
                ('burnside_examples', self.check_burnside_examples),
                ('dihedral_census', self.check_dihedral_census),
                ('o2_census', self.check_o2_census),
                ('weight_recovery', self.check_weight_recovery),
                ('o2_alpha_recovery', self.check_o2_alpha_recovery),
            ],
        }

    # -- runner ---------------------------------------------------------------------------------

    def run(self, suite: str = 'all') -> List[CheckResult]:
        registry = self.registry()
        if suite == 'all':
            names = SUITES
        elif suite in registry:
            names = (suite,)
        else:
            raise ValueError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")

        results = []
        for name in names:
            self.echo(f"📊 Suite {name}: {len(registry[name])} checks")
            for check_name, check in registry[name]:
                results.append(self.run_check(f"{name}.{check_name}", check))
        return results

    def run_check(self, name: str, check: Callable[[], str]) -> CheckResult:
        start = time.perf_counter()
        try:
            detail = check()
            status = 'pass'
        except GammaEulerError as e:
            detail = str(e)
            status = 'fail' if exit_code_for(e) == EXIT_MISMATCH else 'error'
        elapsed = time.perf_counter() - start
        icon = {'pass': '✅', 'fail': '❌', 'error': '⚠️'}[status]
        self.echo(f"   {icon} {name} ({elapsed:.2f}s): {detail}")
        return CheckResult(name, status, detail, round(elapsed, 4))

    @staticmethod
    def summarize(results: Sequence[CheckResult]) -> Dict[str, int]:
        return {
            'total': len(results),
            'passed': sum(1 for r in results if r.status == 'pass'),
            'failed': sum(1 for r in results if r.status == 'fail'),
            'errors': sum(1 for r in results if r.status == 'error'),
        }

    @staticmethod
    def exit_code(results: Sequence[CheckResult]) -> int:
        """4 on any mismatch, 3 when a check could not run, 0 otherwise"""
        totals = VerificationSuite.summarize(results)
        if totals['failed']:
            return EXIT_MISMATCH
        if totals['errors']:
            return EXIT_UNSUPPORTED
        return EXIT_OK

    def save_report(self, suite: str, results: Sequence[CheckResult]) -> str:
        now = self.settings.now()
        report_dir = self.settings.report_dir
        os.makedirs(report_dir, exist_ok=True)
        filename = os.path.join(report_dir,
                                f"Gamma_Euler_Verification_{suite}_{now.strftime('%Y%m%d_%H%M%S')}.json")
        report = {
            'timestamp': now.isoformat(),
            'suite': suite,
            'budget': self.settings.enumeration_budget,
            'checks': [asdict(r) for r in results],
            'totals': self.summarize(results),
        }
        with open(filename, 'w') as f:
            json.dump(report, f, indent=2)
        self.echo(f"💾 Verification report saved: {filename}")
        return filename

    # -- groups ---------------------------------------------------------------------------------

    def check_hom_examples(self) -> str:
        d6 = FiniteGroup.dihedral(3)
        expect("|Hom(F1,Z/4)|", 4, len(enumerate_homs(GammaGroup.free(1), FiniteGroup.cyclic(4))))
        expect("|Hom(<a|a^2>,D6)|", 4, len(enumerate_homs(parse_gamma('fp:a|aa'), d6)))
        z2_homs = enumerate_homs(GammaGroup.z_pow(2), d6)
        expect("|Hom(Z^2,D6)|", 18, len(z2_homs))
        expect("D6 orbits on Hom(Z,D6)", 3, conjugation_orbit_count(d6, enumerate_homs(GammaGroup.z_pow(1), d6)))
        expect("Z/4 orbits on Hom(Z,Z/4)", 4,
               conjugation_orbit_count(FiniteGroup.cyclic(4), enumerate_homs(GammaGroup.z_pow(1), FiniteGroup.cyclic(4))))
        expect("D6 orbits on Hom(Z^2,D6)", 8, conjugation_orbit_count(d6, z2_homs))
        return "6 enumeration and orbit examples"

    def check_abelianization_examples(self) -> str:
        expect("ab(Z^2)", (2, ()), tuple(abelianization(parse_gamma('fp:a,b|abAB'))))
        expect("ab(Z/4)", (0, (4,)), tuple(abelianization(parse_gamma('fp:a|aaaa'))))
        expect("ab(Klein)", (0, (2, 2)), tuple(abelianization(parse_gamma('fp:a,b|aa,bb,abab'))))
        expect("chi Hom(Z^3,S1)", 0, chi_hom_to_circle(GammaGroup.z_pow(3)))
        expect("chi Hom(Z/4,S1)", 4, chi_hom_to_circle(parse_gamma('fp:a|aaaa')))
        expect("chi Hom(F2,S1)", 0, chi_hom_to_circle(GammaGroup.free(2)))
        return "6 abelianization examples"

    def check_orbit_hom_examples(self) -> str:
        expect("(Z, Z/5)", 5, chi_orbit_hom(GammaGroup.z_pow(1), IsotropyClass.cyclic(5)))
        expect("(Z^2, O(2))", 8, chi_orbit_hom(GammaGroup.z_pow(2), IsotropyClass.full_o2()))
        expect("(F2, D6)", 11, chi_orbit_hom(GammaGroup.free(2), IsotropyClass.dihedral(3)))
        return "3 dispatch examples"

    def check_burnside_agreement(self) -> str:
        targets = [FiniteGroup.cyclic(m) for m in range(1, 7)] + [FiniteGroup.dihedral(m) for m in range(1, 7)]
        pairs = 0
        for name, gamma in gamma_corpus().items():
            for h in targets:
                homs = enumerate_homs(gamma, h)
                expect(f"orbits of Hom({name},{h.name})", burnside_orbit_count(h, homs),
                       conjugation_orbit_count(h, homs))
                pairs += 1
        return f"{pairs} (Gamma, H) pairs agree"

    def check_cyclic_counts(self) -> str:
        for name, gamma in gamma_corpus().items():
            for m in range(1, 9):
                expect(f"|Hom({name},Z/{m})|", hom_count_to_cyclic(gamma, m),
                       len(enumerate_homs(gamma, FiniteGroup.cyclic(m))))
        return f"{len(GAMMA_CORPUS) * 8} counts agree"

    def check_zpow_inside_free(self) -> str:
        for h in (FiniteGroup.dihedral(3), FiniteGroup.dihedral(4), FiniteGroup.cyclic(4)):
            for ell in (1, 2, 3):
                commuting = [t for t in enumerate_homs(GammaGroup.free(ell), h)
                             if all(h.commute(a, b) for a in t for b in t)]
                expect(f"Hom(Z^{ell},{h.name}) inside Hom(F{ell},{h.name})", commuting,
                       enumerate_homs(GammaGroup.z_pow(ell), h))
        return "9 (H, l) pairs"

    def check_dihedral_one(self) -> str:
        for name, gamma in gamma_corpus().items():
            expect(f"D2 vs Z/2 at {name}", chi_orbit_hom(gamma, IsotropyClass.cyclic(2)),
                   chi_orbit_hom(gamma, IsotropyClass.dihedral(1)))
        return f"{len(GAMMA_CORPUS)} groups"

    # -- formulas -------------------------------------------------------------------------------

    def check_formula_examples(self) -> str:
        z, z2, f2 = GammaGroup.z_pow(1), GammaGroup.z_pow(2), GammaGroup.free(2)
        z4 = parse_gamma('fp:a|aaaa')
        expect("s1 (1) Z", -1, chi_gamma_s1_rep((1,), z))
        expect("s1 (2,3) Z^2", -13, chi_gamma_s1_rep((2, 3), z2))
        expect("s1 (0,0) Z/4", 4, chi_gamma_s1_rep((0, 0), z4))
        expect("real s1 (1) d=1 Z", 1, chi_gamma_s1_rep_real((1,), 1, z))
        expect("real s1 (1) d=0 F2", -1, chi_gamma_s1_rep_real((1,), 0, f2))
        expect("zl_fl (2,3) l=2", -13, chi_zl_fl_s1((2, 3), 2, ZPOW))
        expect("zl_fl (1,1,1) F1", -3, chi_zl_fl_s1((1, 1, 1), 1, FREE))
        expect("zl_fl (5) Z^3 d=2", -125, chi_zl_fl_s1((5,), 3, ZPOW, 2))
        expect("sphere (2,3) Z", 5, chi_gamma_s1_sphere((2, 3), z))
        expect("sphere (2,2) Z^2", 8, chi_gamma_s1_sphere((2, 2), z2))
        expect("ball (7) Z/3", 3, chi_gamma_s1_ball((7,), parse_gamma('fp:a|aaa')))
        expect("O(2) Z", 2, chi_orbit_hom_o2_closed(1, ZPOW))
        expect("O(2) F2", 5, chi_orbit_hom_o2_closed(2, FREE))
        expect("D6 Z^2", 8, chi_orbit_hom_dihedral_closed(3, 2, ZPOW))
        expect("D6 F2", 11, chi_orbit_hom_dihedral_closed(3, 2, FREE))
        expect("o2 (1) Z", 1, chi_gamma_o2_rep(O2Representation((1,)), z))
        expect("o2 (2,3) d=5 Z^2", -5, chi_gamma_o2_rep(O2Representation((2, 3), 5), z2))
        expect("o2 (2,3) F2", -8, chi_gamma_o2_rep(O2Representation((2, 3)), f2))
        expect("real o2 (1) d=0 Z", 0, chi_gamma_o2_real_rep(O2Representation((1,), 0, True), z))
        expect("real o2 (1) d=1 Z", 1, chi_gamma_o2_real_rep(O2Representation((1,), 1, True), z))
        expect("symplectic S1 Z", 0, chi_gamma_symplectic_quotient(IsotropyClass.circle(), z))
        expect("symplectic O(2) F2", 5, chi_gamma_symplectic_quotient(IsotropyClass.full_o2(), f2))
        expect("Z/2 quotient Z^2", 4, chi_gamma_z2_quotient(z2))
        expect("Z/2 quotient F3", 8, chi_gamma_z2_quotient(GammaGroup.free(3)))
        expect("Z/2 quotient Z/3", 1, chi_gamma_z2_quotient(parse_gamma('fp:a|aaa')))
        return "25 closed-form examples"

    def check_dihedral_closed_forms(self) -> str:
        cases = [(m, ell) for m in range(1, 11) for ell in (1, 2, 3)] + [(m, 4) for m in range(1, 5)]
        for m, ell in cases:
            h = FiniteGroup.dihedral(m)
            for kind, gamma in ((ZPOW, GammaGroup.z_pow(ell)), (FREE, GammaGroup.free(ell))):
                homs = enumerate_homs(gamma, h)
                closed = chi_orbit_hom_dihedral_closed(m, ell, kind)
                expect(f"D{2 * m} {kind}^{ell} union-find", closed, conjugation_orbit_count(h, homs))
                expect(f"D{2 * m} {kind}^{ell} Burnside", closed, burnside_orbit_count(h, homs))
        return f"{len(cases) * 2} (m, l, kind) cases"

    def check_dihedral_integrality(self) -> str:
        for m in range(1, 65):
            for ell in range(1, 9):
                chi_orbit_hom_dihedral_closed(m, ell, ZPOW)
                chi_orbit_hom_dihedral_closed(m, ell, FREE)
        return "m <= 64, l <= 8: all divisions exact"

    def check_specialization(self) -> str:
        cases = 0
        for ell in (1, 2, 3):
            for kind, gamma in ((ZPOW, GammaGroup.z_pow(ell)), (FREE, GammaGroup.free(ell))):
                for weights in weight_vectors(3, 5):
                    expect(f"s1 {weights} {kind}^{ell}", chi_gamma_s1_rep(weights, gamma),
                           chi_zl_fl_s1(weights, ell, kind))
                for alphas in alpha_lists(3, 5):
                    for d in (0, 1, 2):
                        rep = O2Representation(alphas, d)
                        real = O2Representation(alphas, d, True)
                        expect(f"o2 {alphas} {kind}^{ell}", chi_gamma_o2_rep(rep, gamma),
                               chi_zl_fl_o2_rep(rep, ell, kind))
                        expect(f"real o2 {alphas} d={d} {kind}^{ell}",
                               chi_gamma_o2_real_rep(real, gamma, subset_cap=self.cap),
                               chi_zl_fl_o2_real_rep(real, ell, kind, self.cap))
                        cases += 1
        return f"{cases} O(2) cases plus circle corpus"

    def check_d_dependence(self) -> str:
        for name, gamma in gamma_corpus('Z', 'Z^2', 'F2').items():
            for alphas in alpha_lists(3, 4):
                complex_values = {chi_gamma_o2_rep(O2Representation(alphas, d), gamma) for d in range(4)}
                expect(f"complex o2 {alphas} {name} constant in d", 1, len(complex_values))
                for d in (0, 1):
                    expect(f"real o2 {alphas} {name} d={d} vs d={d + 2}",
                           chi_gamma_o2_real_rep(O2Representation(alphas, d, True), gamma, subset_cap=self.cap),
                           chi_gamma_o2_real_rep(O2Representation(alphas, d + 2, True), gamma, subset_cap=self.cap))
            for weights in ((1,), (2, -3), (1, 1, 4)):
                expect(f"real s1 {weights} {name} parity", chi_gamma_s1_rep_real(weights, 0, gamma),
                       chi_gamma_s1_rep_real(weights, 2, gamma))
        return "complex O(2) constant in d; real values depend on d mod 2"

    def check_non_multiplicativity(self) -> str:
        report = exact_sequence_report((1,), 2)
        expect("chi_Z^2(O(2) x| V)", 7, report['Z^2']['o2'])
        expect("chi_Z^2(S1) * chi_Z^2(Z/2)", -8, report['Z^2']['product'])
        expect("Z^2 multiplicative", False, report['Z^2']['multiplicative'])
        expect("chi_F2(O(2) x| V)", 4, report['F2']['o2'])
        expect("S1 value Z^2 vs F2", report['Z^2']['s1'], report['F2']['s1'])
        return "O(2) value 7 != -8 at Z^2; F2 gives 4"

    def check_real_s1_reconciliation(self) -> str:
        checked = 0
        for ell in (1, 2, 3):
            for kind, gamma in ((ZPOW, GammaGroup.z_pow(ell)), (FREE, GammaGroup.free(ell))):
                for weights in weight_vectors(3, 4):
                    if not weights or 0 in weights:
                        continue
                    for d in range(4):
                        adopted = chi_gamma_s1_rep_real(weights, d, gamma)
                        expect(f"real s1 {weights} d={d} {kind}^{ell}", chi_zl_fl_s1(weights, ell, kind, d), adopted)
                        expect(f"real s1 strata {weights} d={d}", adopted,
                               self.evaluate(stratify_s1_real_rep(weights, d, self.cap), gamma))
                        expect(f"literal reading {weights} d={d}", 2 * adopted,
                               literal_real_s1_reading(weights, d, gamma))
                        checked += 1
        return f"{checked} real cases match (-1)^(d+1) sum |a_i|^l; the literal reading is exactly twice that"

    def check_additivity(self) -> str:
        pairs = [((1,), (2,)), ((2, -3), (0, 5)), ((1, 1), (-1,))]
        for name, gamma in gamma_corpus('Z', 'Z^2', 'F2').items():
            for v1, v2 in pairs:
                expect(f"additivity {v1}+{v2} at {name}", chi_gamma_s1_rep(v1, gamma) + chi_gamma_s1_rep(v2, gamma),
                       chi_gamma_s1_rep(v1 + v2, gamma))
        z4 = gamma_corpus('Z/4')['Z/4']
        v1, v2 = (1,), (2,)
        if chi_gamma_s1_rep(v1, z4) + chi_gamma_s1_rep(v2, z4) == chi_gamma_s1_rep(v1 + v2, z4):
            raise CrossCheckMismatch("additivity must fail at Z/4", "unequal", "equal")
        return "additive for Z^l/F_l, not for Z/4"

    # -- strata ---------------------------------------------------------------------------------

    def check_strata_examples(self) -> str:
        z = GammaGroup.z_pow(1)
        expect("strata (2,3) Z", -5, self.evaluate(stratify_s1_rep((2, 3), self.cap), z))
        expect("shell (-6,2,3) Z", 0, self.evaluate(stratify_s1_shell((-6, 2, 3), subset_cap=self.cap), z))
        rep = O2Representation((2, 3), 1)
        nonzero = [(s.label, s.chi) for s in stratify_o2(rep, self.cap) if s.chi]
        expect("o2 (2,3) d=1 nonzero strata", [('origin', 1), ('X_1', -1), ('X_2', -1)], nonzero)
        real = stratify_o2(O2Representation((2, 3), 0, True), self.cap)
        expect("real o2 (2,3) X* chis", [-1, -1, 2], [s.chi for s in real if s.kind == 'x_star'])
        return "4 stratification examples"

    def check_circle_strata(self) -> str:
        gammas = gamma_corpus('Z', 'Z^2', 'F2', 'Z/4')
        vectors = 0
        for weights in weight_vectors(4, 5):
            strata = stratify_s1_rep(weights, self.cap)
            for stratum in strata:
                if not zeroing_rule_holds(stratum, weights):
                    raise CrossCheckMismatch(f"zeroing rule on {stratum.label} of {weights}", True, False)
            values = {}
            for name, gamma in gammas.items():
                values[name] = self.evaluate(strata, gamma)
                expect(f"s1 strata {weights} {name}", chi_gamma_s1_rep(weights, gamma), values[name])
            expect(f"F2 vs Z^2 at {weights}", values['Z^2'], values['F2'])
            if len(weights) <= 3:
                for name, gamma in gammas.items():
                    expect(f"sphere strata {weights} {name}", chi_gamma_s1_sphere(weights, gamma),
                           self.evaluate(stratify_s1_sphere(weights, self.cap), gamma))
                    expect(f"ball strata {weights} {name}", chi_gamma_s1_ball(weights, gamma),
                           self.evaluate(stratify_s1_ball(weights, self.cap), gamma))
            vectors += 1
        return f"{vectors} weight vectors x {len(gammas)} groups"

    def check_o2_strata(self) -> str:
        gammas = {'Z': (1, ZPOW), 'Z^2': (2, ZPOW), 'F2': (2, FREE)}
        cases = 0
        for alphas in alpha_lists(3, 5):
            for d in (0, 1, 2):
                for real in (False, True):
                    rep = O2Representation(alphas, d, real)
                    strata = stratify_o2(rep, self.cap)
                    for stratum in strata:
                        if not zeroing_rule_holds(stratum, alphas):
                            raise CrossCheckMismatch(f"zeroing rule on {stratum.label} of {alphas}", True, False)
                    for name, (ell, kind) in gammas.items():
                        gamma = GammaGroup.z_pow(ell) if kind == ZPOW else GammaGroup.free(ell)
                        value = self.evaluate(strata, gamma)
                        expect(f"o2 strata {alphas} d={d} real={real} {name}", chi_gamma_o2(rep, gamma), value)
                        special = (chi_zl_fl_o2_real_rep(rep, ell, kind, self.cap) if real
                                   else chi_zl_fl_o2_rep(rep, ell, kind))
                        expect(f"o2 corollary {alphas} d={d} real={real} {name}", special, value)
                    cases += 1
        expect("o2 (2,3) Z^2", -5, chi_gamma_o2_rep(O2Representation((2, 3)), GammaGroup.z_pow(2)))
        expect("o2 (2,3) F2", -8, chi_gamma_o2_rep(O2Representation((2, 3)), GammaGroup.free(2)))
        return f"{cases} representations x {len(gammas)} groups"

    def check_shell_independence(self) -> str:
        rng = random.Random(self.settings['shell_corpus_seed'])
        gammas = gamma_corpus('Z', 'Z^2', 'F2', 'Z/4', 'Klein')
        targets = {name: chi_orbit_hom(gamma, IsotropyClass.circle()) for name, gamma in gammas.items()}
        expect("shell targets", {'Z': 0, 'Z^2': 0, 'F2': 0, 'Z/4': 4, 'Klein': 4}, targets)
        for _ in range(self.settings['shell_corpus_size']):
            weights = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 6)))
            coefficients = tuple(rng.choice((-1, 1)) * rng.randint(1, 9) for _ in weights)
            shell = stratify_s1_shell(weights, subset_cap=self.cap)
            level_set = stratify_s1_shell(weights, coefficients, self.cap)
            for name, gamma in gammas.items():
                expect(f"shell {weights} {name}", targets[name], self.evaluate(shell, gamma))
                expect(f"level set {weights}/{coefficients} {name}", targets[name],
                       self.evaluate(level_set, gamma))
                expect(f"level-set formula {weights} {name}", targets[name],
                       chi_gamma_s1_level_set(weights, coefficients, gamma))
        return f"{self.settings['shell_corpus_size']} random weight vectors"

    def check_623_example(self) -> str:
        shell = stratify_s1_shell((-6, 2, 3), subset_cap=self.cap)
        found = {s.I: s.isotropy.label for s in shell.nonempty()}
        expect("(-6,2,3) nonempty strata", {(): 'SO(2)', (1, 2): 'Z/2', (1, 3): 'Z/3', (1, 2, 3): '1'}, found)
        return "isotropies S1, R(2), R(3), trivial"

    def check_symplectic_constants(self) -> str:
        z = GammaGroup.z_pow(1)
        expect("cyclic:4 at Z", 4, chi_gamma_symplectic_quotient(parse_group('cyclic:4'), z))
        expect("dihedral:3 at Z", 3, chi_gamma_symplectic_quotient(parse_group('dihedral:3'), z))
        try:
            parse_group('SU2', z)
        except UnsupportedGroup:
            return "4 and 3; SU2 unsupported"
        raise CrossCheckMismatch("SU2 support", "unsupported", "accepted")

    # -- oracle ---------------------------------------------------------------------------------

    def check_burnside_examples(self) -> str:
        d6, d8, z4 = FiniteGroup.dihedral(3), FiniteGroup.dihedral(4), FiniteGroup.cyclic(4)
        expect("Burnside (D6, F2)", 11, burnside_orbit_count(d6, enumerate_homs(GammaGroup.free(2), d6)))
        expect("Burnside (Z/4, Z)", 4, burnside_orbit_count(z4, enumerate_homs(GammaGroup.z_pow(1), z4)))
        expect("Burnside (D8, Z^2)", 22, burnside_orbit_count(d8, enumerate_homs(GammaGroup.z_pow(2), d8)))
        return "3 Burnside examples"

    def check_dihedral_census(self) -> str:
        cases = [(m, ell) for m in range(1, 11) for ell in (1, 2, 3)] + [(m, 4) for m in range(1, 5)]
        for m, ell in cases:
            census = dihedral_tuple_census(m, ell, self.settings.census_budget)
            expect(f"D{2 * m}^{ell} totality", (2 * m) ** ell, census.tuple_total())
            expect(f"D{2 * m}^{ell} all orbits", chi_orbit_hom_dihedral_closed(m, ell, FREE), census.orbit_total())
            expect(f"D{2 * m}^{ell} commuting orbits", chi_orbit_hom_dihedral_closed(m, ell, ZPOW),
                   census.commuting_orbit_total())
        example = dihedral_tuple_census(3, 2, self.settings.census_budget)
        expect("D6^2 tuples", {'i': 1, 'ii': 8, 'iii': 9, 'iv': 18}, example.tuples)
        expect("D6^2 orbits", {'i': 1, 'ii': 4, 'iii': 3, 'iv': 3}, example.orbits)
        return f"{len(cases)} (m, l) censuses"

    def check_o2_census(self) -> str:
        for ell in range(1, 9):
            census = o2_tuple_type_counts(ell)
            expect(f"O(2) commuting l={ell}", chi_orbit_hom_o2_closed(ell, ZPOW), census.commuting_orbit_total())
            expect(f"type (iii) identity l={ell}", 2 ** (ell - 1) * (2 ** ell - 1), census.orbits[TYPE_III])
            if ell == 1:
                expect("no type (iv) at l=1", False, TYPE_IV in census.orbits)
            else:
                expect(f"O(2) all l={ell}", chi_orbit_hom_o2_closed(ell, FREE), census.orbit_total())
        return "l <= 8"

    def check_weight_recovery(self) -> str:
        for max_n, bound in ((3, 5), (1, 9), (2, 4), (4, 6)):
            expect(f"weight recovery n={max_n} bound={bound}", [],
                   weight_recovery_scan(max_n, bound, self.settings.scan_budget))
        return "no collisions"

    def check_o2_alpha_recovery(self) -> str:
        expect("O(2) recovery n=3 bound=5", [], o2_alpha_recovery_scan(3, 5, self.settings.scan_budget))
        return "no collisions"


def main():
    logging.basicConfig(level=logging.INFO, format='%(message)s')
    suite = VerificationSuite(echo=print)
    results = suite.run('all')
    totals = suite.summarize(results)
    print(f"\n📊 {totals['passed']}/{totals['total']} checks passed")
    if suite.settings['save_reports']:
        suite.save_report('all', results)
    return suite.exit_code(results)


if __name__ == "__main__":
    raise SystemExit(main())
