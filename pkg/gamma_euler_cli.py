#!/usr/bin/env python3
"""
Gamma-Euler Command Line
JSON records on stdout, status lines on stderr, exit codes 0/2/3/4
"""

import functools
import json
import logging
import sys
import time
from typing import Dict, Optional

import click

from euler_errors import (EXIT_PARSE, CrossCheckMismatch, GammaEulerError, GammaSpecError,
                          exit_code_for)
from euler_settings import EulerSettings, budget_override, load_settings
from formulas import (O2Representation, chi_gamma_o2_real_rep, chi_gamma_o2_rep,
                      chi_gamma_s1_ball, chi_gamma_s1_level_set, chi_gamma_s1_rep,
                      chi_gamma_s1_rep_real, chi_gamma_s1_sphere, chi_gamma_symplectic_quotient,
                      chi_orbit_hom_dihedral_closed)
from gamma_spec import format_gamma, parse_alphas, parse_gamma, parse_group, parse_int_list
from groups import (CYCLIC, DIHEDRAL, FREE, FULL_O2, TRIVIAL, ZPOW,
                    FiniteGroup, IsotropyClass, chi_orbit_hom, enumerate_homs, hom_count_to_cyclic)
from oracle import burnside_orbit_count, o2_tuple_type_counts
from strata import (Stratification, evaluate_gamma_euler, stratify_o2, stratify_s1_ball,
                    stratify_s1_real_rep, stratify_s1_rep, stratify_s1_shell, stratify_s1_sphere)
from verification_suite import SUITES, VerificationSuite

logger = logging.getLogger(__name__)

FORMATS = click.Choice(['json', 'table'])


def reports_errors(f):
    """Turn library errors into a ❌ line on stderr and the matching exit code"""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except GammaEulerError as e:
            click.echo(f"❌ {type(e).__name__}: {e}", err=True)
            click.get_current_context().exit(exit_code_for(e))
        except ValueError as e:
            click.echo(f"❌ Invalid input: {e}", err=True)
            click.get_current_context().exit(EXIT_PARSE)
    return wrapper


def render_table(record: Dict) -> str:
    lines = [f"{record['command']} = {record['value']}"]
    for key, value in record['inputs'].items():
        lines.append(f"  {key:<16}{value}")
    if 'oracle' in record:
        lines.append(f"  {'oracle':<16}{record['oracle']['method']} = {record['oracle']['value']}")
    if 'strata' in record:
        lines.append(f"  {'stratum':<20}{'chi':>6}  {'isotropy':<10}note")
        for s in record['strata']:
            note = 'empty' if s['empty'] else (s['zeroed_by'] or '')
            lines.append(f"  {s['label']:<20}{s['chi']:>6}  {s['isotropy']['label']:<10}{note}")
    lines.append(f"  ({record['timing']['elapsed_seconds']}s)")
    return '\n'.join(lines)


def emit(command: str, inputs: Dict, value: int, start: float, output_format: str,
         strata: Optional[Stratification] = None, oracle: Optional[Dict] = None):
    record = {'command': command, 'inputs': inputs, 'value': str(value)}
    if strata is not None:
        record['strata'] = strata.to_json()['strata']
    if oracle is not None:
        record['oracle'] = oracle
    record['timing'] = {'elapsed_seconds': round(time.perf_counter() - start, 6)}
    if output_format == 'table':
        click.echo(render_table(record))
    else:
        click.echo(json.dumps(record, indent=2))


def check_strata_sum(settings: EulerSettings, what: str, value: int, strata: Stratification, gamma,
                     o2_values=None):
    total = evaluate_gamma_euler(strata, gamma, o2_values, settings.enumeration_budget)
    if total != value:
        raise CrossCheckMismatch(f"{what}: formula vs stratum sum", value, total)
    click.echo(f"✅ Stratum sum over {len(strata.nonempty())} nonempty strata matches ({value})", err=True)


@click.group(name='gamma-euler')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging on stderr')
@click.pass_context
@reports_errors
def cli(ctx, verbose):
    """Gamma-Euler characteristics of S1, O(2) and finite-group actions."""
    settings = load_settings()
    level = logging.DEBUG if verbose else getattr(logging, settings['log_level'], logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, force=True,
                        format='%(levelname)s %(name)s: %(message)s')
    ctx.obj = settings


@cli.command('s1-rep')
@click.option('-w', '--weights', required=True, help='Comma-separated circle weights, e.g. 2,-3,0')
@click.option('-g', '--gamma', 'gamma_text', required=True, help='Z^l, Fl or fp:<gens>|<relators>')
@click.option('--real', 'real_d', type=click.IntRange(min=0), default=None,
              help='Real representation W + R^d with this d')
@click.option('--subset', type=click.Choice(['sphere', 'ball', 'shell']), default=None)
@click.option('--coefficients', default=None, help='Level-set coefficients (shell only)')
@click.option('--strata', 'show_strata', is_flag=True, help='Include and check the stratification')
@click.option('--format', 'output_format', type=FORMATS, default='json')
@click.pass_obj
@reports_errors
def s1_rep(settings: EulerSettings, weights, gamma_text, real_d, subset, coefficients, show_strata,
           output_format):
    """chi_Gamma(S1 x| V) for a circle representation, or a subset of it."""
    start = time.perf_counter()
    v = parse_int_list(weights)
    gamma = parse_gamma(gamma_text)
    cap = settings.subset_cap
    if real_d is not None and subset:
        raise GammaSpecError("--real cannot be combined with --subset")
    if coefficients is not None and subset != 'shell':
        raise GammaSpecError("--coefficients only applies to --subset shell")

    inputs = {'weights': list(v), 'gamma': format_gamma(gamma)}
    if real_d is not None:
        inputs['d'] = real_d
        value = chi_gamma_s1_rep_real(v, real_d, gamma)
        build = lambda: stratify_s1_real_rep(v, real_d, cap)
    elif subset == 'sphere':
        value = chi_gamma_s1_sphere(v, gamma)
        build = lambda: stratify_s1_sphere(v, cap)
    elif subset == 'ball':
        value = chi_gamma_s1_ball(v, gamma)
        build = lambda: stratify_s1_ball(v, cap)
    elif subset == 'shell':
        b = parse_int_list(coefficients, "coefficients") if coefficients is not None else None
        if b is None:
            value = chi_gamma_symplectic_quotient(IsotropyClass.circle(), gamma)
        else:
            inputs['coefficients'] = list(b)
            value = chi_gamma_s1_level_set(v, b, gamma)
        build = lambda: stratify_s1_shell(v, b, cap)
    else:
        value = chi_gamma_s1_rep(v, gamma)
        build = lambda: stratify_s1_rep(v, cap)
    if subset:
        inputs['subset'] = subset

    strata = None
    if show_strata:
        strata = build()
        check_strata_sum(settings, 's1-rep', value, strata, gamma)
    emit('s1-rep', inputs, value, start, output_format, strata)


@cli.command('o2-rep')
@click.option('-a', '--alphas', required=True, help='Comma-separated positive O(2) weights')
@click.option('-d', '--det', 'det_multiplicity', type=click.IntRange(min=0), default=0,
              help='Multiplicity of det')
@click.option('-g', '--gamma', 'gamma_text', required=True)
@click.option('--real', 'real_points', is_flag=True, help='Use the real points V_R')
@click.option('--trivial-dim', type=click.IntRange(min=0), default=0)
@click.option('--o2-value', type=int, default=None,
              help='chi(O(2)\\Hom(Gamma,O(2))) for Gamma outside Z^l and F_l')
@click.option('--strata', 'show_strata', is_flag=True)
@click.option('--format', 'output_format', type=FORMATS, default='json')
@click.pass_obj
@reports_errors
def o2_rep(settings: EulerSettings, alphas, det_multiplicity, gamma_text, real_points, trivial_dim,
           o2_value, show_strata, output_format):
    """chi_Gamma(O(2) x| V) for V = sum tau_alpha + d det."""
    start = time.perf_counter()
    rep = O2Representation(parse_alphas(alphas), det_multiplicity, real_points, trivial_dim)
    gamma = parse_gamma(gamma_text)
    o2_values = {gamma: o2_value} if o2_value is not None else None

    if real_points:
        value = chi_gamma_o2_real_rep(rep, gamma, o2_values, settings.subset_cap, settings.enumeration_budget)
    else:
        value = chi_gamma_o2_rep(rep, gamma, o2_values)
    inputs = {'alphas': list(rep.alphas), 'd': det_multiplicity, 'real': real_points,
              'trivial_dim': trivial_dim, 'gamma': format_gamma(gamma)}
    if o2_value is not None:
        inputs['o2_value'] = o2_value

    strata = None
    if show_strata:
        strata = stratify_o2(rep, settings.subset_cap)
        check_strata_sum(settings, 'o2-rep', value, strata, gamma, o2_values)
    emit('o2-rep', inputs, value, start, output_format, strata)


@cli.command('symplectic')
@click.option('-G', '--group', 'group_text', required=True,
              help='trivial, S1, O2, cyclic:m, dihedral:m or table:<json file>')
@click.option('-g', '--gamma', 'gamma_text', required=True)
@click.option('--user-value', type=int, default=None, help='chi(G\\Hom(Gamma,G)) for other groups')
@click.option('--format', 'output_format', type=FORMATS, default='json')
@click.pass_obj
@reports_errors
def symplectic(settings: EulerSettings, group_text, gamma_text, user_value, output_format):
    """chi_Gamma of the level-0 symplectic quotient; depends only on the group."""
    start = time.perf_counter()
    gamma = parse_gamma(gamma_text)
    group = parse_group(group_text, gamma, user_value)
    o2_values = {gamma: user_value} if group.kind == FULL_O2 and user_value is not None else None
    value = chi_gamma_symplectic_quotient(group, gamma, o2_values)
    inputs = {'group': group.label, 'gamma': format_gamma(gamma)}
    if user_value is not None:
        inputs['user_value'] = user_value
    emit('symplectic', inputs, value, start, output_format)


def run_oracle(settings: EulerSettings, target: IsotropyClass, gamma, value: int) -> Dict:
    """Brute-force counterpart of chi_orbit_hom; raises CrossCheckMismatch on disagreement"""
    normalized = gamma.standard_form()
    checks = []
    group = FiniteGroup.cyclic(1) if target.kind == TRIVIAL else target.finite_group()
    if group is not None:
        homs = enumerate_homs(gamma, group, settings.enumeration_budget)
        checks.append(('burnside', burnside_orbit_count(group, homs)))
        if target.kind == CYCLIC:
            checks.append(('abelianization', hom_count_to_cyclic(gamma, target.order)))
        if target.kind == DIHEDRAL and normalized.kind in (ZPOW, FREE):
            checks.append(('dihedral_closed_form',
                           chi_orbit_hom_dihedral_closed(target.order, normalized.rank, normalized.kind)))
    elif target.kind == FULL_O2 and normalized.kind in (ZPOW, FREE):
        census = o2_tuple_type_counts(normalized.rank)
        total = census.commuting_orbit_total() if normalized.kind == ZPOW else census.orbit_total()
        checks.append(('o2_census', total))
    if not checks:
        click.echo(f"⚠️ No independent oracle for {target.label} at {gamma.describe()}", err=True)
        return {'method': 'none', 'value': str(value)}
    for method, expected in checks:
        if expected != value:
            raise CrossCheckMismatch(f"hom-orbits {target.label} at {gamma.describe()} via {method}",
                                     expected, value)
    click.echo(f"✅ Oracle agrees: {', '.join(m for m, _ in checks)}", err=True)
    return {'method': '+'.join(m for m, _ in checks), 'value': str(checks[0][1])}


@cli.command('hom-orbits')
@click.option('-t', '--target', 'target_text', required=True,
              help='cyclic:m, dihedral:m, O2, S1, trivial or table:<json file>')
@click.option('-g', '--gamma', 'gamma_text', required=True)
@click.option('--oracle', 'use_oracle', is_flag=True, help='Cross-check against brute force')
@click.option('--format', 'output_format', type=FORMATS, default='json')
@click.pass_obj
@reports_errors
def hom_orbits(settings: EulerSettings, target_text, gamma_text, use_oracle, output_format):
    """chi(H\\Hom(Gamma,H))."""
    start = time.perf_counter()
    gamma = parse_gamma(gamma_text)
    target = parse_group(target_text)
    value = chi_orbit_hom(gamma, target, budget=settings.enumeration_budget)
    oracle = run_oracle(settings, target, gamma, value) if use_oracle else None
    emit('hom-orbits', {'target': target.label, 'gamma': format_gamma(gamma)}, value, start,
         output_format, oracle=oracle)


@cli.command('verify')
@click.option('--suite', 'suite_name', type=click.Choice(list(SUITES) + ['all']), default='all')
@click.option('--budget', type=click.IntRange(min=1), default=None,
              help='Enumeration budget for this run (overrides GAMMA_EULER_BUDGET)')
@click.option('--no-report', is_flag=True, help='Do not write the JSON report')
@reports_errors
def verify(suite_name, budget, no_report):
    """Run the acceptance corpora; exit 0 only when every cross-check agrees."""
    start = time.perf_counter()
    with budget_override(budget):
        settings = load_settings()
        suite = VerificationSuite(settings, echo=lambda line: click.echo(line, err=True))
        results = suite.run(suite_name)
        totals = suite.summarize(results)
        click.echo(f"📊 {totals['passed']}/{totals['total']} checks passed", err=True)
        report = None
        if settings['save_reports'] and not no_report:
            report = suite.save_report(suite_name, results)

    record = {
        'command': 'verify',
        'inputs': {'suite': suite_name, 'budget': settings.enumeration_budget},
        'totals': totals,
        'checks': [{'name': r.name, 'status': r.status, 'detail': r.detail} for r in results],
        'report': report,
        'timing': {'elapsed_seconds': round(time.perf_counter() - start, 6)},
    }
    click.echo(json.dumps(record, indent=2))
    click.get_current_context().exit(suite.exit_code(results))


def main():
    cli(prog_name='gamma-euler')


if __name__ == "__main__":
    main()
