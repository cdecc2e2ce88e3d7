import json
import os

import pytest

from euler_errors import BudgetExceeded, CrossCheckMismatch
from euler_settings import budget_override
from verification_suite import CheckResult, VerificationSuite, expect, gamma_corpus


@pytest.fixture
def suite(settings):
    lines = []
    suite = VerificationSuite(settings, echo=lines.append)
    suite.lines = lines
    return suite


def test_expect():
    expect("same", 1, 1)
    with pytest.raises(CrossCheckMismatch) as info:
        expect("different", 1, 2)
    assert info.value.expected == 1
    assert info.value.actual == 2


def test_gamma_corpus_names():
    corpus = gamma_corpus('Z', 'Klein')
    assert corpus['Z'].describe() == "Z^1"
    assert corpus['Klein'].describe() == "<2 generators | 3 relators>"
    assert len(gamma_corpus()) == 9


def test_groups_suite_passes(suite):
    results = suite.run('groups')
    assert all(r.status == 'pass' for r in results), [r for r in results if r.status != 'pass']
    assert suite.exit_code(results) == 0
    assert suite.lines[0].startswith("📊 Suite groups")


@pytest.mark.slow
@pytest.mark.parametrize('name', ['formulas', 'strata', 'oracle'])
def test_suite_passes(suite, name):
    results = suite.run(name)
    assert all(r.status == 'pass' for r in results), [r for r in results if r.status != 'pass']


def test_check_examples_pass(suite):
    for check in (suite.check_formula_examples, suite.check_strata_examples, suite.check_623_example,
                  suite.check_symplectic_constants, suite.check_non_multiplicativity,
                  suite.check_o2_census, suite.check_burnside_examples):
        assert suite.run_check(check.__name__, check).status == 'pass'


def test_mismatch_is_a_failure(suite):
    def broken():
        expect("broken", 1, 2)
    result = suite.run_check('broken', broken)
    assert result.status == 'fail'
    assert 'broken' in result.detail
    assert suite.exit_code([result]) == 4


def test_budget_overrun_is_an_error(suite):
    def overrun():
        raise BudgetExceeded("scan", 100, 10)
    result = suite.run_check('overrun', overrun)
    assert result.status == 'error'
    assert suite.exit_code([result]) == 3
    assert suite.exit_code([result, CheckResult('x', 'fail', '', 0.0)]) == 4


def test_budget_override_restores_environment():
    with budget_override(42):
        assert os.environ['GAMMA_EULER_BUDGET'] == '42'
    assert 'GAMMA_EULER_BUDGET' not in os.environ


def test_unknown_suite(suite):
    with pytest.raises(ValueError):
        suite.run('everything')


def test_save_report(suite, report_dir):
    results = [CheckResult('groups.example', 'pass', 'ok', 0.01)]
    path = suite.save_report('groups', results)
    assert path.startswith(str(report_dir))
    with open(path) as f:
        report = json.load(f)
    assert report['suite'] == 'groups'
    assert report['totals'] == {'total': 1, 'passed': 1, 'failed': 0, 'errors': 0}
    assert report['checks'][0]['name'] == 'groups.example'
    assert report['timestamp'].endswith('+00:00')
    assert suite.lines[-1].startswith("💾")
