import json
import os

import pytest

from euler_errors import ConfigurationError
from euler_settings import DEFAULTS, EulerSettings, load_settings, read_config_file


def test_defaults_when_file_missing(tmp_path):
    settings = EulerSettings(str(tmp_path / 'absent.json'))
    assert settings.enumeration_budget == DEFAULTS['enumeration_budget']
    assert settings.subset_cap == 20
    assert settings.report_dir == 'Reports'


def test_config_file_overrides_defaults(config_file):
    settings = EulerSettings(config_file(subset_cap=8, report_timezone='America/Chicago', colour='blue'))
    assert settings.subset_cap == 8
    assert settings.now().tzinfo is not None
    assert 'colour' not in settings.values


def test_broken_config_falls_back(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{not json')
    assert EulerSettings(str(path)).subset_cap == 20


def test_environment_overrides_file(config_file, monkeypatch):
    monkeypatch.setenv('GAMMA_EULER_CONFIG', config_file(enumeration_budget=1000))
    monkeypatch.setenv('GAMMA_EULER_BUDGET', '77')
    monkeypatch.setenv('GAMMA_EULER_LOG_LEVEL', 'debug')
    settings = load_settings()
    assert settings.enumeration_budget == 77
    assert settings.census_budget == 77
    assert settings['log_level'] == 'DEBUG'


@pytest.mark.parametrize('values', [
    {'subset_cap': 'twenty'},
    {'subset_cap': 0},
    {'scan_budget': True},
    {'report_timezone': 'Mars/Olympus'},
])
def test_invalid_values(config_file, values):
    with pytest.raises(ConfigurationError):
        EulerSettings(config_file(**values))


def test_non_integer_budget(monkeypatch):
    monkeypatch.setenv('GAMMA_EULER_BUDGET', '1e6')
    with pytest.raises(ConfigurationError):
        load_settings()


def test_config_file_parsed_once_per_edit(config_file, monkeypatch):
    path = config_file(subset_cap=8)
    monkeypatch.setenv('GAMMA_EULER_CONFIG', path)
    assert load_settings().subset_cap == 8
    hits = read_config_file.cache_info().hits
    assert load_settings().subset_cap == 8
    assert read_config_file.cache_info().hits == hits + 1

    stat = os.stat(path)
    with open(path, 'w') as handle:
        json.dump({'subset_cap': 9}, handle)
    os.utime(path, ns=(stat.st_atime_ns, stat.st_mtime_ns + 10 ** 9))
    assert load_settings().subset_cap == 9


def test_cached_config_is_not_shared(config_file):
    path = config_file(subset_cap=8)
    EulerSettings(path).values['subset_cap'] = 3
    assert EulerSettings(path).subset_cap == 8
