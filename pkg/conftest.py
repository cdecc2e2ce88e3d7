import json

import pytest

from euler_settings import EulerSettings
from gamma_spec import parse_gamma

ENVIRONMENT_KEYS = ('GAMMA_EULER_BUDGET', 'GAMMA_EULER_CONFIG', 'GAMMA_EULER_REPORT_DIR',
                    'GAMMA_EULER_LOG_LEVEL')


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in ENVIRONMENT_KEYS:
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def report_dir(tmp_path, monkeypatch):
    path = tmp_path / 'Reports'
    monkeypatch.setenv('GAMMA_EULER_REPORT_DIR', str(path))
    return path


@pytest.fixture
def settings(report_dir):
    return EulerSettings()


@pytest.fixture
def config_file(tmp_path):
    """Write a config file and return its path"""
    def write(**values):
        path = tmp_path / 'gamma_euler_config.json'
        path.write_text(json.dumps(values))
        return str(path)
    return write


@pytest.fixture
def z4():
    return parse_gamma('fp:a|aaaa')


@pytest.fixture
def klein():
    return parse_gamma('fp:a,b|aa,bb,abab')


@pytest.fixture
def s3_table_file(tmp_path):
    """S3 as permutations of {0,1,2}, composed right to left"""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    path = tmp_path / 's3.json'
    path.write_text(json.dumps({'name': 'S3', 'table': table}))
    return str(path)
