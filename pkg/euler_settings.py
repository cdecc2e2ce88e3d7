"""
Gamma-Euler Settings
Loads gamma_euler_config.json and applies environment overrides (GAMMA_EULER_BUDGET etc.)
"""

import json
import logging
import os
from contextlib import contextmanager
from datetime import datetime
from functools import lru_cache
from typing import Any, Dict, Optional

import pytz

from euler_errors import ConfigurationError

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "gamma_euler_config.json"

DEFAULTS: Dict[str, Any] = {
    'enumeration_budget': 10 ** 8,
    'census_budget': 10 ** 8,
    'scan_budget': 10 ** 7,
    'subset_cap': 20,
    'report_dir': 'Reports',
    'save_reports': True,
    'report_timezone': 'UTC',
    'log_level': 'WARNING',
    'shell_corpus_size': 500,
    'shell_corpus_seed': 623,
}

INTEGER_KEYS = ('enumeration_budget', 'census_budget', 'scan_budget', 'subset_cap',
                'shell_corpus_size', 'shell_corpus_seed')


@lru_cache(maxsize=16)
def read_config_file(path: str, mtime_ns: int, size: int) -> Dict[str, Any]:
    """Parsed config keyed by file identity; an edited file has a new key and is read again"""
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        logger.warning("Could not read %s (%s), using defaults", path, e)
        return {}
    if not isinstance(data, dict):
        logger.warning("Config file %s is not a JSON object, using defaults", path)
        return {}
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        logger.warning("Ignoring unknown config keys: %s", ', '.join(sorted(unknown)))
    return {k: v for k, v in data.items() if k in DEFAULTS}


class EulerSettings:
    """
    Effective configuration: built-in defaults < JSON file < environment variables
    """

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or os.environ.get('GAMMA_EULER_CONFIG') or \
            os.path.join(os.path.dirname(os.path.abspath(__file__)), CONFIG_FILENAME)
        self.values = dict(DEFAULTS)
        self.values.update(self.load_config_file())
        self.apply_environment()
        self.validate()

    def load_config_file(self) -> Dict[str, Any]:
        """Read the JSON file; a missing or broken file falls back to defaults"""
        try:
            stat = os.stat(self.config_path)
        except OSError:
            logger.warning("Config file %s not found, using defaults", self.config_path)
            return {}
        return dict(read_config_file(self.config_path, stat.st_mtime_ns, stat.st_size))

    def apply_environment(self):
        budget = os.environ.get('GAMMA_EULER_BUDGET')
        if budget is not None:
            try:
                value = int(budget.strip())
            except ValueError:
                raise ConfigurationError(f"GAMMA_EULER_BUDGET must be an integer, got {budget!r}")
            self.values['enumeration_budget'] = value
            self.values['census_budget'] = value
        report_dir = os.environ.get('GAMMA_EULER_REPORT_DIR')
        if report_dir:
            self.values['report_dir'] = report_dir
        log_level = os.environ.get('GAMMA_EULER_LOG_LEVEL')
        if log_level:
            self.values['log_level'] = log_level.upper()

    def validate(self):
        for key in INTEGER_KEYS:
            value = self.values[key]
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigurationError(f"{key} must be an integer, got {value!r}")
            if value < 1 and key != 'shell_corpus_seed':
                raise ConfigurationError(f"{key} must be positive, got {value}")
        try:
            pytz.timezone(self.values['report_timezone'])
        except pytz.UnknownTimeZoneError:
            raise ConfigurationError(f"Unknown report_timezone {self.values['report_timezone']!r}")

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    @property
    def enumeration_budget(self) -> int:
        return self.values['enumeration_budget']

    @property
    def census_budget(self) -> int:
        return self.values['census_budget']

    @property
    def scan_budget(self) -> int:
        return self.values['scan_budget']

    @property
    def subset_cap(self) -> int:
        return self.values['subset_cap']

    @property
    def report_dir(self) -> str:
        return self.values['report_dir']

    def now(self) -> datetime:
        """Timezone-aware timestamp for reports"""
        return datetime.now(pytz.timezone(self.values['report_timezone']))


def load_settings() -> EulerSettings:
    """Environment overrides are read on every call; the config file is parsed once per edit"""
    return EulerSettings()


@contextmanager
def budget_override(budget: Optional[int]):
    """Temporarily set GAMMA_EULER_BUDGET; None leaves the environment alone"""
    if budget is None:
        yield
        return
    previous = os.environ.get('GAMMA_EULER_BUDGET')
    os.environ['GAMMA_EULER_BUDGET'] = str(budget)
    try:
        yield
    finally:
        if previous is None:
            os.environ.pop('GAMMA_EULER_BUDGET', None)
        else:
            os.environ['GAMMA_EULER_BUDGET'] = previous
