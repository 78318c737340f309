# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Solver settings: built-in defaults, the ``[solver]`` section of an ini
file and the ``RAYLEIGH_THREADS`` environment variable, validated with
FormEncode.
"""

import logging
import os

from formencode import Invalid, Schema
from formencode.validators import Int, Number, OneOf
from paste.deploy.loadwsgi import NicerConfigParser

from rayleighmt.lib.errors import ConfigurationError

__all__ = [
    'DEFAULT_SETTINGS', 'SOLVER_SECTION', 'THREADS_ENV', 'TRACTION_VARIANTS',
    'Settings', 'load_settings', 'read_solver_section', 'resolve_threads',
]

log = logging.getLogger(__name__)

SOLVER_SECTION = 'solver'
THREADS_ENV = 'RAYLEIGH_THREADS'
TRACTION_VARIANTS = ('printed', 'constitutive')

DEFAULT_SETTINGS = {
    'threads': 0,
    'coupling_threshold': 0.0,
    'traction_variant': 'printed',
    're_min': 0.05,
    're_max': 0.9,
    'im_min': -0.4,
    'im_max': 0.0,
    'nx': 128,
    'ny': 64,
    'tol_det': 1e-6,
    'dedup_tol': 1e-6,
    'singular_ratio': 1e-6,
    'xatol': 1e-10,
    'max_evaluations': 500,
    'cross_check_samples': 200,
    'seed': 12345,
}


class Settings(dict):
    def __getattr__(self, name):
        if name not in self:
            raise AttributeError("'%s' object has no attribute '%s'" % (self.__class__.__name__, name))
        return self[name]


class Float(Number):
    """Like ``Number`` but always returns a float."""
    def _convert_to_python(self, value, state):
        return float(Number._convert_to_python(self, value, state))


class PositiveFloat(Float):
    messages = dict(
        positive='Please enter a number greater than zero',
    )

    def _validate_python(self, value, state):
        Float._validate_python(self, value, state)
        if not value > 0:
            raise Invalid(self.message('positive', state), value, state)


class SettingsSchema(Schema):
    allow_extra_fields = True
    filter_extra_fields = True

    threads = Int(min=0)
    coupling_threshold = Float(min=0)
    traction_variant = OneOf(TRACTION_VARIANTS)
    re_min = Float()
    re_max = Float()
    im_min = Float()
    im_max = Float()
    nx = Int(min=2)
    ny = Int(min=2)
    tol_det = PositiveFloat()
    dedup_tol = PositiveFloat()
    singular_ratio = PositiveFloat()
    xatol = PositiveFloat()
    max_evaluations = Int(min=1)
    cross_check_samples = Int(min=1)
    seed = Int(min=0)


def read_solver_section(config_filename):
    """Return the raw (string) values of the ``[solver]`` section.

    ``%(here)s`` expands to the directory of the ini file."""
    if not os.path.exists(config_filename):
        raise ConfigurationError('Config file %r does not exist.' % config_filename)
    config_path = os.path.abspath(config_filename)
    defaults = {
        'here': os.path.dirname(config_path),
        '__file__': config_path,
    }
    parser = NicerConfigParser(config_path, defaults=defaults)
    parser.optionxform = str
    with open(config_path) as fp:
        parser.read_file(fp)
    if not parser.has_section(SOLVER_SECTION):
        log.debug('no [%s] section in %s', SOLVER_SECTION, config_path)
        return {}
    inherited = set(parser.defaults())
    return dict((key, parser.get(SOLVER_SECTION, key))
                for key in parser.options(SOLVER_SECTION)
                if key not in inherited)


def load_settings(config_filename=None, environ=None, overrides=None):
    """Merge defaults < ini file < environment < ``overrides``.

    ``overrides`` entries with a value of ``None`` are ignored so optparse
    values can be passed through unchanged."""
    raw = dict(DEFAULT_SETTINGS)
    if config_filename:
        raw.update(read_solver_section(config_filename))
    if environ is None:
        environ = os.environ
    threads = environ.get(THREADS_ENV, '').strip()
    if threads:
        raw['threads'] = threads
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value

    try:
        values = SettingsSchema().to_python(raw)
    except Invalid as e:
        error_dict = e.error_dict or {}
        if not error_dict:
            raise ConfigurationError(str(e))
        key = sorted(error_dict)[0]
        raise ConfigurationError('invalid setting %r: %s' % (key, error_dict[key]))
    return Settings(values)


def resolve_threads(threads):
    """0 means "one worker per CPU"."""
    if threads > 0:
        return threads
    return os.cpu_count() or 1
