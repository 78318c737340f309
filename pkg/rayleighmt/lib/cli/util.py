# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

import logging
import logging.config
import os
import sys

from paste.deploy.loadwsgi import NicerConfigParser

from rayleighmt.config.settings import load_settings
from rayleighmt.lib.errors import ConfigurationError


__all__ = ['LOG_FORMAT', 'has_logging_config', 'init_logging', 'init_rayleighmt']

LOG_FORMAT = '%(asctime)s,%(msecs)03d %(levelname)-5.5s [%(name)s] [%(threadName)s] %(message)s'
_VERBOSITY_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

# handler installed by the previous init_logging() call
_console_handler = None

def has_logging_config(config_filename):
    parser = NicerConfigParser(config_filename)
    parser.read(config_filename)
    return parser.has_section('loggers')


def init_logging(config_filename=None, disable_logging=False, verbosity=0, stream=None):
    """Log to stderr (never stdout). With an ini file the [loggers]
    sections of that file take over."""
    global _console_handler
    root = logging.getLogger()
    if _console_handler is not None:
        root.removeHandler(_console_handler)
        _console_handler = None
    if disable_logging:
        _console_handler = logging.NullHandler()
        root.addHandler(_console_handler)
        root.setLevel(logging.CRITICAL + 1)
        return
    if config_filename and has_logging_config(config_filename):
        config_path = os.path.abspath(config_filename)
        defaults = {'here': os.path.dirname(config_path), '__file__': config_path}
        logging.config.fileConfig(config_path, defaults=defaults,
                                  disable_existing_loggers=False)
    else:
        _console_handler = logging.StreamHandler(stream or sys.stderr)
        _console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt='%H:%M:%S'))
        root.addHandler(_console_handler)
        root.setLevel(logging.WARNING)
    if verbosity > 0:
        level = _VERBOSITY_LEVELS[min(verbosity, len(_VERBOSITY_LEVELS) - 1)]
        root.setLevel(level)


def init_rayleighmt(config_filename=None, disable_logging=False, verbosity=0,
                    overrides=None, environ=None):
    """Configure logging and return the merged solver settings."""
    if config_filename and not os.path.exists(config_filename):
        raise ConfigurationError('Config file %r does not exist.' % config_filename)
    init_logging(config_filename, disable_logging=disable_logging, verbosity=verbosity)
    return load_settings(config_filename, environ=environ, overrides=overrides)
