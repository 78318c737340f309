# -*- coding: utf-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

import logging

import simplejson
from formencode.api import Invalid
from formencode.schema import Schema

from rayleighmt.lib.errors import MalformedMaterial, MissingField, NonFinite
from rayleighmt.model.material import FIELD_NAMES, MaterialCoefficients
from rayleighmt.validation.finite_number_validator import FiniteNumberValidator


__all__ = ['MaterialSchema', 'load_material', 'validate_coefficients']

log = logging.getLogger(__name__)

class MaterialSchema(Schema):
    """All 13 coefficients, keyed by their material file names. Unknown
    keys (comments, provenance) are dropped."""
    allow_extra_fields = True
    filter_extra_fields = True

    def __init__(self, *args, **kwargs):
        super(MaterialSchema, self).__init__(*args, **kwargs)
        self.fields = dict(self.fields)
        for name in FIELD_NAMES:
            self.fields[name] = FiniteNumberValidator()


def validate_coefficients(raw):
    """Return ``MaterialCoefficients`` for a name -> number mapping.

    The first offending coefficient (in material file order) decides the
    error: ``MissingField`` if the key is absent, ``NonFinite`` otherwise.
    Anything but a mapping raises ``MalformedMaterial``."""
    if not isinstance(raw, dict):
        raise MalformedMaterial('expected a JSON object of coefficients, got %s'
                                % type(raw).__name__)
    for name in FIELD_NAMES:
        if name not in raw:
            raise MissingField(name)
    try:
        values = MaterialSchema().to_python(raw)
    except Invalid as e:
        error_dict = e.error_dict or {}
        for name in FIELD_NAMES:
            if name in error_dict:
                raise NonFinite(name, str(error_dict[name]))
        raise NonFinite(FIELD_NAMES[0], str(e))
    return MaterialCoefficients.from_mapping(values)


def load_material(filename):
    """Read and validate a JSON material file.

    I/O and JSON errors propagate unchanged (``IOError``/``ValueError``)."""
    with open(filename, 'rb') as fp:
        raw = simplejson.load(fp)
    log.debug('loaded material from %s', filename)
    return validate_coefficients(raw)
