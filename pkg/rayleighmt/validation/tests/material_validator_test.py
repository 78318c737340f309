# -*- coding: utf-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

import shutil
import tempfile

from formencode.api import Invalid
import simplejson

from rayleighmt.lib.errors import MalformedMaterial, MissingField, NonFinite
from rayleighmt.lib.test import *
from rayleighmt.validation import (FiniteNumberValidator, load_material,
    validate_coefficients)


class FiniteNumberValidatorTest(PythonicTestCase):
    def setUp(self):
        self.validator = FiniteNumberValidator()

    def to_python(self, value):
        return self.validator.to_python(value)

    def assert_invalid(self, value):
        return assert_raises(Invalid, lambda: self.to_python(value))

    def test_accepts_numbers(self):
        assert_equals(1.0, self.to_python(1))
        assert_equals(-0.25, self.to_python(-0.25))

    def test_rejects_non_finite_and_non_numeric_values(self):
        self.assert_invalid(float('nan'))
        self.assert_invalid(float('inf'))
        self.assert_invalid('abc')
        self.assert_invalid('2.5')
        self.assert_invalid(None)
        self.assert_invalid(True)
        self.assert_invalid([1.0])


class ValidateCoefficientsTest(PythonicTestCase):
    def test_accepts_reference_material(self):
        assert_equals(M0, validate_coefficients(dict(M0_VALUES)))

    def test_ignores_unknown_keys(self):
        raw = dict(M0_VALUES, comment='reference material')
        assert_equals(M0, validate_coefficients(raw))

    def test_reports_missing_field(self):
        raw = dict(M0_VALUES)
        del raw['m']
        e = assert_raises(MissingField, lambda: validate_coefficients(raw))
        assert_equals('m', e.field)
        assert_equals('MissingField', e.name)

    def test_reports_first_missing_field_in_file_order(self):
        raw = dict(M0_VALUES)
        del raw['m']
        del raw['rho']
        e = assert_raises(MissingField, lambda: validate_coefficients(raw))
        assert_equals('rho', e.field)

    def test_reports_non_finite_field(self):
        raw = dict(M0_VALUES)
        raw['lambda'] = float('nan')
        e = assert_raises(NonFinite, lambda: validate_coefficients(raw))
        assert_equals('lambda', e.field)

    def test_rejects_non_numeric_field(self):
        raw = dict(M0_VALUES, mu='stiff')
        e = assert_raises(NonFinite, lambda: validate_coefficients(raw))
        assert_equals('mu', e.field)

    def test_rejects_numeric_strings(self):
        raw = dict(M0_VALUES, rho='1.0')
        e = assert_raises(NonFinite, lambda: validate_coefficients(raw))
        assert_equals('rho', e.field)

    def test_rejects_non_mapping(self):
        e = assert_raises(MalformedMaterial, lambda: validate_coefficients([1, 2, 3]))
        assert_equals('MalformedMaterial', e.name)
        assert_contains('list', e.message)


class LoadMaterialTest(PythonicTestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_loads_json_file(self):
        path = write_material(self.directory, M0_VALUES)
        assert_equals(M0, load_material(path))

    def test_nan_literal_is_non_finite(self):
        path = write_material(self.directory, dict(M0_VALUES, beta=float('nan')))
        e = assert_raises(NonFinite, lambda: load_material(path))
        assert_equals('beta', e.field)

    def test_propagates_io_and_parse_errors(self):
        assert_raises(IOError, lambda: load_material(self.directory + '/missing.json'))
        path = self.directory + '/broken.json'
        with open(path, 'w') as fp:
            fp.write('{"rho": ')
        assert_raises(simplejson.JSONDecodeError, lambda: load_material(path))


import unittest
def suite():
    suite = unittest.TestSuite()
    for testcase in (FiniteNumberValidatorTest, ValidateCoefficientsTest, LoadMaterialTest):
        suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(testcase))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
