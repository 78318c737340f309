#!/usr/bin/env python
# -*- coding: utf-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

from pythonic_testcase import *

from rayleighmt.lib.test.support import *


def suite():
    from rayleighmt.config.tests import settings_test
    from rayleighmt.lib.tests import (cli_commands_test, errors_test,
        linalg_test, modes_test, report_test, search_test, secular_test,
        serialization_test, special_cases_test, spectrum_test)
    from rayleighmt.model.tests import material_test
    from rayleighmt.validation.tests import material_validator_test

    # do not export 'unittest' via '*' import from this module
    import unittest
    suite = unittest.TestSuite()
    for name, symbol in sorted(locals().items()):
        if name.endswith('_test'):
            tests = getattr(symbol, 'suite')()
            suite.addTest(tests)
    return suite

if __name__ == '__main__':
    # do not export 'unittest' via '*' import from this module
    import unittest
    unittest.main(defaultTest='suite')
