# -*- coding: utf-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

import math

from formencode.api import FancyValidator, Invalid


__all__ = ['FiniteNumberValidator']

class FiniteNumberValidator(FancyValidator):
    """Accepts finite real numbers, returns a float.

    Strings are rejected (material files hold JSON numbers), and so are
    booleans even though Python treats them as integers."""
    not_empty = True

    messages = dict(
        number='Please enter a number',
        finite='Please enter a finite number',
    )

    def _convert_to_python(self, value, state):
        if isinstance(value, (bool, str, bytes)):
            raise Invalid(self.message('number', state), value, state)
        try:
            number = float(value)
        except (ValueError, TypeError):
            raise Invalid(self.message('number', state), value, state)
        if not math.isfinite(number):
            raise Invalid(self.message('finite', state), value, state)
        return number
