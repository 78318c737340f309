# -*- coding: UTF-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.


__all__ = ['Report']

class Report(object):
    """Outcome of a check: a truth ``value`` plus named details.

    Details are available as attributes (``report.violations``) and the
    report itself is truthy iff the check passed."""

    def __init__(self, value, **data):
        self.value = bool(value)
        self.data = data

    def __repr__(self):
        klassname = self.__class__.__name__
        extra_data = [repr(self.value)]
        for key, value in sorted(self.data.items()):
            extra_data.append('%s=%r' % (key, value))
        return '%s(%s)' % (klassname, ', '.join(extra_data))

    def __eq__(self, other):
        if isinstance(other, bool):
            return self.value == other
        elif isinstance(other, Report):
            return (self.value == other.value) and (self.data == other.data)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return self.value

    def __getattr__(self, key):
        # avoid recursion while unpickling/copying (no 'data' yet)
        data = self.__dict__.get('data', {})
        if key in data:
            return data[key]
        klassname = self.__class__.__name__
        msg = '%r object has no attribute %r' % (klassname, key)
        raise AttributeError(msg)

    def as_dict(self, value_key='passed'):
        result = {value_key: self.value}
        result.update(self.data)
        return result
