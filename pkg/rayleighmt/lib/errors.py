# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

from decorator import decorator

__all__ = [
    'AllPointsFailed', 'CommonRoot', 'ConfigurationError', 'DegenerateKernel',
    'DegenerateRoots', 'DomainError', 'IndistinctRoots', 'InvalidSpeed',
    'InvalidWindow', 'MalformedMaterial', 'MaterialError', 'MissingField',
    'ModeError', 'ModeFailure', 'NonDecaying', 'NonFinite', 'NotARoot',
    'NotStronglyElliptic', 'RayleighError', 'SearchError', 'SecularError',
    'SpectrumError', 'StartFailure', 'Unclassified', 'UnsupportedCoupling',
    'WrongCase', 'reports_mode_failure',
]


class RayleighError(Exception):
    """Base class for all solver exceptions.

    ``name`` is the stable diagnostic identifier printed by the command line
    tools (defaults to the class name)."""

    @property
    def name(self):
        return self.__class__.__name__

    @property
    def message(self):
        return str(self)


class ConfigurationError(RayleighError):
    """An ini setting or command line option holds an unusable value."""

class WrongCase(RayleighError):
    """The material does not belong to the requested coupling case."""


class MaterialError(RayleighError):
    """Base class for errors caused by the constitutive coefficients."""

class MalformedMaterial(MaterialError):
    """The material document is not a mapping of coefficients."""

class MissingField(MaterialError):
    def __init__(self, field):
        self.field = field
        MaterialError.__init__(self, 'missing coefficient %r' % field)

class NonFinite(MaterialError):
    def __init__(self, field, detail=None):
        self.field = field
        msg = 'coefficient %r is not a finite number' % field
        if detail:
            msg += ' (%s)' % detail
        MaterialError.__init__(self, msg)

class NotStronglyElliptic(MaterialError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        msg = 'material is not strongly elliptic, violated: %s' % \
            ', '.join(self.violations)
        MaterialError.__init__(self, msg)


class SpectrumError(RayleighError):
    """The mode speeds do not have the structure the analysis requires."""

class IndistinctRoots(SpectrumError):
    pass

class DomainError(SpectrumError):
    """The arccos argument of the trigonometric cubic formula left [-1, 1]."""

class CommonRoot(SpectrumError):
    pass

class DegenerateRoots(SpectrumError):
    pass


class ModeError(RayleighError):
    """A mode (attenuation exponent or kernel vector) can not be built."""

class InvalidSpeed(ModeError):
    pass

class NonDecaying(ModeError):
    def __init__(self, message, mode_index=None):
        self.mode_index = mode_index
        ModeError.__init__(self, message)

class UnsupportedCoupling(ModeError):
    pass

class DegenerateKernel(ModeError):
    pass

class Unclassified(ModeError):
    pass


class SecularError(RayleighError):
    pass

class ModeFailure(SecularError):
    """Wraps the upstream error which made the secular matrix undefined."""
    def __init__(self, cause):
        self.cause = cause
        SecularError.__init__(self, '%s: %s' % (cause.name, cause))

class NotARoot(SecularError):
    def __init__(self, ratio, threshold):
        self.ratio = ratio
        self.threshold = threshold
        msg = 'smallest/largest singular value ratio %.3e exceeds %.1e' % \
            (ratio, threshold)
        SecularError.__init__(self, msg)


class SearchError(RayleighError):
    pass

class InvalidWindow(SearchError):
    pass

class AllPointsFailed(SearchError):
    pass

class StartFailure(SearchError):
    pass


@decorator
def reports_mode_failure(func, *args, **kwargs):
    """Re-raise material, spectrum and mode errors as ``ModeFailure`` so a
    scan can record the point instead of aborting."""
    try:
        return func(*args, **kwargs)
    except (MaterialError, SpectrumError, ModeError) as e:
        raise ModeFailure(e) from e
