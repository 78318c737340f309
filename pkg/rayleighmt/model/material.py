# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Constitutive coefficients of an isotropic thermoelastic solid with
microtemperatures, the strong-ellipticity test and the coefficients of the
two polynomials q2(t) = t^2 - a2 t + a0 and q3(t) = t^3 - b4 t^2 + b2 t - b0
whose roots are the squared mode speeds.
"""

import dataclasses
import logging

from rayleighmt.lib.errors import NotStronglyElliptic
from rayleighmt.lib.report import Report

__all__ = [
    'CASE_I', 'CASE_II', 'CASE_III', 'CONDITIONS',
    'DEGENERATE', 'FIELD_NAMES', 'GENERAL', 'SPECIAL_CASES',
    'CouplingCase', 'CubicCoefficients', 'EllipticityReport',
    'MaterialCoefficients',
    'check_distinct_cubic_roots', 'check_strong_ellipticity',
    'classify_coupling', 'derived_cubic',
]

log = logging.getLogger(__name__)

# order of the keys in material files
FIELD_NAMES = ('rho', 'a', 'b', 'k', 'lambda', 'mu', 'd1', 'd2', 'd3',
               'eps1', 'eps2', 'beta', 'm')

# "lambda" is a keyword
def _attribute(name):
    return 'lambda_' if name == 'lambda' else name


@dataclasses.dataclass(frozen=True)
class MaterialCoefficients(object):
    rho: float
    a: float
    b: float
    k: float
    lambda_: float
    mu: float
    d1: float
    d2: float
    d3: float
    eps1: float
    eps2: float
    beta: float
    m: float

    @classmethod
    def from_mapping(cls, values):
        return cls(**dict((_attribute(name), float(values[name])) for name in FIELD_NAMES))

    def __getitem__(self, name):
        return getattr(self, _attribute(name))

    def as_dict(self):
        return dict((name, self[name]) for name in FIELD_NAMES)

    def replace(self, **changes):
        """Return a copy with some coefficients changed (material file names,
        ``lambda`` included)."""
        changes = dict((_attribute(name), float(value)) for name, value in changes.items())
        return dataclasses.replace(self, **changes)

    @property
    def d(self):
        return self.d1 + self.d2 + self.d3

    @property
    def l2m(self):
        """P-wave modulus lambda + 2 mu"""
        return self.lambda_ + 2 * self.mu

    @property
    def e(self):
        """longitudinal elastic/microthermal coupling eps1 + 2 eps2"""
        return self.eps1 + 2 * self.eps2


class EllipticityReport(Report):
    @property
    def passed(self):
        return self.value

    def as_dict(self):
        return {
            'passed': self.passed,
            'violations': list(self.violations),
            'margins': dict(self.margins),
        }


# (identifier, signed slack: positive means satisfied)
CONDITIONS = (
    ('rho_positive', lambda M: M.rho),
    ('a_positive', lambda M: M.a),
    ('b_positive', lambda M: M.b),
    ('k_positive', lambda M: M.k),
    ('lambda_2mu_positive', lambda M: M.l2m),
    ('mu_positive', lambda M: M.mu),
    ('longitudinal_coupling', lambda M: M.l2m * M.d - M.e ** 2),
    ('transverse_coupling', lambda M: M.mu * M.d2 - M.eps2 ** 2),
)

def check_strong_ellipticity(M):
    margins = dict((identifier, margin(M)) for identifier, margin in CONDITIONS)
    violations = [identifier for identifier, margin in CONDITIONS
                  if not margins[identifier] > 0]
    return EllipticityReport(not violations, violations=violations, margins=margins)


@dataclasses.dataclass(frozen=True)
class CubicCoefficients(object):
    d: float
    a2: float
    a0: float
    b4: float
    b2: float
    b0: float
    h0: float
    h1: float

    def as_dict(self):
        return dataclasses.asdict(self)


def derived_cubic(M):
    report = check_strong_ellipticity(M)
    if not report:
        raise NotStronglyElliptic(report.violations)
    rho, a, b, k = M.rho, M.a, M.b, M.k
    mu, l2m, d, e = M.mu, M.l2m, M.d, M.e
    beta, m = M.beta, M.m

    a2 = mu / rho + M.d2 / b
    a0 = (mu * M.d2 - M.eps2 ** 2) / (rho * b)
    b4 = (l2m / rho + d / b) + (1 / a) * (m ** 2 / b + beta ** 2 / rho) + k / a
    b2 = (1 / (rho * a * b * d)) * ((a * d + m ** 2) * (l2m * d - e ** 2) + (d * beta - e * m) ** 2) \
        + (k / a) * (l2m / rho + d / b)
    b0 = k / (rho * a * b) * (l2m * d - e ** 2)
    h1 = (b4 ** 2 - 3 * b2) / 3
    h0 = -(2 * b4 ** 3 - 9 * b2 * b4 + 27 * b0) / 27
    return CubicCoefficients(d=d, a2=a2, a0=a0, b4=b4, b2=b2, b0=b0, h0=h0, h1=h1)


def check_distinct_cubic_roots(C):
    return C.h0 ** 2 < (4 / 27) * C.h1 ** 3


GENERAL = 'general'
CASE_I = 'case_i'
CASE_II = 'case_ii'
CASE_III = 'case_iii'
DEGENERATE = 'degenerate'
SPECIAL_CASES = (CASE_I, CASE_II, CASE_III)

_descriptions = {
    GENERAL: 'fully coupled (m, beta and eps1 or eps2 nonzero)',
    CASE_I: 'beta = eps1 = eps2 = 0: classical elasticity decoupled from '
            'the microthermal system',
    CASE_II: 'm = eps1 = eps2 = 0: thermoelasticity decoupled from the '
             'microtemperatures',
    CASE_III: 'beta = m = 0: temperature decoupled from the '
              'elastic/microthermal system',
    DEGENERATE: 'coupling pattern not covered by the analysis',
}


@dataclasses.dataclass(frozen=True)
class CouplingCase(object):
    tag: str
    description: str = ''

    @classmethod
    def from_tag(cls, tag):
        if isinstance(tag, CouplingCase):
            return tag
        if tag not in _descriptions:
            raise ValueError('unknown coupling case %r' % (tag, ))
        return cls(tag, _descriptions[tag])

    def as_dict(self):
        return {'tag': self.tag, 'description': self.description}


def classify_coupling(M, threshold=0.0):
    """Literal zero tests by default; ``threshold`` treats |x| <= threshold
    as zero."""
    def nonzero(x):
        return abs(x) > threshold
    eps1, eps2, beta, m = (nonzero(M.eps1), nonzero(M.eps2),
                           nonzero(M.beta), nonzero(M.m))
    if m and beta and (eps1 or eps2):
        tag = GENERAL
    elif m and not beta and not (eps1 or eps2):
        tag = CASE_I
    elif beta and not m and not (eps1 or eps2):
        tag = CASE_II
    elif not (beta or m) and eps1 and eps2:
        tag = CASE_III
    else:
        tag = DEGENERATE
    log.debug('coupling case: %s', tag)
    return CouplingCase.from_tag(tag)
