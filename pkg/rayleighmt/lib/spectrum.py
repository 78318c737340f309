# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Closed-form mode speeds: the two roots of q2 (radical formula) and the
three roots of q3 (trigonometric formula for a cubic with three distinct
real roots).
"""

import dataclasses
import itertools
import logging
import math

from rayleighmt.lib.errors import CommonRoot, DomainError, IndistinctRoots
from rayleighmt.model.material import derived_cubic, check_distinct_cubic_roots

__all__ = [
    'ARCCOS_CLAMP', 'ROOT_RTOL', 'Q2', 'Q3',
    'ModeRoot', 'RootSet',
    'mode_speeds', 'polynomial_residual', 'root_residual', 'roots_q2',
    'roots_q3',
]

log = logging.getLogger(__name__)

Q2 = 'q2'
Q3 = 'q3'
ARCCOS_CLAMP = 1e-12
ROOT_RTOL = 1e-9


@dataclasses.dataclass(frozen=True)
class ModeRoot(object):
    index: int
    t: float
    source: str
    # provenance of closed-form special case roots
    label: str = ''

    @property
    def is_transverse(self):
        return self.index in (1, 2)

    def as_dict(self):
        result = {'index': self.index, 't': self.t, 'source': self.source}
        if self.label:
            result['label'] = self.label
        return result


@dataclasses.dataclass(frozen=True)
class RootSet(object):
    roots: tuple
    pairwise_min_gap: float

    @classmethod
    def from_roots(cls, roots):
        roots = tuple(roots)
        gap = min(abs(r.t - s.t) for r, s in itertools.combinations(roots, 2))
        return cls(roots=roots, pairwise_min_gap=gap)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, index):
        """1-based, like the mode indices."""
        for root in self.roots:
            if root.index == index:
                return root
        raise KeyError(index)

    @property
    def t_values(self):
        return tuple(root.t for root in self.roots)

    @property
    def t_min(self):
        return min(self.t_values)


def roots_q2(C, M):
    """(t1, t2) with t1 >= t2; the '+' branch of the radical is t1."""
    rho, b, mu, d2, eps2 = M.rho, M.b, M.mu, M.d2, M.eps2
    radical = math.sqrt((mu * b - rho * d2) ** 2 + 4 * rho * b * eps2 ** 2)
    t1 = (mu * b + rho * d2 + radical) / (2 * rho * b)
    t2 = (mu * b + rho * d2 - radical) / (2 * rho * b)
    return (t1, t2)


def roots_q3(C):
    """(t3, t4, t5) in descending order."""
    if not check_distinct_cubic_roots(C):
        raise IndistinctRoots('q3 has a multiple root (h0^2 >= 4/27 h1^3)')
    argument = (-3 * C.h0 / (2 * C.h1)) * math.sqrt(3 / C.h1)
    if abs(argument) > 1 + ARCCOS_CLAMP:
        raise DomainError('arccos argument %r outside [-1, 1]' % argument)
    argument = min(1.0, max(-1.0, argument))
    phi = math.acos(argument) / 3
    amplitude = 2 * math.sqrt(C.h1 / 3)
    roots = [C.b4 / 3 + amplitude * math.cos(phi - 2 * math.pi * (k + 1) / 3)
             for k in (3, 4, 5)]
    return tuple(sorted(roots, reverse=True))


def mode_speeds(M):
    C = derived_cubic(M)
    t1, t2 = roots_q2(C, M)
    q3_roots = roots_q3(C)
    tolerance = ROOT_RTOL * max(C.b4, C.a2)
    for t, s in itertools.product((t1, t2), q3_roots):
        if abs(t - s) <= tolerance:
            raise CommonRoot('q2 and q3 share the root t=%r' % t)
    if abs(t1 - t2) <= tolerance:
        raise IndistinctRoots('q2 has the double root t=%r' % t1)
    for t, s in itertools.combinations(q3_roots, 2):
        if abs(t - s) <= tolerance:
            raise IndistinctRoots('q3 roots %r and %r coincide' % (t, s))

    roots = [ModeRoot(1, t1, Q2), ModeRoot(2, t2, Q2)]
    roots.extend(ModeRoot(index, t, Q3) for index, t in zip((3, 4, 5), q3_roots))
    root_set = RootSet.from_roots(roots)
    log.debug('mode speeds %r (min gap %.3e)', root_set.t_values, root_set.pairwise_min_gap)
    return root_set


def polynomial_residual(C, t):
    """(q2(t), q3(t)) by Horner evaluation."""
    q2 = (t - C.a2) * t + C.a0
    q3 = ((t - C.b4) * t + C.b2) * t - C.b0
    return (q2, q3)


def root_residual(C, root):
    """|q(t)| of the polynomial that produced ``root``, relative to the sum
    of its term magnitudes. Closed-form special case roots are checked
    against the general polynomials as well."""
    t = root.t
    if root.index in (1, 2):
        terms = (t * t, C.a2 * t, C.a0)
        value = polynomial_residual(C, t)[0]
    else:
        terms = (t ** 3, C.b4 * t * t, C.b2 * t, C.b0)
        value = polynomial_residual(C, t)[1]
    scale = sum(abs(term) for term in terms)
    if scale == 0:
        return abs(value)
    return abs(value) / scale
