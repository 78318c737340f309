# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Decoupled materials.

case i   (beta = eps1 = eps2 = 0): elastic and microthermal systems separate
case ii  (m = eps1 = eps2 = 0): thermoelastic system without microtemperatures
case iii (beta = m = 0): temperature separates from the elastic/microthermal
         system

Each case has closed-form mode speeds and kernel vectors; cases i and ii
also have an explicit secular function. Case iii is evaluated through the
determinant only.
"""

import dataclasses
import itertools
import logging
import math

import numpy as np

from rayleighmt.lib.errors import (DegenerateKernel, DegenerateRoots,
    MaterialError, NotStronglyElliptic, SpectrumError, WrongCase)
from rayleighmt.lib.linalg import column_norm_product, determinant, parallel_sine
from rayleighmt.lib.modes import (LONGITUDINAL, TRANSVERSE, ModeBasis,
    as_complex, p_from_t, verified_kernel)
from rayleighmt.lib.report import Report
from rayleighmt.lib.secular import PRINTED, matrix_from_modes
from rayleighmt.lib.spectrum import Q2, Q3, ROOT_RTOL, ModeRoot, RootSet, mode_speeds
from rayleighmt.model.material import (CASE_I, CASE_II, CASE_III,
    SPECIAL_CASES, CouplingCase, check_strong_ellipticity, classify_coupling)

__all__ = [
    'INDETERMINATE', 'NONZERO', 'VANISHING_COUPLINGS', 'ZERO',
    'CaseAux', 'CaseRootSet',
    'case_aux', 'case_iii_longitudinal_vector', 'case_iii_transverse_vector',
    'cross_check_case', 'explicit_case_i', 'explicit_case_ii',
    'limit_consistency', 'mode_vectors_case', 'reduced_cubic', 'roots_case',
    'secular_case_det', 'secular_case_explicit', 'secular_case_matrix',
    'zero_class',
]

log = logging.getLogger(__name__)

VANISHING_COUPLINGS = {
    CASE_I: ('beta', 'eps1', 'eps2'),
    CASE_II: ('m', 'eps1', 'eps2'),
    CASE_III: ('beta', 'm'),
}

ZERO = 'zero'
NONZERO = 'nonzero'
INDETERMINATE = 'indeterminate'
KERNEL_SINE = 1e-8


@dataclasses.dataclass(frozen=True)
class CaseRootSet(RootSet):
    case: CouplingCase = None


@dataclasses.dataclass(frozen=True)
class CaseAux(object):
    scalars: dict

    def __getitem__(self, key):
        return self.scalars[key]


def _special_case(case):
    case = CouplingCase.from_tag(case)
    if case.tag not in SPECIAL_CASES:
        raise WrongCase('%s is not a decoupled case' % case.tag)
    return case


def _radical_pair(total, radicand, denominator):
    radical = math.sqrt(radicand)
    return ((total + radical) / denominator, (total - radical) / denominator)


def _case_root_values(M, tag):
    """[(t, source, label)] in mode index order."""
    rho, a, b, k = M.rho, M.a, M.b, M.k
    mu, l2m, d, e = M.mu, M.l2m, M.d, M.e
    if tag == CASE_I:
        m2 = M.m ** 2
        t4, t5 = _radical_pair(m2 + a * d + b * k,
            m2 ** 2 + (a * d - b * k) ** 2 + 2 * m2 * (a * d + b * k), 2 * a * b)
        return [(mu / rho, Q2, 'mu/rho'), (M.d2 / b, Q2, 'd2/b'),
                (l2m / rho, Q3, '(lambda+2mu)/rho'),
                (t4, Q3, 'microthermal+'), (t5, Q3, 'microthermal-')]
    elif tag == CASE_II:
        beta2 = M.beta ** 2
        t4, t5 = _radical_pair(a * l2m + beta2 + k * rho,
            beta2 ** 2 + (a * l2m - rho * k) ** 2 + 2 * beta2 * (a * l2m + rho * k), 2 * a * rho)
        return [(mu / rho, Q2, 'mu/rho'), (M.d2 / b, Q2, 'd2/b'),
                (d / b, Q3, 'd/b'),
                (t4, Q3, 'thermoelastic+'), (t5, Q3, 'thermoelastic-')]
    elif tag == CASE_III:
        t1, t2 = _radical_pair(mu * b + rho * M.d2,
            (mu * b - rho * M.d2) ** 2 + 4 * rho * b * M.eps2 ** 2, 2 * rho * b)
        t4, t5 = _radical_pair(b * l2m + d * rho,
            (b * l2m - rho * d) ** 2 + 4 * rho * b * e ** 2, 2 * rho * b)
        return [(t1, Q2, 'transverse+'), (t2, Q2, 'transverse-'),
                (k / a, Q3, 'k/a'),
                (t4, Q3, 'longitudinal+'), (t5, Q3, 'longitudinal-')]
    raise WrongCase('%s is not a decoupled case' % tag)


def roots_case(M, case, threshold=0.0):
    case = _special_case(case)
    actual = classify_coupling(M, threshold)
    if actual.tag != case.tag:
        raise WrongCase('material is %s, not %s' % (actual.tag, case.tag))
    report = check_strong_ellipticity(M)
    if not report:
        raise NotStronglyElliptic(report.violations)
    entries = _case_root_values(M, case.tag)
    roots = tuple(ModeRoot(index, t, source, label)
                  for index, (t, source, label) in enumerate(entries, 1))
    tolerance = ROOT_RTOL * max(root.t for root in roots)
    for r, s in itertools.combinations(roots, 2):
        if abs(r.t - s.t) <= tolerance:
            raise DegenerateRoots('%s roots %d (%s) and %d (%s) coincide at t=%r'
                % (case.tag, r.index, r.label, s.index, s.label, r.t))
    gap = min(abs(r.t - s.t) for r, s in itertools.combinations(roots, 2))
    return CaseRootSet(roots=roots, pairwise_min_gap=gap, case=case)


def reduced_cubic(M, case):
    """(b4, b2, b0) from the factorized q3 of a decoupled case: one linear
    factor (t - t3) times a quadratic t^2 - s t + P."""
    tag = _special_case(case).tag
    rho, a, b, k = M.rho, M.a, M.b, M.k
    l2m, d, e = M.l2m, M.d, M.e
    if tag == CASE_I:
        t3 = l2m / rho
        s = (M.m ** 2 + a * d + b * k) / (a * b)
        P = k * d / (a * b)
    elif tag == CASE_II:
        t3 = d / b
        s = (a * l2m + M.beta ** 2 + k * rho) / (a * rho)
        P = l2m * k / (a * rho)
    else:
        t3 = k / a
        s = (b * l2m + d * rho) / (rho * b)
        P = (l2m * d - e ** 2) / (rho * b)
    return (t3 + s, t3 * s + P, t3 * P)


def case_iii_transverse_vector(M, t, p, sign=-1):
    """(-eps2 p, eps2, sign p Psi^, Psi^, 0), Psi^ = rho t - mu; the kernel
    needs sign = -1."""
    psi_hat = M.rho * t - M.mu
    u = np.array([-M.eps2 * p, M.eps2, sign * p * psi_hat, psi_hat, 0], dtype=complex)
    return u, psi_hat


def case_iii_longitudinal_vector(M, t, p, fourth_p=None):
    """(e, e p, Psi, p' Psi, 0), Psi = rho t - (lambda + 2 mu); p' is the
    mode's own p unless ``fourth_p`` is given."""
    if fourth_p is None:
        fourth_p = p
    psi = M.rho * t - M.l2m
    e = M.e
    u = np.array([e, e * p, psi, fourth_p * psi, 0], dtype=complex)
    return u, psi


def _case_vector(M, v, tag, index, t, p):
    """(u, aux, polarization) of mode ``index``."""
    if tag in (CASE_I, CASE_II) and index == 1:
        return np.array([-p, 1, 0, 0, 0], dtype=complex), {}, TRANSVERSE
    if tag in (CASE_I, CASE_II) and index == 2:
        return np.array([0, 0, -p, 1, 0], dtype=complex), {}, TRANSVERSE
    if tag == CASE_I:
        if index == 3:
            return np.array([1, p, 0, 0, 0], dtype=complex), {}, LONGITUDINAL
        pi = M.m ** 2 * t + (M.a * t - M.k) * (M.d1 + M.d3)
        u = np.array([0, 0, pi, p * pi, M.m * v * (M.b * t - M.d2)], dtype=complex)
        return u, {'Pi_%d' % index: pi}, LONGITUDINAL
    if tag == CASE_II:
        if index == 3:
            return np.array([0, 0, 1, p, 0], dtype=complex), {}, LONGITUDINAL
        omega = M.beta ** 2 * t + (M.a * t - M.k) * (M.lambda_ + M.mu)
        u = np.array([omega, p * omega, 0, 0, M.beta * v * (M.rho * t - M.mu)], dtype=complex)
        return u, {'Omega_%d' % index: omega}, LONGITUDINAL
    # case iii
    if index in (1, 2):
        u, psi_hat = case_iii_transverse_vector(M, t, p)
        return u, {'Psi_hat_%d' % index: psi_hat}, TRANSVERSE
    if index == 3:
        return np.array([0, 0, 0, 0, M.eps2], dtype=complex), {}, LONGITUDINAL
    u, psi = case_iii_longitudinal_vector(M, t, p)
    return u, {'Psi_%d' % index: psi}, LONGITUDINAL


def mode_vectors_case(M, v, case, roots=None):
    """The five closed-form kernel vectors, each checked against the numeric
    kernel of D_{p_k}."""
    case = _special_case(case)
    if roots is None:
        roots = roots_case(M, case)
    v = as_complex(v)
    exponents = [p_from_t(v, r.t, r.index) for r in roots]
    for x, y in itertools.combinations(exponents, 2):
        if abs(x.p - y.p) <= 1e-12 * max(abs(x.p), abs(y.p)):
            raise DegenerateKernel('modes %d and %d share p=%r' % (x.mode_index, y.mode_index, x.p))
    bases = []
    for r, exponent in zip(roots, exponents):
        u, aux, polarization = _case_vector(M, v, case.tag, r.index, r.t, exponent.p)
        kernel = verified_kernel(M, v, exponent.p, u)
        sine = parallel_sine(kernel, u)
        if sine > KERNEL_SINE:
            raise DegenerateKernel('%s mode %d is not in the kernel of D_p (sine %.2e)'
                                   % (case.tag, r.index, sine))
        bases.append(ModeBasis(mode=r, p=exponent, u_tilde=u, aux=aux,
                               polarization=polarization))
    return bases


def case_aux(bases):
    scalars = {}
    for mb in bases:
        scalars.update(mb.aux)
    return CaseAux(scalars=scalars)


def secular_case_matrix(M, v, case, roots=None, variant=PRINTED):
    return matrix_from_modes(M, v, mode_vectors_case(M, v, case, roots=roots), variant=variant)


def secular_case_det(M, v, case, roots=None, variant=PRINTED):
    return determinant(secular_case_matrix(M, v, case, roots=roots, variant=variant).A)


def _sum_abs(terms):
    return sum(abs(term) for term in terms)


def explicit_case_i(M, v, p, t5):
    """(value, scale) of the printed case i secular function; ``p`` holds
    p1..p5. ``scale`` multiplies the summed term magnitudes of each factor."""
    v = as_complex(v)
    p1, p2, p3, p4, p5 = p
    rho, a, b, k, mu, m, d = M.rho, M.a, M.b, M.k, M.mu, M.m, M.d
    d23 = M.d2 + M.d3
    X = b * v ** 2 - d23
    rayleigh = (4 * mu ** 2 * p1 * p2, (rho * v ** 2 - 2 * mu) ** 2)
    brace = (
        b * p4 * X * ((k - a * t5) * X + m ** 2 * v ** 2),
        p5 * p3 * p4 * d23 ** 2 * (-2 * a * b * t5 + a * d + b * k),
        p5 * a * (d - b * t5) * X ** 2,
        p5 * m ** 2 * d23 * ((p3 * p4 + 1) * d23 - b * v ** 2),
    )
    value = v * sum(rayleigh) * sum(brace)
    return value, abs(v) * _sum_abs(rayleigh) * _sum_abs(brace)


def explicit_case_ii(M, v, p, t5):
    v = as_complex(v)
    p1, p2, p3, p4, p5 = p
    rho, a, k, mu, beta = M.rho, M.a, M.k, M.mu, M.beta
    d23 = M.d2 + M.d3
    R = rho * v ** 2 - 2 * mu
    micro = ((M.b * v ** 2 - d23) ** 2, p2 * p3 * d23 ** 2)
    brace = (
        p4 * rho * R * (beta * v ** 2 - (k - a * t5) * (2 * mu - rho * v ** 2)),
        p5 * 4 * mu ** 2 * p1 * p4 * (a * (M.l2m - 2 * rho * t5) + k * rho),
        p5 * a * R ** 2 * (M.l2m - rho * t5),
        p5 * 2 * beta ** 2 * mu * (2 * mu + 2 * mu * p1 * p4 - rho * v ** 2),
    )
    value = v * sum(micro) * sum(brace)
    return value, abs(v) * _sum_abs(micro) * _sum_abs(brace)


_explicit = {CASE_I: explicit_case_i, CASE_II: explicit_case_ii}

def _explicit_scaled(M, v, case, roots=None):
    case = _special_case(case)
    if case.tag not in _explicit:
        raise WrongCase('no explicit secular function for %s' % case.tag)
    if roots is None:
        roots = roots_case(M, case)
    v = as_complex(v)
    if v == 0:
        return 0j, 0.0
    p = [p_from_t(v, r.t, r.index).p for r in roots]
    return _explicit[case.tag](M, v, p, roots[5].t)


def secular_case_explicit(M, v, case, roots=None):
    return _explicit_scaled(M, v, case, roots=roots)[0]


def zero_class(value, scale, zero_rtol=1e-8, nonzero_rtol=1e-3):
    magnitude = abs(value)
    if magnitude <= zero_rtol * scale:
        return ZERO
    if magnitude >= nonzero_rtol * scale:
        return NONZERO
    return INDETERMINATE


def cross_check_case(M, case, samples=200, seed=12345, variant=PRINTED):
    """Compare the zero/nonzero classification of the explicit secular
    function and of det A at ``samples`` random decaying speeds."""
    case = _special_case(case)
    if case.tag not in _explicit:
        raise WrongCase('no explicit secular function for %s' % case.tag)
    roots = roots_case(M, case)
    low, high = math.sqrt(roots.t_min), math.sqrt(max(roots.t_values))
    rng = np.random.default_rng(seed)
    re_values = rng.uniform(0.3 * low, 1.2 * high, samples)
    im_values = rng.uniform(0.1 * low, 0.5 * low, samples)
    agreed = 0
    disagreements = []
    for v_re, v_im in zip(re_values, im_values):
        v = complex(v_re, -v_im)
        explicit, explicit_scale = _explicit_scaled(M, v, case, roots=roots)
        A = secular_case_matrix(M, v, case, roots=roots, variant=variant).A
        explicit_class = zero_class(explicit, explicit_scale)
        det_class = zero_class(determinant(A), column_norm_product(A))
        if explicit_class == det_class:
            agreed += 1
        else:
            disagreements.append({'v': {'re': v.real, 'im': v.imag},
                                  'explicit': explicit_class, 'det': det_class})
    log.debug('%s cross-check: %d/%d agree', case.tag, agreed, samples)
    return Report(agreed == samples, case=case.tag, agreed=agreed, samples=samples,
                  disagreements=disagreements)


def limit_consistency(M_general, case, scales=(1e-2, 1e-4, 1e-6)):
    """Scale the couplings that vanish in ``case`` by each of ``scales`` and
    compare the general mode speeds with the case closed forms.

    The report is truthy when no error occurred and the gaps do not grow."""
    case = _special_case(case)
    vanishing = VANISHING_COUPLINGS[case.tag]
    limit = M_general.replace(**dict((name, 0.0) for name in vanishing))
    reference = sorted(t for t, source, label in _case_root_values(limit, case.tag))
    gaps = []
    errors = []
    for scale in scales:
        scaled = M_general.replace(**dict((name, scale * M_general[name]) for name in vanishing))
        try:
            t_values = sorted(mode_speeds(scaled).t_values)
        except (MaterialError, SpectrumError) as e:
            errors.append({'scale': scale, 'error': e.name})
            gaps.append(math.nan)
            continue
        gaps.append(max(abs(t - s) for t, s in zip(t_values, reference)))
    rates = []
    for (s0, g0), (s1, g1) in zip(zip(scales, gaps), zip(scales[1:], gaps[1:])):
        if g0 > 0 and g1 > 0:
            rates.append(math.log(g0 / g1) / math.log(s0 / s1))
        else:
            rates.append(math.nan)
    slack = 1e-12 * max(reference)
    monotone = all(g1 <= g0 + slack for g0, g1 in zip(gaps, gaps[1:]))
    return Report(not errors and monotone, case=case.tag, scales=list(scales),
                  gaps=gaps, rates=rates, reference=reference, errors=errors)
