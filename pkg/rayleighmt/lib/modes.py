# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Plane-wave modes of the half-space for a trial speed v.

A mode with squared speed t_k has the attenuation exponent p_k given by
t_k = v^2 / (p_k^2 + 1) and a kernel vector U = (U1, U2, A1, A2, B) of the
propagation matrix D_p = p^2 Q1 + p Q2 + R, in the component order
(u1, u2, tau1, tau2, chi).
"""

import dataclasses
import logging
import math

import numpy as np

from rayleighmt.lib.errors import (DegenerateKernel, InvalidSpeed,
    NonDecaying, Unclassified, UnsupportedCoupling)
from rayleighmt.lib.linalg import NULLSPACE_RTOL, max_normalized, numeric_nullspace
from rayleighmt.model.material import GENERAL, classify_coupling

__all__ = [
    'LONGITUDINAL', 'ORTHOGONAL', 'PARALLEL', 'POLARIZATION_RTOL', 'TRANSVERSE',
    'AttenuationExponent', 'ComplexSpeed', 'ModeBasis',
    'as_complex', 'assemble_Dp', 'branch_residuals', 'factorized_determinant',
    'gamma_coefficient', 'longitudinal_vector', 'mode_vector',
    'numeric_nullspace', 'p_from_t', 'polarization_check',
    'propagation_blocks', 'transverse_vector', 'verified_kernel',
]

log = logging.getLogger(__name__)

TRANSVERSE = 'transverse'
LONGITUDINAL = 'longitudinal'
ORTHOGONAL = 'orthogonal'
PARALLEL = 'parallel'
POLARIZATION_RTOL = 1e-10


@dataclasses.dataclass(frozen=True)
class ComplexSpeed(object):
    """v = re - im_neg * i with re >= 0 (wave speed) and im_neg >= 0 (time
    damping)."""
    re: float
    im_neg: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im_neg)):
            raise InvalidSpeed('speed components must be finite: %r' % (self, ))
        if self.re < 0 or self.im_neg < 0:
            raise InvalidSpeed('speed %r outside Re v >= 0, Im v <= 0' % (self.value, ))
        if self.re == 0 and self.im_neg == 0:
            raise InvalidSpeed('speed must not be zero')

    @classmethod
    def from_complex(cls, v):
        v = complex(v)
        return cls(float(v.real), float(-v.imag))

    @property
    def value(self):
        return complex(self.re, -self.im_neg)

    def __complex__(self):
        return self.value

    def as_dict(self):
        return {'re': self.re, 'im': -self.im_neg}


def as_complex(v):
    if isinstance(v, ComplexSpeed):
        return v.value
    return complex(v)


@dataclasses.dataclass(frozen=True)
class AttenuationExponent(object):
    p: complex
    mode_index: int = 0

    @property
    def alpha(self):
        return self.p.real

    @property
    def beta_im(self):
        return self.p.imag


def p_from_t(v, t, mode_index=0):
    """The root of p^2 = v^2/t - 1 with Im p > 0."""
    v = as_complex(v)
    p = complex(np.sqrt(np.complex128(v * v / t - 1.0)))
    if p.imag < 0:
        p = -p
    if not p.imag > 0:
        raise NonDecaying('mode %d (t=%r) does not decay for v=%r' % (mode_index, t, v),
                          mode_index=mode_index)
    return AttenuationExponent(p, mode_index)


def branch_residuals(v, t, p):
    """Relative residuals of t(alpha^2 - beta^2 + 1) = vR^2 - vI^2 and
    t alpha beta = -vR vI."""
    v = as_complex(v)
    p = complex(p)
    v_r, v_i = v.real, -v.imag
    alpha, beta = p.real, p.imag
    lhs = t * (alpha ** 2 - beta ** 2 + 1)
    rhs = v_r ** 2 - v_i ** 2
    scale = max(t * (alpha ** 2 + beta ** 2 + 1), v_r ** 2 + v_i ** 2)
    real_part = abs(lhs - rhs) / scale
    scale = max(t * abs(alpha * beta), abs(v_r * v_i), np.finfo(float).tiny)
    imag_part = abs(t * alpha * beta + v_r * v_i) / scale
    return (real_part, imag_part)


def propagation_blocks(M, v):
    """(Q1, Q2, R) with D_p = p^2 Q1 + p Q2 + R. The "d0" of the R block is
    d = d1 + d2 + d3, the same d as in Q1."""
    v = as_complex(v)
    v2 = v * v
    mu, l2m, e, d = M.mu, M.l2m, M.e, M.d
    lm = M.lambda_ + M.mu
    es = M.eps1 + M.eps2
    d13 = M.d1 + M.d3
    vb = v * M.beta
    mv = M.m * v
    Q1 = np.array([
        [mu,      0,   M.eps2, 0, 0],
        [0,       l2m, 0,      e, 0],
        [M.eps2,  0,   M.d2,   0, 0],
        [0,       e,   0,      d, 0],
        [0,       0,   0,      0, M.k],
    ], dtype=complex)
    Q2 = np.array([
        [0,  lm, 0,   es,  0],
        [lm, 0,  es,  0,   vb],
        [0,  es, 0,   d13, 0],
        [es, 0,  d13, 0,   mv],
        [0,  vb, 0,   mv,  0],
    ], dtype=complex)
    R = np.array([
        [l2m - M.rho * v2, 0,               e,               0,               vb],
        [0,                mu - M.rho * v2, 0,               M.eps2,          0],
        [e,                0,               d - M.b * v2,    0,               mv],
        [0,                M.eps2,          0,               M.d2 - M.b * v2, 0],
        [vb,               0,               mv,              0,               M.k - M.a * v2],
    ], dtype=complex)
    return Q1, Q2, R


def assemble_Dp(M, v, p):
    Q1, Q2, R = propagation_blocks(M, v)
    p = complex(p)
    return p * p * Q1 + p * Q2 + R


def factorized_determinant(M, v, p, roots):
    """det D_p = rho^2 a b^2 prod_k (t_k (p^2 + 1) - v^2)."""
    v2 = as_complex(v) ** 2
    w = complex(p) ** 2 + 1
    product = complex(M.rho ** 2 * M.a * M.b ** 2)
    for root in roots:
        product *= root.t * w - v2
    return product


@dataclasses.dataclass(frozen=True, eq=False)
class ModeBasis(object):
    mode: object
    p: AttenuationExponent
    u_tilde: np.ndarray
    aux: dict
    polarization: str

    @property
    def index(self):
        return self.mode.index

    @property
    def normalized(self):
        return max_normalized(self.u_tilde)


def transverse_vector(M, t, p):
    """(-p Phi, Phi, -p, 1, 0) with Phi = (b/eps2)(t - d2/b)."""
    phi = (M.b / M.eps2) * (t - M.d2 / M.b)
    u = np.array([-p * phi, phi, -p, 1, 0], dtype=complex)
    return u, {'Phi': phi}


def gamma_coefficient(M, t, modulus=None):
    """b beta (t - modulus/b) + m (eps1 + 2 eps2); the kernel needs
    modulus = d."""
    if modulus is None:
        modulus = M.d
    return M.b * M.beta * (t - modulus / M.b) + M.m * M.e


def longitudinal_vector(M, v, t, p, gamma_modulus=None):
    v = as_complex(v)
    e = M.e
    gamma = gamma_coefficient(M, t, gamma_modulus)
    lam = M.rho * M.m * (t - M.l2m / M.rho) + M.beta * e
    b = v / (M.m * M.beta * t) * (gamma * lam - e * (M.beta * gamma + M.m * lam))
    u = np.array([gamma, p * gamma, lam, p * lam, b], dtype=complex)
    return u, {'Gamma': gamma, 'Lambda': lam}


def verified_kernel(M, v, p, u, rtol=NULLSPACE_RTOL):
    """Raise DegenerateKernel unless D_p has a one dimensional numeric
    kernel and ``u`` is nonzero."""
    kernel = numeric_nullspace(assemble_Dp(M, v, p), rtol=rtol)
    if len(kernel) != 1:
        raise DegenerateKernel('numeric kernel of D_p has dimension %d' % len(kernel))
    if not np.any(u):
        raise DegenerateKernel('closed form kernel vector vanishes')
    return kernel[0]


def mode_vector(M, v, r):
    """Closed-form kernel vector of mode ``r`` (general coupling only)."""
    case = classify_coupling(M)
    if case.tag != GENERAL or M.eps2 == 0:
        raise UnsupportedCoupling('closed form mode vectors need general '
            'coupling with eps2 != 0 (got %s)' % case.tag)
    exponent = p_from_t(v, r.t, r.index)
    p = exponent.p
    if r.index in (1, 2):
        u, aux = transverse_vector(M, r.t, p)
        polarization = TRANSVERSE
    else:
        u, aux = longitudinal_vector(M, v, r.t, p)
        polarization = LONGITUDINAL
    verified_kernel(M, v, p, u)
    return ModeBasis(mode=r, p=exponent, u_tilde=u, aux=aux, polarization=polarization)


def polarization_check(mb, rtol=POLARIZATION_RTOL):
    """Orientation of the displacement (U1, U2) and microtemperature
    (A1, A2) amplitudes relative to n = (1, p), using the unconjugated
    product."""
    p = mb.p.p
    u = mb.u_tilde
    scale = max(1.0, abs(p)) * max(np.max(np.abs(u[:4])), np.finfo(float).tiny)
    tolerance = rtol * scale
    U = (u[0], u[1])
    A = (u[2], u[3])
    def orthogonal(w):
        return abs(w[0] + p * w[1]) <= tolerance
    def parallel(w):
        return abs(w[0] * p - w[1]) <= tolerance
    checks = ((ORTHOGONAL, orthogonal), (PARALLEL, parallel))
    if mb.polarization == LONGITUDINAL:
        # a pure thermal mode (U = A = 0) passes both tests
        checks = checks[::-1]
    for result, check in checks:
        if check(U) and check(A):
            return result
    raise Unclassified('mode %d is neither orthogonal nor parallel to (1, p)' % mb.index)
