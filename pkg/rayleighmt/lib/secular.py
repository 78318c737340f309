# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Boundary traction operator S_p, the secular matrix A (column k is
S_{p_k} U^(k)), its determinant, the search objective F = ln|det A| and the
reconstruction of fields and tractions from an amplitude vector.
"""

import dataclasses
import logging

import numpy as np

from rayleighmt.lib.errors import NotARoot, reports_mode_failure
from rayleighmt.lib.linalg import determinant, log_abs_determinant, max_normalized
from rayleighmt.lib.modes import ComplexSpeed, as_complex, mode_vector
from rayleighmt.lib.spectrum import mode_speeds

__all__ = [
    'CONSTITUTIVE', 'F_ZERO_DET', 'PRINTED', 'SINGULAR_RATIO',
    'AmplitudeVector', 'FieldState', 'SecularMatrix',
    'amplitudes', 'amplitudes_from_matrix', 'assemble_Sp',
    'boundary_residual', 'field_eval', 'matrix_from_modes', 'objective_F',
    'objective_from_matrix', 'secular_det', 'secular_matrix',
]

log = logging.getLogger(__name__)

PRINTED = 'printed'
CONSTITUTIVE = 'constitutive'
# ln|det| of an exactly singular matrix; keeps scan grids totally ordered
F_ZERO_DET = -1e308
SINGULAR_RATIO = 1e-6


def assemble_Sp(M, v, p, variant=PRINTED):
    """Traction rows (t21, t22, Lambda21, Lambda22, S2) acting on the mode
    amplitudes (U1, U2, A1, A2, B).

    The printed operator has eps1 in row 3, column 2 and eps2 in row 4,
    column 1; the constitutive variant swaps the two."""
    v = as_complex(v)
    p = complex(p)
    mu, l2m, e = M.mu, M.l2m, M.e
    vb = v * M.beta
    mv = M.m * v
    if variant == PRINTED:
        eps_32, eps_41 = M.eps1, M.eps2
    elif variant == CONSTITUTIVE:
        eps_32, eps_41 = M.eps2, M.eps1
    else:
        raise ValueError('unknown traction variant %r' % (variant, ))
    return np.array([
        [mu * p,     mu,      p * M.eps2, M.eps2,   0],
        [M.lambda_,  l2m * p, M.eps1,     p * e,    vb],
        [p * M.eps2, eps_32,  M.d2 * p,   M.d3,     0],
        [eps_41,     p * e,   M.d1,       M.d * p,  mv],
        [0,          vb,      0,          mv,       M.k * p],
    ], dtype=complex)


@dataclasses.dataclass(frozen=True, eq=False)
class SecularMatrix(object):
    A: np.ndarray
    modes: tuple

    @property
    def columns(self):
        return [self.A[:, k] for k in range(self.A.shape[1])]


def secular_matrix(M, v, roots=None, variant=PRINTED):
    """``roots`` (a RootSet of ``M``) may be passed to avoid recomputing the
    mode speeds for every trial speed."""
    if roots is None:
        roots = mode_speeds(M)
    modes = tuple(mode_vector(M, v, r) for r in roots)
    return matrix_from_modes(M, v, modes, variant=variant)


def matrix_from_modes(M, v, modes, variant=PRINTED):
    A = np.empty((5, len(modes)), dtype=complex)
    for k, mb in enumerate(modes):
        A[:, k] = assemble_Sp(M, v, mb.p.p, variant=variant) @ mb.u_tilde
    return SecularMatrix(A=A, modes=tuple(modes))


def secular_det(M, v, roots=None, variant=PRINTED):
    return determinant(secular_matrix(M, v, roots=roots, variant=variant).A)


def objective_from_matrix(A):
    value = log_abs_determinant(A)
    if value == -np.inf:
        return F_ZERO_DET
    return value


@reports_mode_failure
def objective_F(M, vR, vI, roots=None, variant=PRINTED):
    """F = ln|det A| at v = vR - vI i; errors surface as ModeFailure."""
    v = ComplexSpeed(float(vR), float(vI))
    return objective_from_matrix(secular_matrix(M, v, roots=roots, variant=variant).A)


@dataclasses.dataclass(frozen=True, eq=False)
class AmplitudeVector(object):
    gamma: np.ndarray
    # smallest/largest singular value of the column-equilibrated matrix
    singular_ratio: float = 0.0

    def __iter__(self):
        return iter(self.gamma)


def amplitudes_from_matrix(A, ratio=SINGULAR_RATIO):
    """Kernel direction of A after scaling every column to unit norm.

    Equilibration makes the singular value test independent of the
    arbitrary normalization of the closed-form mode vectors."""
    A = np.asarray(A, dtype=complex)
    norms = np.linalg.norm(A, axis=0)
    norms = np.where(norms > 0, norms, 1.0)
    u, s, vh = np.linalg.svd(A / norms)
    singular_ratio = float(s[-1] / s[0]) if s[0] > 0 else 0.0
    if singular_ratio > ratio:
        raise NotARoot(singular_ratio, ratio)
    log.debug('amplitudes: equilibrated singular ratio %.3e', singular_ratio)
    gamma = vh[-1].conj() / norms
    return AmplitudeVector(gamma=max_normalized(gamma), singular_ratio=singular_ratio)


def amplitudes(M, v, ratio=SINGULAR_RATIO, roots=None, variant=PRINTED):
    A = secular_matrix(M, v, roots=roots, variant=variant).A
    return amplitudes_from_matrix(A, ratio=ratio)


@dataclasses.dataclass(frozen=True, eq=False)
class FieldState(object):
    u1: complex
    u2: complex
    tau1: complex
    tau2: complex
    chi: complex
    # (t21, t22, Lambda21, Lambda22, S2)
    traction: np.ndarray

    @property
    def fields(self):
        return np.array([self.u1, self.u2, self.tau1, self.tau2, self.chi])


def _gamma_array(gamma):
    if isinstance(gamma, AmplitudeVector):
        gamma = gamma.gamma
    return np.asarray(gamma, dtype=complex)


def _phases(sm, v, kappa, x1, x2, t):
    p = np.array([mb.p.p for mb in sm.modes])
    return np.exp(1j * kappa * (x1 - v * t + p * x2))


def field_eval(M, v, gamma, kappa, x1, x2, t, roots=None, variant=PRINTED):
    """Superposition of the five modes at (x1, x2, t) for wavenumber kappa."""
    v = as_complex(v)
    gamma = _gamma_array(gamma)
    sm = secular_matrix(M, v, roots=roots, variant=variant)
    weights = gamma * _phases(sm, v, kappa, x1, x2, t)
    U = np.column_stack([mb.u_tilde for mb in sm.modes])
    values = U @ weights
    traction = 1j * kappa * (sm.A @ weights)
    return FieldState(u1=values[0], u2=values[1], tau1=values[2], tau2=values[3],
                      chi=values[4], traction=traction)


def boundary_residual(M, v, gamma, kappa, x1=0.0, t=0.0, roots=None, variant=PRINTED):
    """||traction at x2 = 0|| relative to kappa * sum_k |gamma_k e_k| ||A_k||."""
    v = as_complex(v)
    gamma = _gamma_array(gamma)
    sm = secular_matrix(M, v, roots=roots, variant=variant)
    weights = gamma * _phases(sm, v, kappa, x1, 0.0, t)
    traction = 1j * kappa * (sm.A @ weights)
    scale = abs(kappa) * np.sum(np.abs(weights) * np.linalg.norm(sm.A, axis=0))
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(traction) / scale)
