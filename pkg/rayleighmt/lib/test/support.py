# -*- coding: utf-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

import math
import os

import numpy as np
import simplejson

from rayleighmt.lib.errors import SpectrumError
from rayleighmt.lib.spectrum import mode_speeds
from rayleighmt.model.material import (MaterialCoefficients,
    check_distinct_cubic_roots, check_strong_ellipticity, derived_cubic)

__all__ = [
    'CASE_I_MATERIAL', 'CASE_II_MATERIAL', 'CASE_III_MATERIAL', 'M0',
    'M0_VALUES', 'NEAR_CASE_I',
    'RAYLEIGH_SPEED_LAMBDA_EQ_MU',
    'bisection_cubic_roots', 'cofactor_determinant', 'material',
    'random_materials', 'write_material',
]

M0_VALUES = {
    'rho': 1.0, 'a': 1.0, 'b': 1.0, 'k': 1.0, 'lambda': 1.0, 'mu': 1.0,
    'd1': 1.0, 'd2': 1.0, 'd3': 2.0,
    'eps1': 0.5, 'eps2': 0.5, 'beta': 0.5, 'm': 0.5,
}
M0 = MaterialCoefficients.from_mapping(M0_VALUES)

_UNIT = {
    'rho': 1.0, 'a': 1.0, 'b': 1.0, 'k': 1.0, 'lambda': 1.0, 'mu': 1.0,
    'd1': 1.0, 'd2': 2.0, 'd3': 1.0,
    'eps1': 0.0, 'eps2': 0.0, 'beta': 0.0, 'm': 0.0,
}

def material(base=None, **changes):
    """Coefficients keyed by material file names (``lambda`` via
    ``**{'lambda': x}``)."""
    values = dict(M0_VALUES if base is None else base)
    values.update(changes)
    return MaterialCoefficients.from_mapping(values)

CASE_I_MATERIAL = material(_UNIT, m=0.5)
CASE_II_MATERIAL = material(_UNIT, beta=0.5)
CASE_III_MATERIAL = material(_UNIT, eps1=0.5, eps2=0.5)
# weakly coupled; the secular equation has a real root close to the
# classical Rayleigh speed of CASE_I
NEAR_CASE_I = material(_UNIT, eps1=0.01, eps2=0.01, beta=0.01, m=0.5)

# v^2 = (2 - 2/sqrt(3)) mu/rho for lambda = mu
RAYLEIGH_SPEED_LAMBDA_EQ_MU = math.sqrt(2 - 2 / math.sqrt(3))


def write_material(directory, values, filename='material.json'):
    path = os.path.join(directory, filename)
    with open(path, 'w') as fp:
        if isinstance(values, MaterialCoefficients):
            values = values.as_dict()
        simplejson.dump(values, fp)
    return path


def random_materials(count, seed=20260101):
    """Strongly elliptic materials with general coupling, distinct cubic
    roots and a relative root gap of at least 1e-3 (rejection sampling)."""
    rng = np.random.default_rng(seed)
    def signed(low, high):
        return float(rng.choice((-1.0, 1.0)) * rng.uniform(low, high))
    materials = []
    while len(materials) < count:
        values = {
            'rho': rng.uniform(0.5, 2.0), 'a': rng.uniform(0.5, 2.0),
            'b': rng.uniform(0.5, 2.0), 'k': rng.uniform(0.5, 2.0),
            'lambda': rng.uniform(0.0, 2.0), 'mu': rng.uniform(0.5, 2.0),
            'd1': rng.uniform(0.2, 2.0), 'd2': rng.uniform(0.5, 2.0),
            'd3': rng.uniform(0.2, 2.0),
            'eps1': signed(0.05, 0.5), 'eps2': signed(0.05, 0.5),
            'beta': signed(0.05, 1.0), 'm': signed(0.05, 1.0),
        }
        M = MaterialCoefficients.from_mapping(values)
        if not check_strong_ellipticity(M):
            continue
        if not check_distinct_cubic_roots(derived_cubic(M)):
            continue
        try:
            roots = mode_speeds(M)
        except SpectrumError:
            continue
        if roots.pairwise_min_gap < 1e-3 * max(roots.t_values):
            continue
        materials.append(M)
    return materials


def cofactor_determinant(A):
    """Laplace expansion along the first row."""
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    if n == 1:
        return A[0, 0]
    total = 0j
    for column in range(n):
        minor = np.delete(np.delete(A, 0, axis=0), column, axis=1)
        total += (-1) ** column * A[0, column] * cofactor_determinant(minor)
    return total


def bisection_cubic_roots(b4, b2, b0, iterations=200):
    """Roots of t^3 - b4 t^2 + b2 t - b0 (three distinct real roots
    assumed) in descending order, bracketed by the critical points."""
    def q(t):
        return ((t - b4) * t + b2) * t - b0
    radical = math.sqrt(b4 * b4 - 3 * b2)
    c_low, c_high = (b4 - radical) / 3, (b4 + radical) / 3
    bound = 1 + max(abs(b4), abs(b2), abs(b0))
    roots = []
    for low, high in ((-bound, c_low), (c_low, c_high), (c_high, bound)):
        for _ in range(iterations):
            middle = (low + high) / 2
            if (q(low) < 0) == (q(middle) < 0):
                low = middle
            else:
                high = middle
        roots.append((low + high) / 2)
    return tuple(sorted(roots, reverse=True))
