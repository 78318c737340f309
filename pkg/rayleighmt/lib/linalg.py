# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Small dense complex linear algebra shared by the mode and secular code.
"""

import numpy as np

__all__ = [
    'NULLSPACE_RTOL',
    'column_norm_product', 'determinant', 'log_abs_determinant',
    'max_normalized', 'numeric_nullspace', 'parallel_sine',
]

NULLSPACE_RTOL = 1e-10


def determinant(A):
    """LU (partial pivoting, LAPACK getrf) determinant.

    getrf picks the first row of maximal magnitude, so the result does not
    depend on the thread evaluating it."""
    return complex(np.linalg.det(np.asarray(A, dtype=complex)))


def log_abs_determinant(A):
    """ln|det A| without overflow; ``-inf`` for an exactly singular matrix."""
    sign, logabsdet = np.linalg.slogdet(np.asarray(A, dtype=complex))
    if sign == 0:
        return -np.inf
    return float(logabsdet)


def numeric_nullspace(D, rtol=NULLSPACE_RTOL):
    """Orthonormal basis (list of unit vectors) of the numeric kernel: the
    right singular directions whose singular value is <= rtol * largest."""
    D = np.asarray(D, dtype=complex)
    u, s, vh = np.linalg.svd(D, full_matrices=True)
    largest = s[0] if s.size else 0.0
    rank = int(np.sum(s > rtol * largest))
    return [vh[i].conj() for i in range(rank, D.shape[1])]


def parallel_sine(u, v):
    """Sine of the (Hermitian) angle between two nonzero complex vectors."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    # norm of the rejection; 1 - cos**2 cancels for nearly parallel vectors
    return float(min(1.0, np.linalg.norm(v - np.vdot(u, v) * u)))


def max_normalized(u):
    """Scale ``u`` so its largest-magnitude component equals 1."""
    u = np.asarray(u, dtype=complex)
    pivot = u[int(np.argmax(np.abs(u)))]
    if pivot == 0:
        return u.copy()
    return u / pivot


def column_norm_product(A):
    """Hadamard bound: |det A| <= product of the column norms."""
    return float(np.prod(np.linalg.norm(np.asarray(A, dtype=complex), axis=0)))
