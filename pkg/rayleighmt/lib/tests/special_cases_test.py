# -*- coding: utf-8 -*-
# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

import dataclasses
import math

from ddt import ddt as DataDrivenTestCase, data, unpack
import numpy as np

from rayleighmt.lib.errors import DegenerateKernel, DegenerateRoots, WrongCase
from rayleighmt.lib.linalg import column_norm_product, parallel_sine
from rayleighmt.lib.modes import (ORTHOGONAL, PARALLEL, ComplexSpeed,
    assemble_Dp, p_from_t, polarization_check, verified_kernel)
from rayleighmt.lib.special_cases import (NONZERO, ZERO, INDETERMINATE,
    case_aux, case_iii_longitudinal_vector, case_iii_transverse_vector,
    cross_check_case, explicit_case_i, explicit_case_ii, limit_consistency,
    mode_vectors_case, reduced_cubic, roots_case, secular_case_det,
    secular_case_explicit, secular_case_matrix, zero_class)
from rayleighmt.lib.spectrum import mode_speeds
from rayleighmt.lib.test import *
from rayleighmt.model import CASE_I, CASE_II, CASE_III, GENERAL, derived_cubic


CASES = {
    CASE_I: CASE_I_MATERIAL,
    CASE_II: CASE_II_MATERIAL,
    CASE_III: CASE_III_MATERIAL,
}
TRIAL_SPEED = ComplexSpeed(0.5, 0.1)


@DataDrivenTestCase
class CaseRootsTest(PythonicTestCase):
    @data(
        (CASE_I, (1.0, 2.0, 3.0, 4.3252, 0.9248)),
        (CASE_II, (1.0, 2.0, 4.0, 3.3561, 0.8939)),
        (CASE_III, (2.2071, 0.7929, 1.0, 5.0811, 1.9189)),
    )
    @unpack
    def test_closed_form_roots(self, case, expected):
        roots = roots_case(CASES[case], case)
        assert_equals(case, roots.case.tag)
        for t, value in zip(roots.t_values, expected):
            assert_almost_equals(value, t, max_delta=1e-4)
        assert_true(all(root.label for root in roots))

    @data(CASE_I, CASE_II, CASE_III)
    def test_agree_with_general_formulas(self, case):
        M = CASES[case]
        closed_form = sorted(roots_case(M, case).t_values)
        general = sorted(mode_speeds(M).t_values)
        for t, s in zip(closed_form, general):
            assert_almost_equals(s, t, max_delta=1e-12 * max(general))

    @data(CASE_I, CASE_II, CASE_III)
    def test_reduced_cubic_matches_general_coefficients(self, case):
        M = CASES[case]
        C = derived_cubic(M)
        b4, b2, b0 = reduced_cubic(M, case)
        assert_almost_equals(C.b4, b4, max_delta=1e-12)
        assert_almost_equals(C.b2, b2, max_delta=1e-12)
        assert_almost_equals(C.b0, b0, max_delta=1e-12)

    def test_rejects_material_of_another_case(self):
        assert_raises(WrongCase, lambda: roots_case(M0, CASE_I))
        assert_raises(WrongCase, lambda: roots_case(CASE_I_MATERIAL, CASE_II))
        assert_raises(WrongCase, lambda: roots_case(CASE_I_MATERIAL, GENERAL))

    def test_threshold_admits_nearly_decoupled_material(self):
        roots = roots_case(NEAR_CASE_I, CASE_I, threshold=0.05)
        assert_equals(CASE_I, roots.case.tag)

    def test_coinciding_roots(self):
        # (lambda + 2 mu)/rho == d2/b
        M = CASE_I_MATERIAL.replace(**{'lambda': 0})
        e = assert_raises(DegenerateRoots, lambda: roots_case(M, CASE_I))
        assert_contains('coincide', e.message)


@DataDrivenTestCase
class CaseKernelTest(PythonicTestCase):
    @data(CASE_I, CASE_II, CASE_III)
    def test_vectors_span_the_kernel(self, case):
        M = CASES[case]
        for mb in mode_vectors_case(M, TRIAL_SPEED, case):
            D = assemble_Dp(M, TRIAL_SPEED, mb.p.p)
            residual = np.linalg.norm(D @ mb.u_tilde) / (
                np.linalg.norm(D, 2) * np.linalg.norm(mb.u_tilde))
            assert_true(residual <= 1e-10)

    @data(CASE_I, CASE_II, CASE_III)
    def test_polarization(self, case):
        bases = mode_vectors_case(CASES[case], TRIAL_SPEED, case)
        expected = [ORTHOGONAL, ORTHOGONAL, PARALLEL, PARALLEL, PARALLEL]
        assert_equals(expected, [polarization_check(mb) for mb in bases])

    def test_case_iii_thermal_mode(self):
        mb = mode_vectors_case(CASE_III_MATERIAL, TRIAL_SPEED, CASE_III)[2]
        assert_equals(1.0, mb.mode.t)
        assert_equals(PARALLEL, polarization_check(mb))
        D = assemble_Dp(CASE_III_MATERIAL, TRIAL_SPEED, mb.p.p)
        assert_true(np.linalg.norm(D @ mb.u_tilde) <= 1e-12 * np.linalg.norm(D, 2) * np.linalg.norm(mb.u_tilde))

    def test_duplicate_exponents_are_rejected(self):
        roots = roots_case(CASE_I_MATERIAL, CASE_I)
        twin = dataclasses.replace(roots[2], t=roots[1].t)
        duplicated = dataclasses.replace(roots, roots=(roots[1], twin) + roots.roots[2:])
        assert_raises(DegenerateKernel,
            lambda: secular_case_det(CASE_I_MATERIAL, TRIAL_SPEED, CASE_I, roots=duplicated))

    @data(
        (CASE_I, ['Pi_4', 'Pi_5']),
        (CASE_II, ['Omega_4', 'Omega_5']),
        (CASE_III, ['Psi_4', 'Psi_5', 'Psi_hat_1', 'Psi_hat_2']),
    )
    @unpack
    def test_auxiliary_scalars(self, case, keys):
        aux = case_aux(mode_vectors_case(CASES[case], TRIAL_SPEED, case))
        assert_equals(keys, sorted(aux.scalars))

    def test_case_iii_auxiliary_values(self):
        M = CASE_III_MATERIAL
        roots = roots_case(M, CASE_III)
        aux = case_aux(mode_vectors_case(M, TRIAL_SPEED, CASE_III, roots=roots))
        assert_almost_equals(M.rho * roots[1].t - M.mu, aux['Psi_hat_1'], max_delta=1e-15)
        assert_almost_equals(M.rho * roots[4].t - M.l2m, aux['Psi_4'], max_delta=1e-15)

    def test_case_iii_transverse_sign(self):
        M = CASE_III_MATERIAL
        r = roots_case(M, CASE_III)[1]
        p = p_from_t(TRIAL_SPEED, r.t).p
        good, psi_hat = case_iii_transverse_vector(M, r.t, p)
        flipped, psi_hat = case_iii_transverse_vector(M, r.t, p, sign=1)
        assert_true(parallel_sine(verified_kernel(M, TRIAL_SPEED, p, good), good) <= 1e-8)
        assert_true(parallel_sine(verified_kernel(M, TRIAL_SPEED, p, flipped), flipped) > 1e-6)

    def test_case_iii_longitudinal_uses_own_exponent(self):
        M = CASE_III_MATERIAL
        roots = roots_case(M, CASE_III)
        p4 = p_from_t(TRIAL_SPEED, roots[4].t).p
        p5 = p_from_t(TRIAL_SPEED, roots[5].t).p
        own, psi = case_iii_longitudinal_vector(M, roots[4].t, p4)
        sibling, psi = case_iii_longitudinal_vector(M, roots[4].t, p4, fourth_p=p5)
        kernel = verified_kernel(M, TRIAL_SPEED, p4, own)
        assert_true(parallel_sine(kernel, own) <= 1e-8)
        assert_true(parallel_sine(kernel, sibling) > 1e-6)


class CaseSecularTest(PythonicTestCase):
    def test_case_i_determinant_vanishes_at_classical_rayleigh_speed(self):
        v = RAYLEIGH_SPEED_LAMBDA_EQ_MU
        A = secular_case_matrix(CASE_I_MATERIAL, v, CASE_I).A
        assert_true(abs(secular_case_det(CASE_I_MATERIAL, v, CASE_I)) <= 1e-10 * column_norm_product(A))
        A = secular_case_matrix(CASE_I_MATERIAL, 0.7, CASE_I).A
        assert_true(abs(np.linalg.det(A)) >= 1e-6 * column_norm_product(A))

    def test_explicit_case_i_rayleigh_factor(self):
        M = CASE_I_MATERIAL
        v = 0.6 - 0.1j
        p1 = 0.3 + 0.8j
        # 4 mu^2 p1 p2 + (rho v^2 - 2 mu)^2 = 0
        p2 = -(M.rho * v * v - 2 * M.mu) ** 2 / (4 * M.mu ** 2 * p1)
        value, scale = explicit_case_i(M, v, (p1, p2, 0.5j, 0.7j, 0.9j), 0.9248)
        assert_true(abs(value) <= 1e-14 * scale)
        value, scale = explicit_case_i(M, v, (p1, 0.2j, 0.5j, 0.7j, 0.9j), 0.9248)
        assert_true(abs(value) >= 1e-3 * scale)

    def test_explicit_case_ii_microthermal_factor(self):
        M = CASE_II_MATERIAL
        v = 0.6 - 0.1j
        d23 = M.d2 + M.d3
        p2 = 0.4 + 0.9j
        # (b v^2 - d2 - d3)^2 + p2 p3 (d2 + d3)^2 = 0
        p3 = -(M.b * v * v - d23) ** 2 / (p2 * d23 ** 2)
        value, scale = explicit_case_ii(M, v, (0.5j, p2, p3, 0.7j, 0.9j), 0.8939)
        assert_true(abs(value) <= 1e-14 * scale)

    def test_explicit_function_at_zero_speed(self):
        assert_equals(0, secular_case_explicit(CASE_I_MATERIAL, 0, CASE_I))

    def test_explicit_function_needs_case_i_or_ii(self):
        assert_raises(WrongCase, lambda: secular_case_explicit(CASE_III_MATERIAL, 0.5, CASE_III))
        assert_raises(WrongCase, lambda: secular_case_explicit(M0, 0.5, GENERAL))
        assert_raises(WrongCase, lambda: cross_check_case(CASE_III_MATERIAL, CASE_III))

    def test_zero_class(self):
        assert_equals(ZERO, zero_class(1e-10, 1.0))
        assert_equals(NONZERO, zero_class(0.5, 1.0))
        assert_equals(INDETERMINATE, zero_class(1e-5, 1.0))
        assert_equals(ZERO, zero_class(0, 0))


@DataDrivenTestCase
class CrossCheckTest(PythonicTestCase):
    @data(CASE_I, CASE_II)
    def test_explicit_and_determinant_agree(self, case):
        report = cross_check_case(CASES[case], case, samples=200, seed=12345)
        assert_true(report)
        assert_equals(200, report.agreed)
        assert_equals([], report.disagreements)

    def test_is_reproducible(self):
        first = cross_check_case(CASE_I_MATERIAL, CASE_I, samples=20, seed=1)
        second = cross_check_case(CASE_I_MATERIAL, CASE_I, samples=20, seed=1)
        assert_equals(first, second)


class LimitConsistencyTest(PythonicTestCase):
    def test_general_roots_approach_case_i(self):
        report = limit_consistency(NEAR_CASE_I, CASE_I)
        assert_true(report)
        assert_equals([], report.errors)
        assert_length(3, report.gaps)
        assert_true(report.gaps[-1] <= 1e-4)
        assert_true(report.gaps[0] > report.gaps[-1])

    def test_general_roots_approach_case_ii(self):
        M = CASE_II_MATERIAL.replace(m=0.3, eps1=0.2, eps2=0.1)
        report = limit_consistency(M, CASE_II)
        assert_true(report)
        for rate in report.rates:
            assert_true(rate >= 0.9)

    def test_general_roots_approach_case_iii(self):
        M = CASE_III_MATERIAL.replace(beta=0.3, m=0.2)
        thermal = M.k / M.a
        report = limit_consistency(M, CASE_III)
        assert_true(report)
        assert_true(report.gaps[-1] <= 1e-4)
        assert_contains(thermal, report.reference)
        scaled = M.replace(beta=0.3e-6, m=0.2e-6)
        nearest = min(mode_speeds(scaled).t_values, key=lambda t: abs(t - thermal))
        assert_almost_equals(thermal, nearest, max_delta=1e-4)

    def test_decoupled_input_matches_exactly(self):
        report = limit_consistency(CASE_I_MATERIAL, CASE_I)
        assert_true(report)
        for gap in report.gaps:
            assert_true(gap <= 1e-12)

    def test_reports_spectrum_errors(self):
        # mu/rho == d2/b with eps2 = 0: q2 has a double root which scaling
        # beta and m does not touch
        M = material(eps2=0)
        report = limit_consistency(M, CASE_III)
        assert_false(report)
        assert_length(3, report.errors)
        assert_true(all(math.isnan(gap) for gap in report.gaps))


import unittest
def suite():
    suite = unittest.TestSuite()
    for testcase in (CaseRootsTest, CaseKernelTest, CaseSecularTest,
                     CrossCheckTest, LimitConsistencyTest):
        suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(testcase))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
