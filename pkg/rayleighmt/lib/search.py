# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Rayleigh root search: sample F = ln|det A| on a lattice of the complex
speed plane, seed a Nelder-Mead descent from every strict local minimum and
keep the distinct results.

Lattice values are indexed ``values[i, j]`` with i along Re v and j along
Im v. Points where the secular matrix is undefined hold NaN.
"""

from concurrent.futures import ThreadPoolExecutor
import dataclasses
import logging
import math

import numpy as np
from scipy.optimize import minimize

from rayleighmt.lib.errors import (AllPointsFailed, InvalidWindow,
    ModeFailure, NotARoot, StartFailure, UnsupportedCoupling)
from rayleighmt.lib.modes import ComplexSpeed
from rayleighmt.lib.secular import (F_ZERO_DET, PRINTED, SINGULAR_RATIO,
    amplitudes, objective_F)
from rayleighmt.lib.spectrum import mode_speeds
from rayleighmt.model.material import GENERAL, classify_coupling

__all__ = [
    'CONVERGED', 'STAGNATED', 'TRIVIAL_FRACTION',
    'Descent', 'RayleighRoot', 'RefineOptions', 'ScanGrid', 'ScanWindow',
    'classify_root', 'deduplicate', 'descend', 'find_rayleigh', 'grid_scan',
    'is_trivial_speed', 'local_minima', 'refine_minimum', 'roots_from_grid',
]

log = logging.getLogger(__name__)

CONVERGED = 'converged'
STAGNATED = 'stagnated'

# det A vanishes like |v|**5 at v = 0, where every p_k tends to i. A descent
# ending below this fraction of sqrt(t_min) has found that zero.
TRIVIAL_FRACTION = 0.05


@dataclasses.dataclass(frozen=True)
class ScanWindow(object):
    """Rectangle of the v plane; im_min/im_max are Im v itself (<= 0 in
    the Rayleigh quadrant)."""
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int

    def __post_init__(self):
        bounds = (self.re_min, self.re_max, self.im_min, self.im_max)
        if not all(math.isfinite(value) for value in bounds):
            raise InvalidWindow('window bounds must be finite')
        if not self.re_min < self.re_max:
            raise InvalidWindow('re_min must be smaller than re_max')
        if not self.im_min < self.im_max:
            raise InvalidWindow('im_min must be smaller than im_max')
        if int(self.nx) != self.nx or int(self.ny) != self.ny or self.nx < 2 or self.ny < 2:
            raise InvalidWindow('nx and ny must be integers >= 2')
        if self.re_max < 0 or self.im_min > 0:
            raise InvalidWindow('window does not intersect Re v >= 0, Im v <= 0')

    @classmethod
    def from_settings(cls, settings):
        return cls(float(settings['re_min']), float(settings['re_max']),
                   float(settings['im_min']), float(settings['im_max']),
                   int(settings['nx']), int(settings['ny']))

    @property
    def re_values(self):
        return np.linspace(self.re_min, self.re_max, self.nx)

    @property
    def im_values(self):
        return np.linspace(self.im_min, self.im_max, self.ny)

    @property
    def cell(self):
        return ((self.re_max - self.re_min) / (self.nx - 1),
                (self.im_max - self.im_min) / (self.ny - 1))


@dataclasses.dataclass(frozen=True, eq=False)
class ScanGrid(object):
    window: ScanWindow
    values: np.ndarray
    failures: int

    def rows(self):
        """(re v, im v, F) over i (Re v) then j (Im v)."""
        re_values = self.window.re_values
        im_values = self.window.im_values
        for i in range(self.window.nx):
            for j in range(self.window.ny):
                yield (float(re_values[i]), float(im_values[j]), float(self.values[i, j]))

    def median_det(self):
        finite = self.values[np.isfinite(self.values)]
        if finite.size == 0:
            return math.nan
        with np.errstate(over='ignore'):
            return float(np.median(np.exp(finite)))


@dataclasses.dataclass(frozen=True)
class RefineOptions(object):
    # initial simplex edges along Re v and Im v
    simplex_step: tuple = (1e-3, 1e-3)
    xatol: float = 1e-10
    max_evaluations: int = 500
    tol_det: float = 1e-6
    # |det| reference for convergence; |det(v0)| when None
    det_reference: float = None
    dedup_tol: float = 1e-6
    singular_ratio: float = SINGULAR_RATIO
    variant: str = PRINTED

    @classmethod
    def from_settings(cls, settings):
        return cls(xatol=settings['xatol'], max_evaluations=settings['max_evaluations'],
                   tol_det=settings['tol_det'], dedup_tol=settings['dedup_tol'],
                   singular_ratio=settings['singular_ratio'],
                   variant=settings['traction_variant'])


@dataclasses.dataclass(frozen=True, eq=False)
class RayleighRoot(object):
    v: ComplexSpeed
    f_value: float
    det_abs: float
    # None unless converged and the amplitude extraction succeeded
    gamma: object
    iterations: int
    classification: str
    # the descent collapsed onto the trivial zero at v = 0
    collapsed: bool = False

    @property
    def converged(self):
        return self.classification == CONVERGED


def _require_general(M):
    case = classify_coupling(M)
    if case.tag != GENERAL or M.eps2 == 0:
        raise UnsupportedCoupling('scans need general coupling with eps2 != 0 (got %s)' % case.tag)


def _scan_column(M, window, roots, variant, i):
    re_v = float(window.re_values[i])
    column = np.full(window.ny, np.nan)
    failures = 0
    for j, im_v in enumerate(window.im_values):
        try:
            column[j] = objective_F(M, re_v, -float(im_v), roots=roots, variant=variant)
        except ModeFailure:
            failures += 1
    return column, failures


def grid_scan(M, w, threads=1, variant=PRINTED):
    """Evaluate F on the inclusive nx x ny lattice of ``w``.

    Columns are computed independently (in a thread pool if threads > 1)
    and stored by index, so the result does not depend on scheduling."""
    _require_general(M)
    roots = mode_speeds(M)
    values = np.full((w.nx, w.ny), np.nan)
    def scan(i):
        return _scan_column(M, w, roots, variant, i)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            columns = list(pool.map(scan, range(w.nx)))
    else:
        columns = [scan(i) for i in range(w.nx)]
    failures = 0
    for i, (column, column_failures) in enumerate(columns):
        values[i, :] = column
        failures += column_failures
    log.debug('scanned %dx%d points, %d failures', w.nx, w.ny, failures)
    if failures == w.nx * w.ny:
        raise AllPointsFailed('F is undefined at every point of the window')
    return ScanGrid(window=w, values=values, failures=failures)


def local_minima(grid):
    """Lattice indices (i, j) whose value is strictly below every finite
    8-neighbour, best first. Points without finite neighbours are skipped."""
    values = grid.values
    nx, ny = values.shape
    minima = []
    for i in range(nx):
        for j in range(ny):
            value = values[i, j]
            if not np.isfinite(value):
                continue
            neighbours = [values[k, l]
                          for k in range(max(0, i - 1), min(nx, i + 2))
                          for l in range(max(0, j - 1), min(ny, j + 2))
                          if (k, l) != (i, j) and np.isfinite(values[k, l])]
            if neighbours and all(value < other for other in neighbours):
                minima.append((i, j))
    return sorted(minima, key=lambda ij: (values[ij], ij))


@dataclasses.dataclass(frozen=True)
class Descent(object):
    x: tuple
    f_value: float
    # best value among v0 and the initial simplex
    f_start: float
    evaluations: int


def descend(objective, v0, opts):
    """Nelder-Mead (coefficients 1, 2, 0.5, 0.5) on (Re v, -Im v) >= 0.

    ``objective`` maps (vR, vI) to F and returns inf where undefined.
    Evaluations are memoized and counted once per distinct point."""
    cache = {}
    def counted(x):
        key = (float(x[0]), float(x[1]))
        if key not in cache:
            cache[key] = objective(key)
        return cache[key]

    x0 = np.array([v0.re, v0.im_neg], dtype=float)
    step_re, step_im = opts.simplex_step
    simplex = np.array([x0, x0 + [step_re, 0.0], x0 + [0.0, step_im]])
    start_values = [counted(vertex) for vertex in simplex]
    finite = [value for value in start_values if math.isfinite(value)]
    if not finite:
        raise StartFailure('F undefined at %r and its initial simplex' % (v0.value, ))

    result = minimize(counted, x0, method='Nelder-Mead',
                      bounds=[(0, None), (0, None)],
                      options=dict(initial_simplex=simplex, xatol=opts.xatol,
                                   fatol=np.inf, maxfev=opts.max_evaluations,
                                   maxiter=opts.max_evaluations, adaptive=False))
    x = (float(result.x[0]), float(result.x[1]))
    return Descent(x=x, f_value=float(result.fun), f_start=min(finite),
                   evaluations=len(cache))


def _det_abs(f_value):
    if f_value == F_ZERO_DET:
        return 0.0
    with np.errstate(over='ignore'):
        return float(np.exp(f_value))


def is_trivial_speed(v, roots):
    return abs(complex(v)) < TRIVIAL_FRACTION * math.sqrt(roots.t_min)


def classify_root(det_abs, reference, tol_det):
    if det_abs <= tol_det * reference:
        return CONVERGED
    return STAGNATED


def refine_minimum(M, v0, opts=None, roots=None):
    if opts is None:
        opts = RefineOptions()
    if roots is None:
        roots = mode_speeds(M)
    def objective(x):
        try:
            return objective_F(M, x[0], x[1], roots=roots, variant=opts.variant)
        except ModeFailure:
            return math.inf

    descent = descend(objective, v0, opts)
    v = ComplexSpeed(*descent.x)
    det_abs = _det_abs(descent.f_value)
    reference = opts.det_reference
    if reference is None:
        reference = _det_abs(descent.f_start)
    collapsed = is_trivial_speed(v, roots)
    classification = classify_root(det_abs, reference, opts.tol_det)
    if collapsed:
        classification = STAGNATED
    gamma = None
    if classification == CONVERGED:
        try:
            gamma = amplitudes(M, v, ratio=opts.singular_ratio, roots=roots,
                               variant=opts.variant)
        except NotARoot as e:
            # a small |det| without a one-dimensional kernel is not a root
            log.debug('no amplitudes at %r: %s', v.value, e)
            classification = STAGNATED
    log.debug('refined %r -> %r (%s, %d evaluations)', v0.value, v.value,
              classification, descent.evaluations)
    return RayleighRoot(v=v, f_value=descent.f_value, det_abs=det_abs, gamma=gamma,
                        iterations=descent.evaluations, classification=classification,
                        collapsed=collapsed)


def deduplicate(roots, tolerance):
    """Best (lowest F) representative of every cluster closer than
    ``tolerance``, sorted by F."""
    kept = []
    for root in sorted(roots, key=lambda r: (r.f_value, r.v.re, r.v.im_neg)):
        if all(abs(root.v.value - other.v.value) > tolerance for other in kept):
            kept.append(root)
    return kept


def roots_from_grid(M, grid, opts=None, roots=None):
    """Refine every strict local minimum of ``grid``. Descents that end at
    the trivial zero near v = 0 are dropped."""
    if opts is None:
        opts = RefineOptions()
    if roots is None:
        roots = mode_speeds(M)
    reference = opts.det_reference
    if reference is None:
        reference = grid.median_det()
    step_re, step_im = grid.window.cell
    opts = dataclasses.replace(opts, simplex_step=(step_re / 4, step_im / 4),
                               det_reference=reference)
    re_values = grid.window.re_values
    im_values = grid.window.im_values
    found = []
    for i, j in local_minima(grid):
        v0 = ComplexSpeed(float(re_values[i]), -float(im_values[j]))
        try:
            root = refine_minimum(M, v0, opts, roots=roots)
        except StartFailure as e:
            log.debug('skipping seed %r: %s', v0.value, e)
            continue
        if root.collapsed:
            log.debug('seed %r collapsed onto v = 0', v0.value)
            continue
        found.append(root)
    return deduplicate(found, opts.dedup_tol)


def find_rayleigh(M, w, opts=None, threads=1):
    if opts is None:
        opts = RefineOptions()
    grid = grid_scan(M, w, threads=threads, variant=opts.variant)
    return roots_from_grid(M, grid, opts)
