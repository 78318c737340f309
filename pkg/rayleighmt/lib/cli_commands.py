# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""Paster Command subclasses behind the ``rayleighmt`` console script.

    rayleighmt check --material FILE
    rayleighmt roots --material FILE [--case]
    rayleighmt scan  --material FILE [--out FILE] [window options]
    rayleighmt solve --material FILE [--verify] [window options]
    rayleighmt case  --material FILE [--speed-re X --speed-im Y]

Exit status: 0 on success, 1 for failures of the analysis (reported as
``{"error": name, "message": ...}`` on stdout), 2 for unreadable files,
malformed input and bad options.
"""

import logging
import math
import sys

import simplejson
from paste.script.command import BadCommand, Command

from rayleighmt.config.settings import DEFAULT_SETTINGS, TRACTION_VARIANTS, resolve_threads
from rayleighmt.lib.cli import init_rayleighmt
from rayleighmt.lib.errors import (ConfigurationError, MalformedMaterial,
    MissingField, NonFinite, RayleighError, WrongCase)
from rayleighmt.lib.modes import ComplexSpeed
from rayleighmt.lib.search import RefineOptions, ScanWindow, find_rayleigh, grid_scan
from rayleighmt.lib.secular import boundary_residual
from rayleighmt.lib.serialization import (dumps, root_record,
    text_table, write_scan_csv)
from rayleighmt.lib.special_cases import (cross_check_case, mode_vectors_case,
    roots_case, secular_case_det)
from rayleighmt.lib.spectrum import mode_speeds, root_residual
from rayleighmt.model.material import (CASE_III, SPECIAL_CASES,
    check_distinct_cubic_roots, check_strong_ellipticity, classify_coupling,
    derived_cubic)
from rayleighmt.validation import load_material

__all__ = [
    'COMMANDS', 'VERIFY_WAVENUMBERS',
    'CaseCommand', 'CheckCommand', 'RootsCommand', 'ScanCommand',
    'SolveCommand', 'SolverCommand', 'main', 'run_command',
]

log = logging.getLogger(__name__)

VERIFY_WAVENUMBERS = (0.1, 1.0, 10.0)
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def solver_parser():
    parser = Command.standard_parser(verbose=True, quiet=True)
    parser.add_option('--material', dest='material',
                      help='JSON file with the 13 material coefficients')
    parser.add_option('--config', dest='config',
                      help='ini file with a [solver] section (and logging setup)')
    parser.add_option('--format', dest='format', type='choice',
                      choices=('json', 'text'), default='json',
                      help='output format: json (default) or text')
    parser.add_option('--coupling-threshold', dest='coupling_threshold', type='float',
                      help='treat couplings with |x| <= threshold as zero')
    return parser

def add_window_options(parser):
    for name in ('re_min', 're_max', 'im_min', 'im_max'):
        parser.add_option('--' + name.replace('_', '-'), dest=name, type='float',
                          help='scan window bound %s' % name)
    parser.add_option('--nx', dest='nx', type='int', help='lattice points along Re v')
    parser.add_option('--ny', dest='ny', type='int', help='lattice points along Im v')
    parser.add_option('--threads', dest='threads', type='int',
                      help='worker threads for the scan (0: one per CPU)')
    parser.add_option('--traction-variant', dest='traction_variant', type='choice',
                      choices=TRACTION_VARIANTS, help='traction operator variant')
    return parser


class SolverCommand(Command):
    """Shared option handling: material file, settings and output."""
    min_args = 0
    max_args = 0
    group_name = 'rayleighmt'
    default_verbosity = 0

    parser = solver_parser()

    def __init__(self, name, stdout=None):
        Command.__init__(self, name)
        self.stdout = stdout if stdout is not None else sys.stdout

    def command(self):
        overrides = dict((key, getattr(self.options, key, None)) for key in DEFAULT_SETTINGS)
        self.settings = init_rayleighmt(self.options.config,
                                        disable_logging=bool(self.options.quiet),
                                        verbosity=self.options.verbose,
                                        overrides=overrides)
        if not self.options.material:
            raise BadCommand('--material is required')
        self.material = load_material(self.options.material)
        return self.execute()

    def execute(self):
        raise NotImplementedError

    def emit(self, document, columns=None, rows=None):
        if self.options.format == 'text' and columns is not None:
            self.stdout.write(text_table(columns, rows))
        else:
            self.stdout.write(dumps(document) + '\n')

    @property
    def coupling(self):
        return classify_coupling(self.material, self.settings.coupling_threshold)


class CheckCommand(SolverCommand):
    """Validate a material: strong ellipticity, coupling case and distinct
    cubic roots."""
    summary = __doc__.splitlines()[0]
    parser = solver_parser()

    def execute(self):
        M = self.material
        report = check_strong_ellipticity(M)
        cubic = None
        distinct = None
        if report:
            cubic = derived_cubic(M)
            distinct = check_distinct_cubic_roots(cubic)
        passed = bool(report) and bool(distinct)
        document = {
            'material': self.options.material,
            'passed': passed,
            'ellipticity': report,
            'coupling': self.coupling,
            'cubic': cubic,
            'distinct_cubic_roots': distinct,
        }
        rows = [(identifier, margin, identifier not in report.violations)
                for identifier, margin in sorted(report.margins.items())]
        self.emit(document, ('condition', 'margin', 'satisfied'), rows)
        if not passed:
            log.warning('%s failed the material checks', self.options.material)
        return EXIT_OK if passed else EXIT_FAILURE


class RootsCommand(SolverCommand):
    """Print the five mode speeds t_k with their polynomial residuals."""
    summary = __doc__.splitlines()[0]
    parser = solver_parser()
    parser.add_option('--case', dest='case', action='store_true', default=False,
                      help='use the closed forms of the material\'s decoupled case')

    def execute(self):
        M = self.material
        if self.options.case:
            roots = roots_case(M, self._special_case(), self.settings.coupling_threshold)
        else:
            roots = mode_speeds(M)
        cubic = derived_cubic(M)
        records = []
        for root in roots:
            record = root.as_dict()
            record['residual'] = root_residual(cubic, root)
            records.append(record)
        document = {'roots': records, 'pairwise_min_gap': roots.pairwise_min_gap}
        if self.options.case:
            document['case'] = roots.case
        rows = [(r['index'], r['t'], r['source'], r.get('label', ''), r['residual'])
                for r in records]
        self.emit(document, ('index', 't', 'source', 'label', 'residual'), rows)
        return EXIT_OK

    def _special_case(self):
        case = self.coupling
        if case.tag not in SPECIAL_CASES:
            raise WrongCase('--case needs a decoupled material (got %s)' % case.tag)
        return case


class ScanCommand(SolverCommand):
    """Write F = ln|det A| on a lattice of the complex speed plane as CSV."""
    summary = __doc__.splitlines()[0]
    parser = add_window_options(solver_parser())
    parser.add_option('--out', dest='out', help='CSV file (default: stdout)')

    def execute(self):
        window = ScanWindow.from_settings(self.settings)
        threads = resolve_threads(self.settings.threads)
        grid = grid_scan(self.material, window, threads=threads,
                         variant=self.settings.traction_variant)
        log.info('scan finished: %d of %d points failed', grid.failures,
                 window.nx * window.ny)
        if self.options.out:
            with open(self.options.out, 'w', newline='') as fp:
                write_scan_csv(grid, fp)
        else:
            write_scan_csv(grid, self.stdout)
        return EXIT_OK


class SolveCommand(SolverCommand):
    """Locate complex Rayleigh speeds: grid scan, then Nelder-Mead refinement."""
    summary = __doc__.splitlines()[0]
    parser = add_window_options(solver_parser())
    parser.add_option('--tol-det', dest='tol_det', type='float',
                      help='|det A| acceptance ratio relative to the grid median')
    parser.add_option('--verify', dest='verify', action='store_true', default=False,
                      help='report boundary traction residuals of converged roots')

    def execute(self):
        M = self.material
        settings = self.settings
        window = ScanWindow.from_settings(settings)
        opts = RefineOptions.from_settings(settings)
        found = find_rayleigh(M, window, opts, threads=resolve_threads(settings.threads))
        roots = mode_speeds(M)
        records = []
        for root in found:
            record = root_record(root)
            if self.options.verify and root.gamma is not None:
                record['boundary_residual'] = dict(
                    ('%g' % kappa, boundary_residual(M, root.v, root.gamma, kappa,
                                                     roots=roots, variant=opts.variant))
                    for kappa in VERIFY_WAVENUMBERS)
            records.append(record)
        converged = sum(1 for root in found if root.converged)
        document = {'roots': records, 'converged': converged}
        rows = [(r['v_re'], r['v_im'], r['f_value'], r['det_abs'], r['classification'])
                for r in records]
        self.emit(document, ('re_v', 'im_v', 'F', '|det A|', 'classification'), rows)
        if not converged:
            log.warning('no converged root in the window')
            return EXIT_FAILURE
        return EXIT_OK


class CaseCommand(SolverCommand):
    """Analyse a decoupled material: closed-form roots, kernels and the
    explicit secular function checked against det A."""
    summary = __doc__.splitlines()[0]
    parser = solver_parser()
    parser.add_option('--speed-re', dest='speed_re', type='float',
                      help='Re v at which kernels are reported (default: half '
                           'the smallest cutoff speed)')
    parser.add_option('--speed-im', dest='speed_im', type='float', default=0.0,
                      help='Im v (<= 0) at which kernels are reported')
    parser.add_option('--samples', dest='cross_check_samples', type='int',
                      help='random speeds for the explicit/det cross-check')
    parser.add_option('--seed', dest='seed', type='int', help='cross-check seed')
    parser.add_option('--traction-variant', dest='traction_variant', type='choice',
                      choices=TRACTION_VARIANTS, help='traction operator variant')

    def execute(self):
        M = self.material
        settings = self.settings
        case = self.coupling
        if case.tag not in SPECIAL_CASES:
            raise WrongCase('material is %s, not a decoupled case' % case.tag)
        roots = roots_case(M, case, settings.coupling_threshold)
        speed_re = self.options.speed_re
        if speed_re is None:
            speed_re = 0.5 * math.sqrt(roots.t_min)
        v = ComplexSpeed(speed_re, -self.options.speed_im)
        bases = mode_vectors_case(M, v, case, roots=roots)
        kernels = [{'index': mb.index, 'p': mb.p.p, 'polarization': mb.polarization,
                    'u': mb.u_tilde, 'aux': mb.aux} for mb in bases]
        document = {
            'case': case,
            'roots': [root.as_dict() for root in roots],
            'speed': v,
            'kernels': kernels,
            'det': secular_case_det(M, v, case, roots=roots,
                                    variant=settings.traction_variant),
        }
        if case.tag == CASE_III:
            document['cross_check'] = None
            document['note'] = 'no explicit secular function for case iii; det A only'
        else:
            document['cross_check'] = cross_check_case(
                M, case, samples=settings.cross_check_samples, seed=settings.seed,
                variant=settings.traction_variant)
        rows = [(k['index'], roots[k['index']].t, k['p'], k['polarization'])
                for k in kernels]
        self.emit(document, ('index', 't', 'p', 'polarization'), rows)
        if self.options.format == 'text':
            report = document['cross_check']
            if report is None:
                self.stdout.write(document['note'] + '\n')
            else:
                self.stdout.write('cross-check: agree at %d/%d samples\n'
                                  % (report.agreed, report.samples))
        return EXIT_OK


COMMANDS = {
    'check': CheckCommand,
    'roots': RootsCommand,
    'scan': ScanCommand,
    'solve': SolveCommand,
    'case': CaseCommand,
}

def _usage():
    lines = ['usage: rayleighmt COMMAND [options]', '', 'commands:']
    for name in sorted(COMMANDS):
        lines.append('  %-6s %s' % (name, COMMANDS[name].summary))
    return '\n'.join(lines) + '\n'


def run_command(argv, stdout=None, stderr=None):
    """Run ``rayleighmt`` with ``argv`` (without the program name) and
    return the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    if not argv or argv[0] not in COMMANDS:
        stderr.write(_usage())
        return EXIT_USAGE
    name = argv[0]
    cmd = COMMANDS[name](name, stdout=stdout)
    cmd.parser.usage = '%%prog %s [options]\n%s' % (name, cmd.summary)
    try:
        return cmd.run(list(argv[1:]))
    except SystemExit as e:
        # optparse exits on --help and on option errors
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (BadCommand, ConfigurationError, MalformedMaterial, MissingField,
            NonFinite, simplejson.JSONDecodeError, IOError) as e:
        stderr.write('ERROR: %s\n' % e)
        return EXIT_USAGE
    except RayleighError as e:
        log.info('%s failed: %s', name, e)
        stdout.write(dumps({'error': e.name, 'message': e.message}) + '\n')
        return EXIT_FAILURE


def main():
    sys.exit(run_command(sys.argv[1:]))
