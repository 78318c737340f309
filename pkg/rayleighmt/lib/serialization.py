# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.
"""
Output formats: JSON documents (complex numbers as {"re", "im"} pairs,
non-finite floats as null), the scan CSV and aligned text tables.
"""

import csv
import dataclasses
import io
import math

import numpy as np
import simplejson

from rayleighmt.lib.report import Report

__all__ = [
    'CSV_HEADER',
    'dumps', 'format_float', 'jsonable', 'root_record', 'scan_csv',
    'text_table', 'write_scan_csv',
]

CSV_HEADER = ('re_v', 'im_v', 'F')


def jsonable(value):
    """Plain JSON data for ``value``."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': jsonable(value.real), 'im': jsonable(value.imag)}
    if isinstance(value, Report):
        return jsonable(value.as_dict())
    if isinstance(value, np.ndarray):
        return [jsonable(item) for item in value.tolist()]
    if isinstance(value, dict):
        return dict((str(key), jsonable(item)) for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if hasattr(value, 'as_dict'):
        return jsonable(value.as_dict())
    if dataclasses.is_dataclass(value):
        return jsonable(dataclasses.asdict(value))
    raise TypeError('%r is not serializable' % (value, ))


def dumps(value):
    return simplejson.dumps(jsonable(value), sort_keys=True, indent=2, ignore_nan=True)


def format_float(value):
    """Shortest round-trip representation ('nan' for failed points)."""
    return repr(float(value))


def write_scan_csv(grid, fileobj):
    writer = csv.writer(fileobj, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in grid.rows():
        writer.writerow([format_float(value) for value in row])


def scan_csv(grid):
    buffer = io.StringIO()
    write_scan_csv(grid, buffer)
    return buffer.getvalue()


def root_record(root):
    """JSON record of a RayleighRoot."""
    gamma = None
    if root.gamma is not None:
        gamma = [complex(value) for value in root.gamma]
    return {
        'v_re': root.v.re,
        'v_im': -root.v.im_neg,
        'f_value': root.f_value,
        'det_abs': root.det_abs,
        'classification': root.classification,
        'iterations': root.iterations,
        'gamma': gamma,
    }


def _cell(value):
    if isinstance(value, (float, np.floating)):
        return '%.12g' % value
    if isinstance(value, (complex, np.complexfloating)):
        return '%.12g%+.12gi' % (value.real, value.imag)
    if value is None:
        return '-'
    return str(value)


def text_table(columns, rows):
    """Aligned plain-text table; numbers are right-aligned."""
    cells = [[_cell(value) for value in row] for row in rows]
    widths = [len(title) for title in columns]
    for row in cells:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    numeric = [all(isinstance(row[k], (int, float, complex, np.number)) and not isinstance(row[k], bool)
                   for row in rows) if rows else False
               for k in range(len(columns))]
    def line(values):
        parts = []
        for value, width, right in zip(values, widths, numeric):
            parts.append(value.rjust(width) if right else value.ljust(width))
        return '  '.join(parts).rstrip()
    output = [line(columns), line(['-' * width for width in widths])]
    output.extend(line(row) for row in cells)
    return '\n'.join(output) + '\n'
