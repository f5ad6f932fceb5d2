"""
Reading and writing complex matrices.

The canonical interchange format is JSON::

    {"rows": D, "cols": M, "data": [[re, im], ...]}

with ``data`` in row-major order.  Floats are written with Python's
shortest round-trip repr, so a write/read cycle is bit exact.  CSV input
is accepted with one matrix row per line and entries such as ``1.5``,
``-2i``, ``0.5+1e-3i`` or ``3-4j``.
"""

import csv
import io
import json
import math
import re
from pathlib import Path

import numpy as np

from .errors import ParseError

__all__ = ['matrix_to_obj', 'matrix_from_obj', 'dumps', 'loads', 'load',
           'save', 'parse_csv', 'parse_complex']


def matrix_to_obj(A):
    A = np.asarray(A, dtype=complex)
    if A.ndim == 1:
        A = A[:, None]
    rows, cols = A.shape
    data = [[float(z.real), float(z.imag)] for z in A.ravel(order='C')]
    return {'rows': int(rows), 'cols': int(cols), 'data': data}


def matrix_from_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError('matrix JSON must be an object')
    for key in ('rows', 'cols', 'data'):
        if key not in obj:
            raise ParseError('matrix JSON is missing "%s"' % key)
    rows, cols, data = obj['rows'], obj['cols'], obj['data']
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 0 or cols < 0:
        raise ParseError('"rows" and "cols" must be nonnegative integers')
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ParseError('"data" must hold rows*cols = %d entries' % (rows * cols))
    out = np.empty(rows * cols, dtype=complex)
    for k, entry in enumerate(data):
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)):
            raise ParseError('entry %d of "data" is not a [re, im] pair' % k)
        out[k] = complex(entry[0], entry[1])
    return out.reshape(rows, cols)


def dumps(A, indent=None):
    return json.dumps(matrix_to_obj(A), indent=indent)


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return matrix_from_obj(obj)


_COMPLEX = re.compile(r'^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?'
                      r'([+-](\d+\.?\d*|\.\d+)?([eE][+-]?\d+)?[ij])?$'
                      r'|^[+-]?((\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?[ij]$')


def parse_complex(token):
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (``j`` accepted for ``i``)."""
    s = token.strip().replace(' ', '')
    if not s or not _COMPLEX.match(s):
        raise ValueError('not a complex number: %r' % token)
    s = s.replace('i', 'j')
    if s in ('j', '+j', '-j'):
        s = s.replace('j', '1j')
    elif re.search(r'[+-]j$', s):
        s = s[:-1] + '1j'
    return complex(s)


def parse_csv(text):
    rows = []
    width = None
    for lineno, line in enumerate(io.StringIO(text), start=1):
        if not line.strip() or line.lstrip().startswith('#'):
            continue
        fields = next(csv.reader([line]))
        row = []
        col = 1
        for field in fields:
            try:
                row.append(parse_complex(field))
            except ValueError:
                raise ParseError('cannot parse %r as a complex number' % field.strip(),
                                 lineno, col) from None
            col += len(field) + 1
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError('expected %d entries, found %d' % (width, len(row)), lineno, 1)
        rows.append(row)
    if not rows:
        raise ParseError('no data rows')
    return np.array(rows, dtype=complex)


def load(path):
    """Load a matrix from ``.json`` (default) or ``.csv``."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == '.csv':
        return parse_csv(text)
    return loads(text)


def save(path, A):
    Path(path).write_text(dumps(A) + '\n')


def finite(x):
    """JSON-safe float: infinities and NaN become strings."""
    x = float(x)
    return x if math.isfinite(x) else str(x)
