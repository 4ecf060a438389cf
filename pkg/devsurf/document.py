'''
JSON documents for curves, patches, check reports and sampled
polylines:

    {"version": 1, "entity": <kind>, "payload": <payload>}

curve    {"degree": n, "points": [[x, y, z], ...]}
patch    {"c": curve, "d": curve,
          "certificate": {"lambda_fn": rational, "m_fn": rational} | null}
rational {"num": [ascending coeffs], "den": [ascending coeffs]}
report   {"reports": [CheckReport.to_dict(), ...]}
polyline {"u": [...], "points": [[x, y, z], ...]}
'''

import json
from numbers import Real
from warnings import warn

import numpy as np

from .bezier import BezierCurve
from .developable import DevelopablePatch, Certificate
from .polynomial import RationalFunction, PoleError
from .verify import CheckReport, blossom_residual

VERSION = 1

# tolerance on the blossom gap of a certificate read from a document
CERTIFICATE_TOL = 1e-6

CURVE = 'curve'
PATCH = 'patch'
REPORT = 'report'
POLYLINE = 'polyline'

class SchemaError(ValueError):
    '''Document violates the schema. The message starts with the field path.'''

    def __init__(self, path, msg):
        self.path = path
        super(SchemaError, self).__init__('{}: {}'.format(path, msg))

class Polyline(object):
    '''Sampled curve: parameters u and points of shape (u.size, 3).'''

    def __init__(self, u, points):

        self.u = np.array(u, dtype=float)
        self.points = np.array(points, dtype=float).reshape(-1, 3)
        if self.u.shape != (self.points.shape[0],):
            raise ValueError('u and points differ in length')

def _reject_constant(name):
    raise SchemaError('$', 'non-finite number {} not allowed'.format(name))

def _expect_dict(obj, path, keys):

    if not isinstance(obj, dict):
        raise SchemaError(path, 'expected an object')
    for key in keys:
        if key not in obj:
            raise SchemaError('{}.{}'.format(path, key), 'missing field')

def _number(x, path):

    if isinstance(x, bool) or not isinstance(x, Real):
        raise SchemaError(path, 'expected a number, got {!r}'.format(x))
    if not np.isfinite(x):
        raise SchemaError(path, 'non-finite number')

    return float(x)

def _integer(x, path):

    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(path, 'expected an integer, got {!r}'.format(x))

    return x

def _numbers(seq, path):

    if not isinstance(seq, list) or not seq:
        raise SchemaError(path, 'expected a non-empty array')

    return [_number(x, '{}[{}]'.format(path, i)) for i, x in enumerate(seq)]

def _points(seq, path):

    if not isinstance(seq, list):
        raise SchemaError(path, 'expected an array of points')

    out = []
    for i, pt in enumerate(seq):
        ppath = '{}[{}]'.format(path, i)
        if not isinstance(pt, list) or len(pt) != 3:
            raise SchemaError(ppath, 'expected [x, y, z]')
        out.append(_numbers(pt, ppath))

    return out

def curve_from_payload(obj, path='payload'):

    _expect_dict(obj, path, ('degree', 'points'))
    degree = _integer(obj['degree'], path + '.degree')
    points = _points(obj['points'], path + '.points')

    if degree < 1:
        raise SchemaError(path + '.degree', 'should be >= 1')
    if len(points) != degree + 1:
        raise SchemaError(path + '.points', 'degree {} needs {} points, '
                          'got {}'.format(degree, degree + 1, len(points)))

    return BezierCurve(points)

def curve_to_payload(curve):
    return {'degree' : curve.degree, 'points' : curve.points.tolist()}

def rational_from_payload(obj, path):

    _expect_dict(obj, path, ('num', 'den'))
    num = _numbers(obj['num'], path + '.num')
    den = _numbers(obj['den'], path + '.den')
    try:
        return RationalFunction(num, den)
    except ValueError as e:
        raise SchemaError(path + '.den', str(e))

def rational_to_payload(fn):
    return {'num' : fn.num.coeffs.tolist(), 'den' : fn.den.coeffs.tolist()}

def patch_from_payload(obj, path='payload'):

    _expect_dict(obj, path, ('c', 'd'))
    c = curve_from_payload(obj['c'], path + '.c')
    d = curve_from_payload(obj['d'], path + '.d')
    if c.degree != d.degree:
        raise SchemaError(path + '.d.degree', 'degree mismatch, c has {} '
                          'and d has {}'.format(c.degree, d.degree))

    cert = obj.get('certificate')
    if cert is not None:
        cpath = path + '.certificate'
        _expect_dict(cert, cpath, ('lambda_fn', 'm_fn'))
        cert = Certificate(
            rational_from_payload(cert['lambda_fn'], cpath + '.lambda_fn'),
            rational_from_payload(cert['m_fn'], cpath + '.m_fn'))
        _check_certificate(c, d, cert, cpath)

    return DevelopablePatch(c, d, certificate=cert)

def _check_certificate(c, d, cert, path):

    try:
        report = blossom_residual(DevelopablePatch(c, d), cert,
                                  tol=CERTIFICATE_TOL)
    except PoleError:
        # pole on the sample grid, nothing to compare
        return
    if not report.passed:
        raise SchemaError(path, 'certificate does not match the patch, '
                          'blossom gap {:.3e} at u={:.6g}'.format(
                              report.max_residual, report.argmax[0]))

def patch_to_payload(patch):

    cert = patch.certificate
    if cert is not None and not cert.is_rational:
        warn('{} certificate cannot be serialized, writing null'.format(
            cert.kind), RuntimeWarning)
        cert = None

    if cert is not None:
        cert = {'lambda_fn' : rational_to_payload(cert.lambda_fn),
                'm_fn' : rational_to_payload(cert.m_fn)}

    return {'c' : curve_to_payload(patch.c),
            'd' : curve_to_payload(patch.d),
            'certificate' : cert}

def reports_from_payload(obj, path='payload'):

    _expect_dict(obj, path, ('reports',))
    if not isinstance(obj['reports'], list):
        raise SchemaError(path + '.reports', 'expected an array')

    out = []
    for i, rep in enumerate(obj['reports']):
        rpath = '{}.reports[{}]'.format(path, i)
        _expect_dict(rep, rpath, ('name', 'samples', 'maxResidual',
                                  'argmaxLocation', 'tolerance'))
        loc = _numbers(rep['argmaxLocation'], rpath + '.argmaxLocation')
        if len(loc) != 2:
            raise SchemaError(rpath + '.argmaxLocation', 'expected [u, v]')
        out.append(CheckReport(
            rep['name'], _integer(rep['samples'], rpath + '.samples'),
            _number(rep['maxResidual'], rpath + '.maxResidual'), loc,
            _number(rep['tolerance'], rpath + '.tolerance'),
            flags=rep.get('flags')))

    return out

def polyline_from_payload(obj, path='payload'):

    _expect_dict(obj, path, ('u', 'points'))
    u = _numbers(obj['u'], path + '.u')
    points = _points(obj['points'], path + '.points')
    if len(u) != len(points):
        raise SchemaError(path + '.points', 'expected {} points, got '
                          '{}'.format(len(u), len(points)))

    return Polyline(u, points)

def _entity_of(obj):

    if isinstance(obj, BezierCurve):
        return CURVE, curve_to_payload(obj)
    if isinstance(obj, DevelopablePatch):
        return PATCH, patch_to_payload(obj)
    if isinstance(obj, CheckReport):
        obj = [obj]
    if isinstance(obj, (list, tuple)) and \
       all(isinstance(r, CheckReport) for r in obj):
        return REPORT, {'reports' : [r.to_dict() for r in obj]}
    if isinstance(obj, Polyline):
        return POLYLINE, {'u' : obj.u.tolist(),
                          'points' : obj.points.tolist()}

    raise TypeError('cannot serialize {}'.format(type(obj).__name__))

_readers = {CURVE : curve_from_payload,
            PATCH : patch_from_payload,
            REPORT : reports_from_payload,
            POLYLINE : polyline_from_payload}

def parse(text, expect=None):
    '''
    Parse a document.

    Arguments
    ---------
    text : str

    Keyword arguments
    -----------------
    expect : str, None
        Required entity kind. (default : None)

    Returns
    -------
    obj : BezierCurve, DevelopablePatch, list of CheckReport or Polyline

    Raises
    ------
    SchemaError
        On malformed JSON, schema violations, degree mismatches
        and non-finite numbers.
    '''

    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except SchemaError:
        raise
    except ValueError as e:
        raise SchemaError('$', 'invalid JSON ({})'.format(e))

    _expect_dict(doc, '$', ('version', 'entity', 'payload'))
    if doc['version'] != VERSION:
        raise SchemaError('version', 'unsupported version {!r}'.format(
            doc['version']))

    entity = doc['entity']
    if entity not in _readers:
        raise SchemaError('entity', 'unknown entity {!r}'.format(entity))
    if expect is not None and entity != expect:
        raise SchemaError('entity', 'expected {}, got {}'.format(
            expect, entity))

    return _readers[entity](doc['payload'])

def serialize(obj):
    '''
    Serialize a curve, patch, check report(s) or polyline.

    Returns
    -------
    text : str
        JSON with shortest round-trip float representation.

    Raises
    ------
    ValueError
        For non-finite numbers.
    '''

    entity, payload = _entity_of(obj)
    doc = {'version' : VERSION, 'entity' : entity, 'payload' : payload}

    return json.dumps(doc, indent=2, allow_nan=False) + '\n'

def load(filename, expect=None):

    with open(filename, 'r') as f:
        return parse(f.read(), expect=expect)

def dump(obj, filename):

    with open(filename, 'w') as f:
        f.write(serialize(obj))
