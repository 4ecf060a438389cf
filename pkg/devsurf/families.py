'''
Constructors for the classical families of developable patches:
cylinders, cones, tangent surfaces, patches bounded by two curves on
the tangent surface of a given edge of regression, and the rational-edge
family obtained by variation of constants.
'''

from warnings import warn

import numpy as np

from . import tools
from .bezier import BezierCurve
from .developable import DevelopablePatch, Certificate, aumann_construct
from .polynomial import Polynomial, RationalFunction

def _as_poly(f):

    if isinstance(f, Polynomial):
        return f.to_monomial()
    return Polynomial(f)

def _identity():
    return RationalFunction(Polynomial.identity())

def cylinder(c, w, f):
    '''
    Cylinder d = c + f w, all rulings parallel to w.

    Arguments
    ---------
    c : BezierCurve
        Degree n boundary curve.
    w : array-like
        Ruling direction.
    f : Polynomial or array-like
        Ruling length, degree <= n (ascending monomial coefficients
        if array-like).

    Returns
    -------
    patch : DevelopablePatch
        Certificate Lambda = M = u - n f / f', common factors of
        numerator and denominator cancelled. For constant f
        (translation) no certificate is attached.

    Raises
    ------
    ValueError
        If deg f > n, f == 0 or w == 0.
    '''

    f = _as_poly(f)
    w = tools.as_vector(w, 'w')
    n = c.degree

    if f.degree > n:
        raise ValueError('deg f = {} exceeds the curve degree {}'.format(
            f.degree, n))
    if f.is_zero:
        raise ValueError('f vanishes identically')
    if not np.any(w):
        raise ValueError('w should be nonzero')

    fb = f.to_bernstein(n).coeffs
    d = BezierCurve(c.points + fb[:,None] * w)

    df = f.deriv()
    if df.is_zero:
        return DevelopablePatch(c, d)

    u = Polynomial.identity()
    lam = RationalFunction(u * df - n * f, df).reduce()

    return DevelopablePatch(c, d, certificate=Certificate(lam, lam))

def cone(c, vertex, f):
    '''
    Cone with rulings v = (c - V) f through the vertex V.

    Arguments
    ---------
    c : BezierCurve
        Degree n directrix.
    vertex : array-like
    f : Polynomial or array-like
        Non-constant, degree m >= 1.

    Returns
    -------
    patch : DevelopablePatch
        Degree n + m, with N = n + m,
        Lambda = u - N (f + f^2) / f', M = u - N f / f'.

    Raises
    ------
    ValueError
        If f is constant (scaled copy of c).
    '''

    f = _as_poly(f)
    vertex = tools.as_point(vertex, 'vertex')
    if f.degree < 1:
        raise ValueError('f should be non-constant, constant f gives a '
                         'scaled copy of c')

    m = f.degree
    nn = c.degree + m
    fb = f.to_bernstein(m).coeffs

    new_c = c.elevate(m)
    rulings = tools.bernstein_product(c.points - vertex, fb[:,None])
    d = BezierCurve(new_c.points + rulings)

    u = _identity()
    ff = RationalFunction(f)
    dff = RationalFunction(f.deriv())
    lam = (u - nn * (ff + ff * ff) / dff).reduce()
    mfn = (u - nn * ff / dff).reduce()

    return DevelopablePatch(new_c, d, certificate=Certificate(lam, mfn))

def tangent_patch(c, f=1.):
    '''
    Tangent surface b(u, v) = c(u) + v f(u) c'(u) of the curve c.

    Arguments
    ---------
    c : BezierCurve
        Degree n >= 1, the edge of regression.

    Keyword arguments
    -----------------
    f : Polynomial, array-like or scalar
        Linear factor a u + b. (default : 1.)

    Returns
    -------
    patch : DevelopablePatch
        Certificate Lambda = u + n f, M = u.

    Raises
    ------
    ValueError
        If f is zero or of degree > 1.
    '''

    f = _as_poly(np.atleast_1d(f) if not isinstance(f, Polynomial) else f)
    if f.is_zero:
        raise ValueError('f vanishes identically')
    if f.degree > 1:
        raise ValueError('f should be linear, got degree {}'.format(
            f.degree))

    f0, f1 = f(0.), f(1.)
    if f0 * f1 <= 0:
        warn('f vanishes on [0, 1], rulings collapse inside the patch',
             RuntimeWarning)

    n = c.degree
    fb = f.to_bernstein(1).coeffs
    d = BezierCurve(c.points + tools.bernstein_product(
        fb[:,None], c.hodograph().points))

    u = Polynomial.identity()
    cert = Certificate(RationalFunction(u + n * f), RationalFunction(u))

    return DevelopablePatch(c, d, certificate=cert)

def from_edge_of_regression(r, b1, b2):
    '''
    Patch on the tangent surface of r between the curves
    r + (a u + b1) r' and r + (a u + b2) r', a = -1/(n+1), whose
    leading terms cancel to degree n.

    Arguments
    ---------
    r : BezierCurve
        Edge of regression, degree n + 1 >= 2.
    b1, b2 : float

    Returns
    -------
    patch : DevelopablePatch
        Degree n with constant certificate ((n+1) b2, (n+1) b1).

    Raises
    ------
    ValueError
        If b1 == b2.
    RuntimeError
        If the leading coefficients fail to cancel.
    '''

    b1 = float(b1)
    b2 = float(b2)
    if b1 == b2:
        raise ValueError('b1 == b2 gives a zero-width patch')

    nn = r.degree
    n = nn - 1
    if n < 1:
        raise ValueError('r should have degree >= 2')

    a = -1. / (n + 1)
    mono = r.to_monomial()
    dmono = np.zeros_like(mono)
    dmono[:-1] = mono[1:] * np.arange(1, nn + 1)[:,None]

    scale = max(1., np.max(np.abs(mono)))
    curves = []
    for b in (b1, b2):
        coeffs = mono + b * dmono
        coeffs[1:] += a * dmono[:-1]

        if np.max(np.abs(coeffs[-1])) > 1e-9 * scale:
            raise RuntimeError('leading coefficients do not cancel: '
                               '{}'.format(coeffs[-1]))

        curves.append(BezierCurve.from_monomial(coeffs[:-1], degree=n))

    cert = Certificate.constant((n + 1) * b2, (n + 1) * b1)

    return DevelopablePatch(curves[0], curves[1], certificate=cert)

def family4(c, a, b, A, w, n=None):
    '''
    Rational-edge family: v(u) = (u - a)^n w + v_p(u) with the
    particular solution

        v_p(u) = (u - a)^n int (u - b) c'(u) / (A (u - a)^(n+1)) du,

    integrated termwise in powers of (u - a), and d = c + v.

    Arguments
    ---------
    c : BezierCurve
        Degree n - 1.
    a, b : float
        a != b.
    A : float
        Nonzero.
    w : array-like
        Homogeneous part, may be zero.

    Keyword arguments
    -----------------
    n : int, None
        Patch degree, must equal c.degree + 1 when given.
        (default : None)

    Returns
    -------
    patch : DevelopablePatch
        Degree n, certificate Lambda = a + (b - u) / A, M = a.
        The edge of regression is c - A (u - a) / (u - b) v.

    Raises
    ------
    ValueError
        For A == 0, a == b, a degree mismatch or c' == 0 with w == 0.
    '''

    a = float(a)
    b = float(b)
    A = float(A)
    w = tools.as_vector(w, 'w')

    if A == 0:
        raise ValueError('A should be nonzero')
    if a == b:
        raise ValueError('a == b')
    if n is None:
        n = c.degree + 1
    if c.degree != n - 1:
        raise ValueError('c should have degree n - 1 = {}, got {}'.format(
            n - 1, c.degree))

    if c.degree >= 1:
        dmono = c.hodograph().to_monomial()
    else:
        dmono = np.zeros((1, 3))
    dc_zero = not np.any(np.abs(dmono) > tools.TRIM_TOL)
    if dc_zero and not np.any(w):
        raise ValueError('w == 0 and c\' == 0 give a degenerate patch')

    # Taylor coefficients of c' about a, t_k for k = 0..n-2
    t = np.zeros((n + 1, 3), dtype=float)
    for axis in range(3):
        tk = Polynomial(dmono[:, axis]).taylor_shift(a)
        t[:min(tk.size, n - 1), axis] = tk[:n-1]

    # shifted coefficients of v in powers of (u - a)
    shifted = np.zeros((n + 1, 3), dtype=float)
    for k in range(n):
        prev = t[k-1] if k >= 1 else 0.
        s_k = prev + (a - b) * t[k]
        shifted[k] = s_k / (A * (k - n))
    shifted[n] += w

    back = Polynomial([-a, 1.])
    mono = np.zeros((n + 1, 3), dtype=float)
    for axis in range(3):
        coeffs = Polynomial(shifted[:, axis]).compose(back).monomial_coeffs()
        mono[:coeffs.size, axis] = coeffs[:n+1]

    v = BezierCurve.from_monomial(mono, degree=n)
    new_c = c.elevate(1)
    d = BezierCurve(new_c.points + v.points)

    cert = Certificate(RationalFunction([a + b / A, -1. / A]),
                       RationalFunction.constant(a))

    return DevelopablePatch(new_c, d, certificate=cert)

def family4_edge(patch, a, b, A, u):
    '''
    Closed-form edge of regression c(u) - A (u - a) / (u - b) v(u)
    of a family4 patch.
    '''

    u = np.asarray(u, dtype=float)
    if np.any(np.abs(u - b) < tools.POLE_TOL):
        raise ValueError('u == b is a pole of the edge')

    factor = A * (u - a) / (u - b)
    vv = patch.d(u) - patch.c(u)
    if np.ndim(u) == 0:
        return patch.c(u) - factor * vv
    return patch.c(u) - factor[:,None] * vv

AUMANN = 'aumann'
AUMANN_ELEVATED = 'aumann-elevated'
SCALED_RULINGS = 'scaled-rulings'
FAMILY4 = 'family4'

def general_solution_info(n, dc):
    '''
    Constructions that give a degree n patch from a boundary curve
    of degree dc.

    Arguments
    ---------
    n : int
        Patch degree.
    dc : int
        Degree of the given boundary curve, n or n - 1.

    Returns
    -------
    constructors : list of str

    Raises
    ------
    ValueError
        For dc outside {n, n - 1}.
    '''

    if dc == n:
        return [AUMANN]
    elif dc == n - 1:
        return [AUMANN_ELEVATED, SCALED_RULINGS, FAMILY4]

    raise ValueError('dc = {} is not supported for n = {}, only n and '
                     'n - 1 are'.format(dc, n))

class FamilySpec(object):
    '''
    Parameters of one surface family, buildable from a boundary
    curve (or, for 'from-edge', from the edge of regression).

    Arguments
    ---------
    kind : str
        One of 'aumann', 'cylinder', 'cone', 'tangent', 'from-edge',
        'family4'.
    kwargs
        Constructor parameters: aumann(d0, lam, m), cylinder(w, f),
        cone(vertex, f), tangent(f), from-edge(b1, b2),
        family4(a, b, A, w).
    '''

    _builders = {
        'aumann' : (aumann_construct, ('d0', 'lam', 'm')),
        'cylinder' : (cylinder, ('w', 'f')),
        'cone' : (cone, ('vertex', 'f')),
        'tangent' : (tangent_patch, ('f',)),
        'from-edge' : (from_edge_of_regression, ('b1', 'b2')),
        'family4' : (family4, ('a', 'b', 'A', 'w')),
        }

    def __init__(self, kind, **kwargs):

        if kind not in self._builders:
            raise ValueError('kind = {} not recognized'.format(kind))

        names = self._builders[kind][1]
        missing = [name for name in names if name not in kwargs]
        if missing:
            raise ValueError('{} needs {}'.format(kind, ', '.join(missing)))
        unknown = set(kwargs) - set(names)
        if unknown:
            raise ValueError('unknown {} parameters: {}'.format(
                kind, ', '.join(sorted(unknown))))

        self.kind = kind
        self.params = kwargs

    def build(self, curve):
        '''Run the constructor on the given curve.'''

        func, names = self._builders[self.kind]
        return func(curve, *[self.params[name] for name in names])
