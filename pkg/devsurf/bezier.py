'''
Bezier curves in 3-space: de Casteljau evaluation with access to the
intermediate stages, blossoms, hodographs, degree elevation and
parameter restriction.
'''

import numpy as np

from . import tools
from .polynomial import Polynomial

class BezierCurve(object):
    '''
    Degree n Bezier curve given by n+1 control points. The same class
    holds curves of vectors, e.g. the ruling curve v(u) = d(u) - c(u)
    or a hodograph. Degree 0 only occurs for vector curves (the
    hodograph of a line); patches and documents require n >= 1.
    '''

    def __init__(self, points, degree=None):
        '''
        Arguments
        ---------
        points : array-like
            Control points, shape (n+1, 3).

        Keyword arguments
        -----------------
        degree : int, None
            Declared degree, must equal len(points) - 1 when given.
            (default : None)

        Raises
        ------
        ValueError
            If points is not a finite (n+1, 3) array or the
            degree does not match.
        '''

        try:
            points = np.array(points, dtype=float)
        except (TypeError, ValueError):
            raise ValueError('control points are not numeric')

        if points.ndim != 2 or points.shape[1] != 3 or points.shape[0] < 1:
            raise ValueError('control points should have shape (n+1, 3), '
                             'got {}'.format(points.shape))
        if not np.all(np.isfinite(points)):
            raise ValueError('control points contain nan/inf.')

        if degree is not None and int(degree) != points.shape[0] - 1:
            raise ValueError('degree {} does not match {} control '
                             'points'.format(degree, points.shape[0]))

        points.flags.writeable = False
        self._points = points

    @classmethod
    def from_monomial(cls, coeffs, degree=None):
        '''
        Build a curve from ascending monomial coefficient vectors.

        Arguments
        ---------
        coeffs : array-like
            Shape (k+1, 3), coefficient of u^i in row i.

        Keyword arguments
        -----------------
        degree : int, None
            Bernstein degree of the result, at least k. If None,
            use k. (default : None)
        '''

        coeffs = np.atleast_2d(np.array(coeffs, dtype=float))
        k = coeffs.shape[0] - 1
        if degree is None:
            degree = k
        if degree < k:
            raise ValueError('cannot represent degree {} curve in '
                             'Bernstein degree {}'.format(k, degree))

        padded = np.zeros((degree + 1, 3), dtype=float)
        padded[:k+1] = coeffs

        return cls(tools.monomial_to_bernstein(degree).dot(padded))

    @property
    def points(self):
        return self._points

    @property
    def degree(self):
        return self._points.shape[0] - 1

    def __call__(self, u):
        '''
        Evaluate the curve.

        Arguments
        ---------
        u : scalar or array-like

        Returns
        -------
        point : array-like
            Shape (3,) for scalar u, (u.size, 3) otherwise.
        '''

        val = tools.de_casteljau(self.points, u)
        if np.ndim(u) == 0:
            return val[0]
        return val[:, 0]

    def eval(self, u):
        '''
        Evaluate at a single parameter value and return the
        penultimate de Casteljau stage as well.

        Arguments
        ---------
        u : float

        Returns
        -------
        point : array-like
            c(u).
        penultimate : tuple of array-like
            (c_0^{n-1}(u), c_1^{n-1}(u)), their difference times n
            is c'(u). For degree 0, both equal c_0.
        '''

        if self.degree == 0:
            return self.points[0].copy(), (self.points[0].copy(),
                                           self.points[0].copy())

        pen = tools.de_casteljau(self.points, float(u), stop=2)
        point = (1. - u) * pen[0] + u * pen[1]

        return point, (pen[0], pen[1])

    def penultimate(self, u):
        '''
        Penultimate de Casteljau points for an array of parameters.

        Returns
        -------
        pen : array-like
            Shape (u.size, 2, 3).
        '''

        u = np.atleast_1d(np.asarray(u, dtype=float))
        if self.degree == 0:
            return np.broadcast_to(self.points[0], (u.size, 2, 3)).copy()

        return tools.de_casteljau(self.points, u, stop=2)

    def derivative(self, u):
        '''c'(u), shape (3,) or (u.size, 3).'''

        if self.degree == 0:
            return np.zeros(np.shape(u) + (3,))

        pen = tools.de_casteljau(self.points, u, stop=2)
        if np.ndim(u) == 0:
            return self.degree * (pen[1] - pen[0])
        return self.degree * (pen[:, 1] - pen[:, 0])

    def blossom(self, args):
        '''
        Evaluate the polar form c[u_1, ..., u_n].

        Arguments
        ---------
        args : array-like
            Shape (n,) or (k, n).

        Returns
        -------
        point : array-like
            Shape (3,) or (k, 3).

        Raises
        ------
        ValueError
            If the number of arguments differs from the degree.
        '''

        return tools.blossom_kernel(self.points, args)

    def hodograph(self):
        '''Derivative curve, degree n-1 with control vectors n(c_{i+1}-c_i).'''

        if self.degree < 1:
            raise ValueError('hodograph needs degree >= 1')

        return BezierCurve(self.degree * np.diff(self.points, axis=0))

    def elevate(self, m=1):
        '''
        Degree elevation.

        Keyword arguments
        -----------------
        m : int
            Number of single elevation steps. m = 0 returns
            the curve itself. (default : 1)

        Returns
        -------
        curve : BezierCurve
            Degree n+m curve, pointwise identical.
        '''

        m = int(m)
        if m < 0:
            raise ValueError('m should be >= 0, got {}'.format(m))

        pts = np.array(self.points)
        for _ in range(m):
            n = pts.shape[0] - 1
            alpha = (np.arange(n + 2, dtype=float) / (n + 1))[:,None]
            new = np.zeros((n + 2, 3), dtype=float)
            new[1:] += alpha[1:] * pts
            new[:-1] += (1. - alpha[:-1]) * pts
            pts = new

        if m == 0:
            return self
        return BezierCurve(pts)

    def restrict(self, a, b):
        '''
        Curve on the parameter interval [a, b], reparametrized to
        [0, 1] through u = (1 - t) a + t b. a > b reverses the curve.

        Raises
        ------
        ValueError
            If a == b.
        '''

        a = float(a)
        b = float(b)
        if a == b:
            raise ValueError('degenerate interval [{}, {}]'.format(a, b))

        n = self.degree
        if n == 0:
            return self

        args = np.empty((n + 1, n), dtype=float)
        for i in range(n + 1):
            args[i, :n-i] = a
            args[i, n-i:] = b

        return BezierCurve(self.blossom(args))

    def to_monomial(self):
        '''Ascending monomial coefficients, shape (n+1, 3).'''
        return tools.bernstein_to_monomial(self.degree).dot(self.points)

    def coordinate(self, axis):
        '''Coordinate function as Bernstein Polynomial.'''
        return Polynomial(self.points[:, axis], basis='bernstein',
                          degree=self.degree)

    def compose(self, h):
        '''
        Curve c(h(t)) for a polynomial h, degree n * deg(h).
        Composition is done in monomial form.
        '''

        mono = self.to_monomial()
        coords = [Polynomial(mono[:, axis]).compose(h)
                  for axis in range(3)]
        degree = self.degree * max(h.to_monomial().degree, 0)

        coeffs = np.zeros((degree + 1, 3), dtype=float)
        for axis, poly in enumerate(coords):
            mc = poly.monomial_coeffs()[:degree+1]
            coeffs[:mc.size, axis] = mc

        return BezierCurve.from_monomial(coeffs, degree=degree)

    def allclose(self, other, atol=1e-12):
        '''Control polygons of equal degree agree within atol.'''

        return self.degree == other.degree and \
            np.allclose(self.points, other.points, rtol=0, atol=atol)

    def __repr__(self):
        return 'BezierCurve(degree={}, points={})'.format(
            self.degree, self.points.tolist())

def hodograph(curve):
    return curve.hodograph()

def blossom(curve, args):
    return curve.blossom(args)

def elevate_curve(curve, m):
    return curve.elevate(m)

def restrict_curve(curve, a, b):
    return curve.restrict(a, b)
