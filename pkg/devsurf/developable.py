'''
Developable Bezier patches b(u, v) = (1 - v) c(u) + v d(u) and their
certificates: the rational functions Lambda(u), M(u) coupling the
blossoms of the two boundary curves,

    c[u, ..., u, Lambda(u)] = d[u, ..., u, M(u)].

Includes the conversion to the coefficients lambda, mu of
c' = lambda v + mu v', the cellwise Aumann construction, the edge of
regression and the surface classification.
'''

from copy import copy
from warnings import warn

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from . import tools
from .bezier import BezierCurve
from .polynomial import Polynomial, RationalFunction, PoleError, \
    rational_eval, fit_rational

RATIONAL = 'rational'
SAMPLED = 'sampled'
TRANSLATION = 'translation'
CONCURRENT = 'concurrent'
DEGENERATE = 'degenerate'

RULING_DEGREE_DROP = 'ruling-degree-drop'

PLANAR = 'planar'
CYLINDER = 'cylinder'
CONE = 'cone'
TANGENT = 'tangent'

def _as_rational(fn):

    if isinstance(fn, RationalFunction):
        return fn
    if isinstance(fn, Polynomial):
        return RationalFunction(fn)
    return RationalFunction.constant(float(fn))

def _identity():
    return RationalFunction(Polynomial.identity())

class Certificate(object):
    '''
    Outcome of certification. The 'rational' kind carries
    Lambda and M as RationalFunctions, 'sampled' carries their values
    on a grid. The remaining kinds mark patches without (finite)
    Lambda, M: 'translation' (all rulings parallel and equal),
    'concurrent' (rulings scaled about a common vertex, edge_v is the
    ruling coordinate of the vertex if found) and 'degenerate'
    (penultimate lines coincide). flags holds remarks such as
    'ruling-degree-drop'.
    '''

    def __init__(self, lambda_fn=None, m_fn=None, kind=RATIONAL,
                 u=None, lam_vals=None, m_vals=None, edge_v=None,
                 flags=None):

        if kind not in (RATIONAL, SAMPLED, TRANSLATION, CONCURRENT,
                        DEGENERATE):
            raise ValueError('kind = {} not recognized'.format(kind))

        self._kind = kind
        self._lambda_fn = None
        self._m_fn = None
        self._splines = None
        self._samples = None
        self._edge_v = None if edge_v is None else float(edge_v)
        self._flags = list(flags) if flags else []

        if kind == RATIONAL:
            if lambda_fn is None or m_fn is None:
                raise ValueError('rational certificate needs lambda_fn '
                                 'and m_fn')
            self._lambda_fn = _as_rational(lambda_fn)
            self._m_fn = _as_rational(m_fn)

        elif kind == SAMPLED:
            u = np.asarray(u, dtype=float)
            lam_vals = np.asarray(lam_vals, dtype=float)
            m_vals = np.asarray(m_vals, dtype=float)
            if u.size < 2 or lam_vals.shape != u.shape or \
               m_vals.shape != u.shape:
                raise ValueError('sampled certificate needs matching u, '
                                 'lambda and m arrays')
            order = np.argsort(u)
            self._samples = (u[order], lam_vals[order], m_vals[order])
            self._splines = (CubicSpline(*self._samples[:2]),
                             CubicSpline(self._samples[0],
                                         self._samples[2]))

    @classmethod
    def constant(cls, lam, m):
        return cls(RationalFunction.constant(lam),
                   RationalFunction.constant(m))

    @classmethod
    def from_samples(cls, u, lam_vals, m_vals):
        return cls(kind=SAMPLED, u=u, lam_vals=lam_vals, m_vals=m_vals)

    @property
    def kind(self):
        return self._kind

    @property
    def lambda_fn(self):
        return self._lambda_fn

    @property
    def m_fn(self):
        return self._m_fn

    @property
    def samples(self):
        '''(u, Lambda(u), M(u)) arrays of a sampled certificate.'''
        return self._samples

    @property
    def edge_v(self):
        return self._edge_v

    @property
    def flags(self):
        return list(self._flags)

    def with_flags(self, *flags):
        '''Copy carrying the extra flags.'''

        out = copy(self)
        out._flags = self._flags + [f for f in flags if f not in self._flags]

        return out

    @property
    def has_values(self):
        return self.kind in (RATIONAL, SAMPLED)

    @property
    def is_rational(self):
        return self.kind == RATIONAL

    @property
    def is_constant(self):
        return self.is_rational and self.lambda_fn.is_constant and \
            self.m_fn.is_constant

    @property
    def is_cylinder(self):
        '''Lambda == M, including the translation limit.'''

        if self.kind == TRANSLATION:
            return True
        if self.kind == RATIONAL:
            return (self.lambda_fn - self.m_fn).is_zero
        if self.kind == SAMPLED:
            _, lam, m = self.samples
            scale = max(1., np.max(np.abs(lam)))
            return bool(np.max(np.abs(lam - m)) <= tools.TRIM_TOL * scale)
        return False

    def values(self, u, pole_tol=tools.POLE_TOL):
        '''
        Evaluate (Lambda(u), M(u)).

        Raises
        ------
        PoleError
            At a pole of a rational certificate.
        ValueError
            If the certificate kind carries no values.
        '''

        if self.kind == RATIONAL:
            return (rational_eval(self.lambda_fn, u, pole_tol=pole_tol),
                    rational_eval(self.m_fn, u, pole_tol=pole_tol))
        if self.kind == SAMPLED:
            return self._splines[0](u), self._splines[1](u)

        raise ValueError('{} certificate has no Lambda, M values'.format(
            self.kind))

    def constant_values(self):
        '''(Lambda, M) as floats of a constant certificate.'''

        if not self.is_constant:
            raise ValueError('certificate is not constant')

        return self.lambda_fn.constant_value(), self.m_fn.constant_value()

    def __repr__(self):
        if self.is_rational:
            return 'Certificate(lambda_fn={}, m_fn={})'.format(
                self.lambda_fn, self.m_fn)
        return 'Certificate(kind={!r})'.format(self.kind)

class LambdaMu(object):
    '''Coefficients of c'(u) = lambda(u) v(u) + mu(u) v'(u).'''

    def __init__(self, lam, mu):
        self.lam = _as_rational(lam)
        self.mu = _as_rational(mu)

    def __repr__(self):
        return 'LambdaMu(lam={}, mu={})'.format(self.lam, self.mu)

class SurfaceClass(object):
    '''
    Classification tag, one of 'planar', 'cylinder', 'cone' or
    'tangent'. Cones carry their vertex and the largest sampled
    distance from it.
    '''

    def __init__(self, tag, vertex=None, deviation=0.):

        if tag not in (PLANAR, CYLINDER, CONE, TANGENT):
            raise ValueError('tag = {} not recognized'.format(tag))
        if tag == CONE and vertex is None:
            raise ValueError('cone needs a vertex')

        self.tag = tag
        self.vertex = None if vertex is None else tools.as_point(
            vertex, 'vertex')
        self.deviation = float(deviation)

    def __eq__(self, other):
        if isinstance(other, SurfaceClass):
            return self.tag == other.tag
        return self.tag == other

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.tag)

    def __str__(self):
        if self.tag == CONE:
            return 'cone [{:.10g}, {:.10g}, {:.10g}]'.format(*self.vertex)
        return self.tag

    def __repr__(self):
        return 'SurfaceClass({!r})'.format(str(self))

class DevelopablePatch(object):
    '''
    Ruled patch between two boundary curves of equal degree, with
    an optional certificate of developability.
    '''

    def __init__(self, c, d, certificate=None):
        '''
        Arguments
        ---------
        c, d : BezierCurve
            Boundary curves b(u, 0) and b(u, 1).

        Keyword arguments
        -----------------
        certificate : Certificate, None
            (default : None)

        Raises
        ------
        ValueError
            If the degrees differ or are 0.
        '''

        if not isinstance(c, BezierCurve) or not isinstance(d, BezierCurve):
            raise TypeError('c and d should be BezierCurve instances')
        if c.degree != d.degree:
            raise ValueError('degree mismatch: c has degree {}, d has '
                             'degree {}'.format(c.degree, d.degree))
        if c.degree < 1:
            raise ValueError('boundary curves should have degree >= 1')
        if certificate is not None and not isinstance(certificate,
                                                      Certificate):
            raise TypeError('certificate should be a Certificate')

        self._c = c
        self._d = d
        self._certificate = certificate

    @property
    def c(self):
        return self._c

    @property
    def d(self):
        return self._d

    @property
    def degree(self):
        return self._c.degree

    @property
    def certificate(self):
        return self._certificate

    def with_certificate(self, certificate):
        return DevelopablePatch(self.c, self.d, certificate=certificate)

    def ruling_curve(self):
        '''v(u) = d(u) - c(u) as curve of vectors.'''
        return BezierCurve(self.d.points - self.c.points)

    def has_ruling_degree_drop(self, tol=None):
        '''
        True if c or d has full degree n while the ruling curve d - c
        loses its leading monomial coefficient, i.e. c and d share
        their leading coefficient. Zero-width patches are excluded.
        '''

        tol = tools.get_tol(tol)
        mono_c = self.c.to_monomial()
        mono_d = self.d.to_monomial()
        scale = max(np.max(np.abs(mono_c)), np.max(np.abs(mono_d)), tools.EPS)

        full = max(np.linalg.norm(mono_c[-1]),
                   np.linalg.norm(mono_d[-1])) > tol * scale
        lead_v = np.linalg.norm(mono_d[-1] - mono_c[-1])

        return bool(full and lead_v <= tol * scale and not self.is_zero_width)

    @property
    def is_zero_width(self):
        return not np.any(self.d.points - self.c.points)

    def diameter(self):
        '''Diameter of the joint control net.'''
        return tools.net_diameter(np.vstack([self.c.points, self.d.points]))

    def __call__(self, u, v):
        '''
        Evaluate b(u, v) for broadcastable u, v.

        Returns
        -------
        point : array-like
            Shape np.broadcast(u, v).shape + (3,).
        '''

        u, v = np.broadcast_arrays(np.asarray(u, dtype=float),
                                   np.asarray(v, dtype=float))
        shape = u.shape
        uf = u.ravel()
        vf = v.ravel()[:,None]

        pts = (1. - vf) * self.c(uf) + vf * self.d(uf)

        return pts.reshape(shape + (3,))

    def partials(self, u, v):
        '''(b_u, b_v) at broadcastable u, v.'''

        u, v = np.broadcast_arrays(np.asarray(u, dtype=float),
                                   np.asarray(v, dtype=float))
        shape = u.shape
        uf = u.ravel()
        vf = v.ravel()[:,None]

        b_u = (1. - vf) * self.c.derivative(uf) + vf * self.d.derivative(uf)
        b_v = self.d(uf) - self.c(uf)

        return b_u.reshape(shape + (3,)), b_v.reshape(shape + (3,))

    def __repr__(self):
        return 'DevelopablePatch(c={!r}, d={!r}, certificate={!r})'.format(
            self.c, self.d, self.certificate)

def make_patch(c, d, certificate=None):
    '''
    Pair two boundary curves of equal degree. No developability
    is assumed.

    Raises
    ------
    ValueError
        If the degrees differ or are 0.
    '''

    return DevelopablePatch(c, d, certificate=certificate)

def aumann_construct(c, d0, lam, m):
    '''
    Build the developable net with constant certificate (lam, m) by
    the cell conditions

        (1 - lam) c_i + lam c_{i+1} = (1 - m) d_i + m d_{i+1}.

    Arguments
    ---------
    c : BezierCurve
        Boundary control polygon.
    d0 : array-like
        Free point. This is d_0, or d_n when m == 0.
    lam, m : float
        Constant certificate.

    Returns
    -------
    patch : DevelopablePatch

    Raises
    ------
    ValueError
        If lam == m (use families.cylinder).

    Notes
    -----
    For m = 0 the cell conditions fix d_i = (1 - lam) c_i + lam c_{i+1}
    for i < n and d0 is taken as d_n.
    '''

    lam = float(lam)
    m = float(m)
    d0 = tools.as_point(d0, 'd0')
    if lam == m:
        raise ValueError('lambda == m ({}) is the cylinder limit, use '
                         'families.cylinder'.format(lam))

    pts = c.points
    n = c.degree
    d = np.empty_like(pts)

    if m == 0:
        d[:n] = (1. - lam) * pts[:-1] + lam * pts[1:]
        d[n] = d0
    else:
        d[0] = d0
        for i in range(n):
            d[i+1] = ((1. - lam) * pts[i] + lam * pts[i+1]
                      - (1. - m) * d[i]) / m

    return DevelopablePatch(c, BezierCurve(d),
                            certificate=Certificate.constant(lam, m))

def lm_to_lambdamu(lam_fn, m_fn, n):
    '''
    Convert a certificate to the coefficients of the developability
    ODE: lambda = n / (Lambda - M), mu = (M - u) / (Lambda - M).

    Arguments
    ---------
    lam_fn, m_fn : RationalFunction or scalar
    n : int
        Degree of the patch.

    Returns
    -------
    lm : LambdaMu

    Raises
    ------
    ValueError
        If Lambda - M vanishes identically (cylinder).
    '''

    lam_fn = _as_rational(lam_fn)
    m_fn = _as_rational(m_fn)

    diff = lam_fn - m_fn
    if diff.is_zero:
        raise ValueError('Lambda == M, lambda and mu undefined (cylinder)')

    return LambdaMu(float(n) / diff, (m_fn - _identity()) / diff)

def lambdamu_to_lm(lm, n):
    '''
    Inverse of lm_to_lambdamu: Lambda = (n (mu + 1) + u lambda) / lambda,
    M = (n mu + u lambda) / lambda.

    Returns
    -------
    lam_fn, m_fn : RationalFunction

    Raises
    ------
    ValueError
        If lambda vanishes identically.
    '''

    if lm.lam.is_zero:
        raise ValueError('lambda vanishes identically')

    u = _identity()
    m_fn = (float(n) * lm.mu + u * lm.lam) / lm.lam
    lam_fn = (float(n) * (lm.mu + 1.) + u * lm.lam) / lm.lam

    return lam_fn, m_fn

def _line_intersection(p0, p1, q0, q1):
    '''
    Affine coordinates of the intersection of the lines p0 + s (p1 - p0)
    and q0 + t (q1 - q0), vectorized. Also returns the parallel and
    coincidence residuals.
    '''

    w = q0 - p0
    e1 = p1 - p0
    e2 = q1 - q0

    cross = np.cross(e1, e2)
    norm2 = np.einsum('...i,...i', cross, cross)
    par = tools.parallel_residual(e1, e2)
    coinc = np.maximum(tools.parallel_residual(w, e1),
                       tools.parallel_residual(w, e2))

    safe = np.where(norm2 > 0, norm2, 1.)
    lam = np.einsum('...i,...i', np.cross(w, e2), cross) / safe
    mu = np.einsum('...i,...i', np.cross(w, e1), cross) / safe

    return lam, mu, par, coinc

def _cell_fit(patch):
    '''
    Least-squares constants over the cell equations
    Lambda (c_{i+1} - c_i) - M (d_{i+1} - d_i) = d_i - c_i, and the
    normalised max residual. None if the system is rank deficient.
    '''

    c = patch.c.points
    d = patch.d.points
    dc = np.diff(c, axis=0)
    dd = np.diff(d, axis=0)
    rhs = d[:-1] - c[:-1]

    mat = np.stack([dc.ravel(), -dd.ravel()], axis=1)
    sol, _, rank, _ = np.linalg.lstsq(mat, rhs.ravel(), rcond=None)
    if rank < 2:
        return None

    lam, m = sol
    resid = np.linalg.norm(lam * dc - m * dd - rhs, axis=1)
    scale = max(patch.diameter(), tools.EPS) * (1. + abs(lam) + abs(m))

    return lam, m, float(np.max(resid) / scale)

def _vertex_fit(patch):
    '''
    Common point V = c_i + v0 (d_i - c_i) of all control rulings, by
    least squares. Returns (v0, V, normalised residual).
    '''

    c = patch.c.points
    d = patch.d.points
    n = c.shape[0]

    mat = np.zeros((3 * n, 4), dtype=float)
    mat[:, 0] = (d - c).ravel()
    mat[:, 1:] = -np.tile(np.eye(3), (n, 1))
    sol = np.linalg.lstsq(mat, -c.ravel(), rcond=None)[0]

    resid = np.max(np.abs(mat.dot(sol) + c.ravel()))

    return sol[0], sol[1:], resid / max(patch.diameter(), tools.EPS)

def _penultimate_lines(patch, u):
    '''(c_0^{n-1}, c_1^{n-1}, d_0^{n-1}, d_1^{n-1}) at the samples u.'''

    cp = patch.c.penultimate(u)
    dp = patch.d.penultimate(u)

    return cp[:, 0], cp[:, 1], dp[:, 0], dp[:, 1]

def is_developable(patch, samples=tools.NSAMP, tol=None):
    '''
    Coplanarity of the penultimate de Casteljau lines at every
    open-grid sample, the test certify starts from.
    '''

    tol = tools.get_tol(tol)
    p0, p1, q0, q1 = _penultimate_lines(patch, tools.open_grid(samples))

    return bool(np.max(tools.coplanarity_residual(p0, p1, q0, q1)) <= tol)

def certify(patch, samples=tools.NSAMP, tol=None, max_degree=8):
    '''
    Infer the certificate of a patch from its penultimate de Casteljau
    points, or return None if the patch is not developable.

    Arguments
    ---------
    patch : DevelopablePatch

    Keyword arguments
    -----------------
    samples : int
        Number of open-grid samples, at least degree + 2.
        (default : tools.NSAMP)
    tol : float, None
        Coplanarity and fit tolerance. (default : tools.get_tol())
    max_degree : int
        Largest total degree of the rational fit. (default : 8)

    Returns
    -------
    certificate : Certificate, None

    Notes
    -----
    At every sample the lines through c_0^{n-1}, c_1^{n-1} and
    d_0^{n-1}, d_1^{n-1} must be coplanar. Their intersection gives
    Lambda(u), M(u) as affine coordinates. Constants are preferred
    (least squares over the cell equations), then the rational
    function of lowest total degree, then a sampled certificate.
    Samples with parallel lines (poles) are left out of the fit.
    Nets whose boundary curves share their leading coefficient get
    the 'ruling-degree-drop' flag and a RuntimeWarning, unless they
    are cylinders.
    '''

    tol = tools.get_tol(tol)
    n = patch.degree
    if samples < n + 2:
        raise ValueError('samples should be >= degree + 2 = {}'.format(n + 2))

    u = tools.open_grid(samples)
    p0, p1, q0, q1 = _penultimate_lines(patch, u)

    if np.max(tools.coplanarity_residual(p0, p1, q0, q1)) > tol:
        return None

    lam, m, par, coinc = _line_intersection(p0, p1, q0, q1)
    parallel = par <= tol

    if np.all(parallel & (coinc <= tol)):
        return Certificate(kind=DEGENERATE)

    if np.sum(~parallel) < max(n + 2, samples // 2):
        e1 = p1 - p0
        e2 = q1 - q0
        scale = np.maximum(np.linalg.norm(e1, axis=-1), tools.EPS)
        if np.max(np.linalg.norm(e2 - e1, axis=-1) / scale) <= tol:
            return Certificate(kind=TRANSLATION)

        v0, _, resid = _vertex_fit(patch)
        if resid <= tol:
            return Certificate(kind=CONCURRENT, edge_v=v0)
        return Certificate(kind=CONCURRENT)

    cell = _cell_fit(patch)
    if cell is not None and cell[2] <= tol:
        lam0, m0 = cell[0], cell[1]
        if abs(lam0 - m0) <= tol * max(1., abs(lam0)):
            m0 = lam0
        return _degree_drop(patch, Certificate.constant(lam0, m0), tol)

    uk = u[~parallel]
    lam = lam[~parallel]
    m = m[~parallel]

    lam_fn = fit_rational(uk, lam, tol=tol, max_degree=max_degree)
    m_fn = fit_rational(uk, m, tol=tol, max_degree=max_degree)

    cylinder = np.max(np.abs(lam - m)) <= tol * max(1., np.max(np.abs(lam)))

    if lam_fn is None or m_fn is None:
        if cylinder:
            m = lam
        return _degree_drop(patch, Certificate.from_samples(uk, lam, m), tol)

    if cylinder:
        m_fn = lam_fn

    return _degree_drop(patch, Certificate(lam_fn, m_fn), tol)

def _degree_drop(patch, cert, tol):
    '''Flag and warn when c and d share their leading coefficient.'''

    if cert.is_cylinder or not patch.has_ruling_degree_drop(tol):
        return cert

    warn('boundary curves of degree {} with rulings of lower degree: '
         'degenerate constant-certificate case, a certificate may exist '
         'only after formal elevation'.format(patch.degree), RuntimeWarning)

    return cert.with_flags(RULING_DEGREE_DROP)

def edge_parameter(cert, u):
    '''
    Ruling coordinate v = (u - M(u)) / (Lambda(u) - M(u)) of the
    edge of regression.

    Arguments
    ---------
    cert : Certificate
    u : scalar or array-like

    Returns
    -------
    v : scalar or array-like

    Raises
    ------
    PoleError
        If Lambda(u) == M(u) (edge at infinity) or u is a pole of the
        certificate, or for certificates without edge.
    '''

    if cert.kind == CONCURRENT:
        if cert.edge_v is None:
            raise PoleError('rulings are parallel, no finite edge')
        return np.full(np.shape(u), cert.edge_v)[()]

    if not cert.has_values:
        raise PoleError('{} certificate has no edge of regression'.format(
            cert.kind))

    lam, m = cert.values(u)
    diff = lam - m
    scale = np.maximum(1., np.abs(lam))
    if np.any(np.abs(diff) < tools.POLE_TOL * scale):
        raise PoleError('Lambda == M, edge of regression at infinity')

    return (u - m) / diff

def edge_curve(patch, cert=None):
    '''
    Edge of regression of a patch with constant certificate, as
    degree n+1 curve.

    Arguments
    ---------
    patch : DevelopablePatch

    Keyword arguments
    -----------------
    cert : Certificate, None
        If None, use the certificate of the patch. (default : None)

    Returns
    -------
    r : BezierCurve

    Raises
    ------
    ValueError
        If the certificate is missing or not constant.
    PoleError
        If Lambda == M.
    '''

    cert = patch.certificate if cert is None else cert
    if cert is None:
        raise ValueError('patch has no certificate')
    if not cert.is_constant:
        raise ValueError('edge_curve needs a constant certificate, use '
                         'edge_evaluate')

    lam, m = cert.constant_values()
    if abs(lam - m) < tools.POLE_TOL * max(1., abs(lam)):
        raise PoleError('Lambda == M, edge of regression at infinity')

    rulings = patch.d.points - patch.c.points
    r = np.empty((patch.degree + 2, 3), dtype=float)
    r[0] = patch.c.points[0] - m / (lam - m) * rulings[0]
    r[1:] = r[0] + np.cumsum(rulings, axis=0) / (lam - m)

    return BezierCurve(r)

def edge_evaluate(patch, cert, u):
    '''
    Point b(u, edge_parameter(u)) of the edge of regression.

    Raises
    ------
    PoleError
        If u is a pole.
    '''

    cert = patch.certificate if cert is None else cert
    if cert is None:
        raise ValueError('patch has no certificate')

    return patch(u, edge_parameter(cert, u))

def _safe_edge_v(cert, u):

    try:
        return float(edge_parameter(cert, float(u)))
    except PoleError:
        return np.nan

def singular_interval(cert, u_range=(0., 1.), v_range=(0., 1.), nsamp=401,
                      xtol=1e-12):
    '''
    Find where the edge of regression crosses the parameter domain.

    Arguments
    ---------
    cert : Certificate

    Keyword arguments
    -----------------
    u_range : tuple
        (u0, u1) interval searched. (default : (0, 1))
    v_range : tuple
        (v0, v1) ruling window. (default : (0, 1))
    nsamp : int
        Number of samples before refinement. (default : 401)
    xtol : float
        Boundary refinement tolerance. (default : 1e-12)

    Returns
    -------
    intervals : list of tuple
        Maximal sub-intervals of u_range on which the edge
        parameter lies in v_range.
    '''

    if cert is None:
        raise ValueError('certificate required')
    if cert.kind in (TRANSLATION, DEGENERATE) or cert.is_cylinder:
        return []

    u0, u1 = sorted(map(float, u_range))
    v0, v1 = sorted(map(float, v_range))

    def inside(x):
        v = _safe_edge_v(cert, x)
        return bool(np.isfinite(v) and v0 <= v <= v1)

    def refine(a, b):
        # a inside, b outside (either order)
        va = _safe_edge_v(cert, a)
        vb = _safe_edge_v(cert, b)
        if np.isfinite(va) and np.isfinite(vb):
            inner = va if inside(a) else vb
            outer = vb if inside(a) else va
            bound = v0 if outer < v0 else v1
            if (inner - bound) * (outer - bound) <= 0:
                try:
                    root = brentq(lambda x: _safe_edge_v(cert, x) - bound,
                                  a, b, xtol=xtol)
                except (ValueError, RuntimeError):
                    root = None
                # a sign change through a pole is not a crossing
                if root is not None and abs(_safe_edge_v(cert, root)
                                            - bound) <= 1e-6 * max(1., abs(bound)):
                    return root

        ins_a = inside(a)
        while abs(b - a) > xtol:
            mid = 0.5 * (a + b)
            if inside(mid) == ins_a:
                a = mid
            else:
                b = mid
        return 0.5 * (a + b)

    grid = np.linspace(u0, u1, nsamp)
    flags = [inside(x) for x in grid]

    intervals = []
    start = u0 if flags[0] else None
    for k in range(1, nsamp):
        if flags[k] == flags[k-1]:
            continue
        edge = refine(grid[k-1], grid[k])
        if flags[k]:
            start = edge
        else:
            intervals.append((start, edge))
            start = None

    if start is not None:
        intervals.append((start, u1))

    return intervals

def _is_planar(patch, tol):

    pts = np.vstack([patch.c.points, patch.d.points])
    pts = pts - pts.mean(axis=0)
    sv = np.linalg.svd(pts, compute_uv=False)
    if sv[0] == 0:
        return True

    return sv[-1] <= tol * sv[0]

def _rulings_parallel(patch, tol):

    rulings = patch.d.points - patch.c.points
    norms = np.linalg.norm(rulings, axis=1)
    ref = rulings[np.argmax(norms)]

    return bool(np.all(tools.parallel_residual(rulings, ref) <= tol))

def classify(patch, tol=None, samples=tools.NSAMP, certificate=None):
    '''
    Classify a developable patch as planar, cylinder, cone or tangent
    surface, tested in this order.

    Arguments
    ---------
    patch : DevelopablePatch

    Keyword arguments
    -----------------
    tol : float, None
        (default : tools.get_tol())
    samples : int
        Edge samples for the cone test. (default : tools.NSAMP)
    certificate : Certificate, None
        Certificate to use. If None, use the certificate of the
        patch, or certify it. (default : None)

    Returns
    -------
    cls : SurfaceClass

    Raises
    ------
    ValueError
        If the patch is not developable.
    '''

    tol = tools.get_tol(tol)
    samples = max(samples, patch.degree + 2)
    if not is_developable(patch, samples=samples, tol=tol):
        raise ValueError('patch is not developable')

    cert = certificate or patch.certificate
    if cert is None:
        cert = certify(patch, samples=samples, tol=tol)
    if cert is None:
        raise ValueError('patch is not developable')

    if _is_planar(patch, tol):
        return SurfaceClass(PLANAR)

    if cert.is_cylinder or _rulings_parallel(patch, tol):
        return SurfaceClass(CYLINDER)

    if cert.kind == CONCURRENT:
        v0, vertex, resid = _vertex_fit(patch)
        if resid <= tol:
            return SurfaceClass(CONE, vertex=vertex, deviation=resid)

    if cert.has_values:
        u = tools.open_grid(samples)
        pts = []
        for x in u:
            try:
                pts.append(edge_evaluate(patch, cert, x))
            except PoleError:
                continue

        if len(pts) >= 2:
            pts = np.array(pts)
            vertex = pts.mean(axis=0)
            dev = np.max(np.linalg.norm(pts - vertex, axis=1))
            if dev <= tol * max(1., patch.diameter()):
                return SurfaceClass(CONE, vertex=vertex, deviation=dev)

    return SurfaceClass(TANGENT)
