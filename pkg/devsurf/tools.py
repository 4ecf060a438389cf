'''
Low-level numerical helpers shared by the curve, patch and oracle modules:
tolerances, point validation, sample grids, Bernstein-basis kernels and
scale-invariant residuals.
'''

import os
from warnings import warn

import numpy as np
from scipy.special import comb

TOL = 1e-9       # oracle verdicts
POLE_TOL = 1e-12 # |denominator| below this is a pole
TRIM_TOL = 1e-12 # leading monomial coefficients below this are dropped
EPS = 1e-30      # guard for normalised residuals
NSAMP = 33       # default oracle grid size

def get_tol(tol=None):
    '''
    Return the verdict tolerance.

    Keyword arguments
    -----------------
    tol : float, None
        Explicit tolerance. If None, use the DEVSURF_TOL
        environment variable, or TOL if that is unset.
        (default : None)

    Returns
    -------
    tol : float
    '''

    if tol is not None:
        if not tol > 0:
            raise ValueError('tol should be positive, got {}'.format(tol))
        return float(tol)

    env_tol = os.getenv('DEVSURF_TOL')
    if not env_tol:
        return TOL

    try:
        tol = float(env_tol)
    except ValueError:
        tol = -1.

    if not (np.isfinite(tol) and tol > 0):
        warn('Ignoring DEVSURF_TOL={}, using {}'.format(env_tol, TOL),
             RuntimeWarning)
        return TOL

    return tol

def as_point(p, name='point'):
    '''
    Convert input to a finite float array of shape (3,).

    Arguments
    ---------
    p : array-like
        Three coordinates.

    Keyword arguments
    -----------------
    name : str
        Used in error messages. (default : 'point')

    Returns
    -------
    p : array-like
        Newly allocated float array of shape (3,).

    Raises
    ------
    ValueError
        If p does not hold three finite numbers.
    '''

    try:
        arr = np.array(p, dtype=float)
    except (TypeError, ValueError):
        raise ValueError('{} is not numeric: {!r}'.format(name, p))

    if arr.shape != (3,):
        raise ValueError('{} should have 3 coordinates, got shape {}'.format(
            name, arr.shape))
    if not np.all(np.isfinite(arr)):
        raise ValueError('{} contains nan/inf.'.format(name))

    return arr

# Vectors share the representation of points.
as_vector = as_point

def point3(x, y, z):
    '''Return the point (x, y, z) as float array.'''
    return as_point((x, y, z))

def open_grid(nsamp):
    '''
    Sample grid on the open unit interval: u_k = (k + 0.5) / nsamp.

    Arguments
    ---------
    nsamp : int
        Number of samples.

    Returns
    -------
    u : array-like
    '''

    nsamp = int(nsamp)
    if nsamp < 1:
        raise ValueError('nsamp should be >= 1')

    return (np.arange(nsamp, dtype=float) + 0.5) / nsamp

def closed_grid(nsamp):
    '''Sample grid on [0, 1] including both end points.'''

    nsamp = int(nsamp)
    if nsamp < 2:
        raise ValueError('nsamp should be >= 2')

    return np.linspace(0., 1., nsamp)

def de_casteljau(coeffs, u, stop=0):
    '''
    Run the de Casteljau recursion on Bernstein coefficients.

    Arguments
    ---------
    coeffs : array-like
        Array of shape (n+1, ...), the Bernstein coefficients
        (control points) along axis 0.
    u : scalar or array-like
        Parameter value(s). Values outside [0, 1] are allowed.

    Keyword arguments
    -----------------
    stop : int
        Number of points to keep, i.e. the recursion stops at
        stage n+1-stop. stop=0 and stop=1 both run to the end.
        (default : 0)

    Returns
    -------
    stage : array-like
        Shape (stop or 1, ...) for scalar u, with an extra leading
        axis of size u.size for array-like u.
    '''

    coeffs = np.asarray(coeffs, dtype=float)
    u = np.asarray(u, dtype=float)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)

    keep = max(stop, 1)
    ncoeff = coeffs.shape[0]
    if keep > ncoeff:
        raise ValueError('cannot stop at {} points with {} coeffs'.format(
            keep, ncoeff))

    extra = (1,) * (coeffs.ndim - 1)
    t = u.reshape((-1, 1) + extra)
    b = np.broadcast_to(coeffs, (u.size,) + coeffs.shape).copy()

    for size in range(ncoeff - 1, keep - 1, -1):
        b = (1. - t) * b[:, :size] + t * b[:, 1:size+1]

    if scalar:
        return b[0]
    return b

def blossom_kernel(coeffs, args):
    '''
    Evaluate the polar form of Bernstein coefficients, consuming
    one argument per de Casteljau stage.

    Arguments
    ---------
    coeffs : array-like
        Shape (n+1, ...).
    args : array-like
        Shape (n,) for a single evaluation or (k, n) for k of them.

    Returns
    -------
    value : array-like
        Shape coeffs.shape[1:] or (k,) + coeffs.shape[1:].
    '''

    coeffs = np.asarray(coeffs, dtype=float)
    args = np.asarray(args, dtype=float)
    single = args.ndim == 1
    args = np.atleast_2d(args)

    n = coeffs.shape[0] - 1
    if args.shape[1] != n:
        raise ValueError('blossom of degree {} needs {} arguments, '
                         'got {}'.format(n, n, args.shape[1]))

    extra = (1,) * (coeffs.ndim - 1)
    b = np.broadcast_to(coeffs, (args.shape[0],) + coeffs.shape).copy()

    for stage in range(n):
        t = args[:, stage].reshape((-1, 1) + extra)
        size = n - stage
        b = (1. - t) * b[:, :size] + t * b[:, 1:size+1]

    if single:
        return b[0, 0]
    return b[:, 0]

def monomial_to_bernstein(n):
    '''
    Matrix T of shape (n+1, n+1) with b = T a, mapping ascending
    monomial coefficients a to Bernstein coefficients b of degree n.
    '''

    mat = np.zeros((n + 1, n + 1), dtype=float)
    for i in range(n + 1):
        for k in range(i + 1):
            mat[i, k] = comb(i, k) / comb(n, k)

    return mat

def bernstein_to_monomial(n):
    '''Inverse of monomial_to_bernstein(n).'''

    mat = np.zeros((n + 1, n + 1), dtype=float)
    for k in range(n + 1):
        for i in range(k + 1):
            mat[k, i] = comb(n, k) * comb(k, i) * (-1) ** (k - i)

    return mat

def bernstein_product(f, g):
    '''
    Bernstein coefficients of the product of two Bernstein forms.

    Arguments
    ---------
    f : array-like
        Shape (n+1, ...) coefficients of degree n.
    g : array-like
        Shape (m+1, ...) coefficients of degree m, broadcastable
        with f beyond axis 0.

    Returns
    -------
    fg : array-like
        Shape (n+m+1, ...) coefficients of degree n+m.
    '''

    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    n = f.shape[0] - 1
    m = g.shape[0] - 1

    tail = np.broadcast(f[0], g[0]).shape
    out = np.zeros((n + m + 1,) + tail, dtype=float)

    for i in range(n + 1):
        for j in range(m + 1):
            weight = comb(n, i) * comb(m, j) / comb(n + m, i + j)
            out[i+j] += weight * f[i] * g[j]

    return out

def net_diameter(points):
    '''Largest distance between any two of the input points.'''

    points = np.asarray(points, dtype=float).reshape(-1, 3)
    diff = points[:, None, :] - points[None, :, :]

    return float(np.sqrt(np.max(np.sum(diff ** 2, axis=-1))))

def triple_residual(a, b, c):
    '''
    Normalised triple product |det[a, b, c]| / (|a||b||c| + EPS),
    vectorized over a leading axis.
    '''

    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)

    det = np.einsum('...i,...i', np.cross(a, b), c)
    norms = (np.linalg.norm(a, axis=-1) * np.linalg.norm(b, axis=-1)
             * np.linalg.norm(c, axis=-1))

    return np.abs(det) / (norms + EPS)

def coplanarity_residual(p0, p1, q0, q1):
    '''
    Normalised coplanarity measure of four points (or four arrays
    of points): the triple residual of the edges from p0.
    '''

    p0 = np.asarray(p0, dtype=float)

    return triple_residual(np.asarray(p1) - p0, np.asarray(q0) - p0,
                           np.asarray(q1) - p0)

def parallel_residual(a, b):
    '''
    Sine of the angle between vectors a and b, |a x b| / (|a||b| + EPS).
    Zero vectors count as parallel to anything.
    '''

    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    cross = np.linalg.norm(np.cross(a, b), axis=-1)
    norms = np.linalg.norm(a, axis=-1) * np.linalg.norm(b, axis=-1)

    return cross / (norms + EPS)

def angle_between(a, b):
    '''
    Angle in radians between vectors a and b, accurate near 0 and pi.
    '''

    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    cross = np.linalg.norm(np.cross(a, b), axis=-1)
    dot = np.einsum('...i,...i', a, b)

    return np.arctan2(cross, dot)
