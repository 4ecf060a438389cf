'''
Numerical oracles on sampled patches. All residuals are normalised
to be scale invariant and are sampled on fixed grids, so reports are
deterministic.
'''

import numpy as np

from . import tools
from .developable import edge_parameter, lm_to_lambdamu

class CheckReport(object):
    '''
    Result of one oracle.

    Attributes
    ----------
    name : str
    samples : int
        Number of sample points.
    max_residual : float
    argmax : tuple
        (u, v) of the worst sample.
    tolerance : float
    passed : bool
        max_residual < tolerance.
    flags : list of str
        Remarks such as 'zero-width' or 'vanishing-normal'.
    '''

    def __init__(self, name, samples, max_residual, argmax, tolerance,
                 flags=None):

        self.name = str(name)
        self.samples = int(samples)
        self.max_residual = float(max_residual)
        self.argmax = (float(argmax[0]), float(argmax[1]))
        self.tolerance = float(tolerance)
        self.flags = list(flags) if flags else []

    @property
    def passed(self):
        return self.max_residual < self.tolerance

    def to_dict(self):

        out = {'name' : self.name,
               'samples' : self.samples,
               'maxResidual' : self.max_residual,
               'argmaxLocation' : list(self.argmax),
               'pass' : self.passed,
               'tolerance' : self.tolerance}
        if self.flags:
            out['flags'] = list(self.flags)

        return out

    @classmethod
    def from_dict(cls, data):
        '''
        Inverse of to_dict. The stored 'pass' field is recomputed
        from maxResidual and tolerance.
        '''

        return cls(data['name'], data['samples'], data['maxResidual'],
                   data['argmaxLocation'], data['tolerance'],
                   flags=data.get('flags'))

    def __repr__(self):
        return ('CheckReport({}: max {:.3e} at u={:.6g}, v={:.6g}, tol '
                '{:.1e}, {})').format(self.name, self.max_residual,
                                      self.argmax[0], self.argmax[1],
                                      self.tolerance,
                                      'pass' if self.passed else 'FAIL')

def _report(name, resid, u, v, tol, flags=None):

    resid = np.asarray(resid, dtype=float)
    idx = int(np.argmax(resid))

    return CheckReport(name, resid.size, resid.flat[idx],
                       (np.ravel(u)[idx], np.ravel(v)[idx]), tol,
                       flags=flags)

def developability_residual(patch, nu=tools.NSAMP, tol=None):
    '''
    Normalised triple product |det[c', d', d - c]| on an open grid.

    Arguments
    ---------
    patch : DevelopablePatch

    Keyword arguments
    -----------------
    nu : int
        Number of samples, >= 2. (default : tools.NSAMP)
    tol : float, None
        (default : tools.get_tol())

    Returns
    -------
    report : CheckReport
    '''

    tol = tools.get_tol(tol)
    if nu < 2:
        raise ValueError('nu should be >= 2')

    u = tools.open_grid(nu)
    dc = patch.c.derivative(u)
    dd = patch.d.derivative(u)
    v = patch.d(u) - patch.c(u)

    resid = tools.triple_residual(dc, dd, v)
    flags = ['zero-width'] if patch.is_zero_width else None

    return _report('developability', resid, u, np.zeros_like(u), tol,
                   flags=flags)

def penultimate_coplanarity(patch, nu=tools.NSAMP, tol=None):
    '''
    Normalised coplanarity of the penultimate de Casteljau points
    c_0^{n-1}, c_1^{n-1}, d_0^{n-1}, d_1^{n-1} on an open grid.
    '''

    tol = tools.get_tol(tol)
    if nu < 2:
        raise ValueError('nu should be >= 2')

    u = tools.open_grid(nu)
    cp = patch.c.penultimate(u)
    dp = patch.d.penultimate(u)

    resid = tools.coplanarity_residual(cp[:, 0], cp[:, 1], dp[:, 0],
                                       dp[:, 1])
    flags = ['zero-width'] if patch.is_zero_width else None

    return _report('penultimate_coplanarity', resid, u, np.zeros_like(u),
                   tol, flags=flags)

def normal_constancy(patch, nu=tools.NSAMP, nv=tools.NSAMP, tol=None,
                     v_range=(0., 1.)):
    '''
    Largest angle (radians) between unit normals b_u x b_v at two
    points of the same ruling.

    Keyword arguments
    -----------------
    nu, nv : int
        Open-grid samples along u and along each ruling.
        (default : tools.NSAMP)
    tol : float, None
        (default : tools.get_tol())
    v_range : tuple
        Ruling window sampled. (default : (0, 1))

    Returns
    -------
    report : CheckReport
        A vanishing normal fails the check with residual pi and
        the flag 'vanishing-normal'. A reversal across the edge of
        regression shows up as an angle close to pi.
    '''

    tol = tools.get_tol(tol)
    u = tools.open_grid(nu)
    v = v_range[0] + (v_range[1] - v_range[0]) * tools.open_grid(nv)
    uu, vv = np.meshgrid(u, v, indexing='ij')

    b_u, b_v = patch.partials(uu, vv)
    normal = np.cross(b_u, b_v)
    norm = np.linalg.norm(normal, axis=-1)
    scale = np.linalg.norm(b_u, axis=-1) * np.linalg.norm(b_v, axis=-1)

    flags = []
    vanish = norm <= 1e3 * np.finfo(float).eps * scale + tools.EPS
    if np.any(vanish):
        flags.append('vanishing-normal')
        resid = np.where(vanish, np.pi, 0.)
        return _report('normal_constancy', resid, uu, vv, tol, flags=flags)

    # all pairs along each ruling
    angles = tools.angle_between(normal[:, :, None, :], normal[:, None, :, :])
    resid = np.max(angles, axis=2)
    if np.any(resid > 0.5 * np.pi):
        flags.append('orientation-reversal')

    return _report('normal_constancy', resid, uu, vv, tol, flags=flags)

def surfaces_equal(p1, p2, correspondence=None, nu=21, nv=21, tol=None):
    '''
    Largest distance between p1(u, v) and p2 at the corresponding
    parameters, on a closed grid.

    Arguments
    ---------
    p1, p2 : DevelopablePatch

    Keyword arguments
    -----------------
    correspondence : callable, None
        Maps (u, v) arrays of p1 to (u, v) arrays of p2. None
        is the identity. (default : None)
    nu, nv : int
        (default : 21)
    tol : float, None
        (default : tools.get_tol())
    '''

    tol = tools.get_tol(tol)
    uu, vv = np.meshgrid(tools.closed_grid(nu), tools.closed_grid(nv),
                         indexing='ij')

    if correspondence is None:
        u2, v2 = uu, vv
    else:
        u2, v2 = correspondence(uu, vv)

    resid = np.linalg.norm(p1(uu, vv) - p2(u2, v2), axis=-1)

    return _report('surfaces_equal', resid, uu, vv, tol)

def _certificate(patch, cert):

    cert = patch.certificate if cert is None else cert
    if cert is None or not cert.has_values:
        raise ValueError('a rational or sampled certificate is needed')

    return cert

def blossom_residual(patch, cert=None, nu=tools.NSAMP, tol=None):
    '''
    Blossom coupling gap ||c[u, ..., u, Lambda] - d[u, ..., u, M]||,
    normalised by diam (1 + |Lambda| + |M|).

    Keyword arguments
    -----------------
    cert : Certificate, None
        If None, use the certificate of the patch. (default : None)
    '''

    tol = tools.get_tol(tol)
    cert = _certificate(patch, cert)
    n = patch.degree

    u = tools.open_grid(nu)
    lam, m = cert.values(u)
    lam = np.broadcast_to(lam, u.shape)
    m = np.broadcast_to(m, u.shape)

    args_c = np.repeat(u[:,None], n, axis=1)
    args_d = args_c.copy()
    if n > 0:
        args_c[:, -1] = lam
        args_d[:, -1] = m

    gap = np.linalg.norm(patch.c.blossom(args_c) - patch.d.blossom(args_d),
                         axis=-1)
    scale = max(patch.diameter(), tools.EPS) * (1. + np.abs(lam) +
                                                np.abs(m))

    return _report('blossom', gap / scale, u, np.zeros_like(u), tol)

def edge_degeneracy(patch, cert=None, nu=tools.NSAMP, tol=None):
    '''
    Normalised ||b_u x b_v|| on the edge of regression,
    v = edge_parameter(u).
    '''

    tol = tools.get_tol(tol)
    cert = patch.certificate if cert is None else cert
    if cert is None:
        raise ValueError('certificate required')

    u = tools.open_grid(nu)
    v = np.broadcast_to(edge_parameter(cert, u), u.shape)

    b_u, b_v = patch.partials(u, v)
    resid = tools.parallel_residual(b_u, b_v)

    return _report('edge_degeneracy', resid, u, v, tol)

def ode_residual(patch, cert=None, nu=tools.NSAMP, tol=None):
    '''
    Normalised residual of c' = lambda v + mu v'.

    Raises
    ------
    ValueError
        For cylinders (Lambda == M).
    '''

    tol = tools.get_tol(tol)
    cert = _certificate(patch, cert)
    n = patch.degree
    u = tools.open_grid(nu)

    if cert.is_rational:
        lm = lm_to_lambdamu(cert.lambda_fn, cert.m_fn, n)
        lam = lm.lam(u)
        mu = lm.mu(u)
    else:
        big_l, big_m = cert.values(u)
        if cert.is_cylinder:
            raise ValueError('Lambda == M, lambda and mu undefined '
                             '(cylinder)')
        lam = n / (big_l - big_m)
        mu = (big_m - u) / (big_l - big_m)

    lam = np.broadcast_to(lam, u.shape)[:,None]
    mu = np.broadcast_to(mu, u.shape)[:,None]

    ruling = patch.ruling_curve()
    v = ruling(u)
    dv = ruling.derivative(u)
    dc = patch.c.derivative(u)

    resid = np.linalg.norm(dc - lam * v - mu * dv, axis=-1)
    scale = (np.linalg.norm(dc, axis=-1) + np.abs(lam[:, 0]) *
             np.linalg.norm(v, axis=-1) + np.abs(mu[:, 0]) *
             np.linalg.norm(dv, axis=-1) + tools.EPS)

    return _report('ode', resid / scale, u, np.zeros_like(u), tol)
