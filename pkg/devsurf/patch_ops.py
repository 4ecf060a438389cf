'''
Transformations of developable patches. Each one maps the control
nets and carries the certificate along by its closed-form rule.
'''

from warnings import warn

import numpy as np

from . import tools
from .bezier import BezierCurve
from .developable import DevelopablePatch, Certificate, RATIONAL, \
    TRANSLATION, CONCURRENT, DEGENERATE
from .polynomial import Polynomial, RationalFunction, PoleError

def _as_poly(h):

    if isinstance(h, Polynomial):
        return h.to_monomial()
    return Polynomial(h)

def _map_certificate(cert, formula, inner=None):
    '''
    Apply a certificate map.

    Arguments
    ---------
    cert : Certificate, None
    formula : callable
        formula(lam, m, lift) returns the new (lam, m); lift turns a
        Polynomial into an operand compatible with lam and m.

    Keyword arguments
    -----------------
    inner : Polynomial, None
        Old parameter as a function of the new one. (default : None)

    Returns
    -------
    cert : Certificate, None
        None for input None or kinds without values.
    '''

    if cert is None or not cert.has_values:
        return None

    if cert.kind == RATIONAL:
        lam, m = cert.lambda_fn, cert.m_fn
        if inner is not None:
            lam, m = lam.compose(inner), m.compose(inner)
        lam, m = formula(lam, m, RationalFunction)
        return Certificate(lam, m)

    u = tools.open_grid(cert.samples[0].size)
    old = u if inner is None else inner(u)
    lam, m = cert.values(old)
    lam, m = formula(lam, m, lambda p: _as_poly(p)(u))

    return Certificate.from_samples(u, lam, m)

def restrict_v(patch, a, b):
    '''
    Restrict the ruling parameter to [a, b]:
    c~ = (1 - a) c + a d, d~ = (1 - b) c + b d.

    Returns
    -------
    patch : DevelopablePatch
        With Lambda~ = b Lambda + (1 - b) M, M~ = a Lambda + (1 - a) M.

    Raises
    ------
    ValueError
        If a == b.
    '''

    a = float(a)
    b = float(b)
    if a == b:
        raise ValueError('degenerate interval [{}, {}]'.format(a, b))

    c = patch.c.points
    d = patch.d.points
    new_c = BezierCurve((1. - a) * c + a * d)
    new_d = BezierCurve((1. - b) * c + b * d)

    cert = patch.certificate
    if cert is not None and cert.kind in (TRANSLATION, DEGENERATE):
        new_cert = cert
    elif cert is not None and cert.kind == CONCURRENT:
        edge_v = None if cert.edge_v is None \
            else (cert.edge_v - a) / (b - a)
        new_cert = Certificate(kind=CONCURRENT, edge_v=edge_v)
    else:
        new_cert = _map_certificate(
            cert, lambda lam, m, lift: (b * lam + (1. - b) * m,
                                        a * lam + (1. - a) * m))

    return DevelopablePatch(new_c, new_d, certificate=new_cert)

def restrict_u(patch, a, b):
    '''
    Restrict the curve parameter to [a, b] through u = a + (b - a) t.

    Returns
    -------
    patch : DevelopablePatch
        With Lambda~(t) = (Lambda(u(t)) - a) / (b - a), M~ likewise.

    Raises
    ------
    ValueError
        If a == b.
    '''

    a = float(a)
    b = float(b)
    if a == b:
        raise ValueError('degenerate interval [{}, {}]'.format(a, b))

    cert = patch.certificate
    if cert is not None and not cert.has_values:
        new_cert = cert
    else:
        new_cert = _map_certificate(
            cert, lambda lam, m, lift: ((lam - a) / (b - a),
                                        (m - a) / (b - a)),
            inner=Polynomial([a, b - a]))

    return DevelopablePatch(patch.c.restrict(a, b), patch.d.restrict(a, b),
                            certificate=new_cert)

def elevate_patch(patch, m=1):
    '''
    Elevate both curves by m degrees.

    Returns
    -------
    patch : DevelopablePatch
        With Lambda^m = ((n + m) Lambda - m u) / n, M^m likewise.
    '''

    m = int(m)
    if m < 0:
        raise ValueError('m should be >= 0, got {}'.format(m))
    if m == 0:
        return patch

    n = patch.degree
    if n == 0:
        raise ValueError('cannot map the certificate of a degree 0 patch')

    cert = patch.certificate
    if cert is not None and not cert.has_values:
        new_cert = cert
    else:
        def formula(lam, mfn, lift):
            u = lift(Polynomial.identity())
            return (((n + m) * lam - m * u) / float(n),
                    ((n + m) * mfn - m * u) / float(n))
        new_cert = _map_certificate(cert, formula)

    return DevelopablePatch(patch.c.elevate(m), patch.d.elevate(m),
                            certificate=new_cert)

def scale_rulings(patch, h):
    '''
    Rescale the rulings by a polynomial: d~ = h d + (1 - h) c.

    Arguments
    ---------
    patch : DevelopablePatch
    h : Polynomial or array-like
        Ascending monomial coefficients if array-like.

    Returns
    -------
    patch : DevelopablePatch
        Degree n + deg(h), c elevated to match. The certificate
        becomes, with N = n + deg(h) and D = n h - h' (M - u),

            Lambda~ = u + (N h^2 (Lambda - M) + N h (M - u)) / D
            M~ = u + N h (M - u) / D.

    Raises
    ------
    ValueError
        If h is identically zero or D vanishes identically.
    PoleError
        If D vanishes at a sample of a sampled certificate.
    '''

    h = _as_poly(h)
    if h.is_zero:
        raise ValueError('h vanishes identically')

    n = patch.degree
    deg = h.degree
    nn = n + deg
    dh = h.deriv()

    hb = h.to_bernstein(deg).coeffs
    rulings = patch.d.points - patch.c.points
    new_c = patch.c.elevate(deg)
    new_d = BezierCurve(new_c.points + tools.bernstein_product(
        hb[:,None], rulings))

    cert = patch.certificate
    new_cert = None
    if cert is not None and cert.has_values:

        def formula(lam, m, lift):
            u = lift(Polynomial.identity())
            hh = lift(h)
            den = n * hh - lift(dh) * (m - u)
            if isinstance(den, RationalFunction):
                if den.is_zero:
                    raise ValueError('n h - h\' (M - u) vanishes '
                                     'identically')
            else:
                bad = np.abs(den) < tools.POLE_TOL
                if np.any(bad):
                    raise PoleError('n h - h\' (M - u) vanishes at u = '
                                    '{}'.format(u[bad][0]))
            return (u + (nn * hh * hh * (lam - m) + nn * hh * (m - u)) / den,
                    u + nn * hh * (m - u) / den)

        new_cert = _map_certificate(cert, formula)

    elif cert is not None and cert.kind == DEGENERATE:
        new_cert = cert

    return DevelopablePatch(new_c, new_d, certificate=new_cert)

def _check_regular(h, tol=1e-12):

    dh = h.deriv()
    if dh.is_zero:
        raise ValueError('h is constant, not a reparametrization')

    coeffs = dh.monomial_coeffs()
    if coeffs.size < 2:
        return

    roots = np.roots(coeffs[::-1])
    real = roots[np.abs(roots.imag) <= 1e-9 * np.maximum(1., np.abs(roots))]
    real = real.real

    if np.any((real > tol) & (real < 1. - tol)):
        raise ValueError('h\' vanishes inside (0, 1)')
    if np.any(np.abs(real) <= tol) or np.any(np.abs(real - 1.) <= tol):
        warn('h\' vanishes at the boundary of [0, 1], the certificate '
             'may have a pole there', RuntimeWarning)

def reparametrize(patch, h):
    '''
    Change of parameter u = h(U) for a polynomial h.

    Arguments
    ---------
    patch : DevelopablePatch
    h : Polynomial or array-like
        Ascending monomial coefficients if array-like.

    Returns
    -------
    patch : DevelopablePatch
        Degree n deg(h), with, for m = deg(h),

            Lambda^(U) = m (Lambda(h) - h) / h' + U, M^ likewise.

    Raises
    ------
    ValueError
        If h' vanishes inside (0, 1).
    '''

    h = _as_poly(h)
    _check_regular(h)

    m = h.degree
    h0, h1 = h(0.), h(1.)
    if min(h0, h1) < -tools.TRIM_TOL or max(h0, h1) > 1. + tools.TRIM_TOL:
        warn('h maps [0, 1] onto [{:.6g}, {:.6g}], outside the patch '
             'domain'.format(min(h0, h1), max(h0, h1)), RuntimeWarning)

    dh = h.deriv()
    cert = patch.certificate
    if cert is not None and not cert.has_values:
        new_cert = cert
    else:
        def formula(lam, mfn, lift):
            u = lift(Polynomial.identity())
            hh = lift(h)
            dd = lift(dh)
            return (m * (lam - hh) / dd + u, m * (mfn - hh) / dd + u)
        new_cert = _map_certificate(cert, formula, inner=h)

    return DevelopablePatch(patch.c.compose(h), patch.d.compose(h),
                            certificate=new_cert)
