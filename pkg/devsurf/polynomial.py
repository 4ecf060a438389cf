'''
Scalar polynomials (monomial or Bernstein basis) and rational functions of
the curve parameter u. These carry the functions f, g, h of the surface
constructions and the certificate functions Lambda(u), M(u), lambda(u),
mu(u).
'''

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import tools

MONOMIAL = 'monomial'
BERNSTEIN = 'bernstein'

class PoleError(ValueError):
    '''Rational function evaluated at (or too close to) a pole.'''

def _as_polynomial(p):

    if isinstance(p, Polynomial):
        return p
    return Polynomial(p)

def _trim(coeffs, trim_tol):

    nonzero = np.flatnonzero(np.abs(coeffs) > trim_tol)
    if nonzero.size == 0:
        return np.zeros(1, dtype=float)

    return coeffs[:nonzero[-1]+1]

class Polynomial(object):
    '''
    Real polynomial in u. Monomial coefficients are ascending
    and trimmed, Bernstein coefficients carry a declared degree.
    Instances are immutable.
    '''

    def __init__(self, coeffs, basis=MONOMIAL, degree=None,
                 trim_tol=tools.TRIM_TOL):
        '''
        Keyword arguments
        -----------------
        coeffs : array-like, scalar
            Ascending monomial coefficients or Bernstein coefficients.
        basis : str
            'monomial' or 'bernstein'. (default : 'monomial')
        degree : int, None
            Declared Bernstein degree, must equal len(coeffs) - 1.
            Ignored for monomials. (default : None)
        trim_tol : float
            Leading monomial coefficients with absolute value below
            this are dropped. (default : tools.TRIM_TOL)
        '''

        if isinstance(coeffs, Polynomial):
            if basis == MONOMIAL:
                coeffs = coeffs.monomial_coeffs()
            else:
                coeffs = coeffs.to_bernstein(degree).coeffs

        coeffs = np.atleast_1d(np.array(coeffs, dtype=float))
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError('coeffs should be a non-empty 1d sequence')
        if not np.all(np.isfinite(coeffs)):
            raise ValueError('coeffs contain nan/inf.')

        if basis == MONOMIAL:
            coeffs = _trim(coeffs, trim_tol)
            self._degree = coeffs.size - 1
        elif basis == BERNSTEIN:
            if degree is None:
                degree = coeffs.size - 1
            if coeffs.size != degree + 1:
                raise ValueError('Bernstein degree {} needs {} coefficients, '
                                 'got {}'.format(degree, degree + 1,
                                                 coeffs.size))
            self._degree = int(degree)
        else:
            raise ValueError('basis = {} not recognized'.format(basis))

        coeffs.flags.writeable = False
        self._coeffs = coeffs
        self._basis = basis

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def identity(cls):
        '''The polynomial u.'''
        return cls([0., 1.])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def basis(self):
        return self._basis

    @property
    def degree(self):
        return self._degree

    @property
    def is_zero(self):
        return not np.any(self.monomial_coeffs())

    def monomial_coeffs(self):
        '''Ascending monomial coefficients as a (read-only) array.'''

        if self.basis == MONOMIAL:
            return self.coeffs

        return tools.bernstein_to_monomial(self.degree).dot(self.coeffs)

    def __call__(self, u):

        if self.basis == MONOMIAL:
            return npoly.polyval(u, self.coeffs)

        val = tools.de_casteljau(self.coeffs, u)
        if np.ndim(u) == 0:
            return val[0]
        return val[:, 0]

    def to_monomial(self):
        if self.basis == MONOMIAL:
            return self
        return Polynomial(self.monomial_coeffs())

    def to_bernstein(self, degree=None):
        '''
        Return the same function in Bernstein form.

        Keyword arguments
        -----------------
        degree : int, None
            Target degree. If None, use the (trimmed) degree.
            (default : None)

        Raises
        ------
        ValueError
            If degree is below the actual degree.
        '''

        mono = _trim(np.array(self.monomial_coeffs()), tools.TRIM_TOL)
        actual = mono.size - 1
        if degree is None:
            degree = actual

        if degree < actual:
            raise ValueError('cannot represent degree {} polynomial in '
                             'Bernstein degree {}'.format(actual, degree))

        padded = np.zeros(degree + 1, dtype=float)
        padded[:mono.size] = mono
        bern = tools.monomial_to_bernstein(degree).dot(padded)

        return Polynomial(bern, basis=BERNSTEIN, degree=degree)

    def _coerce(self, other):

        if isinstance(other, Polynomial):
            return other.monomial_coeffs()
        return np.array([float(other)])

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return Polynomial(npoly.polyadd(self.monomial_coeffs(),
                                        self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return Polynomial(npoly.polysub(self.monomial_coeffs(),
                                        self._coerce(other)))

    def __rsub__(self, other):
        return Polynomial(npoly.polysub(self._coerce(other),
                                        self.monomial_coeffs()))

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return Polynomial(npoly.polymul(self.monomial_coeffs(),
                                        self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(-self.monomial_coeffs())

    def __truediv__(self, other):
        return RationalFunction(self, 1.) / other

    def __rtruediv__(self, other):
        return RationalFunction(other, 1.) / self

    def compose(self, inner):
        '''Return self(inner(u)), Horner scheme in monomial form.'''

        inner = _as_polynomial(inner).monomial_coeffs()
        coeffs = self.monomial_coeffs()

        out = np.array([coeffs[-1]])
        for a in coeffs[-2::-1]:
            out = npoly.polyadd(npoly.polymul(out, inner), [a])

        return Polynomial(out)

    def deriv(self):
        coeffs = self.monomial_coeffs()
        if coeffs.size == 1:
            return Polynomial([0.])
        return Polynomial(npoly.polyder(coeffs))

    def taylor_shift(self, a):
        '''
        Coefficients t_k with p(u) = sum_k t_k (u - a)^k, k = 0..degree.
        '''

        shifted = self.compose(Polynomial([a, 1.])).monomial_coeffs()
        out = np.zeros(self.to_monomial().degree + 1, dtype=float)
        out[:shifted.size] = shifted[:out.size]

        return out

    def allclose(self, other, atol=1e-12):
        '''Coefficientwise comparison of the monomial forms.'''

        a = self.monomial_coeffs()
        b = _as_polynomial(other).monomial_coeffs()
        size = max(a.size, b.size)

        return np.allclose(np.pad(a, (0, size - a.size)),
                           np.pad(b, (0, size - b.size)), rtol=0, atol=atol)

    def __repr__(self):
        return 'Polynomial({}, basis={!r})'.format(
            list(self.coeffs), self.basis)

class RationalFunction(object):
    '''
    Quotient num(u) / den(u) of monomial polynomials, normalised so
    that the leading coefficient of den is 1. Immutable.
    '''

    def __init__(self, num, den=1.):
        '''
        Arguments
        ---------
        num : Polynomial, array-like or scalar
            Numerator (ascending monomial coefficients if array-like).

        Keyword arguments
        -----------------
        den : Polynomial, array-like or scalar
            Denominator. (default : 1.)

        Raises
        ------
        ValueError
            If den is the zero polynomial.
        '''

        num = num.to_monomial() if isinstance(num, Polynomial) \
            else Polynomial(num)
        den = den.to_monomial() if isinstance(den, Polynomial) \
            else Polynomial(den)

        if den.is_zero:
            raise ValueError('RationalFunction denominator is zero')

        lead = den.coeffs[-1]
        self._num = Polynomial(num.coeffs / lead)
        self._den = Polynomial(den.coeffs / lead)

    @classmethod
    def constant(cls, value):
        return cls([value], [1.])

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den.degree == 0

    @property
    def is_constant(self):
        return self.is_polynomial and self.num.degree == 0

    def constant_value(self):
        if not self.is_constant:
            raise ValueError('{} is not constant'.format(self))
        return float(self.num.coeffs[0])

    def __call__(self, u, pole_tol=tools.POLE_TOL):
        return rational_eval(self, u, pole_tol=pole_tol)

    @staticmethod
    def _coerce(other):

        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction.constant(float(other))

    def _same_den(self, other):

        a = self.den.coeffs
        b = other.den.coeffs
        return a.size == b.size and np.array_equal(a, b)

    def __add__(self, other):
        other = self._coerce(other)
        if self._same_den(other):
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ValueError('division by the zero rational function')
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def compose(self, inner):
        '''Return self(inner(u)) for a polynomial inner.'''
        return RationalFunction(self.num.compose(inner),
                                self.den.compose(inner))

    def deriv(self):
        num = self.num.deriv() * self.den - self.num * self.den.deriv()
        return RationalFunction(num, self.den * self.den)

    def reduce(self, tol=1e-10):
        '''
        Cancel the common factor of num and den found by poly_gcd.
        '''

        if self.is_zero:
            return RationalFunction.constant(0.)

        g = poly_gcd(self.num, self.den, tol=tol)
        if g.degree == 0:
            return self

        num = npoly.polydiv(self.num.coeffs, g.coeffs)[0]
        den = npoly.polydiv(self.den.coeffs, g.coeffs)[0]

        return RationalFunction(num, den)

    def allclose(self, other, atol=1e-12):
        '''
        Coefficientwise comparison of num1 * den2 and num2 * den1,
        so common factors need not be cancelled.
        '''
        other = self._coerce(other)
        return (self.num * other.den).allclose(other.num * self.den,
                                               atol=atol)

    def __repr__(self):
        return 'RationalFunction(num={}, den={})'.format(
            list(self.num.coeffs), list(self.den.coeffs))

def poly_arith(p, q, op):
    '''
    Arithmetic on monomial polynomials.

    Arguments
    ---------
    p : Polynomial
    q : Polynomial or scalar
        Second operand, a scalar for op='scale'.
    op : str
        One of 'add', 'mul', 'scale', 'compose'. 'compose'
        returns p(q(u)).

    Returns
    -------
    r : Polynomial
    '''

    if op == 'add':
        return p + q
    elif op == 'mul':
        return p * q
    elif op == 'scale':
        return p * float(q)
    elif op == 'compose':
        return p.compose(q)

    raise ValueError('{} is unrecognized op'.format(op))

def poly_gcd(p, q, tol=1e-10):
    '''
    Monic greatest common divisor by the Euclidean algorithm.

    Arguments
    ---------
    p, q : Polynomial

    Keyword arguments
    -----------------
    tol : float
        Remainder coefficients below tol times the largest operand
        coefficient count as zero. (default : 1e-10)

    Returns
    -------
    g : Polynomial
        Monic, degree 0 if p and q are coprime.

    Raises
    ------
    ValueError
        If both p and q vanish identically.
    '''

    a = _as_polynomial(p).monomial_coeffs()
    b = _as_polynomial(q).monomial_coeffs()
    if not np.any(a) and not np.any(b):
        raise ValueError('gcd of two zero polynomials')

    while np.any(b):
        scale = max(np.max(np.abs(a)), np.max(np.abs(b)))
        r = _trim(npoly.polydiv(a, b)[1], tol * scale) if b.size > 1 \
            else np.zeros(1)
        a, b = b, r

    return Polynomial(a / a[-1])

def taylor_shift(p, a):
    '''
    Expand p about a.

    Arguments
    ---------
    p : Polynomial
    a : float

    Returns
    -------
    t : array-like
        Coefficients with p(u) = sum_k t[k] (u - a)^k.
    '''

    return _as_polynomial(p).taylor_shift(a)

def basis_convert(p, target, degree=None):
    '''
    Change the basis of a polynomial.

    Arguments
    ---------
    p : Polynomial
    target : str
        'monomial' or 'bernstein'.

    Keyword arguments
    -----------------
    degree : int, None
        Bernstein degree, at least the degree of p. If None,
        use the degree of p. (default : None)

    Returns
    -------
    q : Polynomial
        Pointwise identical polynomial in the target basis.
    '''

    if target == MONOMIAL:
        return p.to_monomial()
    elif target == BERNSTEIN:
        return p.to_bernstein(degree)

    raise ValueError('basis = {} not recognized'.format(target))

def rational_eval(r, u, pole_tol=tools.POLE_TOL):
    '''
    Evaluate num(u) / den(u).

    Arguments
    ---------
    r : RationalFunction
    u : scalar or array-like

    Keyword arguments
    -----------------
    pole_tol : float
        Absolute tolerance on |den(u)|. (default : tools.POLE_TOL)

    Raises
    ------
    PoleError
        If |den(u)| < pole_tol at (any) u.
    '''

    den = r.den(u)
    bad = np.abs(den) < pole_tol
    if np.any(bad):
        where = np.atleast_1d(u)[np.atleast_1d(bad)][0]
        raise PoleError('pole of {} at u = {}'.format(r, where))

    return r.num(u) / den

def fit_rational(u, y, tol=None, max_degree=8):
    '''
    Fit the rational function of lowest total degree that reproduces
    sampled values, polynomials first at each total degree.

    Arguments
    ---------
    u : array-like
        Sample locations.
    y : array-like
        Sampled values.

    Keyword arguments
    -----------------
    tol : float, None
        Required max |fit - y| relative to max(1, max|y|).
        (default : tools.get_tol())
    max_degree : int
        Largest total degree deg(num) + deg(den) tried. (default : 8)

    Returns
    -------
    fit : RationalFunction or None
        None if no fit within tolerance.

    Notes
    -----
    Denominators are monic and solved by linearised least squares,
    num(u_k) - y_k den(u_k) = 0.
    '''

    u = np.asarray(u, dtype=float)
    y = np.asarray(y, dtype=float)
    tol = tools.get_tol(tol)
    scale = max(1., float(np.max(np.abs(y))))

    for total in range(max_degree + 1):
        for q in range(total + 1):
            p = total - q
            if p + q + 2 > u.size:
                continue

            if q == 0:
                num = npoly.polyfit(u, y, p)
                den = np.ones(1)
            else:
                mat = np.hstack([np.vander(u, p + 1, increasing=True),
                                 -y[:,None] * np.vander(u, q, increasing=True)])
                sol = np.linalg.lstsq(mat, y * u ** q, rcond=None)[0]
                num = sol[:p+1]
                den = np.append(sol[p+1:], 1.)

            dval = npoly.polyval(u, den)
            if np.any(np.abs(dval) < tools.POLE_TOL):
                continue

            resid = np.max(np.abs(npoly.polyval(u, num) / dval - y))
            if resid <= tol * scale:
                return RationalFunction(num, den)

    return None
