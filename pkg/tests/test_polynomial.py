import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from devsurf.polynomial import Polynomial, RationalFunction, PoleError, \
    poly_arith, poly_gcd, taylor_shift, basis_convert, rational_eval, \
    fit_rational

coeff_lists = st.lists(st.floats(-10, 10), min_size=1, max_size=9)

class TestPolynomial(unittest.TestCase):

    def test_trim(self):

        p = Polynomial([1., 2., 0., 1e-14])
        self.assertEqual(p.degree, 1)
        np.testing.assert_array_equal(p.coeffs, [1., 2.])

        zero = Polynomial([0., 0.])
        self.assertTrue(zero.is_zero)
        self.assertEqual(zero.degree, 0)

        self.assertRaises(ValueError, Polynomial, [])
        self.assertRaises(ValueError, Polynomial, [1., np.nan])
        self.assertRaises(ValueError, Polynomial, [1., 2.], basis='bernstein',
                          degree=2)
        self.assertRaises(ValueError, Polynomial, [1.], basis='chebyshev')

    def test_immutable(self):

        p = Polynomial([1., 2.])
        with self.assertRaises(ValueError):
            p.coeffs[0] = 3.

    def test_poly_arith(self):

        up = Polynomial([1., 1.])
        um = Polynomial([-1., 1.])

        self.assertTrue(poly_arith(up, um, 'mul').allclose([-1., 0., 1.]))
        self.assertTrue(poly_arith(up, Polynomial([0.]), 'mul').is_zero)
        self.assertTrue(poly_arith(up, um, 'add').allclose([0., 2.]))
        self.assertTrue(poly_arith(up, 3., 'scale').allclose([3., 3.]))

        sq = Polynomial([0., 0., 1.])
        comp = poly_arith(sq, up, 'compose')
        self.assertTrue(comp.allclose([1., 2., 1.]))

        u = np.linspace(-1, 2, 10)
        np.testing.assert_allclose(comp(u), sq(up(u)), atol=1e-12)

        self.assertRaises(ValueError, poly_arith, up, um, 'div')

    def test_operators(self):

        p = Polynomial([1., 2.])
        self.assertTrue((p - p).is_zero)
        self.assertTrue((2 - p).allclose([1., -2.]))
        self.assertTrue((-p).allclose([-1., -2.]))
        self.assertTrue((p * p).allclose([1., 4., 4.]))
        self.assertTrue(p.deriv().allclose([2.]))
        self.assertTrue(Polynomial.constant(3.).deriv().is_zero)

    def test_taylor_shift(self):

        np.testing.assert_allclose(taylor_shift(Polynomial([0., 0., 1.]), 1.),
                                   [1., 2., 1.], atol=1e-14)

        p = Polynomial([3., -1., 4., 1.])
        np.testing.assert_allclose(taylor_shift(p, 0.), p.coeffs)

        p = Polynomial([0., -1., 0., 1.])
        t = taylor_shift(p, 2.)
        np.testing.assert_allclose(t, [6., 11., 6., 1.], atol=1e-12)

        for u in [0., 1., 3.]:
            self.assertAlmostEqual(p(u), Polynomial(t)(u - 2.))

    def test_basis_convert(self):

        sq = Polynomial([0., 0., 1.])
        np.testing.assert_allclose(basis_convert(sq, 'bernstein', 2).coeffs,
                                   [0., 0., 1.], atol=1e-15)

        lin = Polynomial([0., 1.])
        np.testing.assert_allclose(basis_convert(lin, 'bernstein', 2).coeffs,
                                   [0., 0.5, 1.], atol=1e-15)

        lin = Polynomial([0., 2. / 3])
        np.testing.assert_allclose(basis_convert(lin, 'bernstein', 2).coeffs,
                                   [0., 1. / 3, 2. / 3], atol=1e-15)

        self.assertRaises(ValueError, basis_convert, sq, 'bernstein', 1)
        self.assertRaises(ValueError, basis_convert, sq, 'power', 3)

        bern = basis_convert(sq, 'bernstein', 4)
        self.assertEqual(bern.degree, 4)
        self.assertTrue(basis_convert(bern, 'monomial').allclose(sq))

    @settings(max_examples=200, deadline=None)
    @given(coeff_lists, st.floats(-1, 1))
    def test_taylor_round_trip(self, coeffs, a):

        p = Polynomial(coeffs)
        t = taylor_shift(p, a)
        back = taylor_shift(Polynomial(t), -a)

        size = p.coeffs.size
        tol = 1e-12 * max(1., np.max(np.abs(p.coeffs)), np.max(np.abs(t)))
        np.testing.assert_allclose(back[:size], p.coeffs, rtol=0, atol=tol)
        np.testing.assert_allclose(back[size:], 0., atol=tol)

    @settings(max_examples=200, deadline=None)
    @given(coeff_lists, st.integers(0, 3))
    def test_basis_round_trip(self, coeffs, extra):

        p = Polynomial(coeffs)
        bern = basis_convert(p, 'bernstein', p.degree + extra)
        back = basis_convert(bern, 'monomial')

        self.assertTrue(back.allclose(
            p, atol=1e-12 * max(1., np.max(np.abs(p.coeffs)))))

        u = np.random.RandomState(len(coeffs)).uniform(0, 1, 50)
        scale = np.sum(np.abs(p.coeffs))
        np.testing.assert_allclose(bern(u), p(u), rtol=0,
                                   atol=1e-12 * max(1., scale) * 10)

class TestRationalFunction(unittest.TestCase):

    def test_normalize(self):

        r = RationalFunction([2.], [0., 4.])
        np.testing.assert_allclose(r.den.coeffs, [0., 1.])
        np.testing.assert_allclose(r.num.coeffs, [0.5])

        self.assertRaises(ValueError, RationalFunction, [1.], [0.])

    def test_rational_eval(self):

        self.assertEqual(rational_eval(RationalFunction.constant(2.), 0.7), 2.)
        self.assertAlmostEqual(
            rational_eval(RationalFunction([0., 0., 1.], [0., 1.]), 3.), 3.)

        # Lambda_0(u) = u + 2 under u = U^2, divided by U
        lam0 = Polynomial([2., 0., 1.])
        r = RationalFunction(lam0, [0., 1.])
        self.assertAlmostEqual(r(0.5), 4.5)

        u = np.linspace(0.1, 0.9, 5)
        np.testing.assert_allclose(r(u), (u ** 2 + 2) / u)

        self.assertRaises(PoleError, rational_eval, r, 0.)
        self.assertRaises(PoleError, r, np.array([0.5, 0.]))
        # PoleError is a ValueError
        self.assertRaises(ValueError, r, 0.)

    def test_arithmetic(self):

        u = RationalFunction([0., 1.])
        r = 1. / (u + 1.)
        s = r + r
        self.assertTrue(s.allclose(RationalFunction([2.], [1., 1.])))

        x = np.linspace(0, 1, 7)
        np.testing.assert_allclose((r * u - 2.)(x), x / (x + 1) - 2.)
        np.testing.assert_allclose(r.deriv()(x), -1. / (x + 1) ** 2)
        np.testing.assert_allclose(r.compose(Polynomial([0., 0., 1.]))(x),
                                   1. / (x ** 2 + 1))

        self.assertTrue((r - r).is_zero)
        self.assertRaises(ValueError, lambda: r / (u - u))

    def test_allclose_common_factor(self):

        # (u^2 - 1) / (u - 1) equals u + 1
        r = RationalFunction([-1., 0., 1.], [-1., 1.])
        self.assertTrue(r.allclose(RationalFunction([1., 1.])))
        self.assertFalse(r.allclose(RationalFunction([1., 1.01])))

    def test_gcd(self):

        # (u - 0.5)^2 (u + 1) and (u - 0.5) (u - 2)
        p = Polynomial([0.25, -1., 1.]) * Polynomial([1., 1.])
        q = Polynomial([-0.5, 1.]) * Polynomial([-2., 1.])
        self.assertTrue(poly_gcd(p, q).allclose([-0.5, 1.], atol=1e-10))

        self.assertEqual(poly_gcd(p, Polynomial([3., 1.])).degree, 0)
        self.assertTrue(poly_gcd(p, Polynomial([0.])).allclose(
            p * (1. / p.coeffs[-1])))
        self.assertRaises(ValueError, poly_gcd, Polynomial([0.]),
                          Polynomial([0.]))

    def test_reduce(self):

        # (u - 0.5)^2 / (2 (u - 0.5)^2) has no pole at 0.5
        sq = Polynomial([0.25, -1., 1.])
        r = RationalFunction(sq, sq * 2.).reduce()
        self.assertTrue(r.is_constant)
        self.assertAlmostEqual(r.constant_value(), 0.5)
        self.assertAlmostEqual(r(0.5), 0.5)

        r = RationalFunction([-1., 0., 1.], [-1., 1.]).reduce()
        self.assertTrue(r.is_polynomial)
        self.assertTrue(r.num.allclose([1., 1.], atol=1e-10))

        coprime = RationalFunction([1., 2.], [3., 1.])
        self.assertIs(coprime.reduce(), coprime)
        self.assertTrue(RationalFunction([0.], [0., 1.]).reduce().is_zero)

    def test_constant(self):

        r = RationalFunction.constant(-0.5)
        self.assertTrue(r.is_constant)
        self.assertEqual(r.constant_value(), -0.5)
        self.assertFalse(RationalFunction([0., 1.]).is_constant)
        self.assertRaises(ValueError, RationalFunction([0., 1.]).constant_value)

    def test_fit_rational(self):

        u = (np.arange(33) + 0.5) / 33

        fit = fit_rational(u, 3. - u / 2)
        self.assertTrue(fit.is_polynomial)
        self.assertTrue(fit.allclose(RationalFunction([3., -0.5]), atol=1e-10))

        fit = fit_rational(u, 2. * np.ones_like(u))
        self.assertTrue(fit.is_constant)
        self.assertAlmostEqual(fit.constant_value(), 2.)

        y = (1. + 2 * u) / (u + 3.)
        fit = fit_rational(u, y)
        self.assertTrue(fit.allclose(RationalFunction([1., 2.], [3., 1.]),
                                     atol=1e-8))

        # pole at 0 in the fitted function is fine off the samples
        fit = fit_rational(u, 2. / u)
        np.testing.assert_allclose(fit(u), 2. / u, rtol=1e-9)

        rng = np.random.RandomState(3)
        self.assertIsNone(fit_rational(u, rng.randn(u.size), max_degree=4))

if __name__ == '__main__':
    unittest.main()
