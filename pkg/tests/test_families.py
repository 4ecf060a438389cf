import unittest

import numpy as np

from devsurf import tools
from devsurf.bezier import BezierCurve
from devsurf.polynomial import Polynomial, RationalFunction
from devsurf.developable import certify, classify, edge_curve, \
    edge_evaluate, edge_parameter
from devsurf.families import cylinder, cone, tangent_patch, \
    from_edge_of_regression, family4, family4_edge, general_solution_info, \
    FamilySpec
from devsurf import verify

CURVE = [[0, 0, 0], [1, 0, 0.5], [2, 1, 0], [3, 0, 1]]

def twisted_cubic():
    return BezierCurve.from_monomial([[0, 0, 0], [1, 0, 0], [0, 1, 0],
                                      [0, 0, 1]])

class TestCylinder(unittest.TestCase):

    def setUp(self):

        self.c = BezierCurve(CURVE)

    def test_constant_certificate(self):

        # f = (u + 2)^3, Lambda = M = -2
        f = Polynomial([8., 12., 6., 1.])
        patch = cylinder(self.c, [0, 0, 1], f)
        cert = patch.certificate
        self.assertTrue(cert.is_cylinder)
        self.assertTrue(cert.is_constant)
        self.assertAlmostEqual(cert.lambda_fn.constant_value(), -2.)

        self.assertEqual(classify(patch), 'cylinder')
        self.assertTrue(verify.developability_residual(patch).passed)
        self.assertTrue(verify.blossom_residual(patch).passed)
        self.assertTrue(verify.normal_constancy(patch, tol=1e-10).passed)

    def test_root_inside(self):

        # f = (u - 0.5)^3 vanishes on the grid, Lambda = M = 0.5
        f = Polynomial([-0.125, 0.75, -1.5, 1.])
        patch = cylinder(self.c, [0, 0, 1], f)
        lam, m = patch.certificate.constant_values()
        self.assertAlmostEqual(lam, 0.5, places=12)
        self.assertEqual(lam, m)

        for nu in (33, 65):
            self.assertTrue(verify.blossom_residual(patch, nu=nu).passed)
        self.assertTrue(verify.developability_residual(patch).passed)

        # f = (2 u - 1)^2 on the cubic, Lambda = M = u - 3 (u - 0.5) / 2
        patch = cylinder(self.c, [1, 0, 1], [1., -4., 4.])
        self.assertTrue(patch.certificate.lambda_fn.is_polynomial)
        self.assertTrue(patch.certificate.lambda_fn.allclose(
            RationalFunction([0.75, -0.5]), atol=1e-10))
        self.assertTrue(verify.blossom_residual(patch).passed)

    def test_linear(self):

        for n in range(1, 5):
            c = BezierCurve(np.random.RandomState(n).uniform(-1, 1,
                                                             (n + 1, 3)))
            patch = cylinder(c, [0, 1, 1], [0., 1.])
            self.assertTrue(patch.certificate.lambda_fn.allclose(
                RationalFunction([0., -(n - 1.)])))

    def test_translation(self):

        patch = cylinder(self.c, [0, 0, 2], [1.])
        self.assertIsNone(patch.certificate)
        np.testing.assert_allclose(patch.d.points - patch.c.points,
                                   [[0, 0, 2]] * 4)
        self.assertEqual(classify(patch), 'cylinder')

    def test_errors(self):

        self.assertRaises(ValueError, cylinder, self.c, [0, 0, 1],
                          [0, 0, 0, 0, 1.])
        self.assertRaises(ValueError, cylinder, self.c, [0, 0, 1], [0.])
        self.assertRaises(ValueError, cylinder, self.c, [0, 0, 0], [1.])

class TestCone(unittest.TestCase):

    def setUp(self):

        self.c = BezierCurve([[0, 0, 0], [1, 0, 0], [2, 1, 0]])
        self.vertex = np.array([0.5, 0.5, 2.])

    def test_linear(self):

        patch = cone(self.c, self.vertex, [1., 1.])
        self.assertEqual(patch.degree, 3)

        cert = patch.certificate
        self.assertTrue(cert.lambda_fn.allclose(
            RationalFunction([-6., -8., -3.])))
        self.assertTrue(cert.m_fn.allclose(RationalFunction([-3., -2.])))

        self.assertTrue(verify.developability_residual(patch).passed)
        self.assertTrue(verify.blossom_residual(patch).passed)

        u = tools.open_grid(33)
        resid = tools.parallel_residual(self.vertex - patch.c(u),
                                        patch.d(u) - patch.c(u))
        self.assertLess(np.max(resid), 1e-9)

        for x in u:
            np.testing.assert_allclose(edge_evaluate(patch, None, x),
                                       self.vertex, atol=1e-9)

        cls = classify(patch)
        self.assertEqual(cls, 'cone')
        np.testing.assert_allclose(cls.vertex, self.vertex, atol=1e-9)

    def test_quadratic(self):

        patch = cone(self.c, self.vertex, [1., 0.5, 0.25])
        self.assertEqual(patch.degree, 4)
        self.assertTrue(verify.blossom_residual(patch).passed)
        self.assertEqual(classify(patch), 'cone')

    def test_errors(self):

        self.assertRaises(ValueError, cone, self.c, self.vertex, [2.])
        self.assertRaises(ValueError, cone, self.c, [0, 0], [1., 1.])

class TestTangent(unittest.TestCase):

    def setUp(self):

        self.c = BezierCurve(CURVE)

    def test_unit(self):

        patch = tangent_patch(self.c)
        cert = patch.certificate
        self.assertTrue(cert.lambda_fn.allclose(RationalFunction([3., 1.])))
        self.assertTrue(cert.m_fn.allclose(RationalFunction([0., 1.])))

        u = tools.open_grid(33)
        self.assertLess(np.max(np.abs(edge_parameter(cert, u))), 1e-12)
        self.assertTrue(verify.developability_residual(patch).passed)
        self.assertTrue(verify.ode_residual(patch).passed)

        np.testing.assert_allclose(patch.d(u) - patch.c(u),
                                   self.c.derivative(u), atol=1e-12)
        self.assertEqual(classify(patch), 'tangent')

    def test_linear_factor(self):

        f = Polynomial([0.5, 1.])
        patch = tangent_patch(self.c, f)
        u = tools.open_grid(33)
        np.testing.assert_allclose(patch.d(u) - patch.c(u),
                                   f(u)[:,None] * self.c.derivative(u),
                                   atol=1e-12)
        self.assertTrue(verify.blossom_residual(patch).passed)

    def test_errors(self):

        self.assertRaises(ValueError, tangent_patch, self.c, 0.)
        self.assertRaises(ValueError, tangent_patch, self.c, [1., 0., 1.])

        with self.assertWarns(RuntimeWarning):
            tangent_patch(self.c, [-0.5, 1.])

class TestEdgeOfRegression(unittest.TestCase):

    def test_twisted_cubic(self):

        r = twisted_cubic()
        patch = from_edge_of_regression(r, 0., 1. / 3)

        np.testing.assert_allclose(patch.c.points, [[0, 0, 0], [1. / 3, 0, 0],
                                                    [2. / 3, 1. / 3, 0]],
                                   atol=1e-14)
        np.testing.assert_allclose(patch.d.points, [[1. / 3, 0, 0],
                                                    [2. / 3, 1. / 3, 0],
                                                    [1, 1, 1]], atol=1e-14)
        lam, m = patch.certificate.constant_values()
        self.assertAlmostEqual(lam, 1.)
        self.assertEqual(m, 0.)

        edge = edge_curve(patch)
        np.testing.assert_allclose(edge.points, r.points, atol=1e-10)

        u = np.linspace(0, 1, 101)
        np.testing.assert_allclose(patch(u, u), r(u), atol=1e-10)

    def test_certify(self):

        r = BezierCurve(np.random.RandomState(2).uniform(-1, 1, (5, 3)))
        patch = from_edge_of_regression(r, 0.2, 0.4)
        self.assertEqual(patch.degree, 3)

        lam, m = certify(patch).constant_values()
        self.assertAlmostEqual(lam, 1.6, places=9)
        self.assertAlmostEqual(m, 0.8, places=9)

    def test_round_trip(self):

        rng = np.random.RandomState(50)
        for _ in range(50):
            r = BezierCurve(rng.uniform(-1, 1, (rng.randint(3, 7), 3)))
            b1 = rng.uniform(-1, 1)
            b2 = b1 + rng.choice([-1, 1]) * rng.uniform(0.2, 1.)

            patch = from_edge_of_regression(r, b1, b2)
            n = patch.degree
            self.assertEqual(n, r.degree - 1)
            self.assertEqual(patch.certificate.constant_values(),
                             ((n + 1) * b2, (n + 1) * b1))

            np.testing.assert_allclose(edge_curve(patch).points, r.points,
                                       atol=1e-10)
            self.assertTrue(verify.developability_residual(patch).passed)

    def test_errors(self):

        r = twisted_cubic()
        self.assertRaises(ValueError, from_edge_of_regression, r, 0.5, 0.5)
        self.assertRaises(ValueError, from_edge_of_regression,
                          BezierCurve([[0, 0, 0], [1, 1, 1]]), 0., 1.)

class TestFamily4(unittest.TestCase):

    def setUp(self):

        self.c = BezierCurve.from_monomial([[0, 0, 0], [1, 0, 0], [0, 1, 0]])

    def test_example(self):

        patch = family4(self.c, 0., 1., 1., [0, 0, 1])
        self.assertEqual(patch.degree, 3)

        u = tools.open_grid(33)
        v = np.stack([1. / 3 - u / 2, u - 2 * u ** 2, u ** 3], axis=1)
        np.testing.assert_allclose(patch.ruling_curve()(u), v, atol=1e-12)

        self.assertTrue(verify.developability_residual(patch).passed)
        self.assertTrue(verify.blossom_residual(patch).passed)
        self.assertTrue(verify.ode_residual(patch).passed)

        cert = certify(patch)
        self.assertIsNotNone(cert)
        lam, m = cert.values(0.3)
        self.assertAlmostEqual(float(lam), 0.7, places=8)
        self.assertAlmostEqual(float(m), 0., places=8)

        np.testing.assert_allclose(edge_evaluate(patch, None, u),
                                   family4_edge(patch, 0., 1., 1., u),
                                   atol=1e-9)
        self.assertRaises(ValueError, family4_edge, patch, 0., 1., 1., 1.)

    def test_homogeneous_dropped(self):

        patch = family4(self.c, 0., 1., 1., [0, 0, 0])
        mono = patch.ruling_curve().to_monomial()
        np.testing.assert_allclose(mono[-1], 0., atol=1e-12)
        self.assertTrue(verify.developability_residual(patch).passed)

    def test_random(self):

        rng = np.random.RandomState(25)
        for _ in range(25):
            c = BezierCurve(rng.uniform(-1, 1, (rng.randint(2, 6), 3)))
            a = rng.uniform(-1, 1)
            b = rng.uniform(1.5, 3.)
            A = rng.choice([-1, 1]) * rng.uniform(0.5, 2.)
            patch = family4(c, a, b, A, rng.uniform(-1, 1, 3))

            self.assertEqual(patch.degree, c.degree + 1)
            self.assertTrue(verify.developability_residual(patch).passed)
            self.assertTrue(verify.blossom_residual(patch).passed)

            cert = certify(patch)
            self.assertIsNotNone(cert)
            np.testing.assert_allclose(cert.values(tools.open_grid(9))[1],
                                       a, atol=1e-7)

    def test_errors(self):

        self.assertRaises(ValueError, family4, self.c, 0., 1., 0., [0, 0, 1])
        self.assertRaises(ValueError, family4, self.c, 1., 1., 1., [0, 0, 1])
        self.assertRaises(ValueError, family4, self.c, 0., 1., 1., [0, 0, 1],
                          n=5)
        self.assertRaises(ValueError, family4, BezierCurve([[1, 1, 1]]), 0.,
                          1., 1., [0, 0, 0])

class TestSolutionInfo(unittest.TestCase):

    def test_cases(self):

        self.assertEqual(general_solution_info(3, 3), ['aumann'])
        self.assertEqual(general_solution_info(3, 2),
                         ['aumann-elevated', 'scaled-rulings', 'family4'])
        self.assertRaises(ValueError, general_solution_info, 3, 1)

class TestFamilySpec(unittest.TestCase):

    def test_build(self):

        c = BezierCurve([[0, 0, 0], [1, 0, 0], [2, 1, 0]])

        patch = FamilySpec('aumann', d0=[0, 0, 1], lam=2., m=0.5).build(c)
        np.testing.assert_allclose(patch.d.points,
                                   [[0, 0, 1], [4, 0, -1], [2, 4, 1]],
                                   atol=1e-14)

        patch = FamilySpec('tangent', f=[1.]).build(c)
        self.assertEqual(classify(patch), 'tangent')

        patch = FamilySpec('from-edge', b1=0., b2=1. / 3).build(twisted_cubic())
        self.assertEqual(patch.degree, 2)

        self.assertRaises(ValueError, FamilySpec, 'sphere')
        self.assertRaises(ValueError, FamilySpec, 'cone', vertex=[0, 0, 1])
        self.assertRaises(ValueError, FamilySpec, 'tangent', f=[1.], g=2.)

if __name__ == '__main__':
    unittest.main()
