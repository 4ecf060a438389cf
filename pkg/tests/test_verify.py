import unittest

import numpy as np

from devsurf.bezier import BezierCurve
from devsurf.developable import Certificate, make_patch, aumann_construct, \
    certify
from devsurf.patch_ops import restrict_u
from devsurf.verify import CheckReport, developability_residual, \
    penultimate_coplanarity, normal_constancy, surfaces_equal, \
    blossom_residual, edge_degeneracy, ode_residual

C_POLY = [[0, 0, 0], [1, 0, 0], [2, 1, 0]]

def aumann_example():
    return aumann_construct(BezierCurve(C_POLY), [0, 0, 1], 2., 0.5)

def perturbed(patch, seed=0):
    rng = np.random.RandomState(seed)
    d = patch.d.points + 1e-3 * rng.uniform(-1, 1, patch.d.points.shape)
    return make_patch(patch.c, BezierCurve(d))

class TestCheckReport(unittest.TestCase):

    def test_dict(self):

        report = CheckReport('developability', 33, 2e-13, (0.5, 0.), 1e-9)
        self.assertTrue(report.passed)

        out = report.to_dict()
        self.assertEqual(sorted(out), ['argmaxLocation', 'maxResidual',
                                       'name', 'pass', 'samples',
                                       'tolerance'])
        self.assertEqual(out['argmaxLocation'], [0.5, 0.])
        self.assertTrue(out['pass'])

        back = CheckReport.from_dict(out)
        self.assertEqual(back.to_dict(), out)

        report = CheckReport('normal_constancy', 9, np.pi, (0.1, 0.2), 1e-8,
                             flags=['vanishing-normal'])
        self.assertFalse(report.passed)
        self.assertEqual(report.to_dict()['flags'], ['vanishing-normal'])
        self.assertEqual(CheckReport.from_dict(report.to_dict()).flags,
                         ['vanishing-normal'])

    def test_strict(self):

        # pass requires residual strictly below tolerance
        self.assertFalse(CheckReport('x', 1, 1e-9, (0, 0), 1e-9).passed)

class TestDevelopability(unittest.TestCase):

    def test_plane(self):

        plane = make_patch(BezierCurve([[0, 0, 0], [1, 0, 0], [2, 0, 0]]),
                           BezierCurve([[0, 1, 0], [1, 2, 0], [2, 1, 0]]))
        report = developability_residual(plane)
        self.assertLess(report.max_residual, 1e-14)
        self.assertEqual(report.samples, 33)

    def test_aumann(self):

        report = developability_residual(aumann_example())
        self.assertLess(report.max_residual, 1e-12)
        self.assertTrue(report.passed)

        report = developability_residual(perturbed(aumann_example()))
        self.assertGreater(report.max_residual, 1e-5)
        self.assertFalse(report.passed)
        self.assertTrue(0 < report.argmax[0] < 1)

        self.assertRaises(ValueError, developability_residual,
                          aumann_example(), nu=1)

    def test_zero_width(self):

        c = BezierCurve(C_POLY)
        for check in (developability_residual, penultimate_coplanarity):
            report = check(make_patch(c, c))
            self.assertTrue(report.passed)
            self.assertEqual(report.flags, ['zero-width'])

    def test_penultimate(self):

        self.assertTrue(penultimate_coplanarity(aumann_example()).passed)

        rng = np.random.RandomState(9)
        patch = make_patch(BezierCurve(rng.uniform(-1, 1, (4, 3))),
                           BezierCurve(rng.uniform(-1, 1, (4, 3))))
        self.assertFalse(penultimate_coplanarity(patch).passed)

    def test_agreement(self):

        for k in range(20):
            patch = aumann_example() if k % 2 else perturbed(aumann_example(),
                                                            seed=k)
            developable = developability_residual(patch).passed
            self.assertEqual(developable,
                             penultimate_coplanarity(patch).passed)
            self.assertEqual(developable, certify(patch) is not None)

    def test_deterministic(self):

        patch = perturbed(aumann_example())
        self.assertEqual(developability_residual(patch).to_dict(),
                         developability_residual(patch).to_dict())

class TestNormals(unittest.TestCase):

    def test_cylinder(self):

        c = BezierCurve(C_POLY)
        patch = make_patch(c, BezierCurve(c.points + [0, 0, 1]))
        report = normal_constancy(patch, tol=1e-10)
        self.assertTrue(report.passed)
        self.assertEqual(report.flags, [])

    def test_edge_free(self):

        patch = restrict_u(aumann_example(), 0., 0.45)
        self.assertTrue(normal_constancy(patch, tol=1e-8).passed)

    def test_edge_crossing(self):

        report = normal_constancy(aumann_example(), tol=1e-8)
        self.assertFalse(report.passed)
        self.assertIn('orientation-reversal', report.flags)
        self.assertGreater(report.argmax[0], 0.5)

    def test_vanishing(self):

        c = BezierCurve(C_POLY)
        report = normal_constancy(make_patch(c, c))
        self.assertFalse(report.passed)
        self.assertEqual(report.max_residual, np.pi)
        self.assertIn('vanishing-normal', report.flags)

class TestCertificateOracles(unittest.TestCase):

    def setUp(self):

        self.patch = aumann_example()

    def test_surfaces_equal(self):

        self.assertEqual(surfaces_equal(self.patch,
                                        self.patch).max_residual, 0.)

        swapped = make_patch(self.patch.d, self.patch.c)
        report = surfaces_equal(swapped, self.patch,
                                lambda u, v: (u, 1. - v), tol=1e-12)
        self.assertTrue(report.passed)
        self.assertEqual(report.samples, 441)

        self.assertFalse(surfaces_equal(swapped, self.patch).passed)

    def test_blossom(self):

        self.assertTrue(blossom_residual(self.patch).passed)

        wrong = Certificate.constant(1.5, 0.5)
        self.assertFalse(blossom_residual(self.patch, wrong).passed)

        self.assertRaises(ValueError, blossom_residual,
                          self.patch.with_certificate(None))
        self.assertRaises(ValueError, blossom_residual, self.patch,
                          Certificate(kind='translation'))

    def test_edge_degeneracy(self):

        self.assertTrue(edge_degeneracy(self.patch, tol=1e-8).passed)
        self.assertRaises(ValueError, edge_degeneracy,
                          self.patch.with_certificate(None))

    def test_ode(self):

        self.assertTrue(ode_residual(self.patch).passed)
        self.assertFalse(ode_residual(self.patch,
                                      Certificate.constant(3., 0.5)).passed)
        self.assertRaises(ValueError, ode_residual, self.patch,
                          Certificate.constant(1., 1.))

if __name__ == '__main__':
    unittest.main()
