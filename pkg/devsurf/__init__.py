'''
This package contains tools to construct, transform, verify and
tessellate developable Bezier surface patches.
'''

from .polynomial import Polynomial, RationalFunction, PoleError
from .bezier import BezierCurve
from .developable import DevelopablePatch, Certificate, LambdaMu, \
    SurfaceClass, make_patch, aumann_construct, certify, classify
from .document import SchemaError
