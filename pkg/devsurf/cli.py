'''
Command line interface.

    devsurf construct aumann --input c.json --d0 0,0,1 --lambda 2 --m 0.5
    devsurf op elevate --input patch.json --m 2
    devsurf check --input patch.json
    devsurf edge --input patch.json
    devsurf classify --input patch.json
    devsurf singular --input patch.json
    devsurf mesh --input patch.json --nu 33 --nv 9 --output patch.obj
    devsurf plot --input patch.json --output-dir figs --tag patch

Exit codes: 0 on success, 1 on usage or input errors, 2 on a failed
check. Vector flags take comma-separated coordinates, polynomial flags
comma-separated ascending coefficients (use --d0=-1,0,0 for a leading
minus sign).
'''

import argparse
import sys

from . import tools
from .document import parse, serialize, Polyline, CURVE, PATCH
from .developable import aumann_construct, certify, classify, edge_curve, \
    edge_evaluate, singular_interval
from .families import cylinder, cone, tangent_patch, \
    from_edge_of_regression, family4
from .mesh import export_obj
from .patch_ops import elevate_patch, restrict_u, restrict_v, \
    scale_rulings, reparametrize
from .polynomial import Polynomial, PoleError
from .verify import developability_residual, penultimate_coplanarity, \
    blossom_residual

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAIL = 2

class UsageError(ValueError):
    pass

class _Parser(argparse.ArgumentParser):
    '''ArgumentParser that raises instead of exiting with status 2.'''

    def error(self, message):
        raise UsageError('{}\n{}'.format(message, self.format_usage().strip()))

def _floats(text, flag, size=None):

    try:
        vals = [float(x) for x in text.split(',')]
    except ValueError:
        raise UsageError('{} expects comma-separated numbers, got '
                         '{!r}'.format(flag, text))
    if size is not None and len(vals) != size:
        raise UsageError('{} expects {} numbers, got {}'.format(
            flag, size, len(vals)))

    return vals

def _vector(text, flag):
    return tools.as_point(_floats(text, flag, size=3), flag)

def _poly(text, flag):
    return Polynomial(_floats(text, flag))

def _require(args, *names):

    flags = {'lam' : '--lambda'}
    missing = [flags.get(name, '--' + name) for name in names
               if getattr(args, name) is None]
    if missing:
        raise UsageError('{} {} needs {}'.format(
            args.command, getattr(args, 'kind', ''), ', '.join(missing)))

def _read(filename, expect):

    if filename == '-':
        text = sys.stdin.read()
    else:
        with open(filename, 'r') as f:
            text = f.read()

    return parse(text, expect=expect)

def _emit(text, output, out):

    if output:
        with open(output, 'w') as f:
            f.write(text)
    else:
        out.write(text)

def _log(args, err, msg):
    if args.verbose:
        print(msg, file=err)

def _patch_certificate(patch, args):

    cert = patch.certificate
    if cert is None:
        cert = certify(patch, samples=max(args.samples, patch.degree + 2),
                       tol=args.tol)
    if cert is None:
        raise ValueError('patch is not developable')

    return cert

def cmd_construct(args, out, err):

    curve = _read(args.input, CURVE)
    kind = args.kind

    if kind == 'aumann':
        _require(args, 'd0', 'lam', 'm')
        patch = aumann_construct(curve, _vector(args.d0, '--d0'), args.lam,
                                 args.m)
    elif kind == 'cylinder':
        _require(args, 'w', 'f')
        patch = cylinder(curve, _vector(args.w, '--w'), _poly(args.f, '--f'))
    elif kind == 'cone':
        _require(args, 'vertex', 'f')
        patch = cone(curve, _vector(args.vertex, '--vertex'),
                     _poly(args.f, '--f'))
    elif kind == 'tangent':
        f = _poly(args.f, '--f') if args.f is not None else 1.
        patch = tangent_patch(curve, f)
    elif kind == 'from-edge':
        _require(args, 'b1', 'b2')
        patch = from_edge_of_regression(curve, args.b1, args.b2)
    elif kind == 'family4':
        _require(args, 'a', 'b', 'A')
        w = _vector(args.w, '--w') if args.w is not None else (0., 0., 0.)
        patch = family4(curve, args.a, args.b, args.A, w)

    _log(args, err, 'Constructed {} patch of degree {}'.format(
        kind, patch.degree))
    _emit(serialize(patch), args.output, out)

    return EXIT_OK

def cmd_op(args, out, err):

    patch = _read(args.input, PATCH)
    kind = args.kind

    if kind == 'elevate':
        _require(args, 'm')
        new = elevate_patch(patch, args.m)
    elif kind == 'restrict-u':
        _require(args, 'a', 'b')
        new = restrict_u(patch, args.a, args.b)
    elif kind == 'restrict-v':
        _require(args, 'a', 'b')
        new = restrict_v(patch, args.a, args.b)
    elif kind == 'scale-rulings':
        _require(args, 'h')
        new = scale_rulings(patch, _poly(args.h, '--h'))
    elif kind == 'reparam':
        _require(args, 'h')
        new = reparametrize(patch, _poly(args.h, '--h'))

    _log(args, err, 'Applied {}: degree {} -> {}'.format(
        kind, patch.degree, new.degree))
    _emit(serialize(new), args.output, out)

    return EXIT_OK

def cmd_check(args, out, err):

    patch = _read(args.input, PATCH)
    reports = [developability_residual(patch, nu=args.samples, tol=args.tol),
               penultimate_coplanarity(patch, nu=args.samples, tol=args.tol)]

    cert = patch.certificate
    if cert is not None and cert.is_rational:
        reports.append(blossom_residual(patch, nu=args.samples,
                                        tol=args.tol))

    for rep in reports:
        _log(args, err, repr(rep))

    _emit(serialize(reports), args.output, out)

    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAIL

def cmd_edge(args, out, err):

    patch = _read(args.input, PATCH)
    cert = _patch_certificate(patch, args)

    if cert.is_constant:
        _log(args, err, 'Constant certificate, writing edge curve')
        _emit(serialize(edge_curve(patch, cert)), args.output, out)
        return EXIT_OK

    us, pts = [], []
    for u in tools.open_grid(args.samples):
        try:
            pts.append(edge_evaluate(patch, cert, u))
        except PoleError:
            continue
        us.append(u)

    if not us:
        raise ValueError('patch has no edge of regression ({} '
                         'certificate)'.format(cert.kind))

    _log(args, err, 'Sampled edge of regression at {} points'.format(
        len(us)))
    _emit(serialize(Polyline(us, pts)), args.output, out)

    return EXIT_OK

def cmd_classify(args, out, err):

    patch = _read(args.input, PATCH)
    cls = classify(patch, tol=args.tol, samples=args.samples)
    print(str(cls), file=out)

    return EXIT_OK

def cmd_singular(args, out, err):

    patch = _read(args.input, PATCH)
    cert = _patch_certificate(patch, args)

    u_range = _floats(args.u_range, '--u-range', size=2)
    v_range = _floats(args.v_range, '--v-range', size=2)
    for lo, hi in singular_interval(cert, u_range=u_range, v_range=v_range):
        print('[{:.10g}, {:.10g}]'.format(lo, hi), file=out)

    return EXIT_OK

def cmd_mesh(args, out, err):

    patch = _read(args.input, PATCH)
    _log(args, err, 'Tessellating on a {} x {} grid'.format(args.nu, args.nv))
    _emit(export_obj(patch, args.nu, args.nv), args.output, out)

    return EXIT_OK

def cmd_plot(args, out, err):

    from . import plot_tools

    patch = _read(args.input, PATCH)
    filename = plot_tools.plot_patch(patch, args.output_dir, args.tag,
                                     nu=args.nu, nv=args.nv)
    print(filename, file=out)

    return EXIT_OK

def build_parser():

    parser = _Parser(prog='devsurf', description='Developable Bezier '
                     'patches: construct, transform, check and tessellate.')
    parser.add_argument('-v', '--verbose', action='count', default=0)

    common = _Parser(add_help=False)
    common.add_argument('--input', default='-',
                        help='Input JSON document, - for stdin (default: -)')
    common.add_argument('--tol', type=float, default=None,
                        help='Verdict tolerance (default: DEVSURF_TOL or 1e-9)')
    common.add_argument('--samples', type=int, default=tools.NSAMP,
                        help='Oracle samples (default: {})'.format(tools.NSAMP))

    subparsers = parser.add_subparsers(dest='command', parser_class=_Parser)

    # construct
    sub = subparsers.add_parser('construct', parents=[common],
                                help='Build a developable patch')
    sub.add_argument('kind', choices=['aumann', 'cylinder', 'cone', 'tangent',
                                      'from-edge', 'family4'])
    sub.add_argument('--output')
    sub.add_argument('--d0', help='Free point x,y,z (aumann)')
    sub.add_argument('--lambda', dest='lam', type=float)
    sub.add_argument('--m', type=float, help='Constant M (aumann)')
    sub.add_argument('--vertex', help='Cone vertex x,y,z')
    sub.add_argument('--f', help='Ascending coefficients of f')
    sub.add_argument('--w', help='Vector x,y,z (cylinder, family4)')
    sub.add_argument('--a', type=float)
    sub.add_argument('--b', type=float)
    sub.add_argument('--A', type=float)
    sub.add_argument('--b1', type=float)
    sub.add_argument('--b2', type=float)

    # op
    sub = subparsers.add_parser('op', parents=[common],
                                help='Transform a patch')
    sub.add_argument('kind', choices=['elevate', 'restrict-u', 'restrict-v',
                                      'scale-rulings', 'reparam'])
    sub.add_argument('--output')
    sub.add_argument('--m', type=int, help='Elevation steps')
    sub.add_argument('--a', type=float)
    sub.add_argument('--b', type=float)
    sub.add_argument('--h', help='Ascending coefficients of h')

    # check
    sub = subparsers.add_parser('check', parents=[common],
                                help='Run the developability oracles')
    sub.add_argument('--output')

    # edge
    sub = subparsers.add_parser('edge', parents=[common],
                                help='Edge of regression')
    sub.add_argument('--output')

    # classify
    subparsers.add_parser('classify', parents=[common],
                          help='Print planar, cylinder, cone or tangent')

    # singular
    sub = subparsers.add_parser('singular', parents=[common],
                                help='u-intervals where the edge of '
                                'regression crosses the patch')
    sub.add_argument('--u-range', default='0,1')
    sub.add_argument('--v-range', default='0,1')

    # mesh
    sub = subparsers.add_parser('mesh', parents=[common],
                                help='Wavefront OBJ tessellation')
    sub.add_argument('--nu', type=int, default=33)
    sub.add_argument('--nv', type=int, default=9)
    sub.add_argument('--output')

    # plot
    sub = subparsers.add_parser('plot', parents=[common],
                                help='Render the patch to <output-dir>/<tag>.png')
    sub.add_argument('--output-dir', default='.')
    sub.add_argument('--tag', default='patch')
    sub.add_argument('--nu', type=int, default=33)
    sub.add_argument('--nv', type=int, default=9)

    return parser

commands = {'construct' : cmd_construct,
            'op' : cmd_op,
            'check' : cmd_check,
            'edge' : cmd_edge,
            'classify' : cmd_classify,
            'singular' : cmd_singular,
            'mesh' : cmd_mesh,
            'plot' : cmd_plot}

def main(argv=None, stdout=None, stderr=None):
    '''
    Run the command line interface.

    Keyword arguments
    -----------------
    argv : list of str, None
        Arguments without the program name. (default : sys.argv[1:])
    stdout, stderr : file-like, None
        Output streams. (default : sys.stdout, sys.stderr)

    Returns
    -------
    status : int
        0 on success, 1 on usage or input errors, 2 on a failed check.
    '''

    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError('a command is required\n{}'.format(
                parser.format_usage().strip()))
        if args.tol is not None and not args.tol > 0:
            raise UsageError('--tol should be positive')

        return commands[args.command](args, out, err)

    except (ValueError, OSError) as e:
        print('devsurf: error: {}'.format(e), file=err)
        return EXIT_ERROR

if __name__ == '__main__':
    sys.exit(main())
