'''
Tessellation of patches into quad meshes and Wavefront OBJ export.
'''

import numpy as np

def tessellate(patch, nu, nv):
    '''
    Sample the patch on a closed (nu x nv) grid.

    Arguments
    ---------
    patch : DevelopablePatch
    nu, nv : int
        Samples along u and v, both >= 2.

    Returns
    -------
    vertices : array-like
        Shape (nu * nv, 3). Vertex (i, j) at u = i / (nu - 1),
        v = j / (nv - 1) is row j * nu + i.
    faces : array-like
        Shape ((nu - 1) * (nv - 1), 4), 1-based vertex indices
        of each quad.
    '''

    nu = int(nu)
    nv = int(nv)
    if nu < 2 or nv < 2:
        raise ValueError('nu and nv should be >= 2, got {}, {}'.format(
            nu, nv))

    u = np.linspace(0., 1., nu)
    v = np.linspace(0., 1., nv)
    vv, uu = np.meshgrid(v, u, indexing='ij')

    # + 0. turns -0. into 0.
    vertices = patch(uu.ravel(), vv.ravel()) + 0.

    jj, ii = np.meshgrid(np.arange(nv - 1), np.arange(nu - 1), indexing='ij')
    first = (jj * nu + ii + 1).ravel()
    faces = np.stack([first, first + 1, first + 1 + nu, first + nu], axis=1)

    return vertices, faces

def export_obj(patch, nu, nv):
    '''
    Wavefront OBJ text of the tessellated patch: nu * nv "v x y z"
    lines with 9 significant digits, then the quad "f" lines.
    '''

    vertices, faces = tessellate(patch, nu, nv)

    lines = ['v {:.9g} {:.9g} {:.9g}'.format(*pt) for pt in vertices]
    lines += ['f {} {} {} {}'.format(*face) for face in faces]

    return '\n'.join(lines) + '\n'
