import os
import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
from warnings import catch_warnings, filterwarnings
import numpy as np

from . import tools
from .developable import edge_parameter
from .polynomial import PoleError

def sample_edge(patch, cert=None, nsamp=101, v_window=(-0.5, 1.5)):
    '''
    Sample the edge of regression where it lies inside a ruling window.

    Arguments
    ---------
    patch : DevelopablePatch

    Keyword arguments
    -----------------
    cert : Certificate, None
        If None, use the certificate of the patch. (default : None)
    nsamp : int
        Number of open-grid samples. (default : 101)
    v_window : tuple
        Edge points with v outside this window are dropped.
        (default : (-0.5, 1.5))

    Returns
    -------
    u : array-like
    points : array-like
        Shape (u.size, 3).
    '''

    cert = patch.certificate if cert is None else cert
    if cert is None:
        return np.zeros(0), np.zeros((0, 3))

    us, vs = [], []
    for x in tools.open_grid(nsamp):
        try:
            v = float(edge_parameter(cert, x))
        except (PoleError, ValueError):
            continue
        if v_window[0] <= v <= v_window[1]:
            us.append(x)
            vs.append(v)

    if not us:
        return np.zeros(0), np.zeros((0, 3))

    us = np.array(us)
    return us, patch(us, np.array(vs))

def plot_patch(patch, write_dir, tag, nu=33, nv=9, show_nets=True,
               show_edge=True, v_window=(-0.5, 1.5), tight=False, dpi=150,
               transparent=False, **kwargs):
    '''
    Plot a sampled patch, optionally with its control nets and edge
    of regression, and write to disk.

    Arguments
    ---------
    patch : DevelopablePatch
    write_dir : str
        Path to directory where the plot is saved
    tag : str
        Filename = <tag>.png

    Keyword arguments
    -----------------
    nu, nv : int
        Sample grid. (default : 33, 9)
    show_nets : bool
        Draw the control polygons of c and d. (default : True)
    show_edge : bool
        Draw the edge of regression inside v_window. (default : True)
    v_window : tuple
        (default : (-0.5, 1.5))
    tight : bool
        call savefig with bbox_inches = 'tight'
    kwargs : <plot_surface opts>

    Returns
    -------
    filename : str
    '''

    bbox_inches = 'tight' if tight else None
    filename = os.path.join(write_dir, tag) + '.png'

    u = np.linspace(0., 1., nu)
    v = np.linspace(0., 1., nv)
    uu, vv = np.meshgrid(u, v, indexing='ij')
    pts = patch(uu, vv)

    kwargs.setdefault('alpha', 0.6)
    kwargs.setdefault('color', 'C0')

    fig = plt.figure()
    ax = fig.add_subplot(111, projection='3d')
    with catch_warnings():
        filterwarnings('ignore', category=RuntimeWarning)

        ax.plot_surface(pts[..., 0], pts[..., 1], pts[..., 2], **kwargs)

        if show_nets:
            for curve, color in ((patch.c, 'C1'), (patch.d, 'C2')):
                cp = curve.points
                ax.plot(cp[:, 0], cp[:, 1], cp[:, 2], 'o--', color=color,
                        lw=0.8, ms=3)

        if show_edge:
            _, edge = sample_edge(patch, v_window=v_window)
            if edge.size:
                ax.plot(edge[:, 0], edge[:, 1], edge[:, 2], color='C3',
                        lw=1.5)

        ax.set_xlabel('x')
        ax.set_ylabel('y')
        ax.set_zlabel('z')

        plt.savefig(filename, bbox_inches=bbox_inches, dpi=dpi,
                    transparent=transparent)
    plt.close(fig)

    return filename
