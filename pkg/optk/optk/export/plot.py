import os
import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
from colour import Color

from .. import FEATURES

red = Color('red')
blue = Color('blue')
feature_colours = dict(zip(FEATURES, [c.hex_l for c in red.range_to(blue, len(FEATURES))]))


def plot_balance_curve(curve, path, title=None):
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot(curve.x, curve.y, 'o-', color=feature_colours.get(curve.name.split('_')[-1], 'black'),
            label='observed')
    if 'baseline' in curve.points.columns:
        ax.plot(curve.x, curve.points['baseline'].to_numpy(dtype=float), '--', color='gray', label='random')
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.02)
    ax.set_xlabel('proportion of positive')
    ax.set_ylabel('proportion of balanced')
    ax.set_title(title or curve.name)
    ax.legend(loc='best')
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_correlation_curves(curve, out_dir, prefix='correlation'):
    """One figure per structural feature, one line per language feature."""
    paths = []
    points = curve.points
    for sf in sorted(points['structural_feature'].unique()):
        fig, ax = plt.subplots(figsize=(5, 4))
        for lf in FEATURES:
            sel = points[(points['structural_feature'] == sf) & (points['language_feature'] == lf)]
            if sel.empty:
                continue
            ax.plot(sel['x'].to_numpy(dtype=float), sel['y'].to_numpy(dtype=float), 'o-',
                    color=feature_colours[lf], label=lf)
        ax.set_xlabel(sf)
        ax.set_ylabel('average asymmetry degree')
        ax.legend(loc='best')
        fig.tight_layout()
        path = os.path.join(out_dir, f'{prefix}_{sf}.png')
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths


def plot_curves(curves, out_dir):
    """PNG per balance curve and per structural feature of a correlation curve set."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for curve in curves:
        if curve.empty:
            continue
        if 'structural_feature' in curve.points.columns:
            paths += plot_correlation_curves(curve, out_dir, prefix=curve.name or 'correlation')
        else:
            paths.append(plot_balance_curve(curve, os.path.join(out_dir, f'{curve.name or "balance"}.png')))
    return paths
