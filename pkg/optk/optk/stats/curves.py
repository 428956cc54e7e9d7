from dataclasses import dataclass
import numpy as np
import pandas as pd

from ..app.tables import write_table, read_table


@dataclass
class CurveSeries:
    """Ordered (x, y) points plus any per-point extra columns."""
    points: pd.DataFrame
    x_label: str = 'x'
    y_label: str = 'y'
    name: str = ''

    def __len__(self):
        return len(self.points)

    @property
    def empty(self):
        return self.points.empty

    @property
    def x(self):
        return self.points[self.x_label].to_numpy(dtype=float)

    @property
    def y(self):
        return self.points[self.y_label].to_numpy(dtype=float)

    def to_csv(self, path):
        return write_table(self.points, path)

    @classmethod
    def from_csv(cls, path, x_label='x', y_label='y', name=''):
        points = read_table(path, what='curve')
        for col in (x_label, y_label):
            if col not in points.columns:
                raise ValueError(f'{path} lacks column {col}')
        return cls(points, x_label, y_label, name)


def bin_curve(xs, ys, bins=20):
    """Equal-width bins over [min x, max x]; x is the bin midpoint, y the bin mean.

    Pairs with an undefined member are dropped, empty bins omitted.
    """
    if bins < 1:
        raise ValueError('bins must be >= 1')
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError(f'length mismatch: {len(xs)} x values, {len(ys)} y values')
    keep = np.isfinite(xs) & np.isfinite(ys)
    xs, ys = xs[keep], ys[keep]
    if len(xs) == 0:
        raise ValueError('cannot bin an empty sample')

    lo, hi = xs.min(), xs.max()
    if lo == hi:
        points = pd.DataFrame({'x': [lo], 'y': [ys.mean()], 'n': [len(ys)]})
        return CurveSeries(points)

    edges = np.linspace(lo, hi, bins + 1)
    idx = np.digitize(xs, edges[1:-1])
    grouped = pd.DataFrame({'bin': idx, 'y': ys}).groupby('bin')['y'].agg(['mean', 'count'])
    mids = (edges[:-1] + edges[1:]) / 2
    points = pd.DataFrame({'x': mids[grouped.index.to_numpy()],
                           'y': grouped['mean'].to_numpy(),
                           'n': grouped['count'].to_numpy()})
    return CurveSeries(points.reset_index(drop=True))
