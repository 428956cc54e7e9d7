import numpy as np
import pandas as pd
from scipy import stats as ss

from .. import FEATURES
from ..app.errors import UndefinedValueError
from ..app.logger import get_logger
from ..app.tables import write_table, read_table
from ..normalize import vertex_asymmetry_table
from .curves import CurveSeries, bin_curve

REPORT_COLUMNS = ['structural_feature', 'language_feature', 'r', 'n']
CURVE_COLUMNS = ['structural_feature', 'language_feature', 'x', 'y', 'n']
VERTEX_FEATURES = ('degree', 'clustering')
EDGE_FEATURES = ('embeddedness',)


def pearson(xs, ys):
    """Sample Pearson r of two equally long samples."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError(f'length mismatch: {len(xs)} vs {len(ys)}')
    if len(xs) < 2:
        raise UndefinedValueError(f'correlation needs at least 2 samples, got {len(xs)}')
    if np.all(xs == xs[0]) or np.all(ys == ys[0]):
        raise UndefinedValueError('correlation undefined for a constant sample')
    r = ss.pearsonr(xs, ys)[0]
    return float(np.clip(r, -1.0, 1.0))


def _paired(structural, asymmetry):
    joined = pd.concat([structural.rename('s'), asymmetry.rename('l')], axis=1, join='inner')
    joined = joined[np.isfinite(joined['s']) & np.isfinite(joined['l'])]
    return joined['s'].to_numpy(), joined['l'].to_numpy()


def _samples(structure, nm):
    """(structural feature, language feature, xs, ys) for every report cell."""
    vertex_asym = vertex_asymmetry_table(nm)
    for sf in VERTEX_FEATURES:
        for lf in FEATURES:
            yield (sf, lf) + _paired(structure.vertices[sf], vertex_asym[lf])
    for sf in EDGE_FEATURES:
        for lf in FEATURES:
            yield (sf, lf) + _paired(structure.edges[sf], nm.asymmetry[lf])


class CorrelationReport():

    def __init__(self, table):
        self.table = table.reset_index(drop=True)

    def r(self, structural_feature, language_feature):
        row = self.table[(self.table['structural_feature'] == structural_feature) &
                         (self.table['language_feature'] == language_feature)]
        if row.empty:
            raise KeyError((structural_feature, language_feature))
        return float(row['r'].iloc[0])

    def n(self, structural_feature, language_feature):
        row = self.table[(self.table['structural_feature'] == structural_feature) &
                         (self.table['language_feature'] == language_feature)]
        return int(row['n'].iloc[0])

    def as_matrix(self):
        return self.table.pivot(index='structural_feature', columns='language_feature', values='r')

    def to_csv(self, path):
        return write_table(self.table[REPORT_COLUMNS], path)

    @classmethod
    def from_csv(cls, path):
        return cls(read_table(path, what='correlation report'))


def correlation_report(structure, nm):
    """Degree and clustering against vertex average asymmetry, embeddedness
    against edge asymmetry. r is NaN where pearson is undefined."""
    rows = []
    for sf, lf, xs, ys in _samples(structure, nm):
        try:
            r = pearson(xs, ys)
        except UndefinedValueError as e:
            get_logger().debug('Stats', f'{sf} x {lf}: {e}')
            r = np.nan
        rows.append({'structural_feature': sf, 'language_feature': lf, 'r': r, 'n': len(xs)})
    return CorrelationReport(pd.DataFrame(rows, columns=REPORT_COLUMNS))


def correlation_curves(structure, nm, bins=20):
    """Binned average asymmetry against every structural feature, as one long table."""
    frames = []
    for sf, lf, xs, ys in _samples(structure, nm):
        if len(xs) == 0:
            continue
        points = bin_curve(xs, ys, bins).points
        points.insert(0, 'language_feature', lf)
        points.insert(0, 'structural_feature', sf)
        frames.append(points)
    points = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=CURVE_COLUMNS)
    return CurveSeries(points[CURVE_COLUMNS], 'x', 'y', name='correlation')
