import os
import numpy as np
import pandas as pd

from .. import FEATURES
from ..app.errors import UndefinedValueError, GraphError
from ..app.tables import write_table, read_table, sibling_path

__all__ = ['EPS', 'NormalizedMatrix', 'habit', 'habit_table', 'normalize_feature', 'edge_asymmetry',
           'vertex_avg_asymmetry', 'vertex_asymmetry_table', 'pair_multiindex', 'edges_path']

EPS = 1e-6
LONG_COLUMNS = ['from', 'to', 'feature', 'raw', 'habit', 'normalized']


def pair_multiindex(pairs, names):
    pairs = list(pairs)
    return pd.MultiIndex.from_arrays([[p[0] for p in pairs], [p[1] for p in pairs]], names=names)


def edges_path(path):
    return sibling_path(path, '_edges', None if os.path.splitext(path)[1] else '.csv')


class NormalizedMatrix():
    """Habit-normalized features and the asymmetry degrees derived from them.

    raw / normalized: indexed by ordered pair (from, to)
    habits:           indexed by individual
    asymmetry:        indexed by unordered pair (a, b), a < b
    Every frame has one column per feature; NaN is undefined.
    """

    def __init__(self, raw, habits, normalized, eps=EPS):
        self.raw = raw.sort_index()
        self.habits = habits.sort_index()
        self.normalized = normalized.sort_index()
        self.eps = eps
        self.asymmetry = self._edge_asymmetry_table()

    def _edge_asymmetry_table(self):
        pairs = sorted({tuple(sorted(p)) for p in self.normalized.index})
        fwd = self.normalized.reindex(pair_multiindex(pairs, ['from', 'to']))
        bwd = self.normalized.reindex(pair_multiindex([(b, a) for a, b in pairs], ['from', 'to']))
        asym = np.abs(fwd.to_numpy(dtype=float) - bwd.to_numpy(dtype=float))
        return pd.DataFrame(asym, index=pair_multiindex(pairs, ['a', 'b']), columns=list(FEATURES))

    @property
    def pairs(self):
        return list(self.normalized.index)

    def unordered_pairs(self):
        return list(self.asymmetry.index)

    def individuals(self):
        return sorted({v for pair in self.normalized.index for v in pair})

    def value(self, pair, feature):
        if pair not in self.normalized.index:
            raise GraphError(f'no interrelationship {pair[0]} -> {pair[1]}')
        return float(self.normalized.loc[pair, feature])

    def merged(self, feature):
        """f'(a, b) + f'(b, a) per unordered pair, NaN when a direction is undefined."""
        pairs = self.unordered_pairs()
        fwd = self.normalized[feature].reindex(pair_multiindex(pairs, ['from', 'to'])).to_numpy()
        bwd = self.normalized[feature].reindex(pair_multiindex([(b, a) for a, b in pairs], ['from', 'to'])).to_numpy()
        return pd.Series(fwd + bwd, index=self.asymmetry.index, name=feature)

    def to_long(self):
        rows = []
        for (src, dst) in self.normalized.index:
            for feature in FEATURES:
                rows.append({'from': src, 'to': dst, 'feature': feature,
                             'raw': self.raw.loc[(src, dst), feature],
                             'habit': self.habits.loc[src, feature] if src in self.habits.index else np.nan,
                             'normalized': self.normalized.loc[(src, dst), feature]})
        return pd.DataFrame(rows, columns=LONG_COLUMNS)

    def to_csv(self, path):
        write_table(self.to_long(), path)
        write_table(self.asymmetry.reset_index()[['a', 'b'] + list(FEATURES)], edges_path(path))
        return path

    @classmethod
    def from_csv(cls, path):
        long = read_table(path, what='normalized features', dtype={'from': str, 'to': str, 'feature': str})
        missing = [c for c in LONG_COLUMNS if c not in long.columns]
        if missing:
            raise ValueError(f'{path} lacks columns {missing}')
        unknown = sorted(set(long['feature']) - set(FEATURES))
        if unknown:
            raise ValueError(f'{path} has unknown features {unknown}')
        raw = long.pivot(index=['from', 'to'], columns='feature', values='raw').reindex(columns=list(FEATURES))
        normalized = long.pivot(index=['from', 'to'], columns='feature', values='normalized').reindex(columns=list(FEATURES))
        habits = (long.drop_duplicates(['from', 'feature'])
                      .pivot(index='from', columns='feature', values='habit')
                      .reindex(columns=list(FEATURES)))
        habits.index.name = 'individual'
        raw.columns.name = normalized.columns.name = habits.columns.name = None
        return cls(raw.astype(float), habits.astype(float), normalized.astype(float))


def habit_table(fm):
    habits = fm.table[list(FEATURES)].groupby(level='from').mean()
    habits.index.name = 'individual'
    return habits


def habit(fm, individual, feature):
    """Mean of the defined outgoing values f(I, Ii) of one individual."""
    if individual not in fm.table.index.get_level_values('from'):
        raise UndefinedValueError(f'habit-undefined: {individual} sends to nobody')
    values = fm.outgoing(individual, feature)
    if values.empty:
        raise UndefinedValueError(f'habit-undefined: {individual} has no defined {feature} value')
    return float(values.mean())


def normalize_feature(fm, eps=EPS):
    """f'(I, Ii) = (f(I, Ii) - H_f(I)) / max(|H_f(I)|, eps)."""
    raw = fm.table[list(FEATURES)].astype(float)
    habits = habit_table(fm)
    aligned = habits.reindex(raw.index.get_level_values('from'))
    aligned.index = raw.index
    normalized = (raw - aligned) / aligned.abs().clip(lower=eps)
    return NormalizedMatrix(raw, habits, normalized, eps=eps)


def edge_asymmetry(nm, pair, feature):
    """|f'(a, b) - f'(b, a)|."""
    a, b = pair
    forward = nm.value((a, b), feature)
    backward = nm.value((b, a), feature)
    if np.isnan(forward) or np.isnan(backward):
        raise UndefinedValueError(f'asymmetry-undefined: {feature} of {a} <-> {b}')
    return abs(forward - backward)


def vertex_asymmetry_table(nm):
    """Average edge asymmetry per individual and feature over its defined pairs."""
    edges = nm.asymmetry.reset_index()
    per_end = pd.concat([edges.drop(columns='b').rename(columns={'a': 'individual'}),
                         edges.drop(columns='a').rename(columns={'b': 'individual'})],
                        ignore_index=True)
    table = per_end.groupby('individual')[list(FEATURES)].mean()
    return table.reindex(nm.individuals())


def vertex_avg_asymmetry(nm, individual, feature):
    asym = nm.asymmetry[feature]
    incident = asym[(asym.index.get_level_values('a') == individual) |
                    (asym.index.get_level_values('b') == individual)].dropna()
    if incident.empty:
        raise UndefinedValueError(f'no defined {feature} asymmetry around {individual}')
    return float(incident.mean())
