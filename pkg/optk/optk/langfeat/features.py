import math
import numpy as np
import pandas as pd
from multiprocessing import Pool
from tqdm import tqdm

from .. import FEATURES
from ..app.errors import UndefinedValueError
from ..app.logger import get_logger
from ..app.tables import write_table, read_table
from .lm import perplexity_score
from .sentiment import sentiment_score
from .text import tokenize

FEATURE_COLUMNS = ['from', 'to'] + list(FEATURES) + ['flags']


def frequency_score(pair_stats):
    """Messages per day, the span clamped to one day."""
    if pair_stats.count < 1:
        raise ValueError('frequency needs N >= 1')
    return pair_stats.count / max(pair_stats.span_days, 1.0)


def length_score(messages):
    """Average number of tokens per message."""
    if not messages:
        raise ValueError('length needs at least one message')
    return sum(len(tokenize(m.body)) for m in messages) / len(messages)


class FeatureMatrix():
    """Raw feature value per ordered pair; NaN marks an undefined cell.

    ``table`` is indexed by (from, to) and holds the four feature columns
    plus ';'-joined ``flags`` naming the undefined features.
    """

    def __init__(self, table):
        missing = [c for c in list(FEATURES) + ['flags'] if c not in table.columns]
        if missing:
            raise ValueError(f'feature table lacks columns {missing}')
        table = table.copy()
        table['flags'] = table['flags'].fillna('').astype(str)
        self.table = table.sort_index()

    @property
    def pairs(self):
        return list(self.table.index)

    def __len__(self):
        return len(self.table)

    def __contains__(self, pair):
        return pair in self.table.index

    def value(self, pair, feature):
        return float(self.table.loc[pair, feature])

    def column(self, feature):
        return self.table[feature]

    def outgoing(self, individual, feature):
        values = self.table.xs(individual, level='from')[feature]
        return values.dropna()

    def individuals(self):
        return sorted(set(self.table.index.get_level_values('from')) | set(self.table.index.get_level_values('to')))

    @classmethod
    def from_rows(cls, rows):
        table = pd.DataFrame(rows, columns=FEATURE_COLUMNS)
        for feature in FEATURES:
            table[feature] = table[feature].astype(float)
        return cls(table.set_index(['from', 'to']))

    def to_csv(self, path):
        return write_table(self.table.reset_index()[FEATURE_COLUMNS], path)

    @classmethod
    def from_csv(cls, path):
        table = read_table(path, what='features', dtype={'from': str, 'to': str, 'flags': str})
        missing = [c for c in FEATURE_COLUMNS if c not in table.columns]
        if missing:
            raise ValueError(f'{path} lacks columns {missing}')
        return cls.from_rows(table[FEATURE_COLUMNS].to_dict('records'))


def pair_features(pair, stats, messages, lm, lex):
    row = {'from': pair[0], 'to': pair[1],
           'frequency': frequency_score(stats),
           'length': length_score(messages),
           'quality': np.nan, 'sentiment': np.nan}
    flags = []
    try:
        row['quality'] = perplexity_score(lm, messages)
    except UndefinedValueError:
        flags.append('quality-undefined')
    try:
        row['sentiment'] = sentiment_score(lex, messages)
    except UndefinedValueError:
        flags.append('sentiment-undefined')
    row['flags'] = ';'.join(flags)
    return row


_worker_models = None


def _init_worker(lm, lex):
    global _worker_models
    _worker_models = (lm, lex)


def _pair_job(job):
    pair, stats, messages = job
    return pair_features(pair, stats, messages, *_worker_models)


def build_feature_matrix(corpus, pair_index, lm, lex, num_workers=1):
    """Frequency, length, quality and sentiment for every ordered pair of ``pair_index``."""
    by_id = {m.id: m for m in corpus}
    jobs = []
    for pair, stats in pair_index.items():
        missing = [i for i in stats.message_ids if i not in by_id]
        if missing:
            raise ValueError(f'pair {pair} references messages missing from the corpus: {missing[:3]}')
        jobs.append((pair, stats, [by_id[i] for i in stats.message_ids]))

    if num_workers > 1:
        with Pool(num_workers, initializer=_init_worker, initargs=(lm, lex)) as pool:
            rows = list(tqdm(pool.imap(_pair_job, jobs, chunksize=max(1, math.ceil(len(jobs) / (4 * num_workers)))),
                             total=len(jobs), desc='[LangFeat] pairs', disable=None))
    else:
        rows = [pair_features(pair, stats, msgs, lm, lex)
                for pair, stats, msgs in tqdm(jobs, desc='[LangFeat] pairs', disable=None)]

    fm = FeatureMatrix.from_rows(rows)
    n_flagged = int((fm.table['flags'] != '').sum())
    if n_flagged:
        get_logger().warning('LangFeat', f'{n_flagged} of {len(fm)} pairs have an undefined feature')
    return fm
