import os
import sys
from datetime import datetime, timedelta, timezone

import networkx as nx
import numpy as np
import pandas as pd
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
for path in (ROOT, os.path.join(ROOT, 'optk')):
    if path not in sys.path:
        sys.path.insert(0, path)

from optk import FEATURES
from optk.corpus import Message, make_synthetic_corpus, write_jsonl
from optk.langfeat import FeatureMatrix
from optk.normalize import NormalizedMatrix

FIXTURES = os.path.join(ROOT, 'tests', 'fixtures')
T0 = datetime(2001, 5, 1, 9, 0, 0, tzinfo=timezone.utc)


def pytest_addoption(parser):
    parser.addoption('--update-golden', action='store_true', default=False,
                     help='rewrite tests/fixtures/golden from the current run of the synthetic corpus')


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def golden_dir():
    return os.path.join(FIXTURES, 'golden')


@pytest.fixture
def lexicon_path():
    return os.path.join(FIXTURES, 'demo_lexicon.tsv')


@pytest.fixture
def synthetic_config():
    return os.path.join(FIXTURES, 'synthetic.cfg')


@pytest.fixture
def synthetic_corpus_path(tmp_path):
    return write_jsonl(make_synthetic_corpus(), str(tmp_path / 'synthetic.jsonl'))


@pytest.fixture
def make_message():
    def make(msg_id, sender, recipients, days=0, body=''):
        return Message(msg_id, sender, tuple(recipients), T0 + timedelta(days=days), body)
    return make


@pytest.fixture
def make_feature_matrix():
    """Feature matrix from {(from, to): value} for one feature; the other features copy it."""
    def make(values, feature=None):
        rows = []
        for (src, dst), v in sorted(values.items()):
            row = {'from': src, 'to': dst, 'flags': ''}
            for f in FEATURES:
                row[f] = v if feature in (None, f) else 1.0
            rows.append(row)
        return FeatureMatrix.from_rows(rows)
    return make


@pytest.fixture
def random_graphs():
    """50 seeded G(n, p) graphs with n <= 30."""
    rng = np.random.default_rng(2024)
    graphs = []
    for seed in range(50):
        n = int(rng.integers(3, 31))
        p = float(rng.uniform(0.1, 0.6))
        graphs.append(nx.gnp_random_graph(n, p, seed=seed))
    return graphs


@pytest.fixture
def make_normalized():
    """NormalizedMatrix straight from {(from, to): f'}; every feature gets the same values."""
    def make(values):
        index = pd.MultiIndex.from_tuples(sorted(values), names=['from', 'to'])
        data = {f: [values[p] for p in sorted(values)] for f in FEATURES}
        normalized = pd.DataFrame(data, index=index, dtype=float)
        individuals = sorted({p[0] for p in values})
        habits = pd.DataFrame(1.0, index=pd.Index(individuals, name='individual'), columns=list(FEATURES))
        return NormalizedMatrix(normalized.copy(), habits, normalized)
    return make
