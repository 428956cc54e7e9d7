import os

import numpy as np
import pandas as pd
import pytest

from optk import FEATURES
from optk.app import GraphError, UndefinedValueError
from optk.langfeat import FeatureMatrix
from optk.normalize import (EPS, NormalizedMatrix, habit, habit_table, normalize_feature, edge_asymmetry,
                            vertex_avg_asymmetry, vertex_asymmetry_table, edges_path)


def test_habit_is_mean_of_outgoing(make_feature_matrix):
    fm = make_feature_matrix({('a', 'b'): 2.0, ('a', 'c'): 4.0, ('b', 'a'): 5.0,
                              ('c', 'a'): -1.0, ('c', 'b'): 0.0, ('c', 'd'): 1.0})
    assert habit(fm, 'a', 'length') == 3.0
    assert habit(fm, 'b', 'length') == 5.0
    assert habit(fm, 'c', 'sentiment') == 0.0
    assert habit_table(fm).loc['a', 'frequency'] == 3.0


def test_habit_undefined(make_feature_matrix):
    fm = make_feature_matrix({('a', 'b'): np.nan, ('b', 'a'): 1.0}, feature='quality')
    with pytest.raises(UndefinedValueError):
        habit(fm, 'a', 'quality')
    with pytest.raises(UndefinedValueError):
        habit(fm, 'z', 'quality')
    assert habit(fm, 'a', 'length') == 1.0


@pytest.mark.parametrize('values,expected', [
    ((6.0, 0.0), (1.0, -1.0)),
    ((3.0, 3.0), (0.0, 0.0)),
    ((1.0, -5.0), (1.5, -1.5)),
])
def test_normalize_examples(make_feature_matrix, values, expected):
    fm = make_feature_matrix({('a', 'b'): values[0], ('a', 'c'): values[1], ('b', 'a'): 1.0, ('c', 'a'): 1.0})
    nm = normalize_feature(fm)
    for feature in FEATURES:
        assert nm.value(('a', 'b'), feature) == pytest.approx(expected[0])
        assert nm.value(('a', 'c'), feature) == pytest.approx(expected[1])


def test_zero_habit_uses_eps(make_feature_matrix):
    fm = make_feature_matrix({('a', 'b'): -1.0, ('a', 'c'): 1.0, ('b', 'a'): 1.0, ('c', 'a'): 1.0})
    nm = normalize_feature(fm)
    assert nm.value(('a', 'c'), 'sentiment') == pytest.approx(1.0 / EPS)
    assert nm.value(('a', 'b'), 'sentiment') == pytest.approx(-1.0 / EPS)


def test_undefined_raw_stays_undefined():
    rows = [{'from': 'a', 'to': 'b', 'frequency': 1.0, 'length': 2.0, 'quality': np.nan, 'sentiment': np.nan,
             'flags': 'quality-undefined;sentiment-undefined'},
            {'from': 'a', 'to': 'c', 'frequency': 3.0, 'length': 4.0, 'quality': 8.0, 'sentiment': 1.0, 'flags': ''},
            {'from': 'b', 'to': 'a', 'frequency': 1.0, 'length': 1.0, 'quality': 2.0, 'sentiment': 0.5, 'flags': ''},
            {'from': 'c', 'to': 'a', 'frequency': 1.0, 'length': 1.0, 'quality': 2.0, 'sentiment': 0.5, 'flags': ''}]
    nm = normalize_feature(FeatureMatrix.from_rows(rows))
    assert np.isnan(nm.value(('a', 'b'), 'quality'))
    assert nm.value(('a', 'c'), 'quality') == 0.0
    assert nm.habits.loc['a', 'quality'] == 8.0
    assert np.isnan(nm.asymmetry.loc[('a', 'b'), 'quality'])
    with pytest.raises(UndefinedValueError):
        edge_asymmetry(nm, ('a', 'b'), 'quality')
    assert edge_asymmetry(nm, ('a', 'b'), 'length') == pytest.approx(abs((2 - 3) / 3 - 0.0))


def test_scaling_outgoing_values_keeps_normalized(make_feature_matrix):
    base = {('a', 'b'): 2.0, ('a', 'c'): 5.0, ('a', 'd'): 11.0, ('b', 'a'): 3.0, ('c', 'a'): 4.0, ('d', 'a'): 1.0}
    scaled = {p: v * 7.5 if p[0] == 'a' else v for p, v in base.items()}
    nm, nm_scaled = normalize_feature(make_feature_matrix(base)), normalize_feature(make_feature_matrix(scaled))
    pd.testing.assert_frame_equal(nm.normalized, nm_scaled.normalized, check_exact=False, rtol=1e-12)


def test_shifting_outgoing_values_follows_the_formula(make_feature_matrix):
    base = {('a', 'b'): 2.0, ('a', 'c'): 6.0, ('b', 'a'): 3.0, ('c', 'a'): 4.0}
    shifted = {p: v + 2.0 if p[0] == 'a' else v for p, v in base.items()}
    nm = normalize_feature(make_feature_matrix(shifted))
    assert nm.value(('a', 'b'), 'length') == pytest.approx((4.0 - 6.0) / 6.0)
    assert nm.value(('a', 'c'), 'length') == pytest.approx((8.0 - 6.0) / 6.0)


@pytest.mark.parametrize('pair_values,expected', [((0.4, 0.1), 0.3), ((0.25, 0.25), 0.0), ((-0.2, 0.2), 0.4)])
def test_edge_asymmetry_examples(make_normalized, pair_values, expected):
    nm = make_normalized({('a', 'b'): pair_values[0], ('b', 'a'): pair_values[1]})
    assert edge_asymmetry(nm, ('a', 'b'), 'length') == pytest.approx(expected)
    assert edge_asymmetry(nm, ('b', 'a'), 'length') == pytest.approx(expected)
    assert nm.asymmetry.loc[('a', 'b'), 'length'] == pytest.approx(expected)


def test_vertex_average_examples(make_normalized):
    nm = make_normalized({('a', 'b'): 0.2, ('b', 'a'): 0.0, ('a', 'c'): 0.4, ('c', 'a'): 0.0,
                          ('c', 'd'): 0.5, ('d', 'c'): 0.5, ('d', 'e'): 0.7, ('e', 'd'): 0.0})
    assert vertex_avg_asymmetry(nm, 'a', 'quality') == pytest.approx(0.3)
    assert vertex_avg_asymmetry(nm, 'e', 'quality') == pytest.approx(0.7)
    assert vertex_avg_asymmetry(nm, 'd', 'quality') == pytest.approx(0.35)
    with pytest.raises(UndefinedValueError):
        vertex_avg_asymmetry(nm, 'z', 'quality')


def test_vertex_table_matches_incident_means():
    rng = np.random.default_rng(7)
    people = ['v1', 'v2', 'v3', 'v4', 'v5']
    edges = [('v1', 'v2'), ('v1', 'v3'), ('v2', 'v3'), ('v3', 'v4'), ('v4', 'v5'), ('v1', 'v5')]
    rows = []
    for a, b in edges:
        for src, dst in ((a, b), (b, a)):
            row = {'from': src, 'to': dst, 'flags': ''}
            row.update({f: float(rng.uniform(0.5, 20.0)) for f in FEATURES})
            rows.append(row)
    nm = normalize_feature(FeatureMatrix.from_rows(rows))
    table = vertex_asymmetry_table(nm)
    for person in people:
        incident = [tuple(sorted(e)) for e in edges if person in e]
        for feature in FEATURES:
            expected = np.mean([edge_asymmetry(nm, e, feature) for e in incident])
            assert table.loc[person, feature] == pytest.approx(expected, abs=1e-12)
            assert vertex_avg_asymmetry(nm, person, feature) == pytest.approx(expected, abs=1e-12)
    assert (nm.asymmetry.to_numpy() >= 0).all()


def test_homogeneous_network_has_zero_asymmetry(make_feature_matrix):
    values = {}
    for i, person in enumerate(['a', 'b', 'c', 'd']):
        for other in ['a', 'b', 'c', 'd']:
            if other != person:
                values[(person, other)] = float(i + 1)
    nm = normalize_feature(make_feature_matrix(values))
    assert (nm.normalized.to_numpy() == 0.0).all()
    assert (vertex_asymmetry_table(nm).to_numpy() == 0.0).all()


def test_merged_sums_both_directions(make_normalized):
    nm = make_normalized({('a', 'b'): 0.5, ('b', 'a'): -1.5, ('a', 'c'): np.nan, ('c', 'a'): 1.0})
    merged = nm.merged('length')
    assert merged.loc[('a', 'b')] == pytest.approx(-1.0)
    assert np.isnan(merged.loc[('a', 'c')])
    assert nm.unordered_pairs() == [('a', 'b'), ('a', 'c')]


def test_missing_pair_is_graph_error(make_normalized):
    nm = make_normalized({('a', 'b'): 0.5, ('b', 'a'): 0.5})
    with pytest.raises(GraphError):
        nm.value(('a', 'c'), 'length')
    with pytest.raises(GraphError):
        edge_asymmetry(nm, ('a', 'c'), 'length')


def test_normalized_csv_round_trip(tmp_path):
    rows = [{'from': 'a', 'to': 'b', 'frequency': 1.0, 'length': 2.0, 'quality': np.nan, 'sentiment': -0.5,
             'flags': 'quality-undefined'},
            {'from': 'b', 'to': 'a', 'frequency': 2.5, 'length': 7.0, 'quality': 30.0, 'sentiment': 0.25, 'flags': ''},
            {'from': 'b', 'to': 'c', 'frequency': 0.1, 'length': 3.0, 'quality': 12.0, 'sentiment': 0.0, 'flags': ''},
            {'from': 'c', 'to': 'b', 'frequency': 0.2, 'length': 1.0, 'quality': 9.0, 'sentiment': 1.0, 'flags': ''}]
    nm = normalize_feature(FeatureMatrix.from_rows(rows))
    path = nm.to_csv(str(tmp_path / 'normalized.csv'))
    assert os.path.isfile(edges_path(path))
    assert edges_path(path) == str(tmp_path / 'normalized_edges.csv')

    back = NormalizedMatrix.from_csv(path)
    for name in ('raw', 'normalized', 'habits', 'asymmetry'):
        pd.testing.assert_frame_equal(getattr(back, name), getattr(nm, name), check_exact=False, rtol=1e-10)
