import os
import re

import networkx as nx
import numpy as np
import pandas as pd
import pytest

from optk.balance import annotate_triads
from optk.graph import TriadRecord, build_graph_from_pairs, enumerate_triangles
from optk.stats import CurveSeries
from optk.export import ExportStyle, export_dot, write_dot, balanced_triads, attribute_list, plot_curves

HIGHLIGHT = '#ff0000'
BASE = '#808080'


def edge_lines(text):
    return [line for line in text.splitlines() if '->' in line]


def edge_attr(line, name):
    match = re.search(r'%s = "([^"]*)"' % name, line)
    return match.group(1) if match else None


def test_attribute_list():
    assert attribute_list({'label': 'a "b"', 'width': 1}) == '[ label = "a \\"b\\"", width = "1" ]'


def test_two_node_graph(make_normalized):
    nm = make_normalized({('a', 'b'): 1.0, ('b', 'a'): 3.0})
    text = export_dot(build_graph_from_pairs([('a', 'b')]), nm, [], ExportStyle())
    lines = edge_lines(text)
    assert len(lines) == 2
    assert lines[0].startswith('  "a" -> "b"') and lines[1].startswith('  "b" -> "a"')
    assert edge_attr(lines[0], 'penwidth') == '0.5000'
    assert edge_attr(lines[1], 'penwidth') == '6.0000'
    assert all(edge_attr(line, 'color') == BASE for line in lines)
    assert text.startswith('digraph "interaction" {\n') and text.endswith('}\n')


def test_balanced_triangle_is_highlighted(make_normalized):
    values = {(x, y): 1.0 for x in 'abcd' for y in 'abcd' if x != y and 'd' not in (x, y)}
    values.update({('c', 'd'): 0.5, ('d', 'c'): 2.0})
    nm = make_normalized(values)
    g = build_graph_from_pairs(list(values))
    triads = annotate_triads(enumerate_triangles(g), nm, 'length', 0.0, 0.5)
    balanced = balanced_triads(triads, 'length', 'traditional')
    assert [t.vertices for t in balanced] == [('a', 'b', 'c')]

    text = export_dot(g, nm, balanced, ExportStyle(feature='length'))
    colours = {tuple(re.findall(r'"(\w)"', line)[:2]): edge_attr(line, 'color') for line in edge_lines(text)}
    assert len(colours) == 8
    for pair, colour in colours.items():
        assert colour == (BASE if 'd' in pair else HIGHLIGHT)


def test_export_is_deterministic(make_normalized):
    rng = np.random.default_rng(1)
    people = ['n%d' % i for i in range(6)]
    values = {(x, y): float(rng.normal()) for x in people for y in people if x != y}
    nm = make_normalized(values)
    g = build_graph_from_pairs(list(values))
    triads = annotate_triads(enumerate_triangles(g), nm, 'quality', 0.0, 0.5)
    style = ExportStyle(feature='quality')
    first = export_dot(g, nm, balanced_triads(triads, 'quality', 'extended'), style)
    again = export_dot(g, nm, balanced_triads(triads, 'quality', 'extended'), style)
    assert first == again

    widths = [(float(edge_attr(line, 'fprime')), float(edge_attr(line, 'penwidth'))) for line in edge_lines(first)]
    widths.sort()
    assert all(w1 <= w2 for (_, w1), (_, w2) in zip(widths, widths[1:]))
    assert min(w for _, w in widths) == 0.5 and max(w for _, w in widths) == 6.0


def test_undefined_value_is_nodata(make_normalized):
    nm = make_normalized({('a', 'b'): np.nan, ('b', 'a'): 2.0, ('b', 'c'): 0.0, ('c', 'b'): 1.0})
    text = export_dot(build_graph_from_pairs([('a', 'b'), ('b', 'c')]), nm, [], ExportStyle())
    line = [l for l in edge_lines(text) if l.startswith('  "a" -> "b"')][0]
    assert edge_attr(line, 'nodata') == 'true'
    assert edge_attr(line, 'penwidth') == '0.5000'
    assert edge_attr(line, 'fprime') is None


def test_node_width_follows_degree(make_normalized):
    nm = make_normalized({('a', 'b'): 1.0, ('b', 'a'): 1.0, ('a', 'c'): 1.0, ('c', 'a'): 1.0})
    text = export_dot(build_graph_from_pairs([('a', 'b'), ('a', 'c')]), nm, [], ExportStyle(node_scale=0.2))
    assert '"a" [ label = "a", width = "0.4000", degree = "2" ];' in text
    assert '"b" [ label = "b", width = "0.2000", degree = "1" ];' in text


def test_dot_reader_recovers_vertices_and_edges(make_normalized, tmp_path):
    values = {('ann', 'bob'): 0.2, ('bob', 'ann'): -0.4, ('bob', 'cat'): 1.0, ('cat', 'bob'): 0.0,
              ('ann', 'cat'): 0.3, ('cat', 'ann'): 0.1, ('cat', 'dan'): np.nan, ('dan', 'cat'): 0.6}
    nm = make_normalized(values)
    g = build_graph_from_pairs(list(values))
    path = write_dot(export_dot(g, nm, [], ExportStyle()), str(tmp_path / 'graph.dot'))
    parsed = nx.nx_pydot.read_dot(path)
    assert set(parsed.nodes) == {'ann', 'bob', 'cat', 'dan'}
    assert set(parsed.edges()) == set(values)
    assert parsed.number_of_edges() == len(values)


@pytest.mark.parametrize('kwargs', [{'feature': 'loudness'}, {'min_width': 3.0, 'max_width': 2.0},
                                    {'min_width': 0.0}, {'highlight': 'not-a-colour'}, {'node_scale': 0.0}])
def test_style_validation(kwargs):
    with pytest.raises(ValueError):
        ExportStyle(**kwargs)


def test_balanced_triads_by_mode():
    class Label:
        def __init__(self, balanced):
            self.balanced = balanced

    t1 = TriadRecord(('a', 'b', 'c'), traditional={'length': True}, extended={'length': [Label(True)] * 3})
    t2 = TriadRecord(('a', 'b', 'd'), traditional={'length': False},
                     extended={'length': [Label(True), Label(False)]})
    t3 = TriadRecord(('a', 'c', 'd'), extended={'length': []})
    assert balanced_triads([t1, t2, t3], 'length', 'traditional') == [t1]
    assert balanced_triads([t1, t2, t3], 'length', 'extended') == [t1]
    with pytest.raises(ValueError):
        balanced_triads([t1], 'length', 'other')


def test_plot_curves_writes_pngs(tmp_path):
    balance = CurveSeries(pd.DataFrame({'theta': [0.0, 1.0], 'x_positive_fraction': [0.2, 0.8],
                                        'balanced_fraction': [0.6, 0.7], 'baseline': [0.52, 0.58]}),
                          'x_positive_fraction', 'balanced_fraction', name='traditional_length')
    correlation = CurveSeries(pd.DataFrame({'structural_feature': ['degree', 'degree', 'embeddedness'],
                                            'language_feature': ['length', 'quality', 'length'],
                                            'x': [1.0, 1.0, 0.0], 'y': [0.3, 0.5, 0.2], 'n': [2, 2, 4]}),
                              'x', 'y', name='report_curves')
    empty = CurveSeries(pd.DataFrame(columns=['x', 'y']), name='extended_quality')
    paths = plot_curves([balance, correlation, empty], str(tmp_path / 'plots'))
    assert [os.path.basename(p) for p in paths] == ['traditional_length.png', 'report_curves_degree.png',
                                                    'report_curves_embeddedness.png']
    assert all(os.path.getsize(p) > 0 for p in paths)
