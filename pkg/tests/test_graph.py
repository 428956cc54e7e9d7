import itertools

import networkx as nx
import numpy as np
import pandas as pd
import pytest

from optk.app import GraphError
from optk.corpus import PairIndex, filter_corpus, make_synthetic_corpus
from optk.corpus.synthetic import DOMAIN, address
from optk.graph import (InteractionGraph, build_graph, build_graph_from_pairs, degree, clustering_coefficient,
                        embeddedness, enumerate_triangles, TriadRecord, StructureTable, structure_table)


@pytest.fixture
def synthetic_graph():
    _, pi = filter_corpus(make_synthetic_corpus(), DOMAIN, 3)
    return build_graph(pi)


def graph_of(edges, vertices=()):
    return InteractionGraph.from_edges(edges, vertices)


def test_build_graph_from_pair_index(make_message):
    msgs = [make_message('1', 'a', ['b']), make_message('2', 'b', ['a'])]
    g = build_graph(PairIndex.from_messages(msgs))
    assert (g.number_of_vertices(), g.number_of_edges()) == (2, 1)
    assert g.edges == [('a', 'b')]

    assert build_graph(PairIndex()).number_of_vertices() == 0

    ordered = [(x, y) for x in 'abc' for y in 'abc' if x != y]
    g = build_graph_from_pairs(ordered)
    assert (g.number_of_vertices(), g.number_of_edges()) == (3, 3)


def test_self_loops_are_rejected():
    with pytest.raises(GraphError):
        graph_of([('a', 'a')])
    loop = nx.Graph()
    loop.add_edge(1, 1)
    with pytest.raises(GraphError):
        InteractionGraph(loop)


def test_graph_is_frozen():
    g = graph_of([('a', 'b')])
    with pytest.raises(nx.NetworkXError):
        g.g.add_edge('b', 'c')


def test_degree_examples():
    star = graph_of([('c', leaf) for leaf in 'vwxyz'], vertices=['lonely'])
    assert degree(star, 'lonely') == 0
    assert degree(star, 'c') == 5
    assert degree(graph_of([('a', 'b'), ('b', 'c'), ('a', 'c')]), 'a') == 2
    with pytest.raises(GraphError):
        degree(star, 'nobody')


def test_clustering_examples():
    triangle = graph_of([('a', 'b'), ('b', 'c'), ('a', 'c')])
    assert clustering_coefficient(triangle, 'a') == 1.0
    star = graph_of([('c', leaf) for leaf in 'wxyz'])
    assert clustering_coefficient(star, 'c') == 0.0
    assert np.isnan(clustering_coefficient(star, 'w'))


def test_embeddedness_examples():
    triangle = graph_of([('a', 'b'), ('b', 'c'), ('a', 'c')])
    assert embeddedness(triangle, ('a', 'b')) == 1
    path = graph_of([('a', 'b'), ('b', 'c')])
    assert embeddedness(path, ('b', 'c')) == 0
    k4 = InteractionGraph(nx.complete_graph(4))
    assert embeddedness(k4, (0, 3)) == 2
    with pytest.raises(GraphError):
        embeddedness(path, ('a', 'c'))


def test_triangle_examples():
    assert len(enumerate_triangles(InteractionGraph(nx.complete_graph(4)))) == 4
    assert enumerate_triangles(InteractionGraph(nx.balanced_tree(2, 3))) == []
    g = InteractionGraph(nx.gnp_random_graph(20, 0.3, seed=3))
    a = g.adjacency_matrix()
    assert len(enumerate_triangles(g)) == round(np.trace(a @ a @ a) / 6)


def test_triad_record_is_canonical():
    t = TriadRecord(('c', 'a', 'b'))
    assert t.vertices == ('a', 'b', 'c')
    assert t.edges == [('a', 'b'), ('a', 'c'), ('b', 'c')]
    assert t.anchors() == [(('a', 'b'), 'c'), (('a', 'c'), 'b'), (('b', 'c'), 'a')]
    with pytest.raises(ValueError):
        TriadRecord(('a', 'a', 'b'))


def brute_force_clustering(nxg, v):
    nbrs = list(nxg.adj[v])
    if len(nbrs) < 2:
        return None
    k = sum(1 for x, y in itertools.combinations(nbrs, 2) if nxg.has_edge(x, y))
    return k / (len(nbrs) * (len(nbrs) - 1) / 2)


def test_metrics_match_brute_force(random_graphs):
    for nxg in random_graphs:
        g = InteractionGraph(nxg)
        for v in g.vertices:
            expected = brute_force_clustering(nxg, v)
            got = clustering_coefficient(g, v)
            if expected is None:
                assert np.isnan(got)
            else:
                assert got == pytest.approx(expected, abs=1e-12)
                assert 0.0 <= got <= 1.0
        for a, b in g.edges:
            assert embeddedness(g, (a, b)) == sum(1 for w in nxg if nxg.has_edge(a, w) and nxg.has_edge(b, w))

        triples = [tuple(sorted(t)) for t in itertools.combinations(nxg.nodes, 3)
                   if all(nxg.has_edge(x, y) for x, y in itertools.combinations(t, 2))]
        found = [t.vertices for t in enumerate_triangles(g)]
        assert found == sorted(triples)


def test_sum_identities(random_graphs):
    for nxg in random_graphs:
        g = InteractionGraph(nxg)
        assert sum(degree(g, v) for v in g.vertices) == 2 * g.number_of_edges()
        n_triangles = len(enumerate_triangles(g))
        assert sum(embeddedness(g, e) for e in g.edges) == 3 * n_triangles
        a = g.adjacency_matrix()
        assert n_triangles == round(np.trace(a @ a @ a) / 6)


def test_synthetic_structure(synthetic_graph):
    g = synthetic_graph
    degrees = {v: degree(g, v) for v in g.vertices}
    assert degrees[address(1)] == 5
    assert [degrees[address(i)] for i in (2, 3, 4)] == [4, 4, 4]
    assert [degrees[address(i)] for i in (5, 6, 8, 10)] == [3, 3, 3, 3]
    assert [degrees[address(i)] for i in (7, 9, 11)] == [2, 2, 2]
    assert degrees[address(12)] == 1

    triangles = [tuple(int(v[1:3]) for v in t.vertices) for t in enumerate_triangles(g)]
    assert sorted(triangles) == sorted([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 5, 6), (5, 6, 7),
                                        (8, 9, 10), (3, 4, 11)])
    assert embeddedness(g, (address(3), address(4))) == 3


def test_structure_table_round_trip(synthetic_graph, tmp_path):
    st = structure_table(synthetic_graph)
    assert st.vertices.loc[address(7), 'clustering'] == 1.0
    assert np.isnan(st.vertices.loc[address(12), 'clustering'])
    frame = st.to_frame()
    assert list(frame['kind'].unique()) == ['vertex', 'edge']
    assert len(frame) == 12 + 18

    back = StructureTable.from_csv(st.to_csv(str(tmp_path / 'structure.csv')))
    pd.testing.assert_frame_equal(back.vertices, st.vertices)
    pd.testing.assert_frame_equal(back.edges, st.edges)
    assert back.graph().edges == synthetic_graph.edges


def test_structure_csv_rejects_unknown_kind(tmp_path):
    path = tmp_path / 'structure.csv'
    path.write_text('kind,a,b,degree,clustering,embeddedness\nloop,a,,1,N/A,N/A\n', encoding='utf-8')
    with pytest.raises(ValueError):
        StructureTable.from_csv(str(path))
