from dataclasses import dataclass, field
import numpy as np
import pandas as pd
import networkx as nx

from ..app.tables import write_table, read_table
from .base import build_graph_from_pairs

__all__ = ['degree', 'clustering_coefficient', 'embeddedness', 'TriadRecord', 'enumerate_triangles',
           'StructureTable', 'structure_table', 'STRUCTURE_COLUMNS']

STRUCTURE_COLUMNS = ['kind', 'a', 'b', 'degree', 'clustering', 'embeddedness']


def degree(g, v):
    g.check_vertex(v)
    return g.g.degree[v]


def clustering_coefficient(g, v):
    """k / C(n, 2) over the n neighbours of v; NaN when n < 2."""
    if degree(g, v) < 2:
        return np.nan
    return float(nx.clustering(g.g, v))


def embeddedness(g, edge):
    """Number of common neighbours of the edge's endpoints."""
    a, b = edge
    g.check_edge(a, b)
    return len(g.g.adj[a].keys() & g.g.adj[b].keys())


@dataclass
class TriadRecord:
    vertices: tuple
    traditional: dict = field(default_factory=dict)
    extended: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.vertices)) != 3:
            raise ValueError(f'triad needs three distinct vertices, got {self.vertices}')
        self.vertices = tuple(sorted(self.vertices))

    @property
    def edges(self):
        a, b, c = self.vertices
        return [(a, b), (a, c), (b, c)]

    def anchors(self):
        """The three (anchor pair, third party) choices."""
        a, b, c = self.vertices
        return [((a, b), c), ((a, c), b), ((b, c), a)]


def enumerate_triangles(g):
    """Every triangle once, canonical vertex order, sorted.

    Each vertex only looks at neighbours of higher (degree, id) rank, so a
    triangle is found from its lowest-ranked vertex only.
    """
    rank = {v: (d, v) for v, d in g.g.degree}
    higher = {v: {u for u in g.g.adj[v] if rank[u] > rank[v]} for v in g.g}
    triangles = []
    for v, ups in higher.items():
        for u in ups:
            for w in ups & higher[u]:
                triangles.append(tuple(sorted((v, u, w))))
    return [TriadRecord(t) for t in sorted(triangles)]


class StructureTable():
    """Vertex rows (degree, clustering) and edge rows (embeddedness)."""

    def __init__(self, vertices, edges):
        self.vertices = vertices
        self.edges = edges

    @classmethod
    def from_graph(cls, g):
        vrows = [{'id': v, 'degree': degree(g, v), 'clustering': clustering_coefficient(g, v)}
                 for v in g.vertices]
        erows = [{'a': a, 'b': b, 'embeddedness': embeddedness(g, (a, b))} for a, b in g.edges]
        vertices = pd.DataFrame(vrows, columns=['id', 'degree', 'clustering']).set_index('id')
        edges = pd.DataFrame(erows, columns=['a', 'b', 'embeddedness']).set_index(['a', 'b'])
        return cls(vertices.astype(float), edges.astype(float))

    def to_frame(self):
        v = self.vertices.reset_index().rename(columns={'id': 'a'})
        v.insert(0, 'kind', 'vertex')
        v['b'] = ''
        v['embeddedness'] = np.nan
        e = self.edges.reset_index()
        e.insert(0, 'kind', 'edge')
        e['degree'] = np.nan
        e['clustering'] = np.nan
        return pd.concat([v[STRUCTURE_COLUMNS], e[STRUCTURE_COLUMNS]], ignore_index=True)

    def to_csv(self, path):
        return write_table(self.to_frame(), path)

    @classmethod
    def from_csv(cls, path):
        df = read_table(path, what='structure', dtype={'kind': str, 'a': str, 'b': str})
        missing = [c for c in STRUCTURE_COLUMNS if c not in df.columns]
        if missing:
            raise ValueError(f'{path} lacks columns {missing}')
        unknown = sorted(set(df['kind']) - {'vertex', 'edge'})
        if unknown:
            raise ValueError(f'{path} has unknown row kinds {unknown}')
        v = df[df['kind'] == 'vertex'].rename(columns={'a': 'id'})
        e = df[df['kind'] == 'edge']
        vertices = v.set_index('id')[['degree', 'clustering']].astype(float)
        edges = e.set_index(['a', 'b'])[['embeddedness']].astype(float)
        return cls(vertices, edges)

    def graph(self):
        return build_graph_from_pairs(list(self.edges.index), self.vertices.index)


def structure_table(g):
    return StructureTable.from_graph(g)
