import networkx as nx

from ..app.errors import GraphError


class InteractionGraph():
    """Undirected simple graph over retained interrelationships.

    The underlying networkx graph is frozen once built.
    """

    def __init__(self, nx_graph):
        if nx.number_of_selfloops(nx_graph) > 0:
            raise GraphError('interaction graph cannot hold self-loops')
        self.g = nx.freeze(nx_graph)

    @classmethod
    def from_edges(cls, edges, vertices=()):
        g = nx.Graph()
        g.add_nodes_from(sorted(vertices))
        for a, b in edges:
            if a == b:
                raise GraphError(f'self-loop on {a}')
            g.add_edge(a, b)
        return cls(g)

    @property
    def vertices(self):
        return sorted(self.g.nodes)

    @property
    def edges(self):
        return sorted(tuple(sorted(e)) for e in self.g.edges)

    def number_of_vertices(self):
        return self.g.number_of_nodes()

    def number_of_edges(self):
        return self.g.number_of_edges()

    def __contains__(self, v):
        return v in self.g

    def has_edge(self, a, b):
        return self.g.has_edge(a, b)

    def neighbors(self, v):
        self.check_vertex(v)
        return set(self.g.adj[v])

    def check_vertex(self, v):
        if v not in self.g:
            raise GraphError(f'unknown vertex {v}')

    def check_edge(self, a, b):
        if not self.g.has_edge(a, b):
            raise GraphError(f'no edge {a} -- {b}')

    def adjacency_matrix(self):
        return nx.to_numpy_array(self.g, nodelist=self.vertices)


def build_graph(pi):
    """One edge per mutual pair of a PairIndex."""
    return InteractionGraph.from_edges(pi.unordered_pairs(), pi.individuals())


def build_graph_from_pairs(pairs, vertices=()):
    # ordered or unordered pairs; both directions collapse to one edge
    pairs = list(pairs)
    ends = {v for p in pairs for v in p}
    return InteractionGraph.from_edges({tuple(sorted(p)) for p in pairs}, ends | set(vertices))
