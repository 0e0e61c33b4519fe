import networkx as nx
import pytest

from cubekit.families import hypercube
from cubekit.graph import Graph, induced_subgraph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def q4_induced(mask: int) -> Graph:
    """Subgraph of Q_4 induced on the vertices whose bit is set in ``mask``."""
    keep = [v for v in range(16) if mask >> v & 1]
    return induced_subgraph(hypercube(4), keep)[0]


# Benzenoid with two hexagons sharing an edge (naphthalene skeleton):
# all convex cycles are 6-cycles but the graph is not regular.
NAPHTHALENE = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (3, 6), (6, 7), (7, 8), (8, 9), (9, 4)]


@pytest.fixture
def naphthalene() -> Graph:
    from cubekit.graph import from_edge_list

    return from_edge_list(NAPHTHALENE)
