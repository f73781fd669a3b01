import pytest

from cohortnet import Student, SymmetrizeRule, UndirectedView, build_network


def mknet(edges, nodes=(), label="t"):
    """Network over the ids appearing in ``edges`` plus ``nodes``."""
    ids = set(nodes) | {v for e in edges for v in e}
    roster = [Student(id=i) for i in sorted(ids)]
    return build_network(roster, sorted(edges), label)


def mkview(undirected_edges, nodes=()):
    ids = set(nodes) | {v for e in undirected_edges for v in e}
    edges = frozenset((min(a, b), max(a, b)) for a, b in undirected_edges)
    return UndirectedView(nodes=frozenset(ids), edges=edges, rule=SymmetrizeRule.UNION)


@pytest.fixture
def barbell_view():
    """Two triangles {0,1,2} and {3,4,5} joined by the bridge (2,3)."""
    return mkview([(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
