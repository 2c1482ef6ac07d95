import pytest
from hypothesis import given

from conftest import brute_square, signed_graphs
from srsg.core import (
    SignedGraph,
    from_signed_edges,
    is_balanced,
    negation,
    negative_subgraph,
    net_degree,
    positive_subgraph,
    square_entries,
    triangle_census,
    two_walk_counts,
    ugraph_from_edges,
)
from srsg.errors import DuplicateEdge, SelfLoop, SizeExceeded, VertexOutOfRange


def test_single_positive_edge():
    g = from_signed_edges(2, [(0, 1, 1)])
    assert g.pos_degree(0) == 1 and g.neg_degree(0) == 0
    assert g.sign(0, 1) == 1 and g.sign(1, 0) == 1


def test_path_with_negative_edge():
    g = from_signed_edges(3, [(0, 1, 1), (1, 2, -1)])
    assert [net_degree(g, v) for v in range(3)] == [1, 0, -1]
    assert two_walk_counts(g, 0, 2) == (0, 1)


def test_duplicate_edge_rejected_both_orientations():
    with pytest.raises(DuplicateEdge):
        from_signed_edges(3, [(0, 1, 1), (0, 1, -1)])
    with pytest.raises(DuplicateEdge):
        from_signed_edges(3, [(0, 1, 1), (1, 0, 1)])


def test_self_loop_and_range_rejected():
    with pytest.raises(SelfLoop):
        from_signed_edges(3, [(1, 1, 1)])
    with pytest.raises(VertexOutOfRange):
        from_signed_edges(3, [(0, 3, 1)])
    with pytest.raises(VertexOutOfRange):
        net_degree(from_signed_edges(2, [(0, 1, 1)]), 5)


def test_size_envelope():
    with pytest.raises(SizeExceeded):
        from_signed_edges(65, [])
    with pytest.raises(SizeExceeded):
        ugraph_from_edges(100, [])


def test_subgraph_views():
    g = from_signed_edges(4, [(0, 1, 1), (1, 2, -1), (2, 3, 1)])
    gp = positive_subgraph(g)
    gn = negative_subgraph(g)
    assert gp.edges() == [(0, 1, 1), (2, 3, 1)]
    assert gn.edges() == [(1, 2, -1)]
    for v in range(4):
        assert g.degree(v) == gp.degree(v) + gn.degree(v)


def test_negation_of_all_positive_regular():
    k4 = from_signed_edges(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])
    ng = negation(k4)
    assert all(net_degree(ng, v) == -3 for v in range(4))


def test_square_entries_single_edge():
    g = from_signed_edges(2, [(0, 1, 1)])
    assert square_entries(g) == [[1, 0], [0, 1]]


@given(signed_graphs())
def test_square_entries_matches_brute_force(g):
    assert square_entries(g) == brute_square(g)


@given(signed_graphs())
def test_two_walks_agree_with_square(g):
    sq = square_entries(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p, q = two_walk_counts(g, u, v)
            assert p - q == sq[u][v]
            assert p + q == (g.adj_row(u) & g.adj_row(v)).bit_count()


@given(signed_graphs())
def test_negation_involution_and_square_invariance(g):
    assert negation(negation(g)) == g
    assert square_entries(negation(g)) == square_entries(g)


@given(signed_graphs())
def test_degree_split(g):
    for v in range(g.n):
        assert g.degree(v) == g.pos_degree(v) + g.neg_degree(v)
        assert net_degree(g, v) == g.pos_degree(v) - g.neg_degree(v)


def test_balance_trivial_cases():
    allpos = from_signed_edges(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])
    assert is_balanced(allpos)
    tri = from_signed_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, -1)])
    assert not is_balanced(tri)


@given(signed_graphs(max_n=8))
def test_switched_all_positive_is_balanced(g):
    # signs sigma(uv) = s(u)s(v) make every cycle positive by construction
    s = [1 if v % 2 else -1 for v in range(g.n)]
    edges = [(u, v, s[u] * s[v]) for u, v, _ in g.edges()]
    assert is_balanced(from_signed_edges(g.n, edges))


def test_triangle_census_k3_cases():
    k3 = from_signed_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
    assert triangle_census(k3).counts == (1, 0, 0, 0)
    m3 = from_signed_edges(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)])
    assert triangle_census(m3).counts == (0, 0, 0, 1)


@given(signed_graphs())
def test_triangle_census_total_is_trace_oracle(g):
    n = g.n
    A = [[1 if g.sign(i, j) != 0 else 0 for j in range(n)] for i in range(n)]
    A2 = [[sum(A[i][k] * A[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    tr3 = sum(A2[i][j] * A[j][i] for i in range(n) for j in range(n))
    assert triangle_census(g).total == tr3 // 6


@given(signed_graphs())
def test_balanced_has_no_unbalanced_triangles(g):
    if is_balanced(g):
        c = triangle_census(g)
        assert c.counts[1] == 0 and c.counts[3] == 0
