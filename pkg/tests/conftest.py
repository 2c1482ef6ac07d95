import os

import pytest
from hypothesis import strategies as st

from srsg.core import SignedGraph, from_signed_edges

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


@st.composite
def signed_graphs(draw, min_n=2, max_n=9):
    """Random signed graphs: each pair independently absent, positive or negative."""
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    cells = draw(st.lists(st.integers(0, 2), min_size=m, max_size=m))
    edges = []
    t = 0
    for u in range(n):
        for v in range(u + 1, n):
            if cells[t] == 1:
                edges.append((u, v, 1))
            elif cells[t] == 2:
                edges.append((u, v, -1))
            t += 1
    return from_signed_edges(n, edges)


@pytest.fixture(scope="session")
def fixtures_dir():
    assert os.path.isdir(FIXTURES), "fixtures/ missing; run scripts/make_fixtures.py"
    return FIXTURES


def brute_square(g: SignedGraph):
    """Independent A^2 oracle: dense sign matrix, triple loop."""
    n = g.n
    A = [[g.sign(i, j) if i != j else 0 for j in range(n)] for i in range(n)]
    return [[sum(A[i][k] * A[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def brute_extract(g: SignedGraph):
    """Independent parameter extraction straight from the definition."""
    n = g.n
    degs = [sum(1 for j in range(n) if g.sign(i, j) != 0) for i in range(n)]
    if len(set(degs)) != 1 or degs[0] == 0:
        return None
    complete = all(g.sign(i, j) != 0 for i in range(n) for j in range(n) if i != j)
    homogeneous = (
        all(g.sign(i, j) >= 0 for i in range(n) for j in range(n))
        or all(g.sign(i, j) <= 0 for i in range(n) for j in range(n))
    )
    if complete and homogeneous:
        return None
    sq = brute_square(g)
    vals = {"a": set(), "b": set(), "c": set()}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            s = g.sign(i, j)
            key = "a" if s == 1 else ("b" if s == -1 else "c")
            vals[key].add(sq[i][j])
    if any(len(v) > 1 for v in vals.values()):
        return None
    pick = lambda k: next(iter(vals[k])) if vals[k] else None
    return (n, degs[0], pick("a"), pick("b"), pick("c"))
