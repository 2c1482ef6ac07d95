"""Exact signed-graph primitives.

A signed graph is stored as two tuples of per-vertex bitmasks (one Python int
per row): positive neighbours and negative neighbours.  Bitmasks make
common-neighbour counts O(1) popcounts, which is what the signing search
lives on.  All arithmetic is exact integer arithmetic; the supported
envelope is n <= 64 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateEdge, SelfLoop, SizeExceeded, VertexOutOfRange

MAX_VERTICES = 64


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v!r} not in range 0..{n - 1}")


@dataclass(frozen=True)
class UGraph:
    """Unsigned simple graph on vertices 0..n-1; adjacency as bitmask rows."""

    n: int
    nbr: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise SizeExceeded(f"n={self.n} outside supported range 1..{MAX_VERTICES}")
        if len(self.nbr) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.nbr):
            if row & ~full:
                raise VertexOutOfRange(f"row {v} references vertices >= {self.n}")
            if (row >> v) & 1:
                raise SelfLoop(f"vertex {v} adjacent to itself")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.nbr[u] >> v) & 1) != ((self.nbr[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency at pair ({u}, {v})")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.nbr[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.nbr[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.nbr]

    def is_regular(self) -> bool:
        degs = self.degrees()
        return min(degs) == max(degs)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.nbr[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.nbr[v] == full & ~(1 << v) for v in range(self.n))

    def is_connected(self) -> bool:
        return len(components(self.nbr, self.n)[0]) == self.n


def components(nbr: tuple[int, ...] | list[int], n: int) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    comps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            f = frontier
            v = 0
            while f:
                if f & 1:
                    nxt |= nbr[v]
                f >>= 1
                v += 1
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append([v for v in range(n) if (comp >> v) & 1])
    return comps


def ugraph_from_edges(n: int, edges) -> UGraph:
    """Build an UGraph from an iterable of (u, v) pairs."""
    if not 1 <= n <= MAX_VERTICES:
        raise SizeExceeded(f"n={n} outside supported range 1..{MAX_VERTICES}")
    rows = [0] * n
    for e in edges:
        u, v = e
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return UGraph(n, tuple(rows))


@dataclass(frozen=True)
class SignedGraph:
    """Signed simple graph: disjoint positive/negative adjacency bitmask rows."""

    n: int
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise SizeExceeded(f"n={self.n} outside supported range 1..{MAX_VERTICES}")
        if len(self.pos) != self.n or len(self.neg) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v in range(self.n):
            if (self.pos[v] | self.neg[v]) & ~full:
                raise VertexOutOfRange(f"row {v} references vertices >= {self.n}")
            if ((self.pos[v] | self.neg[v]) >> v) & 1:
                raise SelfLoop(f"vertex {v} adjacent to itself")
            if self.pos[v] & self.neg[v]:
                raise DuplicateEdge(f"vertex {v} has a neighbour with both signs")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.pos[u] >> v) & 1) != ((self.pos[v] >> u) & 1) or (
                    (self.neg[u] >> v) & 1
                ) != ((self.neg[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency at pair ({u}, {v})")

    # -- local quantities ---------------------------------------------------

    def sign(self, u: int, v: int) -> int:
        """+1, -1 or 0 for the (u, v) entry of the sign matrix."""
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        if (self.pos[u] >> v) & 1:
            return 1
        if (self.neg[u] >> v) & 1:
            return -1
        return 0

    def adj_row(self, v: int) -> int:
        return self.pos[v] | self.neg[v]

    def degree(self, v: int) -> int:
        return (self.pos[v] | self.neg[v]).bit_count()

    def pos_degree(self, v: int) -> int:
        return self.pos[v].bit_count()

    def neg_degree(self, v: int) -> int:
        return self.neg[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def net_degrees(self) -> list[int]:
        return [self.pos_degree(v) - self.neg_degree(v) for v in range(self.n)]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int, int]]:
        """Edge list (u, v, sign) with u < v, sorted by (u, v)."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.pos[u] >> v) & 1:
                    out.append((u, v, 1))
                elif (self.neg[u] >> v) & 1:
                    out.append((u, v, -1))
        return out

    def is_regular(self) -> bool:
        degs = self.degrees()
        return min(degs) == max(degs)

    def is_net_regular(self) -> bool:
        nets = self.net_degrees()
        return min(nets) == max(nets)

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all((self.pos[v] | self.neg[v]) == full & ~(1 << v) for v in range(self.n))

    def is_homogeneous(self) -> bool:
        return all(m == 0 for m in self.pos) or all(m == 0 for m in self.neg)

    def underlying(self) -> UGraph:
        return UGraph(self.n, tuple(p | q for p, q in zip(self.pos, self.neg)))

    def is_connected(self) -> bool:
        return len(components([p | q for p, q in zip(self.pos, self.neg)], self.n)[0]) == self.n


def from_signed_edges(n: int, edges) -> SignedGraph:
    """Build a SignedGraph from (u, v, sign) triples with sign in {+1, -1}.

    Rejects self-loops, out-of-range vertices and duplicate pairs in either
    orientation, naming the offending datum.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise SizeExceeded(f"n={n} outside supported range 1..{MAX_VERTICES}")
    pos = [0] * n
    neg = [0] * n
    for e in edges:
        u, v, s = e
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if s not in (1, -1):
            raise ValueError(f"edge ({u}, {v}) has sign {s!r}, expected +1 or -1")
        if ((pos[u] | neg[u]) >> v) & 1:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        if s == 1:
            pos[u] |= 1 << v
            pos[v] |= 1 << u
        else:
            neg[u] |= 1 << v
            neg[v] |= 1 << u
    return SignedGraph(n, tuple(pos), tuple(neg))


def all_positive(g: UGraph) -> SignedGraph:
    """The signing of g with every edge positive."""
    return SignedGraph(g.n, tuple(g.nbr), (0,) * g.n)


def sign_with(g: UGraph, negative_edges) -> SignedGraph:
    """Sign g with the given (u, v) pairs negative and every other edge positive."""
    neg = [0] * g.n
    for u, v in negative_edges:
        if not g.adjacent(u, v):
            raise VertexOutOfRange(f"({u}, {v}) is not an edge of the underlying graph")
        neg[u] |= 1 << v
        neg[v] |= 1 << u
    pos = tuple(g.nbr[v] & ~neg[v] for v in range(g.n))
    return SignedGraph(g.n, pos, tuple(neg))


# -- named operations -------------------------------------------------------


def net_degree(g: SignedGraph, v: int) -> int:
    """Positive degree minus negative degree at v."""
    _check_vertex(v, g.n)
    return g.pos_degree(v) - g.neg_degree(v)


def positive_subgraph(g: SignedGraph) -> SignedGraph:
    """The spanning subgraph keeping only positive edges."""
    return SignedGraph(g.n, g.pos, (0,) * g.n)


def negative_subgraph(g: SignedGraph) -> SignedGraph:
    """The spanning subgraph keeping only negative edges (signs kept as -1).

    Use .underlying() on the result for plain regularity checks.
    """
    return SignedGraph(g.n, (0,) * g.n, g.neg)


def negation(g: SignedGraph) -> SignedGraph:
    """Flip every edge sign; an involution."""
    return SignedGraph(g.n, g.neg, g.pos)


def two_walk_counts(g: SignedGraph, u: int, v: int) -> tuple[int, int]:
    """Counts of positive and negative walks of length 2 between u != v.

    pos + neg equals the number of common neighbours; pos - neg is the
    (u, v) entry of the squared sign matrix.
    """
    _check_vertex(u, g.n)
    _check_vertex(v, g.n)
    if u == v:
        raise ValueError("two_walk_counts requires two distinct vertices")
    p = (g.pos[u] & g.pos[v]).bit_count() + (g.neg[u] & g.neg[v]).bit_count()
    q = (g.pos[u] & g.neg[v]).bit_count() + (g.neg[u] & g.pos[v]).bit_count()
    return (p, q)


def square_entries(g: SignedGraph) -> list[list[int]]:
    """The exact integer matrix A^2 of the sign matrix A."""
    n = g.n
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        out[u][u] = g.degree(u)
        for v in range(u + 1, n):
            p, q = two_walk_counts(g, u, v)
            out[u][v] = out[v][u] = p - q
    return out


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle has positive sign product.

    Decided by spanning-forest switching propagation: assign each vertex a
    sign so that s(u)*s(v) matches the edge sign along a BFS forest, then
    verify every edge.
    """
    n = g.n
    s = [0] * n
    for root in range(n):
        if s[root]:
            continue
        s[root] = 1
        stack = [root]
        while stack:
            u = stack.pop()
            row_p = g.pos[u]
            row_n = g.neg[u]
            for v in range(n):
                bit = 1 << v
                if row_p & bit:
                    want = s[u]
                elif row_n & bit:
                    want = -s[u]
                else:
                    continue
                if s[v] == 0:
                    s[v] = want
                    stack.append(v)
                elif s[v] != want:
                    return False
    return True


@dataclass(frozen=True)
class TriangleCensus:
    """Triangle counts keyed by the number of negative edges (0..3)."""

    counts: tuple[int, int, int, int]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def unbalanced(self) -> int:
        # sign of a triangle is the product of its edge signs
        return self.counts[1] + self.counts[3]


def triangle_census(g: SignedGraph) -> TriangleCensus:
    """Count triangles by how many of their three edges are negative."""
    n = g.n
    counts = [0, 0, 0, 0]
    for u in range(n):
        for v in range(u + 1, n):
            if not ((g.pos[u] | g.neg[u]) >> v) & 1:
                continue
            uv_neg = (g.neg[u] >> v) & 1
            common = (g.pos[u] | g.neg[u]) & (g.pos[v] | g.neg[v])
            w = v + 1
            rest = common >> w
            while rest:
                if rest & 1:
                    k = uv_neg + ((g.neg[u] >> w) & 1) + ((g.neg[v] >> w) & 1)
                    counts[k] += 1
                rest >>= 1
                w += 1
    return TriangleCensus(tuple(counts))
