"""Signed-graph isomorphism, canonical forms and automorphism counting.

Canonical form: n as one byte followed by the row-major upper triangle of
the sign matrix under the canonical vertex order, entries encoded
{+1 -> 2, -1 -> 1, 0 -> 0}.  Two signed graphs have equal canonical forms
iff they are isomorphic (sign-preservingly), and the byte strings are
totally ordered.

The canonical order is found by backtracking over individualizations with
equitable refinement on (positive, negative) neighbour counts; discovered
automorphisms prune sibling branches whose subtrees are images of explored
ones.  Minimality is over all fully explored branches.
"""

from __future__ import annotations

from .core import SignedGraph, UGraph, all_positive
from .errors import SizeExceeded
from .regularity import extract_params

AUT_COUNT_MAX_N = 16
_MAX_GENS = 128


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def _vertex_invariants(g: SignedGraph) -> list[tuple]:
    """Per-vertex refinement seed: (d+, d-, triangle profile by sign)."""
    inv = []
    for v in range(g.n):
        tri = [0, 0, 0, 0]
        nb = list(_bits(g.pos[v] | g.neg[v]))
        for i, u in enumerate(nb):
            u_neg = (g.neg[v] >> u) & 1
            for w in nb[i + 1 :]:
                if not (((g.pos[u] | g.neg[u]) >> w) & 1):
                    continue
                k = u_neg + ((g.neg[v] >> w) & 1) + ((g.neg[u] >> w) & 1)
                tri[k] += 1
        inv.append((g.pos[v].bit_count(), g.neg[v].bit_count(), tuple(tri)))
    return inv


def fingerprint(g: SignedGraph) -> tuple:
    """Cheap isomorphism invariant; unequal fingerprints mean non-isomorphic."""
    return (g.n, tuple(sorted(_vertex_invariants(g))))


def _refine(pos, neg, cells):
    """Equitable refinement of an ordered partition.

    Cells are split by the vector of (positive, negative) neighbour counts
    into every current cell; subcells are ordered by key, which keeps the
    procedure equivariant under relabelling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple, list[int]] = {}
            for v in cell:
                key = tuple(
                    ((pos[v] & m).bit_count(), (neg[v] & m).bit_count()) for m in masks
                )
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        cells = new_cells
    return cells


def _initial_cells(g: SignedGraph, marks: tuple[int, ...]) -> list[list[int]]:
    inv = _vertex_invariants(g)
    cells: list[list[int]] = [[v] for v in marks]
    marked = set(marks)
    grouped: dict[tuple, list[int]] = {}
    for v in range(g.n):
        if v in marked:
            continue
        grouped.setdefault(inv[v], []).append(v)
    for key in sorted(grouped):
        cells.append(grouped[key])
    return cells


def _encode(g: SignedGraph, order: list[int]) -> bytes:
    n = g.n
    out = bytearray([n])
    pos, neg = g.pos, g.neg
    for i in range(n):
        vi = order[i]
        pi, qi = pos[vi], neg[vi]
        for j in range(i + 1, n):
            vj = order[j]
            out.append(2 if (pi >> vj) & 1 else (1 if (qi >> vj) & 1 else 0))
    return bytes(out)


def decode_canonical(enc: bytes) -> SignedGraph:
    """Rebuild the signed graph a canonical form encodes (identity order)."""
    n = enc[0]
    pos = [0] * n
    neg = [0] * n
    t = 1
    for i in range(n):
        for j in range(i + 1, n):
            code = enc[t]
            t += 1
            if code == 2:
                pos[i] |= 1 << j
                pos[j] |= 1 << i
            elif code == 1:
                neg[i] |= 1 << j
                neg[j] |= 1 << i
    return SignedGraph(n, tuple(pos), tuple(neg))


def _canonical_search(g: SignedGraph, marks: tuple[int, ...] = ()):
    """Return (canonical encoding, order achieving it); order[i] is the vertex at position i."""
    n = g.n
    pos, neg = g.pos, g.neg
    best_enc: bytes | None = None
    best_order: list[int] | None = None
    gens: list[tuple[int, ...]] = []
    identity = tuple(range(n))

    def rec(cells, prefix):
        nonlocal best_enc, best_order
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            order = [c[0] for c in cells]
            enc = _encode(g, order)
            if best_enc is None or enc < best_enc:
                best_enc = enc
                best_order = order
            elif enc == best_enc:
                phi = [0] * n
                for i in range(n):
                    phi[best_order[i]] = order[i]
                tphi = tuple(phi)
                if tphi != identity and tphi not in gens and len(gens) < _MAX_GENS:
                    gens.append(tphi)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if explored:
                # skip v when a found automorphism fixing the prefix maps an
                # explored sibling onto it; that subtree is an image of an
                # explored one
                parent = list(range(n))

                def find(x):
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                for p in gens:
                    if all(p[x] == x for x in prefix):
                        for x in range(n):
                            rx, ry = find(x), find(p[x])
                            if rx != ry:
                                parent[rx] = ry
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            explored.append(v)
            child = (
                cells[:target]
                + [[v], [w for w in cell if w != v]]
                + cells[target + 1 :]
            )
            rec(_refine(pos, neg, child), prefix + (v,))

    rec(_refine(pos, neg, _initial_cells(g, marks)), ())
    assert best_enc is not None and best_order is not None
    return best_enc, best_order


def canonical_form(g: SignedGraph) -> bytes:
    """Total-order key equal for two signed graphs iff they are isomorphic."""
    return _canonical_search(g)[0]


def canonical_labeling(g: SignedGraph) -> tuple[bytes, list[int]]:
    """Canonical form plus an order achieving it (order[i] = vertex at position i)."""
    return _canonical_search(g)


def canonical_representative(g: SignedGraph) -> SignedGraph:
    """g relabelled into its canonical vertex order."""
    return decode_canonical(canonical_form(g))


def are_isomorphic(g: SignedGraph, h: SignedGraph):
    """Decide sign-preserving isomorphism; on success also return a witness.

    Fast paths: unequal fingerprints or unequal strong-regularity parameters
    decide non-isomorphism without canonicalizing.  The witness w maps
    vertices of g to vertices of h and is verified edge-by-edge (signs
    included) before being returned.
    """
    if g.n != h.n or fingerprint(g) != fingerprint(h):
        return (False, None)
    if extract_params(g) != extract_params(h):
        return (False, None)
    enc_g, order_g = _canonical_search(g)
    enc_h, order_h = _canonical_search(h)
    if enc_g != enc_h:
        return (False, None)
    w = [0] * g.n
    for i in range(g.n):
        w[order_g[i]] = order_h[i]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert g.sign(u, v) == h.sign(w[u], w[v]), "witness failed verification"
    return (True, w)


def automorphism_count(g: UGraph) -> int:
    """Order of the automorphism group of an unsigned graph, n <= 16.

    Computed along the stabilizer chain of the base (0, 1, ..., n-1): the
    orbit of v under the pointwise stabilizer of 0..v-1 is read off by
    comparing canonical forms of vertex-marked copies, and the group order
    is the product of the orbit sizes.
    """
    if g.n > AUT_COUNT_MAX_N:
        raise SizeExceeded(f"automorphism_count limited to n <= {AUT_COUNT_MAX_N}")
    sg = all_positive(g)
    total = 1
    marks: tuple[int, ...] = ()
    for v in range(g.n):
        cells = _refine(sg.pos, sg.neg, _initial_cells(sg, marks))
        cell_of_v = next(c for c in cells if v in c)
        candidates = [w for w in cell_of_v if w != v]
        if candidates:
            ref = _canonical_search(sg, marks + (v,))[0]
            orbit = 1 + sum(
                1 for w in candidates if _canonical_search(sg, marks + (w,))[0] == ref
            )
        else:
            orbit = 1
        total *= orbit
        marks = marks + (v,)
    return total
