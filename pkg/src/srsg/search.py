"""Exhaustive search for net-regular strongly regular signings.

Given an r-regular underlying graph and a target net-degree rho, every
valid signing has a k-regular negative subgraph with k = (r - rho)/2, so
the search enumerates k-regular spanning subgraphs and keeps the signings
whose squared sign matrix is constant on each entry class.

Edges are decided in lexicographic (min, max) order, which groups them
into per-vertex blocks: when block u closes, every edge at u is decided,
so u is "complete" and each pair (t, u) with t complete has its final
squared-matrix entry.  Those entries are checked against the parameter
filter (or against values learned from the first completed pair of each
class) and inconsistent subtrees are cut.  The degree-cap prune rejects
blocks that overshoot k or leave a vertex unable to reach it.

Reports are deterministic: fixed edge order, canonical representatives,
sorted output, and identical results for any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations

from .core import SignedGraph, UGraph, negation
from .errors import DegreeMismatch, DisconnectedInput
from .iso import canonical_form, decode_canonical
from .regularity import SrsgClass, SrsgParams, classify, extract_params

_NODES, _LEAVES, _PDEG, _PPAIR = range(4)


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    raw_hits: int = 0
    pruned_degree: int = 0
    pruned_pair: int = 0
    wall_time: float = 0.0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.raw_hits += other.raw_hits
        self.pruned_degree += other.pruned_degree
        self.pruned_pair += other.pruned_pair


@dataclass(frozen=True)
class SearchConfig:
    """Search targets and policies.

    dedupe: "none" keeps every signing found, "iso" one per isomorphism
    class, "iso-neg" additionally folds a graph and its negation together.
    pair_prune=False disables the completed-pair entry check and leaves
    only degree-cap pruning (used by the equivalence oracle in tests).
    node_budget caps search-tree nodes; on overrun the report is flagged
    non-exhaustive instead of raising.
    """

    rho: int
    param_filter: tuple[SrsgParams, ...] | None = None
    dedupe: str = "iso"  # "none" | "iso" | "iso-neg"
    require_connected: bool = True
    node_budget: int | None = None
    pair_prune: bool = True
    jobs: int = 1


@dataclass(frozen=True)
class Hit:
    graph: SignedGraph
    params: SrsgParams
    cls: SrsgClass
    canonical: bytes


@dataclass
class SearchReport:
    rho: int
    hits: list[Hit]
    stats: SearchStats
    exhaustive: bool
    raw_count: int
    note: str = ""


@dataclass
class CatalogSearchReport:
    rho: int
    hits: list[Hit]
    stats: SearchStats
    exhaustive: bool
    per_graph: list[dict]


class _BudgetStop(Exception):
    pass


def _search_raw(nbr, n, k, allowed, budget, prefix=(), stop_depth=None):
    """Block DFS over signings whose negative subgraph is k-regular.

    allowed: None (degree pruning only), the string "learn", or a triple of
    frozensets of admissible squared-matrix entries for (positive,
    negative, non-adjacent) pairs.

    prefix: block choices replayed before the DFS starts (parallel tasks).
    stop_depth: collect extendable prefixes at this block instead of
    recursing past it.

    Returns (raw, prefixes, counters, exhaustive) where raw holds
    (pos_rows, neg_rows) mask tuples and counters is
    [nodes, leaves, pruned_degree, pruned_pair].
    """
    posm = [0] * n
    negm = [0] * n
    negc = [0] * n
    avail = [[w for w in range(u + 1, n) if (nbr[u] >> w) & 1] for u in range(n)]
    counters = [0, 0, 0, 0]
    raw: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    prefixes: list[tuple] = []
    learn: list[int | None] = [None, None, None]
    learning = allowed == "learn"
    filtering = isinstance(allowed, tuple)
    chosen: list[tuple[int, ...]] = []

    def pairs_ok(u, trail):
        pu, nu = posm[u], negm[u]
        for t in range(u):
            pt, nt = posm[t], negm[t]
            e = (
                (pt & pu).bit_count()
                + (nt & nu).bit_count()
                - (pt & nu).bit_count()
                - (nt & pu).bit_count()
            )
            if (nt >> u) & 1:
                c = 1
            elif (pt >> u) & 1:
                c = 0
            else:
                c = 2
            if filtering:
                if e not in allowed[c]:
                    return False
            else:
                lv = learn[c]
                if lv is None:
                    learn[c] = e
                    trail.append(c)
                elif lv != e:
                    return False
        return True

    def apply_block(u, S):
        ub = 1 << u
        for w in avail[u]:
            wb = 1 << w
            if w in S:
                negm[u] |= wb
                negm[w] |= ub
                negc[w] += 1
                negc[u] += 1
            else:
                posm[u] |= wb
                posm[w] |= ub

    def undo_block(u, S):
        ub = 1 << u
        for w in avail[u]:
            wb = 1 << w
            if w in S:
                negm[u] &= ~wb
                negm[w] &= ~ub
                negc[w] -= 1
                negc[u] -= 1
            else:
                posm[u] &= ~wb
                posm[w] &= ~ub

    def rec(u):
        if stop_depth is not None and u == stop_depth:
            prefixes.append(tuple(chosen))
            return
        if u == n:
            counters[_LEAVES] += 1
            raw.append((tuple(posm), tuple(negm)))
            return
        av = avail[u]
        need = k - negc[u]
        if need < 0 or need > len(av):
            counters[_PDEG] += 1
            return
        above = -1 << (u + 1)
        for S in combinations(av, need):
            counters[_NODES] += 1
            if budget is not None and counters[_NODES] > budget:
                raise _BudgetStop
            apply_block(u, S)
            ok = True
            for w in av:
                cw = negc[w]
                if cw > k or cw + (nbr[w] & above).bit_count() < k:
                    ok = False
                    break
            trail: list[int] = []
            if not ok:
                counters[_PDEG] += 1
            elif (learning or filtering) and not pairs_ok(u, trail):
                ok = False
                counters[_PPAIR] += 1
            if ok:
                chosen.append(S)
                rec(u + 1)
                chosen.pop()
            for c in trail:
                learn[c] = None
            undo_block(u, S)

    # replay a task prefix; its choices were generated by this same DFS, so
    # they must pass their own checks again
    for u, S in enumerate(prefix):
        apply_block(u, S)
        if learning or filtering:
            assert pairs_ok(u, []), "task prefix failed replay"
        chosen.append(S)

    exhaustive = True
    try:
        rec(len(prefix))
    except _BudgetStop:
        exhaustive = False
    return raw, prefixes, counters, exhaustive


def _task_worker(payload):
    nbr, n, k, allowed, budget, prefix = payload
    raw, _, counters, exhaustive = _search_raw(nbr, n, k, allowed, budget, prefix)
    return raw, counters, exhaustive


def enumerate_negative_subgraphs(g: UGraph, k: int):
    """Yield the k-regular spanning subgraphs of g, each once, as sorted
    (u, v) edge tuples, in the fixed lexicographic search order."""
    degs = g.degrees()
    r = degs[0]
    if min(degs) != max(degs):
        raise DegreeMismatch("underlying graph is not regular")
    if not 0 <= k <= r:
        raise DegreeMismatch(f"k={k} out of range 0..{r}")
    yield from _iter_k_regular(g.nbr, g.n, k)


def _iter_k_regular(nbr, n, k):
    """Generator core of the k-factor enumeration; host need not be regular."""
    negc = [0] * n
    avail = [[w for w in range(u + 1, n) if (nbr[u] >> w) & 1] for u in range(n)]
    picked: list[tuple[int, int]] = []

    def rec(u):
        if u == n:
            yield tuple(picked)
            return
        av = avail[u]
        need = k - negc[u]
        if need < 0 or need > len(av):
            return
        above = -1 << (u + 1)
        for S in combinations(av, need):
            ok = True
            for w in S:
                negc[w] += 1
            for w in av:
                cw = negc[w]
                if cw > k or cw + (nbr[w] & above).bit_count() < k:
                    ok = False
                    break
            if ok:
                for w in S:
                    picked.append((u, w))
                yield from rec(u + 1)
                for _ in S:
                    picked.pop()
            for w in S:
                negc[w] -= 1

    yield from rec(0)


def _allowed_from_filter(compat: list[SrsgParams]):
    return (
        frozenset(p.a for p in compat if p.a is not None),
        frozenset(p.b for p in compat if p.b is not None),
        frozenset(p.c for p in compat if p.c is not None),
    )


def _split_tasks(nbr, n, k, allowed, jobs):
    """Deterministic top-of-tree task prefixes; aims for a few per worker.

    Returns (prefixes, counters) where counters cover the prefix-tree nodes
    (the part of the search the parent process explored itself).
    """
    depth = 1
    prefixes: list[tuple] = []
    counters = [0, 0, 0, 0]
    while depth < n:
        _, prefixes, counters, _ = _search_raw(nbr, n, k, allowed, None, (), stop_depth=depth)
        if len(prefixes) >= 4 * jobs or not prefixes:
            break
        depth += 1
    return prefixes, counters


def _dedupe_hits(graphs: list[SignedGraph], mode: str) -> list[Hit]:
    hits: list[Hit] = []
    if mode == "none":
        for g in graphs:
            p = extract_params(g)
            cls, _ = classify(g)
            hits.append(Hit(g, p, cls, canonical_form(g)))
        hits.sort(key=lambda h: (h.canonical, h.graph.pos, h.graph.neg))
        return hits
    seen: dict[bytes, None] = {}
    for g in graphs:
        key = canonical_form(g)
        if mode == "iso-neg":
            key = min(key, canonical_form(negation(g)))
        if key not in seen:
            seen[key] = None
    for key in sorted(seen):
        rep = decode_canonical(key)
        cls, p = classify(rep)
        hits.append(Hit(rep, p, cls, key))
    return hits


def search_srsg(g: UGraph, cfg: SearchConfig) -> SearchReport:
    """Enumerate all net-degree-rho strongly regular signings of g.

    The underlying graph must be regular (DegreeMismatch otherwise) and,
    unless cfg.require_connected is off, connected.  A degree/net-degree
    parity mismatch is answered with an empty exhaustive report: no signing
    exists, which is a result rather than an error.
    """
    degs = g.degrees()
    r = degs[0]
    if min(degs) != max(degs):
        raise DegreeMismatch("underlying graph is not regular")
    if cfg.require_connected and not g.is_connected():
        raise DisconnectedInput("underlying graph is not connected")
    if cfg.dedupe not in ("none", "iso", "iso-neg"):
        raise ValueError(f"unknown dedupe mode {cfg.dedupe!r}")

    t0 = time.perf_counter()
    stats = SearchStats()
    if (r - cfg.rho) % 2 != 0 or not 0 <= (r - cfg.rho) // 2 <= r:
        stats.wall_time = time.perf_counter() - t0
        return SearchReport(cfg.rho, [], stats, True, 0, note="vacuous: no k-regular negative subgraph fits this net-degree")
    k = (r - cfg.rho) // 2

    filter_set = None
    if cfg.param_filter is not None:
        compat = [p for p in cfg.param_filter if p.n == g.n and p.r == r]
        if not compat:
            stats.wall_time = time.perf_counter() - t0
            return SearchReport(cfg.rho, [], stats, True, 0, note="filter excludes this order or degree")
        filter_set = set(compat)
        allowed = _allowed_from_filter(compat) if cfg.pair_prune else None
    else:
        allowed = "learn" if cfg.pair_prune else None

    n, nbr = g.n, g.nbr
    exhaustive = True
    raw: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    if cfg.jobs <= 1:
        raw, _, counters, exhaustive = _search_raw(nbr, n, k, allowed, cfg.node_budget)
        stats.nodes, stats.leaves, stats.pruned_degree, stats.pruned_pair = counters
    else:
        prefixes, counters = _split_tasks(nbr, n, k, allowed, cfg.jobs)
        if not prefixes:
            # nothing survived the top blocks (or the tree is a single stalk);
            # the sequential run is authoritative and cheap here
            raw, _, counters, exhaustive = _search_raw(nbr, n, k, allowed, cfg.node_budget)
            stats.nodes, stats.leaves, stats.pruned_degree, stats.pruned_pair = counters
        else:
            stats.nodes, stats.leaves, stats.pruned_degree, stats.pruned_pair = counters
            per_budget = None
            if cfg.node_budget is not None:
                per_budget = max(1, cfg.node_budget // len(prefixes))
            payloads = [(nbr, n, k, allowed, per_budget, p) for p in prefixes]
            with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
                for traw, tcounters, texh in ex.map(_task_worker, payloads):
                    raw.extend(traw)
                    stats.nodes += tcounters[_NODES]
                    stats.leaves += tcounters[_LEAVES]
                    stats.pruned_degree += tcounters[_PDEG]
                    stats.pruned_pair += tcounters[_PPAIR]
                    exhaustive = exhaustive and texh

    # leaf verification: recompute parameters exactly and apply the filter,
    # whether or not pair pruning already enforced them
    found: list[SignedGraph] = []
    for pm, nm in raw:
        sg = SignedGraph(n, pm, nm)
        p = extract_params(sg)
        if p is None:
            continue
        if filter_set is not None and p not in filter_set:
            continue
        found.append(sg)
    stats.raw_hits = len(found)

    hits = _dedupe_hits(found, cfg.dedupe)
    stats.wall_time = time.perf_counter() - t0
    return SearchReport(cfg.rho, hits, stats, exhaustive, len(found))


def search_catalog(graphs: list[tuple[str, UGraph]], cfg: SearchConfig) -> CatalogSearchReport:
    """Search every (name, graph) entry and aggregate with global dedupe.

    When several graphs are given and jobs > 1, parallelism is spent across
    graphs (one worker each, deterministic merge); a single graph gets
    branch-level parallelism instead.
    """
    per_graph: list[dict] = []
    stats = SearchStats()
    all_found: list[SignedGraph] = []
    exhaustive = True

    across = cfg.jobs > 1 and len(graphs) >= 2
    inner_dedupe = "iso" if cfg.dedupe != "none" else "none"
    inner_cfg = replace(cfg, dedupe=inner_dedupe, jobs=1 if across else cfg.jobs)

    def run_one(item):
        name, g = item
        return name, search_srsg(g, inner_cfg)

    if across:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_catalog_worker, [(name, g, inner_cfg) for name, g in graphs]))
    else:
        results = [run_one(item) for item in graphs]

    t_wall = 0.0
    for name, rep in results:
        stats.add(rep.stats)
        t_wall = max(t_wall, rep.stats.wall_time)
        exhaustive = exhaustive and rep.exhaustive
        per_graph.append(
            {
                "name": name,
                "raw_hits": rep.raw_count,
                "nodes": rep.stats.nodes,
                "leaves": rep.stats.leaves,
                "exhaustive": rep.exhaustive,
                "note": rep.note,
            }
        )
        all_found.extend(h.graph for h in rep.hits)

    hits = _dedupe_hits(all_found, cfg.dedupe)
    stats.raw_hits = sum(pg["raw_hits"] for pg in per_graph)
    stats.wall_time = t_wall
    return CatalogSearchReport(cfg.rho, hits, stats, exhaustive, per_graph)


def _catalog_worker(payload):
    name, g, cfg = payload
    return name, search_srsg(g, cfg)
