"""Maximum fooling-set search: seeded greedy and exact branch-and-bound.

The candidate pairs V = { (S,T) : support(S,T) = 1 } form the vertices of a
compatibility graph with an edge between p and q exactly when
support(S_p,T_q) * support(S_q,T_p) = 0.  A fooling set is precisely a
clique of that graph, so exact search is maximum clique: branch-and-bound
with greedy-coloring upper bounds over adjacency bitsets, vertices
preordered by degeneracy.  Greedy mode scans the candidate pairs in a
seeded order and keeps whatever stays compatible, which always yields a
maximal (not maximum) fooling set.

Determinism: all randomness flows from the seed, the branch-and-bound is
sequential, and identical inputs reproduce the identical clique as long as
the run completes within its time budget.
"""

from __future__ import annotations

import heapq
import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .audit import fooling_set_size_bound
from .fooling import FoolingSet, STPair, verify_fooling_set
from .trees import (
    NodeSubset,
    Tree,
    canonical_edge,
    enumerate_subsets,
    enumerate_trees,
    subset_count,
    subset_masks,
    support,
    tree_count,
    tree_from_index,
)

# exact mode builds the full compatibility graph; past n=6 that is hopeless
EXACT_SOFT_CAP = 5
EXACT_HARD_CAP = 6
_UNIVERSE_CAP = 7
_HEURISTIC_RESTARTS = 32
_INCUMBENT_RESTARTS = 16


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search run; `best` always passes verify_fooling_set."""

    best: FoolingSet
    size: int
    proven_optimal: bool
    nodes_explored: int
    wall_time: float
    upper_bound: int


@lru_cache(maxsize=None)
def _universe(n: int):
    """(subsets, trees, rows) with rows[si][ti] = support; the deterministic pair grid."""
    subsets = tuple(enumerate_subsets(n))
    trees = tuple(enumerate_trees(n))
    rows = [bytes(support(s, t) for t in trees) for s in subsets]
    return subsets, trees, rows


def _lcg_order(m: int, rng: random.Random):
    """Seeded permutation of range(m) in O(1) memory.

    Full-period LCG over the next power of two (multiplier 5 mod 8, odd
    increment), walking past values >= m.
    """
    if m <= 0:
        return
    period = 1 << max(1, (m - 1).bit_length())
    a = (rng.getrandbits(60) << 3) | 5
    c = (rng.getrandbits(60) << 1) | 1
    x = rng.randrange(period)
    for _ in range(period):
        if x < m:
            yield x
        x = (a * x + c) & (period - 1)


def greedy_fooling_set(n: int, seed: int = 0) -> FoolingSet:
    """Seeded greedy scan over candidate pairs; the result is a maximal fooling set.

    Every rejected candidate conflicted with an already accepted pair, and
    accepted pairs are never dropped, so nothing outside the result is
    compatible with all of it.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need integer n >= 2, got {n!r}")
    if subset_count(n) == 0:
        return FoolingSet(n, ())
    rng = random.Random(seed)
    if n <= _UNIVERSE_CAP:
        subsets, trees, rows = _universe(n)
        nt = len(trees)
        acc: list[tuple[int, int]] = []
        for idx in _lcg_order(len(subsets) * nt, rng):
            si, ti = divmod(idx, nt)
            if not rows[si][ti]:
                continue
            if all(not (rows[si][tj] and rows[sj][ti]) for sj, tj in acc):
                acc.append((si, ti))
        pairs = tuple(STPair(subsets[si], trees[ti]) for si, ti in acc)
    else:
        masks = subset_masks(n)
        nt = tree_count(n)
        accepted: list[STPair] = []
        for idx in _lcg_order(len(masks) * nt, rng):
            si, ti = divmod(idx, nt)
            s = NodeSubset(n, masks[si])
            t = tree_from_index(n, ti)
            if support(s, t) != 1:
                continue
            if all(support(s, q.t) * support(q.s, t) == 0 for q in accepted):
                accepted.append(STPair(s, t))
        pairs = tuple(accepted)
    return _checked(FoolingSet(n, pairs))


def random_fooling_sets(n: int, seed: int, count: int):
    """`count` seeded random maximal fooling sets (greedy over derived seeds)."""
    rng = random.Random(seed)
    child_seeds = [rng.getrandbits(64) for _ in range(count)]
    for s in child_seeds:
        yield greedy_fooling_set(n, s)


def _checked(fs: FoolingSet) -> FoolingSet:
    report = verify_fooling_set(fs)
    if not report.valid:
        raise AssertionError(f"search produced an invalid fooling set: {report.violations[:3]}")
    return fs


def _candidate_vertices(n: int):
    """V in deterministic order (subset-major) plus the support grid."""
    subsets, trees, rows = _universe(n)
    verts = [
        (si, ti)
        for si in range(len(subsets))
        for ti in range(len(trees))
        if rows[si][ti]
    ]
    return subsets, trees, rows, verts


def _adjacency_bitsets(rows, verts) -> list[int]:
    """Compatibility adjacency, one Python-int bitset per vertex."""
    grid = np.array([bytearray(r) for r in rows], dtype=np.uint8)
    s_of = np.fromiter((v[0] for v in verts), dtype=np.intp, count=len(verts))
    t_of = np.fromiter((v[1] for v in verts), dtype=np.intp, count=len(verts))
    adj = []
    for p in range(len(verts)):
        f_pq = grid[s_of[p], t_of]  # support(S_p, T_q) over q
        f_qp = grid[s_of, t_of[p]]  # support(S_q, T_p) over q
        compat = (f_pq & f_qp) == 0
        compat[p] = False
        bits = np.packbits(compat, bitorder="little")
        adj.append(int.from_bytes(bits.tobytes(), "little"))
    return adj


def _degeneracy_order(adj: list[int]) -> list[int]:
    """Smallest-last peel order; ties by smallest vertex index (lazy min-heap)."""
    nv = len(adj)
    alive = (1 << nv) - 1
    deg = [a.bit_count() for a in adj]
    heap = [(deg[v], v) for v in range(nv)]
    heapq.heapify(heap)
    removed = [False] * nv
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        alive ^= 1 << v
        nbrs = adj[v] & alive
        while nbrs:
            b = nbrs & -nbrs
            u = b.bit_length() - 1
            deg[u] -= 1
            heapq.heappush(heap, (deg[u], u))
            nbrs ^= b
    return order


def _color_sort(p_mask: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy color classes of the vertices in p_mask; emitted in ascending color."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = p_mask
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            b = q & -q
            v = b.bit_length() - 1
            q = (q ^ b) & ~adj[v]
            uncolored ^= b
            order.append(v)
            colors.append(color)
    return order, colors


def _greedy_clique(adj: list[int], order) -> list[int]:
    cand = (1 << len(adj)) - 1
    clique = []
    for v in order:
        if cand >> v & 1:
            clique.append(v)
            cand &= adj[v]
            if not cand:
                break
    return clique


def _class_masks(verts, which: int) -> list[int]:
    """Bitsets of vertices sharing a subset (which=0) or tree (which=1) index.

    Same-subset and same-tree vertices are pairwise incompatible (their
    cross supports are both 1), so each class is an independent set and a
    clique meets it at most once.
    """
    masks: dict[int, int] = {}
    for v, key in enumerate(verts):
        masks[key[which]] = masks.get(key[which], 0) | (1 << v)
    return [masks[k] for k in sorted(masks)]


def _vertex_orbits(n: int, subsets, trees, verts) -> list[list[int]]:
    """Orbits of candidate pairs under relabeling of the ground set.

    Node permutations preserve support and compatibility, so one orbit
    representative stands in for every symmetric root branch of the clique
    search.
    """
    subset_of_mask = {s.mask: i for i, s in enumerate(subsets)}
    index_of_tree = {t: i for i, t in enumerate(trees)}
    vid = {v: i for i, v in enumerate(verts)}
    parent = list(range(len(verts)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for sigma in itertools.permutations(range(1, n + 1)):
        if sigma == tuple(range(1, n + 1)):
            continue
        sub_map = [
            subset_of_mask[_permute_mask(s.mask, sigma)] for s in subsets
        ]
        tree_map = [
            index_of_tree[Tree(n, tuple(
                canonical_edge(sigma[u - 1], sigma[v - 1]) for u, v in t.edges
            ))]
            for t in trees
        ]
        for v, (si, ti) in enumerate(verts):
            u = vid[(sub_map[si], tree_map[ti])]
            ra, rb = find(v), find(u)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(len(verts)):
        groups.setdefault(find(v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def _permute_mask(mask: int, sigma) -> int:
    out = 0
    v = 1
    while mask:
        if mask & 1:
            out |= 1 << (sigma[v - 1] - 1)
        mask >>= 1
        v += 1
    return out


def search_max_fooling_set(
    n: int,
    mode: str = "exact",
    time_limit: float = 60.0,
    seed: int = 0,
    allow_large: bool = False,
) -> SearchResult:
    """Largest fooling set on [n], exactly or heuristically.

    Exact mode proves optimality by exhausting one branch-and-bound
    subproblem per symmetry orbit of the candidate pairs; if the time
    budget runs out first, the incumbent is returned with
    proven_optimal=False and `upper_bound` set to the tightest of the root
    coloring bound, the class-partition bounds, and the unfinished orbit
    bounds.  Heuristic mode is multi-start greedy and claims optimality
    only when the result happens to reach the subset-count ceiling.  Exact
    mode refuses n > 5 unless `allow_large` is set, and n > 6
    unconditionally (the compatibility graph stops fitting).
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need integer n >= 2, got {n!r}")
    if mode not in ("exact", "heuristic"):
        raise ValueError(f"mode must be 'exact' or 'heuristic', got {mode!r}")
    if time_limit <= 0:
        raise ValueError(f"time limit must be positive, got {time_limit!r}")
    t0 = time.monotonic()

    if subset_count(n) == 0:
        return SearchResult(_checked(FoolingSet(n, ())), 0, True, 0, time.monotonic() - t0, 0)

    if mode == "heuristic":
        return _search_heuristic(n, time_limit, seed, t0)

    if n > EXACT_SOFT_CAP and not allow_large:
        raise ValueError(
            f"exact search refused for n={n}: candidate-pair graph explodes; "
            f"pass allow_large / --force-large (supported up to n={EXACT_HARD_CAP})"
        )
    if n > EXACT_HARD_CAP:
        raise ValueError(f"exact search is not supported beyond n={EXACT_HARD_CAP}")

    subsets, trees, rows, verts = _candidate_vertices(n)
    adj = _adjacency_bitsets(rows, verts)

    degen = _degeneracy_order(adj)
    pos = [0] * len(verts)
    for i, v in enumerate(degen):
        pos[v] = i
    verts2 = [verts[v] for v in degen]
    adj2 = _adjacency_bitsets(rows, verts2)
    nv = len(verts2)

    rng = random.Random(seed)
    by_degree = sorted(range(nv), key=lambda v: (-adj2[v].bit_count(), v))
    orders = [by_degree]
    for _ in range(_INCUMBENT_RESTARTS):
        shuffled = list(range(nv))
        rng.shuffle(shuffled)
        orders.append(shuffled)
    incumbent: list[int] = []
    for order in orders:
        c = _greedy_clique(adj2, order)
        if len(c) > len(incumbent):
            incumbent = c

    full = (1 << nv) - 1
    _, root_colors = _color_sort(full, adj2)
    s_classes = _class_masks(verts2, 0)
    t_classes = _class_masks(verts2, 1)

    # one branch-and-bound subproblem per symmetry orbit; a clique through
    # any orbit vertex maps to one through the representative, and orbits
    # already handled can be excluded outright
    rep_items = []
    for orbit in _vertex_orbits(n, subsets, trees, verts):
        mask = 0
        for v in orbit:
            mask |= 1 << pos[v]
        rep = min(pos[v] for v in orbit)
        _, cols = _color_sort(adj2[rep], adj2)
        bound = 1 + min(
            cols[-1] if cols else 0,
            _touched(adj2[rep], s_classes),
            _touched(adj2[rep], t_classes),
        )
        rep_items.append((bound, rep, mask))
    rep_items.sort(key=lambda it: (-it[0], it[1]))

    root_bound = min(
        root_colors[-1] if root_colors else 0,
        len(s_classes),
        len(t_classes),
        max(b for b, _, _ in rep_items),
    )

    nodes = 0
    proven = True
    best_vertices = incumbent
    pending_bounds = []
    if len(best_vertices) < root_bound:
        from ._bbkernel import BranchAndBound, CliqueContext

        ctx = CliqueContext(adj2, s_classes, t_classes)
        deadline = t0 + time_limit
        chunk = 200_000
        excluded = 0
        for idx, (bound, rep, mask) in enumerate(rep_items):
            if len(best_vertices) >= bound:
                # nothing through this orbit can beat the incumbent
                excluded |= mask
                continue
            bb = BranchAndBound(
                ctx, adj2[rep] & ~excluded, [rep], best_vertices, bound
            )
            last_nodes, last_t = bb.nodes, time.monotonic()
            timed_out = False
            while not bb.run(chunk):
                now = time.monotonic()
                if now > deadline:
                    timed_out = True
                    break
                # aim for ~2s chunks so the deadline is honored closely
                rate = max(1000.0, (bb.nodes - last_nodes) / max(1e-3, now - last_t))
                last_nodes, last_t = bb.nodes, now
                chunk = int(min(max(rate * 2.0, 100_000), 100_000_000))
            nodes += bb.nodes
            if len(bb.best) > len(best_vertices):
                best_vertices = bb.best
            if timed_out:
                proven = False
                pending_bounds = [b for b, _, _ in rep_items[idx:]]
                break
            excluded |= mask

    clique_orig = sorted(degen[v] for v in best_vertices)
    pairs = tuple(
        STPair(subsets[verts[v][0]], trees[verts[v][1]]) for v in clique_orig
    )
    best = _checked(FoolingSet(n, pairs))
    if proven:
        upper = len(best_vertices)
    else:
        upper = min(root_bound, max([len(best_vertices)] + pending_bounds))
    return SearchResult(best, len(best_vertices), proven, nodes, time.monotonic() - t0, upper)


def _touched(p_mask: int, class_masks: list[int]) -> int:
    return sum(1 for m in class_masks if m & p_mask)


def _search_heuristic(n: int, time_limit: float, seed: int, t0: float) -> SearchResult:
    rng = random.Random(seed)
    child_seeds = [rng.getrandbits(64) for _ in range(_HEURISTIC_RESTARTS)]
    deadline = t0 + time_limit
    best: FoolingSet | None = None
    scanned = 0
    for s in child_seeds:
        fs = greedy_fooling_set(n, s)
        scanned += 1
        if best is None or fs.size > best.size:
            best = fs
        if time.monotonic() > deadline:
            break
    assert best is not None
    # distinct subsets per pair cap any fooling set at the subset count
    upper = min(fooling_set_size_bound(n), subset_count(n))
    return SearchResult(
        _checked(best),
        best.size,
        best.size >= upper,
        scanned,
        time.monotonic() - t0,
        upper,
    )
