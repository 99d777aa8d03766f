"""Labeled trees on [n], node subsets, and the subtour support function.

The ground set is [n] = {1, ..., n}.  Edges are unordered pairs stored as
(min, max) tuples.  A node subset S (proper, with 2 <= |S| <= n-1) is kept
as an n-bit mask so membership and induced-edge tests are word operations.

A spanning tree T satisfies the subtour inequality for S,

    #(edges of T with both endpoints in S)  <=  |S| - 1,

always; `slack` is the gap and `support` is the 0/1 indicator of a positive
gap.  Because T is acyclic the gap is zero exactly when S induces a subtree
of T ("S is connected in T").

Trees are in bijection with Prufer sequences of length n-2; the codec here
always removes/attaches the smallest available leaf, which makes
`enumerate_trees` (lexicographic over sequences) a canonical tree order.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

# n**(n-2) trees; enumeration beyond this is refused up front.
ENUMERATION_CAP = 12


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Unordered pair {u,v} as a (min, max) tuple."""
    if u == v:
        raise ValueError(f"edge endpoints must differ, got {{{u},{v}}}")
    return (u, v) if u < v else (v, u)


def edge_slot(u: int, v: int) -> int:
    """Bit position of edge {u,v} in edge bitmasks (triangular numbering)."""
    u, v = canonical_edge(u, v)
    return (v - 1) * (v - 2) // 2 + (u - 1)


def _check_node(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
        raise ValueError(f"node {v!r} out of range 1..{n}")


@dataclass(frozen=True)
class Tree:
    """Spanning tree on [n]: exactly n-1 edges, connected.

    Edges are canonicalized ((min, max), sorted) on construction, so equal
    trees compare and hash identically regardless of input order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"tree needs n >= 2, got {self.n!r}")
        edges = tuple(sorted(canonical_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.n - 1:
            raise ValueError(f"tree on [{self.n}] needs {self.n - 1} edges, got {len(edges)}")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        adj = [0] * (self.n + 1)
        for u, v in edges:
            _check_node(u, self.n)
            _check_node(v, self.n)
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        # n-1 edges + connected == tree
        seen = 1  # node 1, as a bitmask over bits 0..n-1
        stack = [1]
        while stack:
            w = stack.pop()
            new = adj[w] & ~seen
            seen |= new
            while new:
                b = new & -new
                stack.append(b.bit_length())
                new ^= b
        if seen != (1 << self.n) - 1:
            raise ValueError("edge set is not connected")

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """adjacency[v] = bitmask of neighbors of v (bit u-1 for node u); index 0 unused."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return tuple(adj)

    @cached_property
    def edge_bits(self) -> int:
        """Bitmask of this tree's edges over `edge_slot` positions."""
        bits = 0
        for u, v in self.edges:
            bits |= 1 << edge_slot(u, v)
        return bits

    @cached_property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs path distances; dist[a][b] with 1-based nodes, row/col 0 unused."""
        rows = [(0,) * (self.n + 1)]
        for root in range(1, self.n + 1):
            d = [0] * (self.n + 1)
            seen = 1 << (root - 1)
            frontier = [root]
            depth = 0
            while frontier:
                depth += 1
                nxt = []
                for w in frontier:
                    new = self.adjacency[w] & ~seen
                    seen |= new
                    while new:
                        b = new & -new
                        u = b.bit_length()
                        d[u] = depth
                        nxt.append(u)
                        new ^= b
                frontier = nxt
            rows.append(tuple(d))
        return tuple(rows)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in set(self.edges)


@dataclass(frozen=True)
class NodeSubset:
    """Proper subset S of [n] with |S| >= 2, stored as an n-bit mask (bit v-1 = node v)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"subset needs n >= 2, got {self.n!r}")
        if not isinstance(self.mask, int) or self.mask <= 0 or self.mask >= (1 << self.n):
            raise ValueError(f"mask {self.mask!r} not an {self.n}-bit subset mask")
        k = self.mask.bit_count()
        if not 2 <= k <= self.n - 1:
            raise ValueError(f"subset size must be in 2..{self.n - 1}, got {k}")

    @classmethod
    def of(cls, n: int, members) -> "NodeSubset":
        mask = 0
        for v in members:
            _check_node(v, n)
            mask |= 1 << (v - 1)
        return cls(n, mask)

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.mask >> (v - 1) & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def inside_edge_bits(self) -> int:
        """Bitmask over `edge_slot` positions of all pairs inside S."""
        bits = 0
        mem = self.members
        for i, u in enumerate(mem):
            for v in mem[i + 1:]:
                bits |= 1 << edge_slot(u, v)
        return bits

    def __contains__(self, v: int) -> bool:
        return 1 <= v <= self.n and bool(self.mask >> (v - 1) & 1)


@dataclass(frozen=True)
class PruferSeq:
    """Prufer code: n and a sequence of length n-2 over [n]."""

    n: int
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"Prufer code needs n >= 2, got {self.n!r}")
        seq = tuple(self.seq)
        object.__setattr__(self, "seq", seq)
        if len(seq) != self.n - 2:
            raise ValueError(f"Prufer code for n={self.n} must have length {self.n - 2}, got {len(seq)}")
        for v in seq:
            _check_node(v, self.n)


def prufer_decode(code: PruferSeq) -> Tree:
    """The unique tree with the given Prufer code (attach smallest current leaf first)."""
    n = code.n
    degree = [1] * (n + 1)
    degree[0] = 0
    for s in code.seq:
        degree[s] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in code.seq:
        leaf = heapq.heappop(leaves)
        edges.append(canonical_edge(leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append(canonical_edge(u, v))
    return Tree(n, tuple(edges))


def prufer_encode(t: Tree) -> PruferSeq:
    """Prufer code of a tree (remove smallest current leaf first); inverse of decode."""
    n = t.n
    neighbors = [set() for _ in range(n + 1)]
    for u, v in t.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    leaves = [v for v in range(1, n + 1) if len(neighbors[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        nb = neighbors[leaf].pop()
        seq.append(nb)
        neighbors[nb].discard(leaf)
        if len(neighbors[nb]) == 1:
            heapq.heappush(leaves, nb)
    return PruferSeq(n, tuple(seq))


def tree_count(n: int) -> int:
    """Cayley: n**(n-2) labeled trees on [n]."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return n ** (n - 2)


def subset_count(n: int) -> int:
    """2**n - n - 2 proper subsets with at least two members (0 for n=2)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return (1 << n) - n - 2


def _check_enumeration_scale(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need integer n >= 2, got {n!r}")
    if n > ENUMERATION_CAP:
        raise ValueError(f"enumeration refused for n={n} > {ENUMERATION_CAP} (n**(n-2) trees)")


def tree_from_index(n: int, index: int) -> Tree:
    """index-th tree (0-based) in the lexicographic-Prufer enumeration order."""
    _check_enumeration_scale(n)
    total = tree_count(n)
    if not 0 <= index < total:
        raise ValueError(f"tree index {index} out of range 0..{total - 1}")
    digits = []
    for _ in range(n - 2):
        digits.append(index % n + 1)
        index //= n
    return prufer_decode(PruferSeq(n, tuple(reversed(digits))))


def tree_index(t: Tree) -> int:
    """Position of a tree in the `enumerate_trees` order."""
    idx = 0
    for s in prufer_encode(t).seq:
        idx = idx * t.n + (s - 1)
    return idx


def enumerate_trees(n: int) -> Iterator[Tree]:
    """All labeled trees on [n], in lexicographic Prufer order; n**(n-2) of them."""
    _check_enumeration_scale(n)
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(PruferSeq(n, seq))


def subset_masks(n: int) -> list[int]:
    """Masks of all valid subsets in increasing order; defines subset row indexing."""
    _check_enumeration_scale(n)
    return [m for m in range(3, 1 << n) if 2 <= m.bit_count() <= n - 1]


def enumerate_subsets(n: int) -> Iterator[NodeSubset]:
    """All proper subsets with |S| >= 2 in increasing-mask order (empty for n=2)."""
    for m in subset_masks(n):
        yield NodeSubset(n, m)


def _check_same_n(s: NodeSubset, t: Tree) -> None:
    if s.n != t.n:
        raise ValueError(f"subset is over [{s.n}] but tree is over [{t.n}]")


def induced_edge_count(s: NodeSubset, t: Tree) -> int:
    """Number of tree edges with both endpoints in S."""
    _check_same_n(s, t)
    return (t.edge_bits & s.inside_edge_bits).bit_count()


def is_connected_in(t: Tree, s: NodeSubset) -> bool:
    """True iff S induces a subtree of T.

    The induced subgraph of a tree is a forest, so it is connected exactly
    when it has |S|-1 edges.
    """
    return induced_edge_count(s, t) == s.size - 1


def slack(s: NodeSubset, t: Tree) -> int:
    """(|S|-1) minus the induced edge count; nonnegative, zero iff S is connected in T."""
    return s.size - 1 - induced_edge_count(s, t)


def support(s: NodeSubset, t: Tree) -> int:
    """1 if the subtour inequality for S is slack at T (S disconnected in T), else 0."""
    return 0 if is_connected_in(t, s) else 1


def path_in_tree(t: Tree, a: int, b: int) -> tuple[int, ...]:
    """The unique simple path from a to b, endpoints included; (a,) when a == b."""
    _check_node(a, t.n)
    _check_node(b, t.n)
    if a == b:
        return (a,)
    parent = [0] * (t.n + 1)
    seen = 1 << (b - 1)
    stack = [b]
    while stack:
        w = stack.pop()
        new = t.adjacency[w] & ~seen
        seen |= new
        while new:
            bit = new & -new
            u = bit.bit_length()
            parent[u] = w
            stack.append(u)
            new ^= bit
    path = [a]
    w = a
    while w != b:
        w = parent[w]
        path.append(w)
    return tuple(path)
