"""Witness triples certifying that a subset is disconnected in a tree.

A witness for support(S,T) = 1 is a triple (a, x, b) with a, b in S, x
outside S, and x on the unique T-path between a and b.  One exists exactly
when S is disconnected in T: the induced forest then has several
components, and the T-path between nodes of different components must
leave S.  Reversal (b, x, a) of a witness is again a witness.

`witness_edge` realizes the constructive step used in the zero-counting
argument: given a second tree T' in which S *is* connected, some edge of
T' inside S has its endpoints witnessing with the given middle node x.
Taking a witness pair at minimum distance in the induced subtree of T'
yields such an edge; `check_triangle` captures the exchange step that
makes the minimum work (of the three triples on a,b,c with middle x,
never exactly one is a witness).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .trees import NodeSubset, Tree, _check_node, canonical_edge, is_connected_in, support


class Witness(NamedTuple):
    a: int
    x: int
    b: int


@dataclass(frozen=True)
class WitnessSet:
    """All witnesses for support(s,t)=1 sharing the middle node x; closed under reversal."""

    x: int
    s: NodeSubset
    t: Tree
    triples: frozenset[Witness]

    def __len__(self) -> int:
        return len(self.triples)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Canonical (a<b) endpoint pairs, sorted; reversals collapsed."""
        return tuple(sorted({canonical_edge(w.a, w.b) for w in self.triples}))


def _on_path(t: Tree, a: int, x: int, b: int) -> bool:
    d = t.dist
    return d[a][x] + d[x][b] == d[a][b]


def is_witness(s: NodeSubset, t: Tree, w: Witness) -> bool:
    """True iff a,b in S, x outside S, and x lies on the T-path between a and b."""
    a, x, b = w
    for v in (a, x, b):
        _check_node(v, t.n)
    if a not in s or b not in s or x in s:
        return False
    return _on_path(t, a, x, b)


def find_witness(s: NodeSubset, t: Tree) -> Optional[Witness]:
    """Some witness if S is disconnected in T, else None.

    Scanning every x outside S against every pair of S is equivalent to the
    component-shrinking construction: within one induced component the
    T-path stays inside S, so a hit forces a and b into different
    components, and for disconnected S a path between two components always
    passes a node outside S.  Ties: smallest x, then lexicographically
    smallest (a, b) with a < b.
    """
    if support(s, t) == 0:
        return None
    mem = s.members
    for x in range(1, t.n + 1):
        if x in s:
            continue
        for i, a in enumerate(mem):
            for b in mem[i + 1:]:
                if _on_path(t, a, x, b):
                    return Witness(a, x, b)
    raise AssertionError("disconnected subset must have a witness")


def witnesses_with_middle(s: NodeSubset, t: Tree, x: int) -> WitnessSet:
    """The set of all witnesses (a, x, b) with the given middle node."""
    _check_node(x, t.n)
    triples = set()
    if x not in s:
        mem = s.members
        for i, a in enumerate(mem):
            for b in mem[i + 1:]:
                if _on_path(t, a, x, b):
                    triples.add(Witness(a, x, b))
                    triples.add(Witness(b, x, a))
    return WitnessSet(x, s, t, frozenset(triples))


@lru_cache(maxsize=None)
def _middle_pairs(s: NodeSubset, t: Tree, x: int) -> tuple[tuple[int, int], ...]:
    return witnesses_with_middle(s, t, x).pairs()


@lru_cache(maxsize=None)
def witness_middles(s: NodeSubset, t: Tree) -> tuple[int, ...]:
    """Nodes x (ascending) that are the middle of some witness for support(s,t)=1."""
    return tuple(
        x for x in range(1, t.n + 1) if x not in s and _middle_pairs(s, t, x)
    )


@lru_cache(maxsize=None)
def all_witnesses(s: NodeSubset, t: Tree) -> frozenset[Witness]:
    """Every witness triple for support(s,t)=1 (both orientations)."""
    triples = set()
    for x in witness_middles(s, t):
        triples |= witnesses_with_middle(s, t, x).triples
    return frozenset(triples)


@lru_cache(maxsize=None)
def _induced_dists(s: NodeSubset, t_prime: Tree) -> dict[tuple[int, int], int]:
    """Distances inside the subtree of t_prime induced on S (S must be connected)."""
    mem = s.members
    adj = {v: [] for v in mem}
    for u, v in t_prime.edges:
        if u in s and v in s:
            adj[u].append(v)
            adj[v].append(u)
    dists = {}
    for root in mem:
        depth = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for w in frontier:
                for u in adj[w]:
                    if u not in depth:
                        depth[u] = depth[w] + 1
                        nxt.append(u)
            frontier = nxt
        for v, d in depth.items():
            dists[(root, v)] = d
    return dists


@lru_cache(maxsize=None)
def witness_edge(s: NodeSubset, t: Tree, t_prime: Tree, x: int) -> tuple[int, int]:
    """An edge {a,b} of t_prime inside S whose triple (a, x, b) witnesses support(s,t)=1.

    Requires a witness with middle x to exist and S to be connected in
    t_prime.  Among witness pairs, returns one at minimum distance in the
    induced subtree of t_prime (ties: smallest canonical edge); the
    exchange argument guarantees the minimum is an edge.
    """
    _check_node(x, t.n)
    pairs = _middle_pairs(s, t, x)
    if not pairs:
        raise ValueError(f"no witness with middle node {x} for this (S, T)")
    if not is_connected_in(t_prime, s):
        raise ValueError("S is not connected in t_prime")
    qdist = _induced_dists(s, t_prime)
    return min(pairs, key=lambda e: (qdist[e], e))


def check_triangle(s: NodeSubset, t: Tree, a: int, b: int, c: int, x: int) -> bool:
    """Of the triples (a,x,b), (b,x,c), (c,x,a): true iff none or at least two witness."""
    if len({a, b, c}) != 3:
        raise ValueError(f"nodes {a}, {b}, {c} must be distinct")
    hits = (
        int(is_witness(s, t, Witness(a, x, b)))
        + int(is_witness(s, t, Witness(b, x, c)))
        + int(is_witness(s, t, Witness(c, x, a)))
    )
    return hits != 1
