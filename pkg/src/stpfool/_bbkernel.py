"""Compiled branch-and-bound core for maximum clique on bitset adjacency.

Tomita-style: at every node the candidate set is greedily colored and
children are visited in descending color order, pruning once the stack
depth plus a candidate's color cannot beat the incumbent.  Two structural
prunes are layered on top: the candidate vertices partition into
independent "same subset" and "same tree" classes, so the number of
classes meeting the candidate set is also an upper bound, and it is much
tighter than greedy coloring near the root.

The kernel is iterative with an explicit frame stack and runs on a node
budget, so the Python caller can poll the wall clock between chunks and
suspend/resume without losing state.  Everything is deterministic: the
suspension point depends on the budget, the search trajectory does not.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

_DB = np.uint64(0x03F79D71B4CA8B09)
_DB_TABLE = np.zeros(64, dtype=np.int64)
for _i in range(64):
    _DB_TABLE[((1 << _i) * 0x03F79D71B4CA8B09 & ((1 << 64) - 1)) >> 58] = _i

# state vector slots
_DEPTH, _RLEN, _BEST, _NODES, _ENTER = 0, 1, 2, 3, 4


@njit(cache=True)
def _ctz(x, table):
    return table[((x & (~x + uint64(1))) * _DB) >> uint64(58)]


@njit(cache=True)
def _run(adj, scl, tcl, p_stack, order_st, color_st, len_st, idx_st,
         r_stack, best_arr, state, budget, un, q, table):
    depth = state[_DEPTH]
    rlen = state[_RLEN]
    best = state[_BEST]
    nodes = state[_NODES]
    entering = state[_ENTER]
    nwords = adj.shape[1]
    while depth >= 0:
        if entering == 1:
            if nodes >= budget:
                state[_DEPTH] = depth
                state[_RLEN] = rlen
                state[_BEST] = best
                state[_NODES] = nodes
                state[_ENTER] = entering
                return 1
            nodes += 1
            p = p_stack[depth]

            # class prune: every clique meets each same-subset (and each
            # same-tree) class at most once, so the number of classes
            # touching P bounds the residual clique.  The scan stops as
            # soon as it exceeds the useful threshold.
            threshold = best - rlen
            if threshold >= 0:
                prune = True
                cnt = 0
                for c in range(scl.shape[0]):
                    for w in range(nwords):
                        if scl[c, w] & p[w]:
                            cnt += 1
                            break
                    if cnt > threshold:
                        prune = False
                        break
                if not prune:
                    cnt = 0
                    prune = True
                    for c in range(tcl.shape[0]):
                        for w in range(nwords):
                            if tcl[c, w] & p[w]:
                                cnt += 1
                                break
                        if cnt > threshold:
                            prune = False
                            break
                if prune:
                    depth -= 1
                    if depth >= 0:
                        rlen -= 1
                    entering = 0
                    continue

            # greedy coloring, lowest set bit first inside each color class
            for w in range(nwords):
                un[w] = p[w]
            k = 0
            color = 0
            while True:
                nonzero = False
                for w in range(nwords):
                    q[w] = un[w]
                    if un[w]:
                        nonzero = True
                if not nonzero:
                    break
                color += 1
                while True:
                    wv = -1
                    for w in range(nwords):
                        if q[w]:
                            wv = w
                            break
                    if wv < 0:
                        break
                    v = (wv << 6) + _ctz(q[wv], table)
                    bit = uint64(1) << uint64(v & 63)
                    q[wv] ^= bit
                    un[wv] ^= bit
                    for w in range(nwords):
                        q[w] &= ~adj[v, w]
                    order_st[depth, k] = v
                    color_st[depth, k] = color
                    k += 1
            len_st[depth] = k
            idx_st[depth] = k
            entering = 0
            continue

        i = idx_st[depth] - 1
        if i < 0:
            depth -= 1
            if depth >= 0:
                rlen -= 1
            continue
        idx_st[depth] = i
        if rlen + color_st[depth, i] <= best:
            depth -= 1
            if depth >= 0:
                rlen -= 1
            continue
        v = order_st[depth, i]
        p = p_stack[depth]
        p[v >> 6] &= ~(uint64(1) << uint64(v & 63))
        empty = True
        for w in range(nwords):
            cw = p[w] & adj[v, w]
            p_stack[depth + 1, w] = cw
            if cw:
                empty = False
        if empty:
            if rlen + 1 > best:
                best = rlen + 1
                for j in range(rlen):
                    best_arr[j] = r_stack[j]
                best_arr[rlen] = v
        else:
            r_stack[rlen] = v
            rlen += 1
            depth += 1
            entering = 1
    state[_DEPTH] = depth
    state[_RLEN] = rlen
    state[_BEST] = best
    state[_NODES] = nodes
    state[_ENTER] = entering
    return 0


def _to_words(mask: int, nwords: int) -> np.ndarray:
    return np.frombuffer(
        mask.to_bytes(nwords * 8, "little"), dtype=np.uint64
    ).copy()


class CliqueContext:
    """Shared arrays for one compatibility graph (adjacency plus class masks)."""

    def __init__(self, adj: list[int], class_masks_a: list[int], class_masks_b: list[int]):
        self.nv = len(adj)
        self.nwords = max(1, (self.nv + 63) // 64)
        self.adj = np.vstack([_to_words(a, self.nwords) for a in adj])
        self.scl = np.vstack([_to_words(m, self.nwords) for m in class_masks_a])
        self.tcl = np.vstack([_to_words(m, self.nwords) for m in class_masks_b])


class BranchAndBound:
    """Resumable maximum-clique search over Python-int adjacency bitsets.

    `preset` pins vertices assumed in the clique (their common neighborhood
    must be `candidates`); used for orbit-representative subproblems.
    """

    def __init__(
        self,
        ctx: CliqueContext,
        candidates: int,
        preset: list[int],
        incumbent: list[int],
        depth_cap: int,
    ):
        self.ctx = ctx
        maxd = depth_cap + 3
        nwords = ctx.nwords
        self.p_stack = np.zeros((maxd, nwords), dtype=np.uint64)
        self.p_stack[0] = _to_words(candidates, nwords)
        self.order_st = np.zeros((maxd, ctx.nv), dtype=np.int32)
        self.color_st = np.zeros((maxd, ctx.nv), dtype=np.int32)
        self.len_st = np.zeros(maxd, dtype=np.int64)
        self.idx_st = np.zeros(maxd, dtype=np.int64)
        self.r_stack = np.zeros(maxd, dtype=np.int32)
        self.r_stack[: len(preset)] = preset
        self.best_arr = np.zeros(max(maxd, len(incumbent)), dtype=np.int32)
        self.best_arr[: len(incumbent)] = incumbent
        self.state = np.zeros(8, dtype=np.int64)
        self.state[_RLEN] = len(preset)
        self.state[_BEST] = len(incumbent)
        self.state[_ENTER] = 1
        self._un = np.zeros(nwords, dtype=np.uint64)
        self._q = np.zeros(nwords, dtype=np.uint64)
        self.done = False

    def run(self, node_budget: int) -> bool:
        """Advance by at most node_budget nodes; True once the search is exhausted."""
        if not self.done:
            status = _run(
                self.ctx.adj, self.ctx.scl, self.ctx.tcl,
                self.p_stack, self.order_st, self.color_st,
                self.len_st, self.idx_st, self.r_stack, self.best_arr,
                self.state, self.state[_NODES] + node_budget,
                self._un, self._q, _DB_TABLE,
            )
            self.done = status == 0
        return self.done

    @property
    def nodes(self) -> int:
        return int(self.state[_NODES])

    @property
    def best(self) -> list[int]:
        return [int(v) for v in self.best_arr[: self.state[_BEST]]]
