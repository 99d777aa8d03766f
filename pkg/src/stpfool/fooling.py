"""Fooling sets over (subset, tree) pairs and their 0/1 support matrix.

A fooling set is an ordered list of pairs (S_1,T_1), ..., (S_r,T_r) with
support(S_j,T_j) = 1 on the diagonal and, for every i != j,
support(S_i,T_j) * support(S_j,T_i) = 0.  Its induced r x r matrix sm with
sm[i][j] = support(S_i,T_j) therefore has an all-ones diagonal while each
off-diagonal mirror pair contains a zero.  The size of the largest fooling
set lower-bounds the number of inequalities in any extended formulation of
the spanning tree polytope, which is what makes the upper-bound machinery
in `stpfool.audit` interesting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trees import NodeSubset, Tree, canonical_edge, support


@dataclass(frozen=True)
class STPair:
    """One (subset, tree) pair; both sides over the same ground set."""

    s: NodeSubset
    t: Tree

    def __post_init__(self) -> None:
        if self.s.n != self.t.n:
            raise ValueError(f"subset over [{self.s.n}] paired with tree over [{self.t.n}]")

    @property
    def n(self) -> int:
        return self.s.n


@dataclass(frozen=True)
class FoolingSet:
    """Ordered list of (S_i, T_i) candidates; may or may not verify as a fooling set."""

    n: int
    pairs: tuple[STPair, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n!r}")
        for p in self.pairs:
            if p.n != self.n:
                raise ValueError(f"pair over [{p.n}] in a fooling set over [{self.n}]")

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the fooling-set conditions; violations carry 1-based pair indices."""

    valid: bool
    violations: tuple[dict, ...]


def verify_fooling_set(fs: FoolingSet) -> VerificationReport:
    """Check the diagonal and cross conditions, reporting every violation.

    A repeated pair shows up as a cross violation of {i, j} since both its
    diagonal values are 1.
    """
    violations = []
    vals = support_matrix(fs)
    r = fs.size
    for j in range(r):
        if vals[j][j] != 1:
            violations.append({"kind": "diagonal", "index": j + 1})
    for i in range(r):
        for j in range(i + 1, r):
            if vals[i][j] and vals[j][i]:
                violations.append({"kind": "cross", "i": i + 1, "j": j + 1})
    return VerificationReport(valid=not violations, violations=tuple(violations))


def support_matrix(fs: FoolingSet) -> np.ndarray:
    """The r x r matrix of support(S_i, T_j) values, dtype uint8."""
    r = fs.size
    m = np.zeros((r, r), dtype=np.uint8)
    for i, pi in enumerate(fs.pairs):
        for j, pj in enumerate(fs.pairs):
            m[i, j] = support(pi.s, pj.t)
    return m


def lift_fooling_set(fs: FoolingSet, new_n: int) -> FoolingSet:
    """Re-embed over a larger ground set by hanging each new node off node 1.

    No added edge lies inside an old subset, so every support value (and
    hence validity) is preserved.
    """
    if new_n < fs.n:
        raise ValueError(f"cannot lift from n={fs.n} down to {new_n}")
    if new_n == fs.n:
        return fs
    extra = tuple(canonical_edge(1, v) for v in range(fs.n + 1, new_n + 1))
    pairs = tuple(
        STPair(NodeSubset(new_n, p.s.mask), Tree(new_n, p.t.edges + extra))
        for p in fs.pairs
    )
    return FoolingSet(new_n, pairs)
