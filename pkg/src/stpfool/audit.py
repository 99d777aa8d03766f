"""Machine checks of the zero-counting argument that caps fooling-set sizes.

For a valid fooling set with support matrix sm, fix a column k and a node
x, and collect the rows i whose subset S_i is connected in T_k and whose
own pair (S_i, T_i) has a witness with middle node x (a "row cover").  The
argument being audited:

  * each row cover has at most n-1 members, because the witness-edge
    construction assigns each member a distinct edge of T_k;
  * every zero entry (i,k) of sm lies in some row cover, so a column has
    at most n(n-1) zeros;
  * no witness triple serves two distinct diagonal pairs;
  * with at least one zero per off-diagonal mirror pair, the zeros force
    r <= 2n(n-1) + 1.

Nothing here assumes those statements: the audits recompute covers, edges,
and witnesses from the support and witness primitives and report every
violation they can find.  A violation therefore means an implementation
bug, and the CLI treats it as its own loud exit code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fooling import FoolingSet, support_matrix
from .trees import _check_node
from .witness import all_witnesses, witness_edge, witness_middles


@dataclass(frozen=True)
class RowCover:
    """Rows (1-based) covered by middle node x in column k of the support matrix."""

    x: int
    k: int
    rows: frozenset[int]


@dataclass(frozen=True)
class AuditReport:
    """Cover sizes, column zero counts, and any violations found.

    cover_sizes[x-1][k-1] is the size of the (x, k) row cover; indices in
    violation records are 1-based.
    """

    n: int
    r: int
    max_cover_size: int
    max_column_zeros: int
    cover_sizes: tuple[tuple[int, ...], ...]
    column_zeros: tuple[int, ...]
    violations: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def fooling_set_size_bound(n: int) -> int:
    """2n(n-1) + 1: mirror pairs force r(r-1)/2 zeros, columns allow n(n-1) each."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need integer n >= 2, got {n!r}")
    return 2 * n * (n - 1) + 1


def _require_valid(fs: FoolingSet) -> np.ndarray:
    sm = support_matrix(fs)
    r = fs.size
    bad = [j for j in range(r) if sm[j, j] != 1]
    bad += [
        (i, j)
        for i in range(r)
        for j in range(i + 1, r)
        if sm[i, j] and sm[j, i]
    ]
    if bad:
        raise ValueError(f"not a valid fooling set (first offenders: {bad[:3]})")
    return sm


def _row_middles(fs: FoolingSet) -> list[frozenset[int]]:
    return [frozenset(witness_middles(p.s, p.t)) for p in fs.pairs]


def cover_rows(fs: FoolingSet, x: int, k: int) -> RowCover:
    """The (x, k) row cover of a valid fooling set; x is a node, k a 1-based column."""
    sm = _require_valid(fs)
    _check_node(x, fs.n)
    if not 1 <= k <= fs.size:
        raise ValueError(f"column index {k} out of range 1..{fs.size}")
    middles = _row_middles(fs)
    rows = frozenset(
        i + 1
        for i in range(fs.size)
        if sm[i, k - 1] == 0 and x in middles[i]
    )
    return RowCover(x, k, rows)


def _cover_grid(fs: FoolingSet, sm: np.ndarray, middles) -> list[list[int]]:
    n, r = fs.n, fs.size
    grid = [[0] * r for _ in range(n)]
    for k in range(r):
        zero_rows = [i for i in range(r) if sm[i, k] == 0]
        for x in range(1, n + 1):
            grid[x - 1][k] = sum(1 for i in zero_rows if x in middles[i])
    return grid


def _base_report(fs: FoolingSet, sm: np.ndarray, middles, violations: list[dict]) -> AuditReport:
    n, r = fs.n, fs.size
    grid = _cover_grid(fs, sm, middles)
    col_zeros = [int(r - int(sm[:, k].sum())) for k in range(r)]
    max_cover = max((grid[x][k] for x in range(n) for k in range(r)), default=0)
    max_zeros = max(col_zeros, default=0)
    for x in range(n):
        for k in range(r):
            if grid[x][k] > n - 1:
                violations.append(
                    {"kind": "cover_bound", "x": x + 1, "k": k + 1,
                     "size": grid[x][k], "bound": n - 1}
                )
    for k in range(r):
        if col_zeros[k] > n * (n - 1):
            violations.append(
                {"kind": "column_zeros", "k": k + 1,
                 "zeros": col_zeros[k], "bound": n * (n - 1)}
            )
    return AuditReport(
        n=n,
        r=r,
        max_cover_size=max_cover,
        max_column_zeros=max_zeros,
        cover_sizes=tuple(tuple(row) for row in grid),
        column_zeros=tuple(col_zeros),
        violations=tuple(violations),
    )


def audit_cover_bounds(fs: FoolingSet) -> AuditReport:
    """Check |cover| <= n-1 for every (x, k), via the witness-edge mechanism.

    For each covered row the witness-edge construction picks an edge of T_k;
    the audit demands those edges be pairwise distinct inside each (x, k)
    and actually lie in T_k, which is what makes n-1 the ceiling.
    """
    sm = _require_valid(fs)
    middles = _row_middles(fs)
    violations: list[dict] = []
    for k in range(fs.size):
        tk = fs.pairs[k].t
        tk_edges = set(tk.edges)
        zero_rows = [i for i in range(fs.size) if sm[i, k] == 0]
        for x in range(1, fs.n + 1):
            chosen: dict[tuple[int, int], int] = {}
            for i in zero_rows:
                if x not in middles[i]:
                    continue
                p = fs.pairs[i]
                edge = witness_edge(p.s, p.t, tk, x)
                if edge not in tk_edges:
                    violations.append(
                        {"kind": "edge_not_in_tree", "x": x, "k": k + 1,
                         "row": i + 1, "edge": list(edge)}
                    )
                if edge in chosen:
                    violations.append(
                        {"kind": "duplicate_edge", "x": x, "k": k + 1,
                         "rows": [chosen[edge] + 1, i + 1], "edge": list(edge)}
                    )
                else:
                    chosen[edge] = i
    return _base_report(fs, sm, middles, violations)


def audit_column_zeros(fs: FoolingSet) -> AuditReport:
    """Check every column has <= n(n-1) zeros and every zero entry is covered."""
    sm = _require_valid(fs)
    middles = _row_middles(fs)
    violations: list[dict] = []
    for k in range(fs.size):
        for i in range(fs.size):
            if sm[i, k] != 0:
                continue
            if not any(x in middles[i] for x in range(1, fs.n + 1)):
                violations.append({"kind": "uncovered_zero", "i": i + 1, "k": k + 1})
    return _base_report(fs, sm, middles, violations)


def audit_shared_witness(fs: FoolingSet) -> bool:
    """True iff no witness triple certifies two distinct diagonal pairs.

    False contradicts the cross condition and signals an implementation
    bug, never a property of the input.
    """
    _require_valid(fs)
    owner: dict = {}
    for i, p in enumerate(fs.pairs):
        for w in all_witnesses(p.s, p.t):
            j = owner.setdefault(w, i)
            if j != i:
                return False
    return True
