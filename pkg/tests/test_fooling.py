"""Fooling-set verification, the support matrix, and the lift embedding.

Claims covered:
    - the hand-checkable verify examples (valid size-2 set, shared-star
      cross violation, support-0 diagonal)
    - support_matrix values for those examples
    - a subset of candidate pairs is a clique of the compatibility graph
      exactly when it verifies (exhaustive n=3; for n=4 exhaustive through
      size 3 and the full size-4 layer against an independently built
      compatibility relation)
    - lifting to a larger ground set preserves all support values
"""

import itertools

import numpy as np
import pytest

from stpfool import (
    FoolingSet,
    NodeSubset,
    STPair,
    Tree,
    enumerate_subsets,
    enumerate_trees,
    lift_fooling_set,
    support,
    support_matrix,
    verify_fooling_set,
)


def star_tree(n, center):
    return Tree(n, tuple((center, v) for v in range(1, n + 1) if v != center))


def path_tree(n):
    return Tree(n, tuple((i, i + 1) for i in range(1, n)))


def valid_pair_fs():
    return FoolingSet(4, (
        STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4)),
        STPair(NodeSubset.of(4, [3, 4]), star_tree(4, 1)),
    ))


def test_verify_examples():
    assert verify_fooling_set(valid_pair_fs()).valid

    shared_star = FoolingSet(4, (
        STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4)),
        STPair(NodeSubset.of(4, [1, 3]), star_tree(4, 4)),
    ))
    rep = verify_fooling_set(shared_star)
    assert not rep.valid
    assert {"kind": "cross", "i": 1, "j": 2} in rep.violations

    diag = FoolingSet(4, (STPair(NodeSubset.of(4, [1, 2, 3]), path_tree(4)),))
    rep = verify_fooling_set(diag)
    assert not rep.valid
    assert rep.violations == ({"kind": "diagonal", "index": 1},)


def test_verify_empty_and_duplicates():
    assert verify_fooling_set(FoolingSet(4, ())).valid
    p = STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4))
    rep = verify_fooling_set(FoolingSet(4, (p, p)))
    assert not rep.valid
    assert any(v["kind"] == "cross" for v in rep.violations)


def test_mixed_n_rejected():
    with pytest.raises(ValueError):
        STPair(NodeSubset.of(5, [1, 2]), star_tree(4, 4))
    with pytest.raises(ValueError):
        FoolingSet(5, (STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4)),))


def test_support_matrix_examples():
    assert support_matrix(valid_pair_fs()).tolist() == [[1, 0], [0, 1]]
    single = FoolingSet(4, (STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4)),))
    assert support_matrix(single).tolist() == [[1]]
    shared_star = FoolingSet(4, (
        STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4)),
        STPair(NodeSubset.of(4, [1, 3]), star_tree(4, 4)),
    ))
    assert support_matrix(shared_star).tolist() == [[1, 1], [1, 1]]


def _candidates(n):
    return [
        STPair(s, t)
        for s in enumerate_subsets(n)
        for t in enumerate_trees(n)
        if support(s, t) == 1
    ]


def _compatible(p, q):
    return support(p.s, q.t) * support(q.s, p.t) == 0


def test_clique_correspondence_n3_exhaustive():
    cand = _candidates(3)
    assert len(cand) == 3
    for size in range(1, 4):
        for combo in itertools.combinations(cand, size):
            is_clique = all(_compatible(p, q) for p, q in itertools.combinations(combo, 2))
            assert verify_fooling_set(FoolingSet(3, combo)).valid == is_clique


def test_clique_correspondence_n4():
    # the slow one: every subset of V up to size 4 (about 1.35M verifies)
    cand = _candidates(4)
    assert len(cand) == 76
    compat = np.array(
        [[_compatible(p, q) if p is not q else False for q in cand] for p in cand]
    )
    mism = 0
    for size in (1, 2, 3, 4):
        for combo in itertools.combinations(range(len(cand)), size):
            is_clique = all(compat[i][j] for i, j in itertools.combinations(combo, 2))
            fs = FoolingSet(4, tuple(cand[i] for i in combo))
            mism += verify_fooling_set(fs).valid != is_clique
    assert mism == 0


def test_lift_preserves_support_values():
    fs = valid_pair_fs()
    lifted = lift_fooling_set(fs, 6)
    assert lifted.n == 6
    assert support_matrix(lifted).tolist() == support_matrix(fs).tolist()
    assert verify_fooling_set(lifted).valid
    for p, q in zip(fs.pairs, lifted.pairs):
        assert q.s.members == p.s.members
        assert set(p.t.edges) <= set(q.t.edges)
    with pytest.raises(ValueError):
        lift_fooling_set(fs, 3)
    assert lift_fooling_set(fs, 4) is fs
