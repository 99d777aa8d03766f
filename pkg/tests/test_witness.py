"""Witness extraction and the exchange lemmas behind the counting argument.

Claims covered:
    - is_witness matches its two defining conditions (oracle: explicit
      path recomputation)
    - reflection symmetry of witnesses
    - find_witness returns a value iff support=1, the value passes
      is_witness, and the deterministic tie-break picks the brute-force
      minimum (smallest x, then smallest (a,b))
    - witnesses_with_middle is exactly the brute-force set
    - the triangle property holds exhaustively for n <= 4
    - witness_edge returns an edge of T' inside S witnessing with middle x,
      at minimum induced distance, for every valid input with n <= 4;
      precondition violations raise
"""

import itertools

import pytest

from stpfool import (
    NodeSubset,
    Tree,
    Witness,
    check_triangle,
    enumerate_subsets,
    enumerate_trees,
    find_witness,
    is_witness,
    path_in_tree,
    support,
    witness_edge,
    witness_middles,
    witnesses_with_middle,
)


def path_tree(n):
    return Tree(n, tuple((i, i + 1) for i in range(1, n)))


def star_tree(n, center):
    return Tree(n, tuple((center, v) for v in range(1, n + 1) if v != center))


# -- Oracles ------------------------------------------------------------------

def oracle_is_witness(s, t, a, x, b):
    members = set(s.members)
    return a in members and b in members and x not in members and x in path_in_tree(t, a, b)


def oracle_all_witnesses(s, t):
    out = set()
    for a in s.members:
        for b in s.members:
            if a == b:
                continue
            for x in range(1, t.n + 1):
                if oracle_is_witness(s, t, a, x, b):
                    out.add((a, x, b))
    return out


def oracle_induced_dist(s, t_prime, a, b):
    """BFS distance inside the subgraph of t_prime induced on S."""
    members = set(s.members)
    adj = {v: set() for v in members}
    for u, v in t_prime.edges:
        if u in members and v in members:
            adj[u].add(v)
            adj[v].add(u)
    depth = {a: 0}
    frontier = [a]
    while frontier:
        nxt = []
        for w in frontier:
            for u in adj[w]:
                if u not in depth:
                    depth[u] = depth[w] + 1
                    nxt.append(u)
        frontier = nxt
    return depth[b]


# -- is_witness ---------------------------------------------------------------

def test_is_witness_examples():
    s = NodeSubset.of(4, [1, 2, 3])
    assert is_witness(s, star_tree(4, 4), Witness(1, 4, 2))
    assert not is_witness(s, star_tree(4, 4), Witness(1, 2, 3))
    assert not is_witness(s, path_tree(4), Witness(1, 2, 3))
    assert is_witness(NodeSubset.of(4, [1, 3]), path_tree(4), Witness(1, 2, 3))
    with pytest.raises(ValueError):
        is_witness(s, path_tree(4), Witness(1, 5, 2))


@pytest.mark.parametrize("n", [3, 4])
def test_is_witness_matches_oracle_and_reflects(n):
    nodes = range(1, n + 1)
    for s in enumerate_subsets(n):
        for t in enumerate_trees(n):
            for a, x, b in itertools.product(nodes, repeat=3):
                if a == b:
                    continue
                got = is_witness(s, t, Witness(a, x, b))
                assert got == oracle_is_witness(s, t, a, x, b)
                assert got == is_witness(s, t, Witness(b, x, a))


# -- find_witness -------------------------------------------------------------

def test_find_witness_examples():
    assert find_witness(NodeSubset.of(4, [1, 2, 3]), path_tree(4)) is None
    w = find_witness(NodeSubset.of(4, [1, 2, 3]), star_tree(4, 4))
    assert w is not None and w.x == 4 and w.a != w.b
    w2 = find_witness(NodeSubset.of(4, [1, 4]), path_tree(4))
    assert w2 is not None and w2.x in (2, 3)


@pytest.mark.parametrize("n", range(3, 6))
def test_existence_equivalence_and_tiebreak(n):
    for s in enumerate_subsets(n):
        for t in enumerate_trees(n):
            w = find_witness(s, t)
            all_w = oracle_all_witnesses(s, t)
            if support(s, t) == 0:
                assert w is None
                assert not all_w
            else:
                assert w is not None
                assert (w.a, w.x, w.b) in all_w
                assert is_witness(s, t, w)
                expect = min(all_w, key=lambda tr: (tr[1], tr[0], tr[2]))
                assert (w.a, w.x, w.b) == expect


# -- witnesses_with_middle ----------------------------------------------------

def test_witnesses_with_middle_examples():
    s12 = NodeSubset.of(4, [1, 2])
    got = witnesses_with_middle(s12, star_tree(4, 4), 4)
    assert got.triples == frozenset({Witness(1, 4, 2), Witness(2, 4, 1)})
    assert witnesses_with_middle(s12, star_tree(4, 4), 3).triples == frozenset()
    s123 = NodeSubset.of(4, [1, 2, 3])
    six = witnesses_with_middle(s123, star_tree(4, 4), 4).triples
    assert len(six) == 6
    assert six == frozenset(
        Witness(a, 4, b) for a, b in itertools.permutations([1, 2, 3], 2)
    )
    with pytest.raises(ValueError):
        witnesses_with_middle(s12, star_tree(4, 4), 9)


@pytest.mark.parametrize("n", [3, 4])
def test_witnesses_with_middle_matches_oracle(n):
    for s in enumerate_subsets(n):
        for t in enumerate_trees(n):
            oracle = oracle_all_witnesses(s, t)
            for x in range(1, n + 1):
                got = {tuple(w) for w in witnesses_with_middle(s, t, x).triples}
                assert got == {w for w in oracle if w[1] == x}
            assert set(witness_middles(s, t)) == {w[1] for w in oracle}


# -- triangle property --------------------------------------------------------

def test_check_triangle_examples():
    s = NodeSubset.of(4, [1, 2, 3])
    assert check_triangle(s, star_tree(4, 4), 1, 2, 3, 4)
    assert check_triangle(s, path_tree(4), 1, 2, 3, 4)
    with pytest.raises(ValueError):
        check_triangle(s, path_tree(4), 1, 1, 3, 4)


@pytest.mark.parametrize("n", [3, 4])
def test_triangle_exhaustive(n):
    for s in enumerate_subsets(n):
        mem = s.members
        if len(mem) < 3:
            continue
        for t in enumerate_trees(n):
            for a, b, c in itertools.permutations(mem, 3):
                for x in range(1, n + 1):
                    hits = sum(
                        oracle_is_witness(s, t, p, x, q)
                        for p, q in ((a, b), (b, c), (c, a))
                    )
                    assert check_triangle(s, t, a, b, c, x) == (hits != 1)
                    assert hits != 1


# -- witness_edge -------------------------------------------------------------

def test_witness_edge_examples():
    s = NodeSubset.of(4, [1, 2, 3])
    # W has pairs {1,2},{1,3},{2,3}; induced path 1-2-3 makes {1,2} and {2,3}
    # the distance-1 minimizers and the tie-break picks {1,2}
    e = witness_edge(s, star_tree(4, 4), path_tree(4), 4)
    assert e == (1, 2)
    assert is_witness(s, star_tree(4, 4), Witness(e[0], 4, e[1]))

    assert witness_edge(NodeSubset.of(4, [1, 2]), star_tree(4, 4), path_tree(4), 4) == (1, 2)

    star2 = Tree(4, ((1, 2), (2, 3), (2, 4)))
    with pytest.raises(ValueError):
        witness_edge(NodeSubset.of(4, [1, 3]), path_tree(4), star2, 2)  # S not connected in T'
    with pytest.raises(ValueError):
        witness_edge(NodeSubset.of(4, [1, 2]), star_tree(4, 4), path_tree(4), 3)  # empty W


@pytest.mark.parametrize("n", [3, 4])
def test_witness_edge_sound_and_minimal(n):
    from stpfool import is_connected_in

    trees = list(enumerate_trees(n))
    for s in enumerate_subsets(n):
        connected = [t2 for t2 in trees if is_connected_in(t2, s)]
        for t in trees:
            oracle = oracle_all_witnesses(s, t)
            for x in range(1, n + 1):
                pairs = sorted({(min(a, b), max(a, b)) for a, xx, b in oracle if xx == x})
                if not pairs:
                    continue
                for t2 in connected:
                    u, v = witness_edge(s, t, t2, x)
                    assert (min(u, v), max(u, v)) in {
                        (uu, vv) for uu, vv in t2.edges
                    }
                    assert oracle_is_witness(s, t, u, x, v)
                    dmin = min(oracle_induced_dist(s, t2, a, b) for a, b in pairs)
                    assert oracle_induced_dist(s, t2, u, v) == dmin == 1
                    expect = min(
                        (p for p in pairs if oracle_induced_dist(s, t2, *p) == dmin)
                    )
                    assert (u, v) == expect
