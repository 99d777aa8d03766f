"""JSON text forms: round trips and schema rejection."""

import json

import pytest

from stpfool import FoolingSet, NodeSubset, STPair, Tree, Witness, search_max_fooling_set
from stpfool import jsonio


def star_tree(n, center):
    return Tree(n, tuple((center, v) for v in range(1, n + 1) if v != center))


def test_tree_and_subset_forms():
    t = star_tree(4, 4)
    assert jsonio.tree_to_obj(t) == [[1, 4], [2, 4], [3, 4]]
    assert jsonio.tree_from_obj([[4, 1], [2, 4], [3, 4]], 4) == t
    s = NodeSubset.of(4, [3, 1])
    assert jsonio.subset_to_obj(s) == [1, 3]
    assert jsonio.subset_from_obj([1, 3], 4) == s


def test_witness_form():
    assert jsonio.witness_to_obj(Witness(1, 4, 2)) == [1, 4, 2]
    assert jsonio.witness_from_obj([1, 4, 2]) == Witness(1, 4, 2)
    with pytest.raises(ValueError):
        jsonio.witness_from_obj([1, 4])


def test_fooling_set_round_trip():
    fs = FoolingSet(4, (
        STPair(NodeSubset.of(4, [1, 2]), star_tree(4, 4)),
        STPair(NodeSubset.of(4, [3, 4]), star_tree(4, 1)),
    ))
    obj = jsonio.fooling_set_to_obj(fs)
    assert obj == {
        "n": 4,
        "pairs": [
            {"S": [1, 2], "T": [[1, 4], [2, 4], [3, 4]]},
            {"S": [3, 4], "T": [[1, 2], [1, 3], [1, 4]]},
        ],
    }
    assert jsonio.fooling_set_from_obj(json.loads(json.dumps(obj))) == fs


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"pairs": []},
        {"n": "4", "pairs": []},
        {"n": 4},
        {"n": 4, "pairs": [{"S": [1, 2]}]},
        {"n": 4, "pairs": [{"S": [1], "T": [[1, 4], [2, 4], [3, 4]]}]},
        {"n": 4, "pairs": [{"S": [1, 2], "T": [[1, 4], [2, 4]]}]},
        {"n": 4, "pairs": [{"S": [1, 2], "T": [[1, 4], [2, 4], [3, 5]]}]},
        {"n": 4, "pairs": [{"S": [1, 2], "T": [[1, 4], [2, 4], "x"]}]},
    ],
)
def test_bad_fooling_set_objects_rejected(obj):
    with pytest.raises(ValueError):
        jsonio.fooling_set_from_obj(obj)


def test_search_result_obj_has_no_wall_clock():
    res = search_max_fooling_set(3, "exact")
    obj = jsonio.search_result_to_obj(res)
    assert obj["size"] == 3
    assert obj["proven_optimal"] is True
    assert obj["upper_bound"] == 3
    assert obj["wall_time_ms"] is None
    assert isinstance(obj["nodes_explored"], int)
    assert jsonio.fooling_set_from_obj(obj).size == 3
