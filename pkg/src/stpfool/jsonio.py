"""JSON text forms shared by the CLI, files, and tests.

Trees are arrays of 2-arrays of nodes, subsets are sorted node arrays,
witnesses are [a, x, b].  A fooling set is {"n": ..., "pairs": [{"S": ...,
"T": ...}, ...]}.  All indices in reports are 1-based.  Serialization is
deterministic: fixed key order, sorted entries, and no wall-clock values
(`wall_time_ms` is emitted as null; timing goes to stderr instead) so that
identical runs produce byte-identical documents.
"""

from __future__ import annotations

import json
from typing import Any

from .audit import AuditReport
from .fooling import FoolingSet, STPair, VerificationReport
from .search import SearchResult
from .trees import NodeSubset, Tree
from .witness import Witness


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def tree_to_obj(t: Tree) -> list[list[int]]:
    return [[u, v] for u, v in t.edges]


def tree_from_obj(obj: Any, n: int) -> Tree:
    if not isinstance(obj, list):
        raise ValueError(f"tree must be an array of edges, got {type(obj).__name__}")
    edges = []
    for e in obj:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise ValueError(f"tree edge must be a 2-array of integers, got {e!r}")
        edges.append((e[0], e[1]))
    return Tree(n, tuple(edges))


def subset_to_obj(s: NodeSubset) -> list[int]:
    return list(s.members)


def subset_from_obj(obj: Any, n: int) -> NodeSubset:
    if not (isinstance(obj, list) and all(isinstance(v, int) for v in obj)):
        raise ValueError(f"subset must be an array of integers, got {obj!r}")
    return NodeSubset.of(n, obj)


def witness_to_obj(w: Witness) -> list[int]:
    return [w.a, w.x, w.b]


def witness_from_obj(obj: Any) -> Witness:
    if not (isinstance(obj, list) and len(obj) == 3 and all(isinstance(v, int) for v in obj)):
        raise ValueError(f"witness must be a 3-array of integers, got {obj!r}")
    return Witness(*obj)


def fooling_set_to_obj(fs: FoolingSet) -> dict:
    return {
        "n": fs.n,
        "pairs": [{"S": subset_to_obj(p.s), "T": tree_to_obj(p.t)} for p in fs.pairs],
    }


def fooling_set_from_obj(obj: Any) -> FoolingSet:
    if not isinstance(obj, dict):
        raise ValueError(f"fooling set must be an object, got {type(obj).__name__}")
    n = obj.get("n")
    if not isinstance(n, int):
        raise ValueError(f'fooling set needs an integer "n", got {n!r}')
    raw_pairs = obj.get("pairs")
    if not isinstance(raw_pairs, list):
        raise ValueError('fooling set needs a "pairs" array')
    pairs = []
    for idx, rp in enumerate(raw_pairs, start=1):
        if not isinstance(rp, dict) or "S" not in rp or "T" not in rp:
            raise ValueError(f'pair {idx} must be an object with "S" and "T"')
        try:
            pairs.append(STPair(subset_from_obj(rp["S"], n), tree_from_obj(rp["T"], n)))
        except ValueError as exc:
            raise ValueError(f"pair {idx}: {exc}") from exc
    return FoolingSet(n, tuple(pairs))


def load_fooling_set(path: str) -> FoolingSet:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return fooling_set_from_obj(obj)


def verification_to_obj(rep: VerificationReport) -> dict:
    return {"valid": rep.valid, "violations": list(rep.violations)}


def audit_report_to_obj(rep: AuditReport) -> dict:
    return {
        "n": rep.n,
        "r": rep.r,
        "max_cover_size": rep.max_cover_size,
        "max_column_zeros": rep.max_column_zeros,
        "cover_sizes": [list(row) for row in rep.cover_sizes],
        "column_zeros": list(rep.column_zeros),
        "violations": list(rep.violations),
    }


def search_result_to_obj(res: SearchResult) -> dict:
    obj = fooling_set_to_obj(res.best)
    obj["size"] = res.size
    obj["proven_optimal"] = res.proven_optimal
    obj["nodes_explored"] = res.nodes_explored
    obj["upper_bound"] = res.upper_bound
    # measured time goes to stderr; the JSON stays byte-reproducible
    obj["wall_time_ms"] = None
    return obj
