"""Batch CLI: enumerate, search, verify, audit-lemmas.

Reports are JSON on stdout (or --output); human-readable progress and
timing go to stderr.  Exit codes are a stable contract:

    0  success
    1  input object is not a valid fooling set
    2  usage, scale refusal, or parse error
    3  audit violation (contradicts the proven bounds; treat as a bug here)

All randomness flows from --seed, and a repeated command with identical
flags and seed writes byte-identical JSON, provided the run completes
within its time budget.  STPFOOL_THREADS caps the worker count; this
implementation computes sequentially (the cap is validated and a value of
1 is always honored trivially), and --deterministic likewise forces the
already-sequential search.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import audit as audit_mod
from . import jsonio
from .fooling import verify_fooling_set
from .search import EXACT_HARD_CAP, EXACT_SOFT_CAP, search_max_fooling_set
from .trees import (
    ENUMERATION_CAP,
    NodeSubset,
    PruferSeq,
    enumerate_subsets,
    enumerate_trees,
    is_connected_in,
    prufer_decode,
    subset_count,
    support,
    tree_count,
)
from .witness import Witness, check_triangle, is_witness, witness_edge, witness_middles

# audit-lemmas is exhaustive through n=5; n=6 is sampled and needs the override
AUDIT_EXHAUSTIVE_CAP = 5
AUDIT_SAMPLED_N = 6
_TRIANGLE_SAMPLES = 50_000
_WITNESS_EDGE_SAMPLES = 5_000


@dataclass
class RunConfig:
    command: str
    n: int = 0
    mode: str = "exact"
    time_limit: float = 60.0
    seed: int = 0
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    deterministic: bool = False
    force_large: bool = False
    dump_support: bool = False
    threads: int = 1


def _emit(cfg: RunConfig, obj) -> None:
    text = jsonio.dumps(obj)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _threads_from_env() -> int:
    raw = os.environ.get("STPFOOL_THREADS")
    if raw is None:
        return 1
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"STPFOOL_THREADS must be a positive integer, got {raw!r}")
    if val < 1:
        raise ValueError(f"STPFOOL_THREADS must be a positive integer, got {raw!r}")
    return val


def cmd_enumerate(cfg: RunConfig) -> int:
    if cfg.n > ENUMERATION_CAP:
        return _fail_usage(f"--n {cfg.n} exceeds the enumeration cap {ENUMERATION_CAP}")
    subsets = list(enumerate_subsets(cfg.n))
    f1 = 0
    entries = []
    for ti, t in enumerate(enumerate_trees(cfg.n)):
        for si, s in enumerate(subsets):
            if support(s, t):
                f1 += 1
                if cfg.dump_support:
                    entries.append([si, ti])
    obj = {
        "n": cfg.n,
        "trees": tree_count(cfg.n),
        "subsets": subset_count(cfg.n),
        "f1_pairs": f1,
    }
    if cfg.dump_support:
        entries.sort()
        obj["support"] = entries
    _emit(cfg, obj)
    return 0


def cmd_search(cfg: RunConfig) -> int:
    if cfg.mode == "exact" and cfg.n > EXACT_SOFT_CAP and not cfg.force_large:
        return _fail_usage(
            f"exact search for n={cfg.n} refused; pass --force-large (supported up to n={EXACT_HARD_CAP})"
        )
    if cfg.mode == "exact" and cfg.n > EXACT_HARD_CAP:
        return _fail_usage(f"exact search is not supported beyond n={EXACT_HARD_CAP}")
    res = search_max_fooling_set(
        cfg.n,
        mode=cfg.mode,
        time_limit=cfg.time_limit,
        seed=cfg.seed,
        allow_large=cfg.force_large,
    )
    print(
        f"search n={cfg.n} {cfg.mode}: size={res.size} proven={res.proven_optimal} "
        f"upper_bound={res.upper_bound} nodes={res.nodes_explored} "
        f"time={res.wall_time:.3f}s",
        file=sys.stderr,
    )
    _emit(cfg, jsonio.search_result_to_obj(res))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if not cfg.input_path:
        return _fail_usage("verify needs --input <path>")
    try:
        fs = jsonio.load_fooling_set(cfg.input_path)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail_usage(f"cannot read fooling set from {cfg.input_path}: {exc}")
    report = verify_fooling_set(fs)
    obj = {"verification": jsonio.verification_to_obj(report), "audit": None}
    if not report.valid:
        _emit(cfg, obj)
        return 1
    cov = audit_mod.audit_cover_bounds(fs)
    col = audit_mod.audit_column_zeros(fs)
    shared_ok = audit_mod.audit_shared_witness(fs)
    merged = list(cov.violations)
    merged += [v for v in col.violations if v not in merged]
    obj["audit"] = jsonio.audit_report_to_obj(cov)
    obj["audit"]["violations"] = merged
    obj["audit"]["shared_witness_ok"] = shared_ok
    _emit(cfg, obj)
    if merged or not shared_ok:
        print(
            "AUDIT VIOLATION: the verified bounds failed on this input; "
            "this contradicts proven facts and almost certainly means a bug "
            "in this implementation",
            file=sys.stderr,
        )
        return 3
    return 0


def _triangle_exhaustive(n: int, subsets, trees):
    cases = 0
    violations = []
    for s in subsets:
        mem = s.members
        if len(mem) < 3:
            continue
        for t in trees:
            for a, b, c in itertools.permutations(mem, 3):
                for x in range(1, n + 1):
                    cases += 1
                    if not check_triangle(s, t, a, b, c, x):
                        violations.append(
                            {"S": list(mem), "T": jsonio.tree_to_obj(t),
                             "a": a, "b": b, "c": c, "x": x}
                        )
    return cases, violations


def _witness_edge_exhaustive(n: int, subsets, trees):
    cases = 0
    violations = []
    for s in subsets:
        connected = [t2 for t2 in trees if is_connected_in(t2, s)]
        for t in trees:
            mids = witness_middles(s, t)
            for x in mids:
                for t2 in connected:
                    cases += 1
                    u, v = witness_edge(s, t, t2, x)
                    ok = (
                        t2.has_edge(u, v)
                        and u in s
                        and v in s
                        and is_witness(s, t, Witness(u, x, v))
                    )
                    if not ok:
                        violations.append(
                            {"S": list(s.members), "T": jsonio.tree_to_obj(t),
                             "T_prime": jsonio.tree_to_obj(t2), "x": x,
                             "edge": [u, v]}
                        )
    return cases, violations


def _random_subset(n: int, rng: random.Random, min_size: int = 2) -> NodeSubset:
    while True:
        mask = rng.randrange(1, 1 << n)
        if min_size <= mask.bit_count() <= n - 1:
            return NodeSubset(n, mask)


def _random_tree(n: int, rng: random.Random):
    seq = tuple(rng.randrange(1, n + 1) for _ in range(n - 2))
    return prufer_decode(PruferSeq(n, seq))


def _triangle_sampled(n: int, rng: random.Random, samples: int):
    cases = 0
    violations = []
    for _ in range(samples):
        s = _random_subset(n, rng, min_size=3)
        t = _random_tree(n, rng)
        a, b, c = rng.sample(s.members, 3)
        x = rng.randrange(1, n + 1)
        cases += 1
        if not check_triangle(s, t, a, b, c, x):
            violations.append(
                {"S": list(s.members), "T": jsonio.tree_to_obj(t),
                 "a": a, "b": b, "c": c, "x": x}
            )
    return cases, violations


def _witness_edge_sampled(n: int, rng: random.Random, samples: int):
    cases = 0
    violations = []
    while cases < samples:
        s = _random_subset(n, rng)
        t = _random_tree(n, rng)
        mids = witness_middles(s, t)
        if not mids:
            continue
        x = rng.choice(mids)
        t2 = _random_tree(n, rng)
        if not is_connected_in(t2, s):
            continue
        cases += 1
        u, v = witness_edge(s, t, t2, x)
        ok = (
            t2.has_edge(u, v)
            and u in s
            and v in s
            and is_witness(s, t, Witness(u, x, v))
        )
        if not ok:
            violations.append(
                {"S": list(s.members), "T": jsonio.tree_to_obj(t),
                 "T_prime": jsonio.tree_to_obj(t2), "x": x, "edge": [u, v]}
            )
    return cases, violations


def cmd_audit_lemmas(cfg: RunConfig) -> int:
    if cfg.n > AUDIT_SAMPLED_N:
        return _fail_usage(f"audit-lemmas supports n <= {AUDIT_SAMPLED_N}")
    if cfg.n > AUDIT_EXHAUSTIVE_CAP and not cfg.force_large:
        return _fail_usage(
            f"exhaustive audit is capped at n={AUDIT_EXHAUSTIVE_CAP}; "
            f"pass --force-large for sampled auditing at n={cfg.n}"
        )
    t0 = time.monotonic()
    if cfg.n <= AUDIT_EXHAUSTIVE_CAP:
        subsets = list(enumerate_subsets(cfg.n))
        trees = list(enumerate_trees(cfg.n))
        tri_cases, tri_viol = _triangle_exhaustive(cfg.n, subsets, trees)
        we_cases, we_viol = _witness_edge_exhaustive(cfg.n, subsets, trees)
        mode = "exhaustive"
    else:
        rng = random.Random(cfg.seed)
        tri_cases, tri_viol = _triangle_sampled(cfg.n, rng, _TRIANGLE_SAMPLES)
        we_cases, we_viol = _witness_edge_sampled(cfg.n, rng, _WITNESS_EDGE_SAMPLES)
        mode = "sampled"
    obj = {
        "n": cfg.n,
        "mode": mode,
        "seed": cfg.seed,
        "triangle": {"cases": tri_cases, "violations": tri_viol},
        "witness_edge": {"cases": we_cases, "violations": we_viol},
    }
    print(
        f"audit-lemmas n={cfg.n} ({mode}): triangle {tri_cases} cases "
        f"{len(tri_viol)} violations; witness-edge {we_cases} cases "
        f"{len(we_viol)} violations; time={time.monotonic() - t0:.1f}s",
        file=sys.stderr,
    )
    _emit(cfg, obj)
    return 3 if tri_viol or we_viol else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stpfool",
        description="Fooling-set machinery for the spanning tree polytope",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_n=True):
        if needs_n:
            p.add_argument("--n", type=int, required=True, help="ground set size (>= 2)")
        p.add_argument("--seed", type=int, default=0, help="64-bit master seed")
        p.add_argument("--time-limit", type=float, default=60.0, metavar="S")
        p.add_argument("--output", metavar="PATH", help="write JSON here instead of stdout")
        p.add_argument("--deterministic", action="store_true",
                       help="force sequential execution (already the default behavior)")
        p.add_argument("--force-large", action="store_true",
                       help="override scale refusals where a fallback exists")

    p_enum = sub.add_parser("enumerate", help="count trees, subsets, and support-1 pairs")
    common(p_enum)
    p_enum.add_argument("--dump-support", action="store_true",
                        help="include sparse (subset,tree) support indices")

    p_search = sub.add_parser("search", help="search for a maximum fooling set")
    common(p_search)
    mode = p_search.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--heuristic", dest="mode", action="store_const", const="heuristic")
    p_search.set_defaults(mode="exact")

    p_verify = sub.add_parser("verify", help="verify a fooling-set JSON file and audit it")
    common(p_verify, needs_n=False)
    p_verify.add_argument("--input", metavar="PATH", required=True)

    p_audit = sub.add_parser("audit-lemmas", help="exhaustively audit the witness lemmas")
    common(p_audit)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        threads = _threads_from_env()
    except ValueError as exc:
        return _fail_usage(str(exc))
    cfg = RunConfig(
        command=args.command,
        n=getattr(args, "n", 0),
        mode=getattr(args, "mode", "exact"),
        time_limit=args.time_limit,
        seed=args.seed,
        input_path=getattr(args, "input", None),
        output_path=args.output,
        deterministic=args.deterministic,
        force_large=args.force_large,
        dump_support=getattr(args, "dump_support", False),
        threads=1 if args.deterministic else threads,
    )
    if cfg.command != "verify":
        if not isinstance(cfg.n, int) or cfg.n < 2:
            return _fail_usage(f"--n must be an integer >= 2, got {cfg.n}")
    if cfg.time_limit <= 0:
        return _fail_usage(f"--time-limit must be positive, got {cfg.time_limit}")
    if not 0 <= cfg.seed < 1 << 64:
        return _fail_usage(f"--seed must fit in 64 bits, got {cfg.seed}")
    handlers = {
        "enumerate": cmd_enumerate,
        "search": cmd_search,
        "verify": cmd_verify,
        "audit-lemmas": cmd_audit_lemmas,
    }
    return handlers[cfg.command](cfg)


def entry() -> None:
    sys.exit(main())
