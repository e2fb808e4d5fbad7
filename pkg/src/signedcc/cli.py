"""Command-line interface: ``signedcc {cluster,analyze,compare,gen,bench}``.

Exit codes: 0 ok, 2 graph-file parse error, 3 internal invariant breach,
4 cycle enumeration truncated, 5 subclass instance beyond factor two,
6 instance too large for the oracle, 7 generator exhausted.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time

import numpy as np

from . import __version__, _kernels
from .algorithm import run_pipeline
from .cycles import (
    Cycle,
    condition_theorem_check,
    enumerate_weakly_negative_cycles,
    is_clusterable,
    max_edge_disjoint_wnc_packing,
    triangle_condition_check,
)
from .errors import EnumerationTruncated, GenerationExhausted, GraphFileError, TooLarge
from .fileio import dump_report, one_based_edges, read_graph, serialize_graph, write_atomic
from .generators import (
    generate_clusterable_instance,
    generate_subclass_instance,
    random_signed_graph,
)
from .graph import SignedGraph
from .oracle import DEFAULT_ORACLE_LIMIT, approximation_report, count_disagreements
from .patterns import forbidden_subgraph_scan

log = logging.getLogger("signedcc")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_TRUNCATED = 4
EXIT_BOUND_VIOLATED = 5
EXIT_TOO_LARGE = 6
EXIT_EXHAUSTED = 7


class InvariantBreach(RuntimeError):
    pass


def _cycle_json(c: Cycle) -> dict:
    return {"vertices": [v + 1 for v in c.vertices], "negative_edges": c.negative_count}


def _header(g: SignedGraph, checksum: str) -> dict:
    return {
        "tool": {"name": "signedcc", "version": __version__},
        "input": {"sha256": checksum, "n": g.n, "m": g.m},
    }


def analysis_block(g: SignedGraph, max_length: int | None, allow_truncated: bool, detail: bool) -> dict:
    """Structural diagnostics. ``detail`` adds certificates and witnesses."""
    ok, cert = is_clusterable(g)
    tri_ok, tri_bad = triangle_condition_check(g)
    cond_ok, triple = condition_theorem_check(g, max_length, allow_truncated=allow_truncated)
    hits = forbidden_subgraph_scan(g)
    block = {
        "clusterable": ok,
        "triangle_condition": tri_ok,
        "condition_theorem": cond_ok,
        "forbidden_hits": len(hits),
    }
    if not detail:
        return block
    size, witness = max_edge_disjoint_wnc_packing(g, max_length, allow_truncated=allow_truncated)
    limit = max(g.n, 3) if max_length is None else max_length
    block.update(
        {
            "certificate": [sorted(v + 1 for v in c) for c in cert.clusters] if ok else None,
            "witness_cycle": None if ok else _cycle_json(cert),
            "wnc_count": len(enumerate_weakly_negative_cycles(g, limit)),
            "max_cycle_length": limit,
            "packing": {"size": size, "witness": [_cycle_json(c) for c in witness]},
            "triangle_violations": [_cycle_json(c) for c in tri_bad],
            "condition_witness": None if triple is None else [_cycle_json(c) for c in triple],
            "forbidden": [
                {"pattern": pid, "embedding": [v + 1 for v in emb]} for pid, emb in hits
            ],
        }
    )
    return block


def cluster_report(
    g: SignedGraph,
    checksum: str,
    *,
    trace: bool = False,
    post_merge: bool = False,
    max_length: int | None = None,
    allow_truncated: bool = False,
) -> dict:
    state = run_pipeline(g)
    clustering = state.clustering()
    report = count_disagreements(g, clustering)
    if post_merge:
        state = run_pipeline(g, post_merge=True)
        clustering = state.clustering()
        merged_report = count_disagreements(g, clustering)
        if merged_report.total != report.total:
            raise InvariantBreach(
                f"post-merge changed disagreements {report.total} -> {merged_report.total}"
            )
        report = merged_report
    clusters = [sorted(v + 1 for v in c) for c in clustering.clusters]
    if sorted(v for c in clusters for v in c) != list(range(1, g.n + 1)):
        raise InvariantBreach("clusters do not partition the vertex set")
    if report.total != len(report.negative_inside) + len(report.positive_across):
        raise InvariantBreach("disagreement total does not match edge lists")
    out = _header(g, checksum)
    out["clusters"] = clusters
    out["disagreements"] = {
        "total": report.total,
        "negative_inside": one_based_edges(report.negative_inside),
        "positive_across": one_based_edges(report.positive_across),
    }
    out["analysis"] = analysis_block(g, max_length, allow_truncated, detail=False)
    if trace:
        out["trace"] = [_trace_json(ev) for ev in state.trace]
    return out


def _trace_json(ev) -> dict:
    d = ev.as_dict()
    d["vertices"] = [v + 1 for v in d["vertices"]]
    for key in ("left", "right"):
        if key in d:
            d[key] = [v + 1 for v in d[key]]
    return d


def compare_report(g: SignedGraph, checksum: str, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> dict:
    rep = approximation_report(g, oracle_limit)
    dis = count_disagreements(g, rep.clustering)
    out = _header(g, checksum)
    out["clusters"] = [sorted(v + 1 for v in c) for c in rep.clustering.clusters]
    out["disagreements"] = {
        "total": dis.total,
        "negative_inside": one_based_edges(dis.negative_inside),
        "positive_across": one_based_edges(dis.positive_across),
    }
    out["oracle"] = {
        "sol": rep.sol,
        "opt": rep.opt,
        "ratio": rep.ratio,
        "failure": rep.failure,
        "in_subclass": rep.in_subclass,
        "within_factor_two": rep.within_factor_two,
    }
    out["analysis"] = {
        "clusterable": rep.opt == 0,
        "triangle_condition": rep.triangle_condition,
        "forbidden_hits": rep.forbidden_hits,
    }
    return out


# ---------------------------------------------------------------------------
def _emit(text: str, path: str | None) -> None:
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text)


def _cmd_cluster(args) -> int:
    g, checksum = read_graph(args.input)
    report = cluster_report(
        g,
        checksum,
        trace=args.trace,
        post_merge=args.post_merge,
        max_length=args.max_cycle_length,
        allow_truncated=args.allow_truncated,
    )
    _emit(dump_report(report), args.output)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    g, checksum = read_graph(args.input)
    out = _header(g, checksum)
    out["analysis"] = analysis_block(g, args.max_cycle_length, args.allow_truncated, detail=True)
    _emit(dump_report(out), args.output)
    return EXIT_OK


def _cmd_compare(args) -> int:
    g, checksum = read_graph(args.input)
    out = compare_report(g, checksum, args.oracle_limit)
    _emit(dump_report(out), args.output)
    oracle = out["oracle"]
    if oracle["in_subclass"] and not oracle["within_factor_two"]:
        log.error("subclass instance exceeds factor two: sol=%s opt=%s", oracle["sol"], oracle["opt"])
        return EXIT_BOUND_VIOLATED
    return EXIT_OK


def default_subclass_density(n: int) -> float:
    """Expected average degree about 3; keeps acceptance practical up to n = 10."""
    return min(1.0, 3.0 / max(n - 1, 1))


def _cmd_gen(args) -> int:
    comments = [f"signedcc {__version__} gen {args.kind} seed={args.seed}"]
    if args.kind == "subclass":
        p_edge = args.p_edge if args.p_edge is not None else default_subclass_density(args.n)
        g, rejected = generate_subclass_instance(
            args.n, p_edge, args.p_neg, args.seed, max_attempts=args.max_attempts
        )
        print(f"accepted after {rejected} rejections ({rejected + 1} draws)", file=sys.stderr)
        comments.append(f"n={args.n} p_edge={p_edge:g} p_neg={args.p_neg:g} rejected={rejected}")
    elif args.kind == "clusterable":
        sizes = [int(x) for x in args.sizes.split(",")]
        p_edge = 1.0 if args.p_edge is None else args.p_edge
        g = generate_clusterable_instance(sizes, p_edge, args.seed)
        comments.append(f"sizes={args.sizes} p_edge={p_edge:g}")
    else:
        p_edge = 0.5 if args.p_edge is None else args.p_edge
        g = random_signed_graph(args.n, p_edge, args.p_neg, args.seed)
        comments.append(f"n={args.n} p_edge={p_edge:g} p_neg={args.p_neg:g}")
    _emit(serialize_graph(g, comments), args.output)
    return EXIT_OK


def bench(sizes, density=None, seed=0, p_neg=0.3, repeats=1):
    """Time the pipeline on random sparse graphs; returns rows and the fitted log-log slope."""
    from .algorithm import run_cc

    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        p = density if density is not None else min(1.0, 4.0 / max(n - 1, 1))
        g = random_signed_graph(n, p, p_neg, rng)
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            run_cc(g)
            best = min(best, time.perf_counter() - t0)
        rows.append((n, g.m, best))
    slope = None
    if len(rows) >= 2:
        xs = np.log([r[0] for r in rows])
        ys = np.log([max(r[2], 1e-9) for r in rows])
        slope = float(np.polyfit(xs, ys, 1)[0])
    return rows, slope


def _cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",") if x.strip()] if args.sizes else []
    if sizes:
        # warm the kernels so compilation is not timed
        bench([8], seed=args.seed)
    rows, slope = bench(sizes, args.density, args.seed, repeats=args.repeats)
    print(f"backend: {_kernels.BACKEND}")
    print(f"{'n':>6} {'m':>7} {'seconds':>10}")
    for n, m, t in rows:
        print(f"{n:>6} {m:>7} {t:>10.4f}")
    if slope is not None:
        verdict = "ok" if slope <= 3.5 else "above 3.5 (informational)"
        print(f"fitted growth exponent: {slope:.2f} ({verdict})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signedcc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, analysis=True):
        p.add_argument("input", help="graph file ('p sg' format)")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
        if analysis:
            p.add_argument("--max-cycle-length", type=int, default=None,
                           help="longest weakly negative cycle to enumerate (default n)")
            p.add_argument("--allow-truncated", action="store_true",
                           help="accept --max-cycle-length below n")

    p = sub.add_parser("cluster", help="run the clustering pipeline")
    common(p)
    p.add_argument("--trace", action="store_true", help="include per-step trace")
    p.add_argument("--post-merge", action="store_true",
                   help="also merge clusters with no edges between them")
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("analyze", help="structural analysis only")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("compare", help="pipeline versus exhaustive optimum")
    common(p, analysis=False)
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("kind", choices=["subclass", "clusterable", "random"])
    p.add_argument("-n", type=int, default=8)
    p.add_argument("--sizes", default="3,3", help="cluster sizes for kind=clusterable")
    p.add_argument("--p-edge", type=float, default=None)
    p.add_argument("--p-neg", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=10_000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the pipeline on growing sparse graphs")
    p.add_argument("--sizes", default="50,100,200,300")
    p.add_argument("--density", type=float, default=None,
                   help="edge probability (default: expected degree 4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="signedcc: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFileError as exc:
        log.error("parse error: %s", exc)
        return EXIT_PARSE
    except EnumerationTruncated as exc:
        log.error("%s (pass --allow-truncated to accept)", exc)
        return EXIT_TRUNCATED
    except TooLarge as exc:
        log.error("%s", exc)
        return EXIT_TOO_LARGE
    except GenerationExhausted as exc:
        log.error("%s", exc)
        return EXIT_EXHAUSTED
    except (InvariantBreach, AssertionError) as exc:
        log.error("internal invariant breach: %s", exc)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
