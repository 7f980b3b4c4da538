"""
Command line interface.

    versals gen star --r 3 --m 4 | versals count -
    versals verify main-theorem --n 4 --exhaustive
    versals prob cycle.hg --k 2 --exact

Hypergraphs are read and written in the `.hg` format (`-` is standard input); all
structured output is JSON on stdout. Exit status is 0 on success, 1 when a
verification found a counterexample and 2 for usage or input errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, List, Optional

from ..core import format_hypergraph, read_hypergraph
from ..engine import all_versals, census_frame, free_vertices, null_versals
from ..exceptions import (
    EnumerationLimitError,
    HypothesisError,
    ImproperlyConfigured,
    ValidationError,
)
from ..families import (
    classify,
    gen_binary_star,
    gen_c4,
    gen_cosingletons,
    gen_singletons,
    gen_star,
)
from ..isolation import min_unique_probability
from ..utils import log, members
from ..verifier import build_config, run_suite, summary_frame

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_ERROR = 2

FAMILIES = ("singletons", "cosingletons", "c4", "star", "binary-star")


def _emit(payload: Any):
    print(json.dumps(payload, indent=2))


def _require(args: argparse.Namespace, *names: str):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValidationError(f"gen {args.family} needs {', '.join(missing)}")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family in ("singletons", "cosingletons"):
        _require(args, "n")
        build = gen_singletons if args.family == "singletons" else gen_cosingletons
        hypergraph = build(args.n)
    elif args.family == "c4":
        hypergraph = gen_c4()
    elif args.family == "star":
        _require(args, "r", "m")
        hypergraph = gen_star(args.r, args.m)
    else:
        _require(args, "r", "s")
        hypergraph = gen_binary_star(args.r, args.s)
    sys.stdout.write(format_hypergraph(hypergraph))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    _emit(classify(read_hypergraph(args.file)).to_dict())
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    hypergraph = read_hypergraph(args.file)
    if args.edge is not None:
        hypergraph.check_edge_index(args.edge)
    census = null_versals(hypergraph, True) if args.null_only else all_versals(hypergraph, True)
    records = [
        rec.to_dict() for rec in census.records if args.edge is None or rec.edge_index == args.edge
    ]
    _emit({"n": hypergraph.n, "m": hypergraph.m, "versals": records})
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    hypergraph = read_hypergraph(args.file)
    census = all_versals(hypergraph)
    free = [len(free_vertices(hypergraph, i)) for i in range(hypergraph.m)]
    if hypergraph.m:
        log("\n" + census_frame(hypergraph, census).to_markdown(index=False), title="Census")
    _emit(
        {
            "n": hypergraph.n,
            "m": hypergraph.m,
            "edges": [
                {
                    "edge": i,
                    "members": members(e),
                    "versals": census.per_edge_counts[i],
                    "null_versals": census.per_edge_null_counts[i],
                    "free": free[i],
                }
                for i, e in enumerate(hypergraph.edges)
            ],
            "total": census.total,
            "null_total": census.null_total,
            "q": sum(free),
        }
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = {
        "claims": args.claim,
        "n": args.n,
        "n_max": args.n_max,
        "r": args.r,
        "m_min": args.m_min,
        "m_max": args.m_max,
        "samples": args.samples,
        "seed": args.seed,
        "uniform": args.uniform,
        "jobs": args.jobs,
        "max_counterexamples": args.max_counterexamples,
        "chunk_size": args.chunk_size,
    }
    if args.file is not None:
        config["mode"] = "single"
        config["hypergraph"] = read_hypergraph(args.file)
    elif args.random:
        config["mode"] = "random"
    elif args.families:
        config["mode"] = "families"
    else:
        config["mode"] = "exhaustive"

    reports = run_suite(build_config(config))
    log("\n" + summary_frame(reports).to_markdown(index=False), title="Summary")
    payload = [report.to_dict(timing=args.timing) for report in reports]
    _emit(payload[0] if len(payload) == 1 else payload)
    return EXIT_COUNTEREXAMPLE if any(report.failed for report in reports) else EXIT_OK


def cmd_prob(args: argparse.Namespace) -> int:
    hypergraph = read_hypergraph(args.file)
    if args.samples is not None and not args.exact:
        result = min_unique_probability(
            hypergraph, args.k, mode="mc", samples=args.samples, seed=args.seed, jobs=args.jobs
        )
    else:
        result = min_unique_probability(hypergraph, args.k, mode="exact")
    _emit(result.to_dict())
    return EXIT_OK


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as `ValidationError` so they share the one-line `error:` path."""

    def error(self, message: str):
        raise ValidationError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="versals",
        description="Versals of hypergraphs: enumeration, extremal families and verification.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -- gen --
    p_gen = subparsers.add_parser("gen", help="Emit a named family in .hg format")
    p_gen.add_argument("family", choices=FAMILIES)
    p_gen.add_argument("--n", type=int, help="Universe size (singletons, cosingletons)")
    p_gen.add_argument("--r", type=int, help="Rank (star, binary-star)")
    p_gen.add_argument("--m", type=int, help="Number of edges (star)")
    p_gen.add_argument("--s", type=int, help="Star size (binary-star)")
    p_gen.set_defaults(handler=cmd_gen)

    # -- classify --
    p_classify = subparsers.add_parser("classify", help="Recognize the family of a hypergraph")
    p_classify.add_argument("file", help=".hg file, or - for stdin")
    p_classify.set_defaults(handler=cmd_classify)

    # -- list --
    p_list = subparsers.add_parser("list", help="List versals in canonical order")
    p_list.add_argument("file", help=".hg file, or - for stdin")
    p_list.add_argument("--edge", type=int, help="Only versals of this edge index")
    p_list.add_argument("--null-only", action="store_true", help="Only null versals")
    p_list.set_defaults(handler=cmd_list)

    # -- count --
    p_count = subparsers.add_parser("count", help="Count versals, null versals and free pairs")
    p_count.add_argument("file", help=".hg file, or - for stdin")
    p_count.set_defaults(handler=cmd_count)

    # -- verify --
    p_verify = subparsers.add_parser("verify", help="Check claims over a scope of hypergraphs")
    p_verify.add_argument("claim", help="Claim name(s), comma-separated, or 'properties'")
    p_verify.add_argument("--file", help="Check a single .hg file")
    scope = p_verify.add_mutually_exclusive_group()
    scope.add_argument("--exhaustive", action="store_true", help="Enumerate (default)")
    scope.add_argument("--random", action="store_true", help="Seeded random instances")
    scope.add_argument("--families", action="store_true", help="Generated stars and binary stars")
    p_verify.add_argument("--n", help="Universe size(s), comma-separated")
    p_verify.add_argument("--n-max", type=int, help="Largest universe size in random mode")
    p_verify.add_argument("--r", help="Rank(s), comma-separated; selects uniform families")
    p_verify.add_argument("--m-min", type=int, help="Smallest edge count (default: 2)")
    p_verify.add_argument("--m-max", type=int, help="Largest edge count")
    p_verify.add_argument("--uniform", action="store_true", help="Random uniform instances")
    p_verify.add_argument("--samples", type=int, help="Random sample count (default: 1000)")
    p_verify.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    p_verify.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1)")
    p_verify.add_argument("--max-counterexamples", type=int, default=50)
    p_verify.add_argument("--chunk-size", type=int, default=2048)
    p_verify.add_argument("--timing", action="store_true", help="Include wall time in the report")
    p_verify.set_defaults(handler=cmd_verify)

    # -- prob --
    p_prob = subparsers.add_parser("prob", help="Probability of a unique minimum-weight edge")
    p_prob.add_argument("file", help=".hg file, or - for stdin")
    p_prob.add_argument("--k", type=int, required=True, help="Weights range over 1..K")
    p_prob.add_argument("--exact", action="store_true", help="Enumerate all K^n weightings")
    p_prob.add_argument("--samples", type=int, help="Monte Carlo sample count")
    p_prob.add_argument("--seed", type=int, default=0, help="Monte Carlo seed (default: 0)")
    p_prob.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1)")
    p_prob.set_defaults(handler=cmd_prob)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.INFO if args.verbose else logging.WARNING,
            stream=sys.stderr,
            format="%(message)s",
            force=True,
        )
        return args.handler(args)
    except (
        ValidationError,
        EnumerationLimitError,
        HypothesisError,
        ImproperlyConfigured,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
