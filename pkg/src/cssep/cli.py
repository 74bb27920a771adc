"""Command-line front end.

Commands: check-free, family, witness, verify, ramsey-check, gen.  Reports
are schema-versioned JSON documents on stdout (or --out); exit codes are the
machine contract: 0 property holds / success, 1 property fails, 2 input
error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import ramsey as ramsey_mod
from . import reports, separators, testbed, witness
from .errors import InputError, ResourceLimitError
from .graph import Graph, VertexSet
from .graphio import parse_graph, serialize_graph, write_graph
from .patterns import contains_induced, fk_spec, fs_spec, is_in_class

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE = 3


def _bool_flag(value: str) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise argparse.ArgumentTypeError(f"expected true|false, got {value!r}")


def _vertex_list(value: str) -> tuple[int, ...]:
    value = value.strip()
    if not value:
        return ()
    try:
        return tuple(int(tok) for tok in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated vertex indices, got {value!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cssep",
        description="Clique / stable-set separator toolkit for pattern-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph", help="input graph file")
        p.add_argument(
            "--format",
            choices=("edgelist", "dimacs"),
            default="edgelist",
            help="input file format (default edgelist)",
        )

    def add_pq(p):
        p.add_argument("--p", type=int, required=True, help="clique block size (>= 1)")
        p.add_argument("--q", type=int, required=True, help="tail block size (>= 1)")

    def add_family_opts(p):
        p.add_argument(
            "--mode",
            choices=("tight", "paper"),
            default="tight",
            help="Ramsey bound mode (default tight)",
        )
        p.add_argument(
            "--family",
            choices=("pruned", "faithful"),
            default="pruned",
            help="triple enumeration mode (default pruned)",
        )
        p.add_argument(
            "--allow-empty-s2",
            type=_bool_flag,
            default=True,
            metavar="true|false",
            help="include empty-S2 triples (default true)",
        )
        p.add_argument(
            "--p1-singletons",
            type=_bool_flag,
            default=True,
            metavar="true|false",
            help="add single-vertex neighbourhood partitions when p=1 (default true)",
        )
        p.add_argument(
            "--budget",
            type=int,
            default=separators.DEFAULT_BUDGET,
            help="triple enumeration budget (default 10^7)",
        )

    def add_out(p):
        p.add_argument("--out", help="write the report here instead of stdout")

    p_check = sub.add_parser("check-free", help="test membership in the pattern-free class")
    add_graph_arg(p_check)
    add_pq(p_check)
    add_out(p_check)

    p_family = sub.add_parser("family", help="build and serialize the separating family")
    add_graph_arg(p_family)
    add_pq(p_family)
    add_family_opts(p_family)
    add_out(p_family)

    p_witness = sub.add_parser("witness", help="run the separation argument on one pair")
    add_graph_arg(p_witness)
    add_pq(p_witness)
    p_witness.add_argument(
        "--k", type=_vertex_list, required=True, metavar="0,1", help="clique vertices"
    )
    p_witness.add_argument(
        "--s", type=_vertex_list, required=True, metavar="2,4", help="stable-set vertices"
    )
    p_witness.add_argument("--mode", choices=("tight", "paper"), default="tight")
    add_out(p_witness)

    p_verify = sub.add_parser("verify", help="exhaustive coverage check of the family")
    add_graph_arg(p_verify)
    add_pq(p_verify)
    add_family_opts(p_verify)
    p_verify.add_argument(
        "--pairs", choices=("all", "maximal-seeded"), default="all"
    )
    p_verify.add_argument(
        "--witness",
        type=_bool_flag,
        default=True,
        metavar="true|false",
        help="cross-run the witness algorithm per pair (default true)",
    )
    p_verify.add_argument(
        "--max-n",
        type=int,
        default=testbed.DEFAULT_ENUM_MAX_N,
        help="vertex-count cap for enumeration (default 14)",
    )
    p_verify.add_argument(
        "--jobs", type=int, default=1, help="worker processes (default 1)"
    )
    add_out(p_verify)

    p_ramsey = sub.add_parser("ramsey-check", help="exhaustive Ramsey property check")
    p_ramsey.add_argument("--r", type=int, required=True, help="vertices to 2-color")
    p_ramsey.add_argument("--q", type=int, required=True, help="monochromatic clique size")
    p_ramsey.add_argument(
        "--max-edges",
        type=int,
        default=ramsey_mod.DEFAULT_MAX_EDGES,
        help="cap on C(r,2) (default 28)",
    )
    add_out(p_ramsey)

    p_gen = sub.add_parser("gen", help="generate a seeded random graph to a file")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--edge-prob", type=float, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out-graph", required=True, help="graph file to write")
    p_gen.add_argument(
        "--graph-format", choices=("edgelist", "dimacs"), default="edgelist"
    )
    p_gen.add_argument(
        "--require-class",
        action="store_true",
        help="rejection-sample until the graph avoids both patterns",
    )
    p_gen.add_argument("--p", type=int, default=None)
    p_gen.add_argument("--q", type=int, default=None)
    p_gen.add_argument("--max-tries", type=int, default=64)
    add_out(p_gen)

    return parser


def _embedding_doc(emb) -> Optional[dict]:
    if emb is None:
        return None
    return {"pattern": emb.spec_name, "blocks": {name: list(vs) for name, vs in emb.blocks}}


def _cmd_check_free(args) -> tuple[int, dict]:
    g = parse_graph(args.graph, args.format)
    fs_hit = contains_induced(g, fs_spec(args.p, args.q))
    fk_hit = contains_induced(g, fk_spec(args.p, args.q))
    free = fs_hit is None and fk_hit is None
    doc = {
        "schema": reports.SCHEMAS["class"],
        "command": "check-free",
        "graph": {"path": args.graph, "n": g.n, "m": g.edge_count()},
        "params": {"p": args.p, "q": args.q},
        "in_class": free,
        "stable_tail_embedding": _embedding_doc(fs_hit),
        "clique_tail_embedding": _embedding_doc(fk_hit),
    }
    return (EXIT_OK if free else EXIT_PROPERTY_FAILS), doc


def _family_options(args) -> separators.FamilyOptions:
    return separators.FamilyOptions(
        ramsey_mode=args.mode,
        family_mode=args.family,
        allow_empty_s2=args.allow_empty_s2,
        p1_singletons=args.p1_singletons,
        budget=args.budget,
    )


def _cmd_family(args) -> tuple[int, dict]:
    g = parse_graph(args.graph, args.format)
    fam = separators.full_family(g, args.p, args.q, _family_options(args))
    doc = reports.family_doc(fam)
    doc["command"] = "family"
    doc["graph"] = {"path": args.graph, "n": g.n, "m": g.edge_count()}
    stats = fam.stats_dict()
    n = g.n
    bounds_ok = True
    if n >= 2:
        bounds_ok = (
            stats["p1_pre_dedup"] <= stats["p1_bound_2np"]
            and stats["p2_triples_faithful"] < stats["p2_bound_paper"]
        )
    doc["bounds_hold"] = bounds_ok
    return (EXIT_OK if bounds_ok else EXIT_PROPERTY_FAILS), doc


def _cmd_witness(args) -> tuple[int, dict]:
    g = parse_graph(args.graph, args.format)
    k = VertexSet.from_vertices(g.n, args.k)
    s = VertexSet.from_vertices(g.n, args.s)
    report = witness.find_separator(g, args.p, args.q, k, s, ramsey_mode=args.mode)
    doc = reports.witness_doc(report)
    doc["command"] = "witness"
    doc["graph"] = {"path": args.graph, "n": g.n, "m": g.edge_count()}
    doc["k"] = list(k.members)
    doc["s"] = list(s.members)
    return EXIT_OK, doc


def _cmd_verify(args) -> tuple[int, dict]:
    g = parse_graph(args.graph, args.format)
    fam = separators.full_family(g, args.p, args.q, _family_options(args))
    report = testbed.verify_family_covers(
        g,
        fam,
        pairs=args.pairs,
        check_witness=args.witness,
        max_n=args.max_n,
        jobs=args.jobs,
    )
    doc = reports.coverage_doc(report)
    doc["command"] = "verify"
    doc["graph"] = {"path": args.graph, "n": g.n, "m": g.edge_count()}
    doc["options"] = reports.options_doc(fam.params.options)
    holds = report.covered and (
        not args.witness or report.witness_agreement == 1.0
    )
    return (EXIT_OK if holds else EXIT_PROPERTY_FAILS), doc


def _cmd_ramsey(args) -> tuple[int, dict]:
    holds = ramsey_mod.verify_ramsey_property(args.r, args.q, max_edges=args.max_edges)
    doc = {
        "schema": reports.SCHEMAS["ramsey"],
        "command": "ramsey-check",
        "r": args.r,
        "q": args.q,
        "holds": holds,
        "colorings": 2 ** (args.r * (args.r - 1) // 2),
    }
    return (EXIT_OK if holds else EXIT_PROPERTY_FAILS), doc


def _cmd_gen(args) -> tuple[int, dict]:
    require = args.require_class
    if require and (args.p is None or args.q is None):
        raise InputError("--require-class needs --p and --q")
    if require:
        g = testbed.gen_in_class(
            args.n, args.edge_prob, args.p, args.q, args.seed, args.max_tries
        )
    else:
        g = testbed.gen_random(args.n, args.edge_prob, args.seed)
    doc = {
        "schema": reports.SCHEMAS["gen"],
        "command": "gen",
        "n": args.n,
        "edge_prob": args.edge_prob,
        "seed": args.seed,
        "require_class": require,
        "p": args.p,
        "q": args.q,
        "max_tries": args.max_tries,
        "out_graph": args.out_graph,
        "graph_format": args.graph_format,
    }
    if g is None:
        doc["generated"] = False
        return EXIT_PROPERTY_FAILS, doc
    write_graph(g, args.out_graph, args.graph_format)
    doc["generated"] = True
    doc["m"] = g.edge_count()
    return EXIT_OK, doc


_COMMANDS = {
    "check-free": _cmd_check_free,
    "family": _cmd_family,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "ramsey-check": _cmd_ramsey,
    "gen": _cmd_gen,
}


def run_cli(argv: Sequence[str]) -> tuple[int, str, Optional[str]]:
    """Parse and run; returns (exit_code, report_text, out_path) and writes
    the report to out_path when one was given.  Raises SystemExit only for
    argparse-level usage errors."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, doc = _COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        doc = {
            "schema": reports.SCHEMAS["error"],
            "command": args.command,
            "error": "resource-limit",
            "message": str(exc),
        }
        code = EXIT_RESOURCE
    except InputError as exc:
        doc = {
            "schema": reports.SCHEMAS["error"],
            "command": args.command,
            "error": "input",
            "message": str(exc),
        }
        code = EXIT_INPUT_ERROR
    text = reports.canonical_json(doc)
    out_path = getattr(args, "out", None)
    if out_path:
        Path(out_path).write_text(text)
    return code, text, out_path


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    code, text, out_path = run_cli(argv)
    if not out_path:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
