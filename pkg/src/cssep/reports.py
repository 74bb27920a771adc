"""Structured report documents with stable, byte-reproducible serialization.

Every document carries a ``schema`` field; serialization is JSON with sorted
keys and a trailing newline, so identical runs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Optional

from .graph import Graph, Partition, VertexSet
from .separators import FamilyOptions, SeparatorFamily
from .testbed import CoverageReport
from .witness import WitnessReport

SCHEMAS = {
    "family": "cssep/family-v1",
    "witness": "cssep/witness-v1",
    "coverage": "cssep/coverage-v1",
    "class": "cssep/class-v1",
    "ramsey": "cssep/ramsey-v1",
    "gen": "cssep/gen-v1",
    "error": "cssep/error-v1",
}


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def vertices_doc(vs: Optional[VertexSet]) -> Optional[list[int]]:
    if vs is None:
        return None
    return list(vs.members)


def partition_doc(part: Partition) -> dict:
    return {"x_side": vertices_doc(part.x_side), "y_side": vertices_doc(part.y_side)}


def graph_doc(g: Graph) -> dict:
    return {"n": g.n, "m": g.edge_count(), "edges": [[u, v] for u, v in g.edges()]}


def options_doc(options: Optional[FamilyOptions]) -> Optional[dict]:
    if options is None:
        return None
    return {
        "ramsey_mode": options.ramsey_mode,
        "family_mode": options.family_mode,
        "allow_empty_s2": options.allow_empty_s2,
        "p1_singletons": options.p1_singletons,
        "budget": options.budget,
    }


def family_doc(fam: SeparatorFamily) -> dict:
    params = fam.params
    return {
        "schema": SCHEMAS["family"],
        "params": {
            "n": params.n,
            "p": params.p,
            "q": params.q,
            "r": params.r,
            "kind": params.kind,
            "complemented": params.complemented,
            "options": options_doc(params.options),
        },
        "stats": dict(fam.stats),
        "size": len(fam),
        "partitions": [
            {
                "x_side": vertices_doc(part.x_side),
                "provenance": {"kind": prov.kind, "sets": [list(s) for s in prov.sets]},
            }
            for part, prov in zip(fam.partitions, fam.provenance)
        ],
    }


def witness_doc(report: WitnessReport) -> dict:
    trace = report.trace
    return {
        "schema": SCHEMAS["witness"],
        "params": {
            "p": report.p,
            "q": report.q,
            "r": report.r,
            "ramsey_mode": report.ramsey_mode,
        },
        "branch": report.branch,
        "partition": partition_doc(report.partition),
        "in_class": report.in_class,
        "s2_within_bound": report.s2_within_bound,
        "trace": {
            "k_prime": vertices_doc(trace.k_prime),
            "s_prime": vertices_doc(trace.s_prime),
            "v": trace.v,
            "s1_prime": vertices_doc(trace.s1_prime),
            "k1_prime": vertices_doc(trace.k1_prime),
            "s1": vertices_doc(trace.s1),
            "k1": vertices_doc(trace.k1),
            "z": vertices_doc(trace.z),
            "sc": vertices_doc(trace.sc),
            "s2": vertices_doc(trace.s2),
            "w": vertices_doc(trace.w),
        },
    }


def coverage_doc(report: CoverageReport) -> dict:
    return {
        "schema": SCHEMAS["coverage"],
        "n": report.n,
        "p": report.p,
        "q": report.q,
        "r": report.r,
        "family_size": report.family_size,
        "pairs_mode": report.pairs_mode,
        "pairs_checked": report.pairs_checked,
        "uncovered_count": len(report.uncovered),
        "uncovered": [
            {"k": vertices_doc(k), "s": vertices_doc(s)} for k, s in report.uncovered
        ],
        "witness_checked": report.witness_checked,
        "witness_agreement": report.witness_agreement,
        "witness_bad": [
            {"k": vertices_doc(k), "s": vertices_doc(s)} for k, s in report.witness_bad
        ],
        "in_class": report.in_class,
        "covered": report.covered,
    }
