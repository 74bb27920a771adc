"""Brute-force oracles, generators, and the end-to-end coverage verifier.

The verifier quantifies the separation property exactly: every disjoint
(clique, stable set) pair of a small graph is checked against a family, and
optionally cross-checked against the witness algorithm.  Everything here is
deterministic given its seeds.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import combinations
from random import Random
from typing import Literal, Optional, Sequence

from . import _kernels
from .errors import InputError, InternalInvariantError, ResourceLimitError
from .graph import Graph, Partition, VertexSet, bits, complement
from .patterns import PatternSpec, is_in_class, realize
from .separators import SeparatorFamily

DEFAULT_ENUM_MAX_N = 14
BRUTE_MAX_PATTERN = 12

PairsMode = Literal["all", "maximal-seeded"]


def enumerate_cliques(
    g: Graph, maximal_only: bool = False, max_n: int = DEFAULT_ENUM_MAX_N
) -> list[VertexSet]:
    """All cliques (with the empty one) or all maximal cliques, canonical order."""
    if g.n > max_n:
        raise ResourceLimitError(
            f"clique enumeration capped at {max_n} vertices, graph has {g.n}",
            count=g.n,
        )
    return [VertexSet(g.n, m) for m in _kernels.all_cliques(g.adj, g.n, maximal_only)]


def enumerate_stable_sets(
    g: Graph, maximal_only: bool = False, max_n: int = DEFAULT_ENUM_MAX_N
) -> list[VertexSet]:
    """Cliques of the complement graph."""
    return enumerate_cliques(complement(g), maximal_only, max_n)


def check_separation(partition: Partition, k: VertexSet, s: VertexSet) -> bool:
    """True iff K lies inside the X side and S avoids it."""
    if k.mask & s.mask:
        raise InputError("K and S must be disjoint")
    x = partition.x_side.mask
    return k.mask & ~x == 0 and s.mask & x == 0


@dataclass(frozen=True)
class CoverageReport:
    n: int
    p: Optional[int]
    q: Optional[int]
    r: Optional[int]
    family_size: int
    pairs_checked: int
    uncovered: tuple[tuple[VertexSet, VertexSet], ...]
    witness_checked: bool
    witness_agreement: Optional[float]
    witness_bad: tuple[tuple[VertexSet, VertexSet], ...]
    in_class: Optional[bool]
    pairs_mode: str

    @property
    def covered(self) -> bool:
        return not self.uncovered


def _pair_lists(g: Graph, pairs_mode: PairsMode, max_n: int):
    """Clique and stable-set mask lists for the requested pair universe.

    Mode all walks every clique against every stable set.  Mode
    maximal-seeded is weaker: it walks maximal cliques against maximal
    stable sets, handing intersecting pairs to the witness path by dropping
    the shared vertex from one side.
    """
    if pairs_mode == "all":
        cliques = _kernels.all_cliques(g.adj, g.n, False)
        gc = complement(g)
        stables = _kernels.all_cliques(gc.adj, gc.n, False)
        return cliques, stables
    if pairs_mode != "maximal-seeded":
        raise InputError(f"pairs mode must be all|maximal-seeded, got {pairs_mode!r}")
    cliques = _kernels.all_cliques(g.adj, g.n, True)
    gc = complement(g)
    stables = _kernels.all_cliques(gc.adj, gc.n, True)
    return cliques, stables


def _scan_chunk(args):
    adj, n, family, clique_chunk, stables, p, r, with_witness = args
    return _kernels.coverage_scan(
        adj, n, family, clique_chunk, stables, p, r, with_witness
    )


def verify_family_covers(
    g: Graph,
    family: SeparatorFamily,
    pairs: PairsMode = "all",
    check_witness: bool = True,
    max_n: int = DEFAULT_ENUM_MAX_N,
    jobs: int = 1,
) -> CoverageReport:
    """Exhaustive coverage check of a family, with optional witness cross-run.

    The witness cross-run asks, for every disjoint pair, that find_separator's
    partition both separates the pair and already sits in ``family``; it needs
    the family's (p, q, R) parameters, so it is refused for families that lost
    them.  Any uncovered pair the kernel reports is re-verified here by a
    direct scan before being believed.
    """
    if g.n > max_n:
        raise ResourceLimitError(
            f"coverage check capped at {max_n} vertices, graph has {g.n}",
            count=g.n,
        )
    if g.n != family.params.n:
        raise InputError(
            f"family built for n={family.params.n}, graph has n={g.n}"
        )
    p, q, r = family.params.p, family.params.q, family.params.r
    if check_witness and (p is None or q is None or r is None or family.params.complemented):
        raise InputError(
            "witness cross-run needs an uncomplemented family with (p, q, R) params"
        )
    if jobs < 1:
        raise InputError("jobs must be >= 1")
    cliques, stables = _pair_lists(g, pairs, max_n)
    if pairs == "maximal-seeded":
        cliques, stables = _maximal_seeded_pairs(cliques, stables)
    fam_masks = family.x_masks()
    wp = p if p is not None else 1
    wr = r if r is not None else 1
    if jobs == 1 or len(cliques) < 2 * jobs:
        pairs_checked, uncovered, bad = _kernels.coverage_scan(
            g.adj, g.n, fam_masks, cliques, stables, wp, wr, check_witness
        )
    else:
        chunks = [cliques[i::jobs] for i in range(jobs)]
        args = [
            (tuple(g.adj), g.n, fam_masks, chunk, stables, wp, wr, check_witness)
            for chunk in chunks
            if chunk
        ]
        with multiprocessing.Pool(processes=len(args)) as pool:
            parts = pool.map(_scan_chunk, args)
        pairs_checked = sum(part[0] for part in parts)
        uncovered = sorted(
            (pair for part in parts for pair in part[1]),
            key=lambda ks: (tuple(bits(ks[0])), tuple(bits(ks[1]))),
        )
        bad = sorted(
            (pair for part in parts for pair in part[2]),
            key=lambda ks: (tuple(bits(ks[0])), tuple(bits(ks[1]))),
        )
    for k_mask, s_mask in uncovered:
        k, s = VertexSet(g.n, k_mask), VertexSet(g.n, s_mask)
        if any(check_separation(part, k, s) for part in family):
            raise InternalInvariantError(
                f"kernel reported K={k}, S={s} uncovered but a direct scan "
                f"found a separator"
            )
    agreement = None
    if check_witness:
        agreement = 1.0 if pairs_checked == 0 else (pairs_checked - len(bad)) / pairs_checked
    in_class = None
    if p is not None and q is not None and not family.params.complemented:
        in_class = is_in_class(g, p, q)
    return CoverageReport(
        n=g.n,
        p=p,
        q=q,
        r=r,
        family_size=len(family),
        pairs_checked=pairs_checked,
        uncovered=tuple(
            (VertexSet(g.n, km), VertexSet(g.n, sm)) for km, sm in uncovered
        ),
        witness_checked=check_witness,
        witness_agreement=agreement,
        witness_bad=tuple(
            (VertexSet(g.n, km), VertexSet(g.n, sm)) for km, sm in bad
        ),
        in_class=in_class,
        pairs_mode=pairs,
    )


def _maximal_seeded_pairs(cliques, stables):
    """Derived disjoint pairs from maximal ones: drop the shared vertex once
    from each side when a maximal clique and maximal stable set intersect."""
    clique_set = set(cliques)
    stable_set = set(stables)
    for k in cliques:
        for s in stables:
            inter = k & s
            if inter:
                clique_set.add(k & ~inter)
                stable_set.add(s & ~inter)
    key = lambda m: tuple(bits(m))
    return sorted(clique_set, key=key), sorted(stable_set, key=key)


def brute_force_contains(
    g: Graph,
    h: Graph,
    max_pattern: int = BRUTE_MAX_PATTERN,
    max_n: int = DEFAULT_ENUM_MAX_N,
) -> bool:
    """Ground-truth induced-subgraph test by naive injective enumeration."""
    if h.n > max_pattern:
        raise ResourceLimitError(
            f"pattern capped at {max_pattern} vertices, got {h.n}", count=h.n
        )
    if g.n > max_n:
        raise ResourceLimitError(
            f"host capped at {max_n} vertices, got {g.n}", count=g.n
        )
    return bool(_kernels.graph_contains_induced(g.adj, g.n, h.adj, h.n))


def brute_force_contains_pattern(
    g: Graph,
    spec: PatternSpec,
    max_pattern: int = BRUTE_MAX_PATTERN,
    max_n: int = DEFAULT_ENUM_MAX_N,
) -> bool:
    """Pattern oracle: quantifies over every completion of unrestricted blocks.

    For specs without unrestricted blocks this is one brute_force_contains
    call; otherwise each choice of internal edges is realized and tried.
    """
    unrestricted = [b for b in spec.blocks if b.rule == "unrestricted" and b.size >= 2]
    slots: list[tuple[str, int, int]] = []
    for b in unrestricted:
        slots.extend((b.name, i, j) for i, j in combinations(range(b.size), 2))
    for choice in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if choice >> i & 1]
        hg, _ = realize(spec, edges)
        if brute_force_contains(g, hg, max_pattern, max_n):
            return True
    return False


def gen_random(n: int, edge_prob: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph; edges drawn in lexicographic (u, v) order."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InputError(f"edge probability must be in [0, 1], got {edge_prob}")
    rng = Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)


def gen_in_class(
    n: int, edge_prob: float, p: int, q: int, seed: int, max_tries: int = 64
) -> Optional[Graph]:
    """Rejection-sample seeded graphs until one avoids both forbidden patterns.

    Derived seeds are seed, seed+1, ...; returns None when max_tries runs out.
    """
    if max_tries < 1:
        raise InputError("max_tries must be >= 1")
    for t in range(max_tries):
        g = gen_random(n, edge_prob, seed + t)
        if is_in_class(g, p, q):
            return g
    return None


def plant_disjoint(g: Graph, h: Graph) -> Graph:
    """Disjoint union with ``h``'s vertices appended after ``g``'s."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex permutation v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise InputError("perm must be a permutation of 0..n-1")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@dataclass(frozen=True)
class CorpusEntry:
    n: int
    edge_prob: float
    seed: int
    p: int
    q: int


def build_corpus(
    pq_pairs: Sequence[tuple[int, int]] = ((1, 1), (2, 2)),
    densities: Sequence[float] = (0.2, 0.5, 0.8),
    per_bucket: int = 34,
    base_seed: int = 20260814,
    max_attempts_per_bucket: int = 600,
) -> list[tuple[CorpusEntry, Graph]]:
    """Deterministic corpus of class members, one bucket per (p, q, density).

    Candidate sizes cycle over a fixed schedule per (p, q); each attempt uses
    a distinct derived seed so the corpus is reproducible from base_seed
    alone.  Raises if a bucket cannot be filled, rather than under-reporting.
    """
    schedules = {
        (1, 1): (3, 4, 4, 5, 5, 6),
        (1, 2): (4, 5, 6, 7, 8, 8),
        (2, 1): (5, 6, 7, 8, 9, 10),
        (2, 2): (6, 8, 9, 10, 11, 12),
    }
    out: list[tuple[CorpusEntry, Graph]] = []
    for p, q in pq_pairs:
        schedule = schedules.get((p, q))
        if schedule is None:
            raise InputError(f"no size schedule for (p, q) = ({p}, {q})")
        for d_index, density in enumerate(densities):
            found = 0
            for attempt in range(max_attempts_per_bucket):
                n = schedule[attempt % len(schedule)]
                seed = base_seed + 1000 * d_index + attempt + 100000 * (10 * p + q)
                g = gen_random(n, density, seed)
                if is_in_class(g, p, q):
                    out.append((CorpusEntry(n, density, seed, p, q), g))
                    found += 1
                    if found == per_bucket:
                        break
            if found < per_bucket:
                raise ResourceLimitError(
                    f"corpus bucket p={p} q={q} density={density} filled only "
                    f"{found}/{per_bucket} after {max_attempts_per_bucket} attempts",
                    count=found,
                )
    return out


def corpus_manifest_doc(entries: Sequence[CorpusEntry]) -> dict:
    """Serializable manifest; regenerate any graph via gen_random(n, prob, seed)."""
    return {
        "schema": "cssep/corpus-v1",
        "entries": [
            {
                "n": e.n,
                "edge_prob": e.edge_prob,
                "seed": e.seed,
                "p": e.p,
                "q": e.q,
            }
            for e in entries
        ],
    }


def load_corpus_manifest(doc: dict) -> list[CorpusEntry]:
    if doc.get("schema") != "cssep/corpus-v1":
        raise InputError("not a corpus manifest document")
    return [
        CorpusEntry(
            n=int(e["n"]),
            edge_prob=float(e["edge_prob"]),
            seed=int(e["seed"]),
            p=int(e["p"]),
            q=int(e["q"]),
        )
        for e in doc["entries"]
    ]
