"""Construction of the separating partition family.

Two sub-families make up the full family:

* P1: the partitions (N(X), rest) and (N[X], rest) over every vertex subset
  X with |X| < p.
* P2: the partitions (A_X, rest) over triples X = (K1, S1, S2) of disjoint
  sets with |K1| = |S1| = p and |S2| < R, where R bounds the diagonal Ramsey
  number R(q, q).

At p = 1 the P1 stage as literally defined contributes only (N(emptyset),
rest) = (emptyset, V), which is provably too weak: on the single-edge graph
the pair K = {0, 1}, S = emptyset meets no P2 partition either.  The witness
argument routes such pairs through single-vertex neighbourhood partitions, so
``full_family`` adds them by default when p = 1 (``p1_singletons``); the
strict stage remains available and is what the exact P1 counting formula is
stated for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal, Optional

from ._kernels import pure as _pure_kernels
from .errors import InputError, InternalInvariantError, ResourceLimitError
from .graph import (
    Graph,
    Partition,
    VertexSet,
    bits,
    is_clique,
    is_stable,
    mask_of,
    neighbors,
    relation,
)
from .ramsey import RamseyMode, ramsey_upper

DEFAULT_BUDGET = 10_000_000

FamilyMode = Literal["pruned", "faithful"]


@dataclass(frozen=True)
class TripleX:
    """A generating triple (K1, S1, S2): |K1| = |S1| >= 1, pairwise disjoint."""

    k1: VertexSet
    s1: VertexSet
    s2: VertexSet

    def __post_init__(self):
        n = self.k1.n
        if self.s1.n != n or self.s2.n != n:
            raise InputError("triple sets live on different universes")
        if len(self.k1) != len(self.s1):
            raise InputError(
                f"|K1| = {len(self.k1)} must equal |S1| = {len(self.s1)}"
            )
        if len(self.k1) < 1:
            raise InputError("K1 and S1 must be non-empty")
        if (
            self.k1.mask & self.s1.mask
            or self.k1.mask & self.s2.mask
            or self.s1.mask & self.s2.mask
        ):
            raise InputError("triple sets must be pairwise disjoint")

    @property
    def n(self) -> int:
        return self.k1.n


def structural_triple_ok(g: Graph, t: TripleX) -> bool:
    """The pruned-mode conditions: K1 clique matched to stable S1; S2 stable,
    complete to K1 and anticomplete to S1."""
    if not is_clique(g, t.k1) or not is_stable(g, t.s1) or not is_stable(g, t.s2):
        return False
    if not relation(g, t.k1, t.s1).matched:
        return False
    r2 = relation(g, t.k1, t.s2)
    if not r2.complete:
        return False
    return relation(g, t.s1, t.s2).anticomplete


@dataclass(frozen=True)
class Provenance:
    """How a partition was generated.

    kind 'p1-open'/'p1-closed': sets = (X,); kind 'p2': sets = (K1, S1, S2);
    kind 'complement': sets = (original x_side,).
    """

    kind: str
    sets: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FamilyOptions:
    ramsey_mode: RamseyMode = "tight"
    family_mode: FamilyMode = "pruned"
    allow_empty_s2: bool = True
    p1_singletons: bool = True
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.ramsey_mode not in ("tight", "paper"):
            raise InputError(f"ramsey_mode must be tight|paper, got {self.ramsey_mode!r}")
        if self.family_mode not in ("pruned", "faithful"):
            raise InputError(f"family_mode must be pruned|faithful, got {self.family_mode!r}")
        if self.budget < 1:
            raise InputError("budget must be positive")


@dataclass(frozen=True)
class FamilyParams:
    n: int
    p: Optional[int]
    q: Optional[int]
    r: Optional[int]
    kind: str
    options: Optional[FamilyOptions] = None
    complemented: bool = False


@dataclass(frozen=True)
class SeparatorFamily:
    """A deduplicated, canonically ordered list of partitions with provenance."""

    params: FamilyParams
    partitions: tuple[Partition, ...]
    provenance: tuple[Provenance, ...]
    stats: tuple[tuple[str, int], ...]
    x_mask_set: frozenset[int] = field(repr=False, default=frozenset())

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.partitions)

    def __contains__(self, item) -> bool:
        if isinstance(item, Partition):
            return item.x_side.mask in self.x_mask_set
        if isinstance(item, VertexSet):
            return item.mask in self.x_mask_set
        return False

    def contains_mask(self, x_mask: int) -> bool:
        return x_mask in self.x_mask_set

    def stats_dict(self) -> dict[str, int]:
        return dict(self.stats)

    def x_masks(self) -> list[int]:
        return [part.x_side.mask for part in self.partitions]


def _assemble(params: FamilyParams, entries, stats: dict[str, int]) -> SeparatorFamily:
    """Dedup by x_side, keep first provenance, sort canonically."""
    n = params.n
    seen: dict[int, Provenance] = {}
    for x_mask, prov in entries:
        if x_mask not in seen:
            seen[x_mask] = prov
    order = sorted(seen, key=lambda m: tuple(bits(m)))
    partitions = tuple(Partition(VertexSet(n, m)) for m in order)
    provenance = tuple(seen[m] for m in order)
    stats = dict(stats)
    stats["post_dedup"] = len(partitions)
    return SeparatorFamily(
        params=params,
        partitions=partitions,
        provenance=provenance,
        stats=tuple(sorted(stats.items())),
        x_mask_set=frozenset(order),
    )


def _p1_entries(g: Graph, p: int, include_singletons: bool, budget: int):
    """Yield (x_mask, provenance) for the neighbourhood stage, pre-dedup.

    Core entries use every |X| <= p-1; the optional singleton extension (the
    p = 1 repair) adds |X| = 1 when p == 1.
    """
    n = g.n
    core = 2 * sum(math.comb(n, i) for i in range(p))
    if core > budget:
        raise ResourceLimitError(
            f"neighbourhood stage needs {core} partitions, over budget {budget}",
            count=core,
        )
    sizes = list(range(p))
    extra = include_singletons and p == 1
    if extra:
        sizes.append(1)
    for size in sizes:
        for sub in combinations(range(n), size):
            x = VertexSet.from_vertices(n, sub)
            yield neighbors(g, x, "open").mask, Provenance("p1-open", (sub,))
            yield neighbors(g, x, "closed").mask, Provenance("p1-closed", (sub,))


def p1_family(
    g: Graph, p: int, include_singletons: bool = False, budget: int = DEFAULT_BUDGET
) -> SeparatorFamily:
    """Neighbourhood partitions (N(X), rest) and (N[X], rest) for |X| < p.

    ``include_singletons`` adds the |X| = 1 partitions when p == 1; the strict
    default matches the exact pre-dedup count 2 * sum_{i<p} C(n, i).
    """
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    n = g.n
    entries = list(_p1_entries(g, p, include_singletons, budget))
    core = 2 * sum(math.comb(n, i) for i in range(p))
    singleton_extra = 2 * n if include_singletons and p == 1 else 0
    if len(entries) != core + singleton_extra:
        raise InternalInvariantError(
            f"counted {len(entries)} neighbourhood partitions, formula says "
            f"{core + singleton_extra}"
        )
    stats = {
        "p1_pre_dedup": core,
        "p1_singleton_extra": singleton_extra,
        "p1_bound_2np": 2 * n**p,
    }
    params = FamilyParams(n=n, p=p, q=None, r=None, kind="p1")
    return _assemble(params, entries, stats)


def a_x(g: Graph, triple: TripleX) -> Partition:
    """The partition (A_X, rest) generated by a triple.

    A_X holds the vertices that are in K1 or complete to K1 and have a
    neighbour in S1 or in Z minus N(S2), Z being the set of vertices
    anticomplete to K1 and S1.  When K1 and S1 are matched, A_X avoids
    S1 and Z entirely; that disjointness is asserted here.
    """
    if triple.n != g.n:
        raise InputError(f"triple lives on {triple.n} vertices, graph has {g.n}")
    x_mask = _pure_kernels.a_x_mask(
        g.adj, g.n, triple.k1.mask, triple.s1.mask, triple.s2.mask
    )
    if relation(g, triple.k1, triple.s1).matched:
        ks = triple.k1.mask | triple.s1.mask
        z = 0
        for v in range(g.n):
            if g.adj[v] & ks == 0:
                z |= 1 << v
        if x_mask & (triple.s1.mask | z):
            raise InternalInvariantError(
                f"A_X meets S1 or Z for matched triple {triple}"
            )
    return Partition(VertexSet(g.n, x_mask))


def faithful_triple_count(n: int, p: int, r: int, allow_empty_s2: bool) -> int:
    """Number of ordered triples the faithful enumeration visits."""
    if n < 2 * p:
        return 0
    s_lo = 0 if allow_empty_s2 else 1
    s_hi = min(r - 1, n - 2 * p)
    if s_hi < s_lo:
        return 0
    per_s2 = sum(math.comb(n - 2 * p, s) for s in range(s_lo, s_hi + 1))
    return math.comb(n, p) * math.comb(n - p, p) * per_s2


def _p2_entries(g: Graph, p: int, r: int, options: FamilyOptions):
    """Yield (x_mask, provenance) per triple, in deterministic triple order."""
    n = g.n
    adj = g.adj
    pruned = options.family_mode == "pruned"
    s_lo = 0 if options.allow_empty_s2 else 1
    s_hi = min(r - 1, n - 2 * p)
    full = (1 << n) - 1
    for k1_tuple in combinations(range(n), p):
        k1 = mask_of(k1_tuple)
        if pruned and not _mask_clique(adj, k1):
            continue
        rest1 = full & ~k1
        for s1_tuple in combinations(tuple(bits(rest1)), p):
            s1 = mask_of(s1_tuple)
            if pruned and not (
                _mask_stable(adj, s1) and _mask_matched(adj, k1, s1)
            ):
                continue
            rest2 = rest1 & ~s1
            if pruned:
                pool = 0
                for v in bits(rest2):
                    if adj[v] & k1 == k1 and adj[v] & s1 == 0:
                        pool |= 1 << v
            else:
                pool = rest2
            pool_tuple = tuple(bits(pool))
            for s2_size in range(s_lo, min(s_hi, len(pool_tuple)) + 1):
                for s2_tuple in combinations(pool_tuple, s2_size):
                    s2 = mask_of(s2_tuple)
                    if pruned and not _mask_stable(adj, s2):
                        continue
                    x_mask = _pure_kernels.a_x_mask(adj, n, k1, s1, s2)
                    yield x_mask, Provenance("p2", (k1_tuple, s1_tuple, s2_tuple))


def _mask_clique(adj, m: int) -> bool:
    return all(adj[v] & m == m ^ (1 << v) for v in bits(m))


def _mask_stable(adj, m: int) -> bool:
    return all(adj[v] & m == 0 for v in bits(m))


def _mask_matched(adj, ma: int, mb: int) -> bool:
    seen = 0
    for v in bits(ma):
        row = adj[v] & mb
        if row.bit_count() != 1 or row & seen:
            return False
        seen |= row
    return seen == mb


def p2_family(
    g: Graph,
    p: int,
    q: int,
    mode: FamilyMode = "pruned",
    allow_empty_s2: bool = True,
    ramsey_mode: RamseyMode = "tight",
    budget: int = DEFAULT_BUDGET,
) -> SeparatorFamily:
    """Triple-generated partitions (A_X, rest) over |K1| = |S1| = p, |S2| < R.

    Faithful mode enumerates every disjoint triple with those sizes; pruned
    mode keeps only structurally valid ones (the witness algorithm never
    produces others).  The faithful triple count is bounded by ``budget`` in
    both modes, since it dominates the loop work either way.
    """
    if p < 1 or q < 1:
        raise InputError(f"p and q must be >= 1, got p={p}, q={q}")
    options = FamilyOptions(
        ramsey_mode=ramsey_mode,
        family_mode=mode,
        allow_empty_s2=allow_empty_s2,
        budget=budget,
    )
    r = ramsey_upper(q, ramsey_mode).value
    count = faithful_triple_count(g.n, p, r, allow_empty_s2)
    if count > budget:
        raise ResourceLimitError(
            f"faithful triple count {count} exceeds budget {budget} "
            f"(n={g.n}, p={p}, R={r})",
            count=count,
        )
    entries = list(_p2_entries(g, p, r, options))
    emitted = len(entries)
    if mode == "faithful" and emitted != count:
        raise InternalInvariantError(
            f"faithful mode enumerated {emitted} triples, formula says {count}"
        )
    if emitted > count:
        raise InternalInvariantError(
            f"pruned mode enumerated {emitted} triples, above the faithful {count}"
        )
    stats = {
        "p2_triples_faithful": count,
        "p2_triples_enumerated": emitted,
        "p2_bound_paper": g.n ** (2 * p + 4**q),
    }
    params = FamilyParams(n=g.n, p=p, q=q, r=r, kind="p2", options=options)
    return _assemble(params, entries, stats)


def full_family(
    g: Graph, p: int, q: int, options: FamilyOptions = FamilyOptions()
) -> SeparatorFamily:
    """P1 followed by P2, deduplicated together, bounds recorded in stats."""
    if p < 1 or q < 1:
        raise InputError(f"p and q must be >= 1, got p={p}, q={q}")
    r = ramsey_upper(q, options.ramsey_mode).value
    count = faithful_triple_count(g.n, p, r, options.allow_empty_s2)
    if count > options.budget:
        raise ResourceLimitError(
            f"faithful triple count {count} exceeds budget {options.budget} "
            f"(n={g.n}, p={p}, R={r})",
            count=count,
        )
    n = g.n
    entries = list(_p1_entries(g, p, options.p1_singletons, options.budget))
    p1_pre = 2 * sum(math.comb(n, i) for i in range(p))
    singleton_extra = len(entries) - p1_pre
    emitted = 0
    p2_entries = []
    for entry in _p2_entries(g, p, r, options):
        emitted += 1
        p2_entries.append(entry)
    entries.extend(p2_entries)
    stats = {
        "p1_pre_dedup": p1_pre,
        "p1_singleton_extra": singleton_extra,
        "p1_bound_2np": 2 * n**p,
        "p2_triples_faithful": count,
        "p2_triples_enumerated": emitted,
        "p2_bound_paper": n ** (2 * p + 4**q),
        "pre_dedup_total": len(entries),
    }
    if n >= 2 and p1_pre > 2 * n**p:
        raise InternalInvariantError("P1 pre-dedup count exceeds its 2n^p bound")
    params = FamilyParams(n=n, p=p, q=q, r=r, kind="full", options=options)
    return _assemble(params, entries, stats)


def complement_family(fam: SeparatorFamily) -> SeparatorFamily:
    """Swap every partition's sides: separators for the complement graph.

    A clique of complement(G) is a stable set of G and vice versa, so if the
    original family splits every (clique, stable) pair of G, the swapped one
    splits every such pair of complement(G).  Involution up to provenance.
    """
    params = FamilyParams(
        n=fam.params.n,
        p=fam.params.p,
        q=fam.params.q,
        r=fam.params.r,
        kind=fam.params.kind,
        options=fam.params.options,
        complemented=not fam.params.complemented,
    )
    entries = [
        (part.y_side.mask, Provenance("complement", (part.x_side.members,)))
        for part in fam.partitions
    ]
    stats = {"source_post_dedup": len(fam.partitions)}
    return _assemble(params, entries, stats)
