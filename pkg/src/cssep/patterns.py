"""Forbidden block patterns and induced-copy detection.

A pattern is a list of named vertex blocks with one intra-block rule each
(clique / stable / unrestricted) and exactly one inter-block rule per block
pair (complete / anticomplete / matched).  The two families of interest:

* ``fs_spec(p, q)``: clique K matched to stable S1; K complete to stable S2;
  S2 matched to stable S3; every other pair anticomplete.
* ``fk_spec(p, q)``: the same shape with the tail block S3 a clique.
* ``fab_spec(a, b)``: K1 matched to stable S1; K1 complete to stable S2;
  S2 matched to W whose internal edges are unrestricted; other pairs
  anticomplete.

A graph is "in class" for parameters (p, q) when it contains neither
fs_spec(p, q) nor fk_spec(p, q) as an induced subgraph.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Optional

from .errors import InputError, InternalInvariantError
from .graph import Graph, VertexSet, bits, mask_of

IntraRule = Literal["clique", "stable", "unrestricted"]
PairRule = Literal["complete", "anticomplete", "matched"]


@dataclass(frozen=True)
class Block:
    name: str
    size: int
    rule: IntraRule

    def __post_init__(self):
        if self.size < 0:
            raise InputError(f"block {self.name} has negative size {self.size}")
        if self.rule not in ("clique", "stable", "unrestricted"):
            raise InputError(f"unknown intra-block rule {self.rule!r}")


@dataclass(frozen=True)
class PatternSpec:
    """Blocks in a fixed order plus one rule for every unordered block pair."""

    name: str
    blocks: tuple[Block, ...]
    pair_rules: tuple[tuple[str, str, PairRule], ...]

    def __post_init__(self):
        names = [b.name for b in self.blocks]
        if len(set(names)) != len(names):
            raise InputError("duplicate block names")
        seen = set()
        sizes = {b.name: b.size for b in self.blocks}
        for a, b, rule in self.pair_rules:
            if a not in sizes or b not in sizes or a == b:
                raise InputError(f"pair rule on unknown blocks ({a}, {b})")
            key = frozenset((a, b))
            if key in seen:
                raise InputError(f"two rules for block pair ({a}, {b})")
            seen.add(key)
            if rule not in ("complete", "anticomplete", "matched"):
                raise InputError(f"unknown pair rule {rule!r}")
            if rule == "matched" and sizes[a] != sizes[b]:
                raise InputError(
                    f"matched blocks {a} and {b} have sizes {sizes[a]} != {sizes[b]}"
                )
        want = len(self.blocks) * (len(self.blocks) - 1) // 2
        if len(seen) != want:
            raise InputError(f"expected {want} pair rules, got {len(seen)}")

    @property
    def size(self) -> int:
        return sum(b.size for b in self.blocks)

    def rule_between(self, a: str, b: str) -> PairRule:
        for x, y, rule in self.pair_rules:
            if {x, y} == {a, b}:
                return rule
        raise InputError(f"no rule between {a} and {b}")


def fs_spec(p: int, q: int) -> PatternSpec:
    """The forbidden pattern whose tail block S3 is stable."""
    _check_pq(p, q)
    return PatternSpec(
        name=f"fs({p},{q})",
        blocks=(
            Block("K", p, "clique"),
            Block("S1", p, "stable"),
            Block("S2", q, "stable"),
            Block("S3", q, "stable"),
        ),
        pair_rules=(
            ("K", "S1", "matched"),
            ("K", "S2", "complete"),
            ("K", "S3", "anticomplete"),
            ("S1", "S2", "anticomplete"),
            ("S1", "S3", "anticomplete"),
            ("S2", "S3", "matched"),
        ),
    )


def fk_spec(p: int, q: int) -> PatternSpec:
    """The forbidden pattern whose tail block S3 is a clique."""
    _check_pq(p, q)
    return PatternSpec(
        name=f"fk({p},{q})",
        blocks=(
            Block("K", p, "clique"),
            Block("S1", p, "stable"),
            Block("S2", q, "stable"),
            Block("S3", q, "clique"),
        ),
        pair_rules=(
            ("K", "S1", "matched"),
            ("K", "S2", "complete"),
            ("K", "S3", "anticomplete"),
            ("S1", "S2", "anticomplete"),
            ("S1", "S3", "anticomplete"),
            ("S2", "S3", "matched"),
        ),
    )


def fab_spec(a: int, b: int) -> PatternSpec:
    """Like fs_spec but the tail block W (size b) has unrestricted insides."""
    if a < 1:
        raise InputError(f"first block size must be >= 1, got {a}")
    if b < 0:
        raise InputError(f"tail block size must be >= 0, got {b}")
    return PatternSpec(
        name=f"fab({a},{b})",
        blocks=(
            Block("K1", a, "clique"),
            Block("S1", a, "stable"),
            Block("S2", b, "stable"),
            Block("W", b, "unrestricted"),
        ),
        pair_rules=(
            ("K1", "S1", "matched"),
            ("K1", "S2", "complete"),
            ("K1", "W", "anticomplete"),
            ("S1", "S2", "anticomplete"),
            ("S1", "W", "anticomplete"),
            ("S2", "W", "matched"),
        ),
    )


def _check_pq(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise InputError(f"pattern parameters must be >= 1, got p={p}, q={q}")


def realize(
    spec: PatternSpec, unrestricted_edges: Iterable[tuple[str, int, int]] = ()
) -> tuple[Graph, dict[str, tuple[int, ...]]]:
    """Build the concrete graph of a spec, vertices numbered block by block.

    Matched pairs are wired index-to-index.  Unrestricted blocks default to
    edgeless; pass (block, i, j) triples with block-local indices to add
    internal edges.
    """
    labeling: dict[str, tuple[int, ...]] = {}
    start = 0
    for b in spec.blocks:
        labeling[b.name] = tuple(range(start, start + b.size))
        start += b.size
    edges: list[tuple[int, int]] = []
    for b in spec.blocks:
        if b.rule == "clique":
            edges.extend(combinations(labeling[b.name], 2))
    for a, b, rule in spec.pair_rules:
        va, vb = labeling[a], labeling[b]
        if rule == "complete":
            edges.extend((x, y) for x in va for y in vb)
        elif rule == "matched":
            edges.extend(zip(va, vb))
    sizes = {b.name: b.size for b in spec.blocks}
    for name, i, j in unrestricted_edges:
        block = next((b for b in spec.blocks if b.name == name), None)
        if block is None or block.rule != "unrestricted":
            raise InputError(f"{name} is not an unrestricted block of {spec.name}")
        if not (0 <= i < sizes[name] and 0 <= j < sizes[name]) or i == j:
            raise InputError(f"bad internal edge ({i}, {j}) for block {name}")
        edges.append((labeling[name][i], labeling[name][j]))
    return Graph.from_edges(start, edges), labeling


def build_fs(p: int, q: int) -> tuple[Graph, dict[str, tuple[int, ...]]]:
    """Concrete graph of fs_spec(p, q) with its block labeling."""
    return realize(fs_spec(p, q))


def build_fk(p: int, q: int) -> tuple[Graph, dict[str, tuple[int, ...]]]:
    """Concrete graph of fk_spec(p, q) with its block labeling."""
    return realize(fk_spec(p, q))


@dataclass(frozen=True)
class Embedding:
    """An induced copy of a pattern: host vertices per block, spec block order."""

    spec_name: str
    blocks: tuple[tuple[str, tuple[int, ...]], ...]

    def as_dict(self) -> dict[str, tuple[int, ...]]:
        return dict(self.blocks)

    def image(self) -> tuple[int, ...]:
        out: list[int] = []
        for _, vs in self.blocks:
            out.extend(vs)
        return tuple(sorted(out))

    def validate(self, g: Graph, spec: PatternSpec) -> bool:
        """Check every block and pair rule against the host graph."""
        got = self.as_dict()
        if set(got) != {b.name for b in spec.blocks}:
            return False
        image = self.image()
        if len(image) != len(set(image)) or len(image) != spec.size:
            return False
        if any(not 0 <= v < g.n for v in image):
            return False
        masks = {name: mask_of(vs) for name, vs in got.items()}
        for b in spec.blocks:
            if len(got[b.name]) != b.size:
                return False
            if not _intra_ok(g.adj, masks[b.name], b.rule):
                return False
        for a, b, rule in spec.pair_rules:
            if not _pair_ok(g.adj, masks[a], masks[b], rule):
                return False
        return True


def _intra_ok(adj: tuple[int, ...], m: int, rule: IntraRule) -> bool:
    if rule == "unrestricted":
        return True
    for v in bits(m):
        inside = adj[v] & m
        if rule == "clique" and inside != m ^ (1 << v):
            return False
        if rule == "stable" and inside:
            return False
    return True


def _pair_ok(adj: tuple[int, ...], ma: int, mb: int, rule: PairRule) -> bool:
    if rule == "complete":
        return all(adj[v] & mb == mb for v in bits(ma))
    if rule == "anticomplete":
        return all(adj[v] & mb == 0 for v in bits(ma))
    if ma.bit_count() != mb.bit_count():
        return False
    seen = 0
    for v in bits(ma):
        row = adj[v] & mb
        if row.bit_count() != 1 or row & seen:
            return False
        seen |= row
    return True


def contains_induced(g: Graph, spec: PatternSpec) -> Optional[Embedding]:
    """First induced copy of ``spec`` in ``g`` in deterministic search order.

    Blocks are placed in spec order; a block matched to an already placed one
    is filled by assigning each placed vertex its unique cross-neighbour,
    which is by far the strongest pruner for these patterns.
    """
    if spec.size > g.n:
        return None
    blocks = spec.blocks
    m = len(blocks)
    idx = {b.name: i for i, b in enumerate(blocks)}
    rules: dict[tuple[int, int], PairRule] = {}
    for a, b, rule in spec.pair_rules:
        i, j = sorted((idx[a], idx[b]))
        rules[(i, j)] = rule
    placed_masks = [0] * m
    placed_tuples: list[tuple[int, ...]] = [()] * m
    adj = g.adj
    full = g.full_mask

    def rules_ok(i: int) -> bool:
        for j in range(i):
            if not _pair_ok(adj, placed_tuples_mask(j), placed_tuples_mask(i), rules[(j, i)]):
                return False
        return True

    def placed_tuples_mask(i: int) -> int:
        return placed_masks[i]

    def place(i: int, used: int) -> Optional[Embedding]:
        if i == m:
            return Embedding(
                spec_name=spec.name,
                blocks=tuple((blocks[j].name, placed_tuples[j]) for j in range(m)),
            )
        b = blocks[i]
        if b.size == 0:
            placed_masks[i] = 0
            placed_tuples[i] = ()
            if rules_ok(i):
                found = place(i + 1, used)
                if found is not None:
                    return found
            return None
        matched_j = next(
            (j for j in range(i) if rules.get((j, i)) == "matched"), None
        )
        if matched_j is not None:
            partner = placed_tuples[matched_j]
            for cand in _matched_assignments(adj, partner, used, full):
                cand_mask = mask_of(cand)
                if not _intra_ok(adj, cand_mask, b.rule):
                    continue
                placed_masks[i] = cand_mask
                placed_tuples[i] = cand
                if not rules_ok(i):
                    continue
                found = place(i + 1, used | cand_mask)
                if found is not None:
                    return found
            return None
        pool = full & ~used
        for j in range(i):
            rule = rules[(j, i)]
            if rule == "complete":
                for v in placed_tuples[j]:
                    pool &= adj[v]
            elif rule == "anticomplete":
                for v in placed_tuples[j]:
                    pool &= ~adj[v]
        for cand in _block_combinations(adj, pool, b.size, b.rule):
            cand_mask = mask_of(cand)
            placed_masks[i] = cand_mask
            placed_tuples[i] = cand
            if not rules_ok(i):
                continue
            found = place(i + 1, used | cand_mask)
            if found is not None:
                return found
        return None

    return place(0, 0)


def _matched_assignments(adj, partner, used, full):
    """All ways to give each partner vertex a private cross-neighbour.

    Candidate mates for partner[i] must be adjacent to partner[i] and to no
    other partner vertex, which makes the pairing unique per mate set.
    """
    k = len(partner)
    pools = []
    for i, v in enumerate(partner):
        pool = adj[v] & ~used & full
        for j, u in enumerate(partner):
            if j != i:
                pool &= ~adj[u]
        pools.append(pool)
    chosen: list[int] = []

    def rec(i: int, taken: int):
        if i == k:
            yield tuple(chosen)
            return
        for v in bits(pools[i] & ~taken):
            chosen.append(v)
            yield from rec(i + 1, taken | 1 << v)
            chosen.pop()

    yield from rec(0, 0)


def _block_combinations(adj, pool, size, rule):
    """Size-``size`` subsets of ``pool`` satisfying the intra rule, lex order."""
    items = list(bits(pool))
    chosen: list[int] = []

    def rec(start: int, allowed: int):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for pos in range(start, len(items)):
            v = items[pos]
            if not allowed >> v & 1:
                continue
            if rule == "clique":
                nxt = allowed & adj[v]
            elif rule == "stable":
                nxt = allowed & ~adj[v]
            else:
                nxt = allowed
            chosen.append(v)
            yield from rec(pos + 1, nxt)
            chosen.pop()

    yield from rec(0, pool)


@functools.lru_cache(maxsize=8192)
def _class_membership(g: Graph, p: int, q: int) -> bool:
    return (
        contains_induced(g, fs_spec(p, q)) is None
        and contains_induced(g, fk_spec(p, q)) is None
    )


def is_in_class(g: Graph, p: int, q: int) -> bool:
    """True when ``g`` contains neither fs_spec(p, q) nor fk_spec(p, q) induced."""
    _check_pq(p, q)
    return _class_membership(g, p, q)


def contains_fab(g: Graph, a: int, b: int) -> Optional[Embedding]:
    """First induced copy of fab_spec(a, b), any internal W edges allowed."""
    return contains_induced(g, fab_spec(a, b))


def find_embedding_of_graph(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """First injective map making ``h`` an induced subgraph of ``g``.

    Naive backtracking over vertex images; used as a reference oracle and by
    the planting tests.  Returns the image of (0, ..., h.n-1) or None.
    """
    if h.n > g.n:
        return None
    image: list[int] = []

    def rec(i: int, used: int) -> bool:
        if i == h.n:
            return True
        want = h.adj[i]
        for v in range(g.n):
            if used >> v & 1:
                continue
            ok = True
            for j in range(i):
                if bool(want >> j & 1) != bool(g.adj[v] >> image[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image.append(v)
            if rec(i + 1, used | 1 << v):
                return True
            image.pop()
        return False

    if rec(0, 0):
        return tuple(image)
    return None
